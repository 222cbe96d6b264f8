"""
absirr
有限体上の多項式の絶対既約性判定 (次数ギャップ条件とオラクル)
"""
__version__ = "1.0.0"
