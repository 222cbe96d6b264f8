"""
CLI package
コマンドライン (check / decompose / span / oracle / sample / selftest)
"""
