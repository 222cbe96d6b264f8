"""
ユーティリティ
設定、ロガー、定数定義
"""
