"""
コアロジック
有限体・多項式・GCD・数値半群・判定・オラクル・出力処理
"""
