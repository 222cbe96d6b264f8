"""
定数定義
アプリケーション全体で使用する定数、予算、ルール名、出力フォーマット設定
"""

# 体の元を列挙するときの上限 (p^n)
ENUMERATION_BUDGET = 2 ** 20

# オラクルの候補数の上限
ORACLE_BUDGET = 2 ** 22

# 環境変数名
ENV_ORACLE_BUDGET = 'ABSIRR_ORACLE_BUDGET'
ENV_LOG_LEVEL = 'ABSIRR_LOG_LEVEL'

# sample コマンドの既定シード (再現性のため固定)
DEFAULT_SEED = 20240917

# 変数名 (x, y, z, w は x1..x4 の別名)
VARIABLE_ALIASES = ('x', 'y', 'z', 'w')
MAX_ARITY = 9

# 拡大体の生成元の記号
GENERATOR_SYMBOL = 'a'

# 整数リテラルの最大桁数 (CPython の int 変換上限と同じ)
MAX_INTEGER_DIGITS = 4300

# 判定の種類
VERDICT_ABSOLUTELY_IRREDUCIBLE = 'absolutely_irreducible'
VERDICT_FACTOR_BOUNDS = 'factor_bounds'
VERDICT_NOT_ABSOLUTELY_IRREDUCIBLE = 'not_absolutely_irreducible'
VERDICT_INCONCLUSIVE = 'inconclusive'

# ルール識別子 (証明書に記録される)
RULE_DEGREE_ONE = 'degree-one'
RULE_MAIN_THEOREM = 'main-theorem'
RULE_DOUBLE_GAP = 'corollary-4.5'
RULE_KTH_GAP_BOUND = 'theorem-4.2+corollary-4.4'
RULE_DEGREE_GAP_BOUND = 'lemma-2.3'
RULE_DEGREE_GAP_BOUND_DEGENERATE = 'lemma-2.3-degenerate'
RULE_BINOMIAL = 'prop-2.4'
RULE_TRINOMIAL = 'prop-2.5'
RULE_QUADRINOMIAL = 'prop-2.6'
RULE_BINARY_FORM_SPLIT = 'binary-form-split'
RULE_NONE = 'none'

# 仮説名 (Inconclusive の failed_hypotheses に入る)
HYP_CONSTANT = 'constant'
HYP_HOMOGENEOUS = 'homogeneous'
HYP_LEADING_SQUAREFREE = 'leading_squarefree'
HYP_FORMS_GCD = 'forms_gcd_trivial'
HYP_SPAN = 'span_condition'
HYP_PAIRWISE_GCD = 'pairwise_gcd_k'
HYP_TAIL_GCD = 'tail_gcd_trivial'

# 終了コード
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE_ERROR = 2
EXIT_SCOPE_ERROR = 3

# 判定ごとの色設定 (xlsx 出力)
VERDICT_COLORS = {
    VERDICT_ABSOLUTELY_IRREDUCIBLE: 'CCFFCC',      # 緑
    VERDICT_FACTOR_BOUNDS: 'FFF2CC',               # 黄
    VERDICT_NOT_ABSOLUTELY_IRREDUCIBLE: 'FFCCCC',  # 赤
    VERDICT_INCONCLUSIVE: 'E7E6E6',                # 灰
}

# フォント設定
FONT_NAME = 'Segoe UI'
FONT_SIZE = 10

# カラム幅の最大値（文字数）
MAX_COLUMN_WIDTH = 100

# 進捗を通知する間隔 (件数)
PROGRESS_INTERVAL = 256

# selftest の既定の最大次数 (GF(2) 二変数の全列挙)
SELFTEST_MAX_DEGREE = 4

# selftest で無平方判定を分解と照合する最大次数
SQUAREFREE_CHECK_MAX_DEGREE = 3
