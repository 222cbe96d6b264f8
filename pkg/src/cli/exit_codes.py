"""
Exit Codes
例外から終了コードへの対応
"""
from core.errors import AbsIrrError, DegenerateInputError, ScopeError
from utils.constants import EXIT_PARSE_ERROR, EXIT_SCOPE_ERROR


def exit_code_for(error: AbsIrrError) -> int:
    """予算外・退化した入力は 3、それ以外 (構文・設定・体の不一致など) は 2"""
    if isinstance(error, (ScopeError, DegenerateInputError)):
        return EXIT_SCOPE_ERROR
    return EXIT_PARSE_ERROR


def error_record(error: AbsIrrError) -> dict:
    """JSON 出力用のエラー情報"""
    record = {
        'error': type(error).__name__,
        'message': str(error),
        'exit_code': exit_code_for(error),
    }
    offset = getattr(error, 'offset', None)
    if offset is not None:
        record['offset'] = offset
        record['code'] = error.code
        if error.expected:
            record['expected'] = error.expected
    return record
