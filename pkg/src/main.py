"""
absirr - メインエントリーポイント
有限体上の多項式の絶対既約性判定ツール
"""
import sys
from typing import List, Optional

from cli.arguments import build_config, build_parser, log_level
from cli.commands import run
from cli.exit_codes import exit_code_for
from core.errors import ConfigError
from utils.logger import configure_logging, get_logger

logger = get_logger(__name__)


def main(argv: Optional[List[str]] = None) -> int:
    """
    コマンドラインのメインエントリーポイント

    Args:
        argv: 引数 (省略時は sys.argv[1:])

    Returns:
        終了コード (0 判定完了, 1 違反あり, 2 構文・設定エラー, 3 予算外・退化した入力)
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(log_level(args))

    try:
        config = build_config(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return exit_code_for(e)

    logger.debug("command=%s config=%s", args.command, config)
    return run(
        args.command,
        config,
        span_target=getattr(args, 'target', None),
        span_generators=getattr(args, 'gens', None),
    )


if __name__ == '__main__':
    sys.exit(main())
