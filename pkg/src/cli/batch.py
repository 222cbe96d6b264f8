"""
Batch Processor
"field<TAB>poly" 形式のファイルをまとめて判定する
"""
import csv
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import pandas as pd

from cli.exit_codes import error_record
from core.certificate_writer import CertificateExcelWriter
from core.criteria import analyze, build_certificate
from core.errors import AbsIrrError
from core.polynomial_parser import parse_field_spec, parse_polynomial
from utils.logger import get_logger

logger = get_logger(__name__)

BATCH_TITLE = 'certificates'


class BatchReader:
    """バッチ入力ファイル読み込みクラス"""

    def __init__(self, file_path: Path):
        """
        初期化

        Args:
            file_path: 入力ファイルのパス
        """
        self.file_path = Path(file_path)

    def validate_file(self) -> Tuple[bool, str]:
        """
        ファイルが読めるか検証

        Returns:
            (is_valid, error_message)
        """
        if not self.file_path.exists():
            return False, f"ファイルが見つかりません: {self.file_path}"
        if not self.file_path.is_file():
            return False, f"ファイルではありません: {self.file_path}"
        return True, ""

    def read_pairs(self) -> Tuple[Optional[pd.DataFrame], str]:
        """
        field と poly の2列を読み込む ('#' 以降はコメント、空行は無視)

        Returns:
            (df, error_message): 成功時は列 field, poly を持つ DataFrame
        """
        is_valid, error_msg = self.validate_file()
        if not is_valid:
            return None, error_msg

        try:
            df = pd.read_csv(
                self.file_path,
                sep='\t',
                header=None,
                names=['field', 'poly'],
                comment='#',
                dtype=str,
                keep_default_na=False,
                quoting=csv.QUOTE_NONE,
                skip_blank_lines=True,
            )
        except pd.errors.ParserError as e:
            return None, f"入力ファイルの形式が不正です: {e}"
        except pd.errors.EmptyDataError:
            return pd.DataFrame(columns=['field', 'poly']), ""
        except (OSError, UnicodeDecodeError) as e:
            return None, f"ファイル読み込みエラー: {e}"

        df['field'] = df['field'].str.strip()
        df['poly'] = df['poly'].str.strip()
        return df, ""


class BatchProcessor:
    """バッチ判定プロセッサ"""

    def process(
        self,
        input_path: Path,
        xlsx_dir: Optional[Path] = None,
        progress_callback: Optional[Callable[[int, str], None]] = None
    ) -> Tuple[Optional[List[Dict[str, Any]]], Optional[Path], str]:
        """
        各行を判定して証明書のリストを作る

        1行の失敗でバッチ全体は止めず、その行のレコードに error と exit_code を入れる。

        Args:
            input_path: 入力ファイル
            xlsx_dir: xlsx の出力先 (省略時は出力しない)
            progress_callback: 進捗コールバック関数 (progress%, message)

        Returns:
            (records, output_path, error_message):
                - records: 入力順の証明書、ファイルが読めなければ None
                - output_path: xlsx を出力した場合のパス
                - error_message: エラーがあればメッセージ
        """
        if progress_callback:
            progress_callback(0, "入力ファイルを読み込んでいます...")

        df, error_msg = BatchReader(input_path).read_pairs()
        if df is None:
            return None, None, error_msg

        records = []
        total = len(df)
        for i, row in enumerate(df.itertuples(index=False), start=1):
            records.append(self._check_line(i, row.field, row.poly))
            if progress_callback:
                progress_callback(int(i * 100 / total), f"{i}/{total} 行を判定しました")

        output_path = None
        if xlsx_dir is not None:
            output_path = CertificateExcelWriter(xlsx_dir, BATCH_TITLE).write_records(records)
            logger.info("xlsx を出力しました: %s", output_path)
        return records, output_path, ""

    @staticmethod
    def _check_line(row: int, field_text: str, poly_text: str) -> Dict[str, Any]:
        record: Dict[str, Any] = {'row': row, 'input': poly_text}
        try:
            field = parse_field_spec(field_text)
            f = parse_polynomial(poly_text, field)
            record.update(build_certificate(f, analyze(f)))
        except AbsIrrError as e:
            logger.debug("%d 件目: %s", row, e)
            record['field'] = field_text
            record.update(error_record(e))
        return record
