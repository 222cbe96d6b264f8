"""
Certificate Excel Writer
判定結果 (証明書) を Excel ファイルとして出力
"""
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter

from utils.constants import FONT_NAME, FONT_SIZE, MAX_COLUMN_WIDTH, VERDICT_COLORS

# 証明書の列 (この順で出力し、ない列は空欄)
CERTIFICATE_COLUMNS = [
    'row',
    'input',
    'field',
    'verdict',
    'rule',
    'degree',
    'gaps',
    'span_status',
    'leading_squarefree',
    'forms_gcd',
    'max_factors',
    'min_factor_degree',
    'witness',
    'witness_field',
    'failed_hypotheses',
    'error',
]


class CertificateExcelWriter:
    """証明書の一覧を Excel ファイルとして出力するクラス"""

    def __init__(self, output_dir: Path, title: str):
        """
        初期化

        Args:
            output_dir: 出力ディレクトリ
            title: シート名 (ファイル名の先頭にも使う)
        """
        self.output_dir = Path(output_dir)
        self.title = title
        self.wb = None
        self.ws = None

        # 判定ごとの背景色
        self.verdict_fills = {
            kind: PatternFill(start_color=color, end_color=color, fill_type='solid')
            for kind, color in VERDICT_COLORS.items()
        }

        self.font_normal = Font(name=FONT_NAME, size=FONT_SIZE)
        self.font_bold = Font(name=FONT_NAME, size=FONT_SIZE, bold=True)

        thin_border = Side(style='thin', color='000000')
        self.border = Border(left=thin_border, right=thin_border,
                             top=thin_border, bottom=thin_border)

    def write_records(self, records: Sequence[Dict[str, Any]],
                      columns: Optional[List[str]] = None) -> Path:
        """
        レコード (証明書の辞書など) を1行ずつ書き込み

        Args:
            records: 書き込む辞書のリスト
            columns: 列名のリスト (省略時は証明書の列)

        Returns:
            出力ファイルのパス
        """
        columns = columns or CERTIFICATE_COLUMNS

        self.wb = Workbook()
        self.ws = self.wb.active
        self.ws.title = self.title

        self._write_header(columns)
        for row_num, record in enumerate(records, start=2):
            self._write_row(row_num, record, columns)
        self._apply_formatting(len(columns))

        self.output_dir.mkdir(parents=True, exist_ok=True)
        output_path = self._generate_output_path()
        self.wb.save(output_path)
        return output_path

    def _write_header(self, columns: List[str]):
        for col_idx, col_name in enumerate(columns, start=1):
            cell = self.ws.cell(row=1, column=col_idx)
            cell.value = col_name
            cell.font = self.font_bold
            cell.alignment = Alignment(horizontal='center', vertical='center')
            cell.border = self.border

    def _write_row(self, row_num: int, record: Dict[str, Any], columns: List[str]):
        """
        1行を書き込み (verdict 列があればその色で塗る)

        Args:
            row_num: 行番号 (ヘッダーが1行目)
            record: レコード
            columns: 列名のリスト
        """
        fill = self.verdict_fills.get(record.get('verdict'))
        for col_idx, col_name in enumerate(columns, start=1):
            cell = self.ws.cell(row=row_num, column=col_idx)
            cell.font = self.font_normal
            cell.alignment = Alignment(wrap_text=True, vertical='top')
            cell.border = self.border
            cell.value = self._cell_value(record.get(col_name))
            if fill is not None:
                cell.fill = fill

    @staticmethod
    def _cell_value(value: Any):
        if value is None:
            return ''
        if isinstance(value, bool):
            return 'true' if value else 'false'
        if isinstance(value, (list, tuple)):
            return ','.join(str(CertificateExcelWriter._cell_value(v)) for v in value)
        if isinstance(value, (int, float)):
            return value
        return str(value)

    def _apply_formatting(self, num_columns: int):
        # 1行目を固定
        self.ws.freeze_panes = 'A2'
        self.ws.auto_filter.ref = f'A1:{get_column_letter(num_columns)}1'
        self._auto_fit_columns(num_columns)

    def _auto_fit_columns(self, num_columns: int):
        """列幅を自動調整 (最小10, 最大 MAX_COLUMN_WIDTH)"""
        for col_idx in range(1, num_columns + 1):
            col_letter = get_column_letter(col_idx)
            max_length = 0
            for row_idx in range(1, self.ws.max_row + 1):
                value = self.ws.cell(row=row_idx, column=col_idx).value
                if value not in (None, ''):
                    max_length = max(max_length, len(str(value)))
            self.ws.column_dimensions[col_letter].width = min(max(max_length + 2, 10), MAX_COLUMN_WIDTH)

    def _generate_output_path(self) -> Path:
        timestamp = datetime.now().strftime('%Y%m%d_%H%M')
        return self.output_dir / f"{self.title}_{timestamp}.xlsx"
