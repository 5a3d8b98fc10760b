"""
Data import/export handler for JSON and CSV formats.
"""
import csv
import io
import json
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO, Tuple

from ..models.action_matrix import ActionMatrix
from ..models.survey_record import SurveyRecord
from .config import Config
from .exceptions import ParameterError

STDOUT = '-'


@contextmanager
def _open_output(filename: str) -> Iterator[TextIO]:
    if filename == STDOUT:
        yield sys.stdout
        return
    with open(filename, 'w', encoding='utf-8', newline='') as f:
        yield f


class DataHandler:
    """
    Handles import/export of survey records and action matrices.

    JSON is canonical (sorted keys, so re-serialization is stable); CSV
    is a flat projection with lists joined by ';'. Filename '-' means
    standard output.
    """

    @staticmethod
    def dumps(data: Any) -> str:
        """Canonical JSON text."""
        return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)

    @staticmethod
    def export_json(records: Sequence[SurveyRecord], filename: str) -> None:
        """
        Export records as a JSON array.

        Args:
            records: Records to export
            filename: Output filename or '-'
        """
        data = [record.to_dict() for record in records]
        with _open_output(filename) as f:
            f.write(DataHandler.dumps(data))
            f.write('\n')

    @staticmethod
    def import_json(filename: str) -> List[SurveyRecord]:
        with open(filename, 'r', encoding='utf-8') as f:
            data = json.load(f)
        if isinstance(data, dict):
            data = [data]
        return [SurveyRecord.from_dict(item) for item in data]

    @staticmethod
    def csv_row(record: SurveyRecord) -> List[Any]:
        """Values in ``Config.CSV_HEADER`` order; missing fields become empty cells."""
        data = record.to_dict()
        row = []
        for column in Config.CSV_HEADER:
            value = data.get(column, '')
            if isinstance(value, list):
                value = Config.CSV_LIST_SEPARATOR.join(map(str, value))
            elif isinstance(value, bool):
                value = 'true' if value else 'false'
            row.append(value)
        return row

    @staticmethod
    def export_csv(records: Sequence[SurveyRecord], filename: str) -> None:
        """
        Export records to CSV with the fixed header.

        Args:
            records: Records to export
            filename: Output filename or '-'
        """
        with _open_output(filename) as f:
            f.write(DataHandler.to_csv_text(records))

    @staticmethod
    def to_csv_text(records: Sequence[SurveyRecord]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(Config.CSV_HEADER)
        for record in records:
            writer.writerow(DataHandler.csv_row(record))
        return buffer.getvalue()

    @staticmethod
    def parse_matrix(data: Dict[str, Any]) -> ActionMatrix:
        """
        Action matrix from ``{"p": ..., "blocks": [[["num/den", ...], ...], ...]}``.

        Raises:
            ParameterError: malformed blocks or entries
        """
        try:
            blocks = [[[Fraction(str(x)) for x in row] for row in block] for block in data['blocks']]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"malformed action matrix: {exc}") from exc
        return ActionMatrix.from_blocks(blocks)

    @staticmethod
    def read_action_matrix(filename: str) -> Tuple[ActionMatrix, Optional[int]]:
        """
        Import an action matrix and the prime stored next to it, if any.

        Args:
            filename: JSON file with "blocks" and optionally "p"
        """
        with open(filename, 'r', encoding='utf-8') as f:
            data = json.load(f)
        if not isinstance(data, dict):
            raise ParameterError("matrix file must hold a JSON object")
        p = data.get('p')
        return DataHandler.parse_matrix(data), (int(p) if p is not None else None)
