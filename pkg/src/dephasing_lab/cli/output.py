"""
CSV and JSON writers for sweep records
"""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from ..handlers.error_handler import InvalidInputError
from ..utils.constants import CSV_SIGNIFICANT_DIGITS, OUTPUT_FORMATS

logger = logging.getLogger(__name__)

_FLOAT_FORMAT = f"%.{CSV_SIGNIFICANT_DIGITS}g"


def _unsigned_zero(value: Any) -> Any:
    # -0.0 + 0.0 is +0.0
    return value + 0.0 if isinstance(value, float) else value


def _csv_cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return _FLOAT_FORMAT % _unsigned_zero(value)
    return str(value)


def render_records(rows: Sequence[Dict[str, Any]], columns: Sequence[str], fmt: str) -> str:
    """Serialize records; identical input always gives identical text"""
    if fmt not in OUTPUT_FORMATS:
        raise InvalidInputError(f"unknown output format {fmt!r}; expected one of {OUTPUT_FORMATS}")
    if fmt == 'json':
        flat = [{name: _unsigned_zero(row.get(name)) for name in columns} for row in rows]
        return json.dumps(flat, indent=2) + '\n'

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row.get(name)) for name in columns])
    return buffer.getvalue()


def write_records(
    rows: Sequence[Dict[str, Any]],
    columns: Sequence[str],
    fmt: str,
    path: Optional[Path],
) -> str:
    text = render_records(rows, columns, fmt)
    if path is not None:
        path = Path(path)
        # newline='' keeps '\n' line endings on every platform
        with open(path, 'w', newline='') as f:
            f.write(text)
        logger.debug("wrote %d records to %s", len(rows), path)
    return text


def read_csv_records(path: Path) -> List[Dict[str, Optional[float]]]:
    """Read a file written by write_records back into floats (empty cells become None)"""
    with open(path, newline='') as f:
        return [
            {key: (float(value) if value != '' else None) for key, value in row.items()}
            for row in csv.DictReader(f)
        ]
