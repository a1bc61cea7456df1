# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/23/2026 11:00'
__version__ = '0.1.0'

'''
Report files.

JSON is the authoritative format: keys are sorted, non-finite floats become null
and volatile values (generation time, wall times) live in a top-level `timing`
block that `determinism_payload` drops. Every file is written to a temporary
file in the target directory and renamed into place.
'''

import io
import os
import csv
import json
import math
import tempfile
from pathlib import Path
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional, Sequence

from app_config import AppConfig, APP_NAME, APP_VERSION
from core.logger import getLogger
from .exceptions import ReportError

log = getLogger(__file__)

REPORT_JSON = 'report.json'
SUMMARY_CSV = 'summary.csv'
TIMING_KEY = 'timing'


def sanitize(value: Any) -> Any:
    '''Replace non-finite floats by None in nested dicts and lists.'''
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, dict):
        return {str(k): sanitize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [sanitize(v) for v in value]
    return value


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(sanitize(payload), sort_keys=True, indent=2, allow_nan=False) + '\n'


def build_report(
    experiment: str, config: Dict[str, Any], results: Dict[str, Any], timing: Optional[Dict[str, Any]] = None
) -> Dict[str, Any]:
    '''Versioned report envelope.'''
    return {
        'schema_version': AppConfig.SCHEMA_VERSION,
        'app': {'name': APP_NAME, 'version': APP_VERSION},
        'experiment': experiment,
        'config': config,
        'results': results,
        TIMING_KEY: {'generated_at': datetime.now(timezone.utc).isoformat(), **(timing or {})},
    }


def determinism_payload(report: Dict[str, Any]) -> Dict[str, Any]:
    '''Report without the timing block, identical for identical invocations.'''
    return {key: value for key, value in report.items() if key != TIMING_KEY}


def write_atomic(path: Path, text: str) -> Path:
    '''
    Write text through a temporary file and rename it over `path`.

    Raises:
        ReportError: on any I/O failure
    '''
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=f'.{path.name}.', dir=path.parent)
        try:
            with os.fdopen(fd, 'w', newline='') as stream:
                stream.write(text)
            os.replace(tmp_name, path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
    except OSError as e:
        raise ReportError(f'Cannot write <{path}>: {e}') from e
    return path


def csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def write_report(
    out_dir: Path, report: Dict[str, Any], header: Sequence[str], rows: Sequence[Sequence[Any]]
) -> List[Path]:
    '''Write report.json and the derived summary.csv into out_dir.'''
    json_path = write_atomic(out_dir / REPORT_JSON, to_json(report))
    csv_path = write_atomic(out_dir / SUMMARY_CSV, csv_text(header, rows))
    log.info(f'Report written to <{json_path}>, summary to <{csv_path}>')
    return [json_path, csv_path]


def load_report(path: Path) -> Dict[str, Any]:
    '''
    Read a JSON report.

    Raises:
        ReportError: if the file is missing, not JSON or has another schema version
    '''
    try:
        report = json.loads(path.read_text())
    except (OSError, ValueError) as e:
        raise ReportError(f'Cannot read report <{path}>: {e}') from e
    if report.get('schema_version') != AppConfig.SCHEMA_VERSION:
        raise ReportError(
            f'Report <{path}> has schema version <{report.get("schema_version")}>, '
            f'expected <{AppConfig.SCHEMA_VERSION}>'
        )
    return report
