# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/23/2026 09:40'

from .exceptions import BenchConfigError, ConfigLoadError, ReportError
from .methods import (
    EXTRA_METHODS,
    METHODS,
    TABLE1_METHODS,
    MethodName,
    MethodSpec,
    build_method,
    describe_constants,
    method_spec,
    parse_methods,
)
from .report import REPORT_JSON, SUMMARY_CSV, build_report, determinism_payload, load_report, to_json, write_report
from .export import CURVE_HEADER, export_fit_curve, predict
from .table1 import Check, MethodRun, Table1Config, Table1Report, run_table1
from .denoise_suite import DenoiseConfig, run_denoise

__all__ = [
    'BenchConfigError',
    'ConfigLoadError',
    'ReportError',
    'EXTRA_METHODS',
    'METHODS',
    'TABLE1_METHODS',
    'MethodName',
    'MethodSpec',
    'build_method',
    'describe_constants',
    'method_spec',
    'parse_methods',
    'REPORT_JSON',
    'SUMMARY_CSV',
    'build_report',
    'determinism_payload',
    'load_report',
    'to_json',
    'write_report',
    'CURVE_HEADER',
    'export_fit_curve',
    'predict',
    'Check',
    'MethodRun',
    'Table1Config',
    'Table1Report',
    'run_table1',
    'DenoiseConfig',
    'run_denoise',
]
