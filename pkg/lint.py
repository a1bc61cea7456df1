#!/usr/bin/env python3
# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/24/2026 12:20'

import sys
import argparse
import subprocess
from typing import List, Optional, Tuple

from core.logger import getLogger

log = getLogger(__file__)

# project sources; reference material next to them is not linted
TARGETS = ['core', 'configs', 'app_config.py', 'main.py', 'tests.py', 'lint.py']


def run_command(cmd: List[str], description: str) -> Tuple[bool, Optional[str]]:
    '''
    Run a command and return whether it succeeded and its output.

    Args:
        cmd: command parts
        description: human-readable name of the check
    '''
    log.info(f'Running {description}...')
    try:
        result = subprocess.run(cmd, check=True, capture_output=True, text=True, encoding='utf-8')  # nosec B603
    except subprocess.CalledProcessError as e:
        log.error(f'{description} failed!')
        log.error(e.stdout or e.stderr)
        return False, e.stderr
    except FileNotFoundError:
        log.error(f'{description} is not installed')
        return False, None
    log.info(f'{description} passed!')
    return True, result.stdout


def run_ruff(fix: bool = False) -> bool:
    extra = ['--fix'] if fix else []
    if not run_command(['ruff', 'check', *extra, *TARGETS], 'Ruff linter')[0]:
        return False
    return run_command(['ruff', 'format', *([] if fix else ['--check']), *TARGETS], 'Ruff formatter')[0]


def run_mypy() -> bool:
    return run_command(['mypy', *TARGETS], 'MyPy type checker')[0]


def run_bandit() -> bool:
    return run_command(['bandit', '-c', 'pyproject.toml', '-r', *TARGETS], 'Bandit security linter')[0]


def main() -> int:
    '''Run all linters.'''
    parser = argparse.ArgumentParser(description='Run all linters')
    parser.add_argument('--fix', action='store_true', help='Fix issues when possible')
    args = parser.parse_args()

    results = [run_ruff(args.fix), run_mypy(), run_bandit()]
    if all(results):
        log.info('All linters passed successfully!')
        return 0
    log.error('Some linters reported issues.')
    return 1


if __name__ == '__main__':
    sys.exit(main())
