# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/15/2026 10:40'
__version__ = '0.1.0'

import logging
from pathlib import Path
from typing import Any, List, Optional, Sequence

BLANK_LOGGER_FORMAT = '%(message)s'


class CustomLogger(logging.Logger):
    '''
    Logger with console helpers for benchmark summaries.

    Features:
        - Blank line printing
        - Plain text tables
    '''

    def __init__(self, name: str, level: int = logging.NOTSET) -> None:
        # `__file__` may be used as a logger name
        super().__init__(Path(name).stem, level)

    def _emit_raw(self, lines: Sequence[str], level: int) -> None:
        '''Log lines without the handler formatters prefix.'''
        if not self.isEnabledFor(level):
            return
        formats = [x.formatter for x in self.handlers]
        for handler in self.handlers:
            handler.setFormatter(logging.Formatter(fmt=BLANK_LOGGER_FORMAT))
        try:
            for line in lines:
                self.log(level, line)
        finally:
            for handler, formatter in zip(self.handlers, formats):
                handler.setFormatter(formatter)  # type: ignore[arg-type]

    def blank(self, lines: int = 1, level: int = logging.INFO) -> None:
        '''
        Print empty lines to all logger handlers.

        Args:
            lines: number of empty lines
            level: logger level
        '''
        self._emit_raw([''] * lines, level)

    @staticmethod
    def format_table(rows: Sequence[Sequence[Any]], header: Optional[Sequence[str]] = None) -> List[str]:
        '''
        Format rows as a left-aligned text table.

        Floats are printed with 6 significant digits.

        Returns:
            Table lines, header and separator first when a header is given
        '''
        cells = [[f'{x:.6g}' if isinstance(x, float) else str(x) for x in row] for row in rows]
        if header is not None:
            cells.insert(0, [str(x) for x in header])
        if not cells:
            return []
        width = max(len(row) for row in cells)
        sizes = [max(len(row[i]) for row in cells if i < len(row)) for i in range(width)]
        lines = ['  '.join(cell.ljust(sizes[i]) for i, cell in enumerate(row)).rstrip() for row in cells]
        if header is not None:
            lines.insert(1, '  '.join('-' * size for size in sizes))
        return lines

    def table(
        self, rows: Sequence[Sequence[Any]], header: Optional[Sequence[str]] = None, level: int = logging.INFO
    ) -> None:
        '''
        Print rows as a text table.

        Usage:

        .. code-block:: python

            log = getLogger(__file__)
            log.table([('grkan', 0.085, 177)], header=('method', 'mse', 'params'))
        '''
        self._emit_raw(self.format_table(rows, header), level)
