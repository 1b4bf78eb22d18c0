# Copyright (c) 2025-2026 driftscript contributors
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the
# "Software"), to deal in the Software without restriction, including
# without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to
# the following conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE
# LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION
# OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION
# WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
#
"""source positions and the diagnostics every compiler stage reports"""

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple


class SourcePos(NamedTuple):
    """1-based line and column of a character in a DriftScript unit"""
    line: int
    col: int

    def __str__(self) -> str:
        return f'{self.line}:{self.col}'


class Stage(Enum):
    TOKENIZE = 'Tokenize'
    PARSE = 'Parse'
    COMPILE = 'Compile'


@dataclass(frozen=True)
class Diagnostic:
    stage: Stage
    message: str
    pos: SourcePos

    def __post_init__(self) -> None:
        if not self.message or '\n' in self.message:
            raise ValueError(f'diagnostic messages must be a single line: {self.message!r}')

    def __str__(self) -> str:
        return render_diagnostic(self)


def render_diagnostic(diagnostic: Diagnostic) -> str:
    """render a diagnostic as `line:col: error: message`"""
    return f'{diagnostic.pos.line}:{diagnostic.pos.col}: error: {diagnostic.message}'
