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
from .diagnostics import Diagnostic, SourcePos, Stage


class Error(Exception):

    """base class for all of driftscript's Exceptions"""
    pass


class FatalError(Error):

    """execution cannot continue"""
    pass


class ConfigurationError(FatalError):
    pass


class CorpusError(FatalError):

    """a golden fixture file could not be read or understood"""

    def __init__(self, path: str, message: str) -> None:
        self.path = path
        FatalError.__init__(self, f'{path}: {message}')


class CompileError(Error):

    """a DriftScript unit was rejected, `pos` points at the offending
    character or form"""

    stage = Stage.COMPILE

    def __init__(self, message: str, pos: SourcePos) -> None:
        self.message = message
        self.pos = pos
        Error.__init__(self, f'{pos}: {message}')

    @property
    def diagnostic(self) -> Diagnostic:
        return Diagnostic(self.stage, self.message, self.pos)


class TokenizeError(CompileError):
    stage = Stage.TOKENIZE


class ParseError(CompileError):
    stage = Stage.PARSE


class CodegenError(CompileError):
    stage = Stage.COMPILE
