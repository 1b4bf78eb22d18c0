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
"""the embedding surface: compile a whole DriftScript unit at once

>>> outcome = compile_source('(believe (inherit "robin" "bird")) (cycles 5)')
>>> [(result.kind.value, result.payload) for result in outcome.results]
[('Narsese', '<robin --> bird>.'), ('Cycles', '5')]

Hosts route each result on its `ResultKind`, payloads never need to be parsed.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .codegen import CONFIG_KEYS, CompileResult, ResultKind, compile_form
from .diagnostics import Diagnostic, SourcePos, Stage, render_diagnostic
from .exceptions import CodegenError, CompileError, ParseError, TokenizeError
from .frontend import DEFAULT_LIMITS, Limits, parse_program, tokenize

logger = logging.getLogger('driftscript')

_STAGE_ERRORS = {
    Stage.TOKENIZE: TokenizeError,
    Stage.PARSE: ParseError,
    Stage.COMPILE: CodegenError,
}

__all__ = [
    'CompileOutcome',
    'CompileResult',
    'Diagnostic',
    'Limits',
    'ResultKind',
    'SourcePos',
    'Stage',
    'compile_source',
    'render_diagnostic',
]


@dataclass(frozen=True)
class CompileOutcome:
    """either all results of a unit, in source order, or the first diagnostic"""
    results: Tuple[CompileResult, ...] = ()
    failure: Optional[Diagnostic] = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def payloads(self) -> List[str]:
        return [result.payload for result in self.results]

    def raise_for_failure(self) -> None:
        if self.failure is not None:
            error_class = _STAGE_ERRORS[self.failure.stage]
            raise error_class(self.failure.message, self.failure.pos)


def compile_source(
    source: str,
    max_results: Optional[int] = None,
    limits: Limits = DEFAULT_LIMITS,
    config_keys: Iterable[str] = CONFIG_KEYS,
) -> CompileOutcome:
    """tokenizes, parses and compiles `source`

    Compilation stops at the first error, in that case no results are returned
    at all.

    :param max_results: capacity for results, defaults to `limits.max_results`;
                        a unit with more top-level forms fails with
                        "too many results"
    :param config_keys: keys accepted by `(config key value)`
    """
    if max_results is None:
        max_results = limits.max_results
    if max_results < 1:
        raise ValueError(f'max_results must be at least 1, got {max_results}')
    config_keys = frozenset(config_keys)

    try:
        forms = parse_program(tokenize(source, limits), limits)
        results = []
        for form in forms:
            if len(results) == max_results:
                raise CodegenError(f'too many results (max {max_results})', form.pos)
            results.append(compile_form(form, config_keys))
    except CompileError as error:
        logger.debug(f'compilation failed: {error.diagnostic}')
        return CompileOutcome(failure=error.diagnostic)

    logger.debug(f'compiled {len(results)} results')
    return CompileOutcome(results=tuple(results))
