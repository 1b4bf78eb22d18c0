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
"""golden fixture corpus: loading, running and tallying `.case` files

A case file lives at `<fixtures>/<category>/<name>.case` and is made of
sections introduced by `--- <section>` lines::

    # lines before the first section are comments
    --- source
    (believe (inherit "robin" "bird"))
    --- expect
    Narsese <robin --> bird>.

A failing case uses an `--- error` section instead of `--- expect`, holding
`line:col message-substring`.
"""

import difflib
import logging
import os
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..api import CompileOutcome, compile_source
from ..codegen import ResultKind
from ..exceptions import CorpusError
from .wellformed import check_narsese_wellformed

logger = logging.getLogger('driftscript')

# minimum number of cases per category
CATEGORY_MINIMUMS: Dict[str, int] = {
    'tokenizer': 14,
    'parser': 6,
    'copulas': 8,
    'connectors': 17,
    'call': 4,
    'sentences': 12,
    'variables': 6,
    'meta': 7,
    'nested': 5,
    'multi_statement': 2,
    'errors': 4,
    'quoting': 7,
    'validation': 10,
}
MINIMUM_TOTAL = 106

SUFFIX = '.case'
_SECTIONS = ('source', 'expect', 'error')
_EXPECTED_ERROR = re.compile(r'(?P<line>[0-9]+):(?P<col>[0-9]+) (?P<message>\S.*)')
_KINDS = {kind.value: kind for kind in ResultKind}


@dataclass(frozen=True)
class ExpectedError:
    line: int
    col: int
    message: str

    def render(self) -> str:
        return f'error {self.line}:{self.col} {self.message}'


@dataclass(frozen=True)
class GoldenCase:
    name: str
    category: str
    source: str
    expected: Optional[Tuple[Tuple[ResultKind, str], ...]] = None
    expected_error: Optional[ExpectedError] = None
    path: str = ''

    def __post_init__(self) -> None:
        if (self.expected is None) == (self.expected_error is None):
            raise ValueError('a golden case needs exactly one of expected or expected_error')

    @property
    def ident(self) -> str:
        return f'{self.category}/{self.name}'

    def expected_lines(self) -> List[str]:
        if self.expected_error is not None:
            return [self.expected_error.render()]
        return [f'{kind.value} {payload}' for kind, payload in self.expected or ()]


@dataclass
class CaseResult:
    case: GoldenCase
    passed: bool
    actual: List[str]
    problems: List[str] = field(default_factory=list)

    def diff(self) -> List[str]:
        return list(difflib.unified_diff(
            self.case.expected_lines(), self.actual,
            fromfile=f'{self.case.ident} (expected)', tofile=f'{self.case.ident} (actual)',
            lineterm='',
        ))


@dataclass
class CorpusReport:
    results: List[CaseResult]

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def passed(self) -> int:
        return sum(1 for result in self.results if result.passed)

    @property
    def failures(self) -> List[CaseResult]:
        return [result for result in self.results if not result.passed]

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def summary(self) -> str:
        return f'PASS {self.passed}/{self.total}'


def parse_case(text: str, path: str = '<string>', category: str = '',
               name: str = '') -> GoldenCase:
    """parses the contents of a `.case` file

    :raises CorpusError: if sections are missing, unknown or malformed
    """
    sections: Dict[str, List[str]] = {}
    current: Optional[str] = None
    for number, line in enumerate(text.splitlines(), start=1):
        if line.startswith('--- '):
            current = line[4:].strip()
            if current not in _SECTIONS:
                raise CorpusError(path, f'line {number}: unknown section {current!r}')
            if current in sections:
                raise CorpusError(path, f'line {number}: duplicate section {current!r}')
            sections[current] = []
        elif current is None:
            if line.strip() and not line.startswith('#'):
                raise CorpusError(path, f'line {number}: text before the first section')
        else:
            sections[current].append(line)

    if 'source' not in sections:
        raise CorpusError(path, 'missing "--- source" section')
    if ('expect' in sections) == ('error' in sections):
        raise CorpusError(path, 'needs exactly one of "--- expect" or "--- error"')

    source = '\n'.join(sections['source'])
    if 'error' in sections:
        lines = [line for line in sections['error'] if line.strip()]
        match = _EXPECTED_ERROR.fullmatch(lines[0].strip()) if len(lines) == 1 else None
        if match is None:
            raise CorpusError(path, 'the error section must be a single "line:col message" line')
        error = ExpectedError(int(match['line']), int(match['col']), match['message'])
        return GoldenCase(name, category, source, expected_error=error, path=path)

    expected = []
    for line in sections['expect']:
        if not line.strip():
            continue
        kind, _, payload = line.partition(' ')
        if kind not in _KINDS or not payload:
            raise CorpusError(path, f'malformed expectation {line!r}, want "<Kind> <payload>"')
        expected.append((_KINDS[kind], payload))
    return GoldenCase(name, category, source, expected=tuple(expected), path=path)


def load_case(path: str) -> GoldenCase:
    try:
        with open(path, encoding='utf-8') as case_file:
            text = case_file.read()
    except (OSError, UnicodeDecodeError) as error:
        raise CorpusError(path, str(error))
    category = os.path.basename(os.path.dirname(path))
    name = os.path.basename(path)[:-len(SUFFIX)]
    return parse_case(text, path, category, name)


def load_corpus(directory: str, categories: Optional[Iterable[str]] = None) -> List[GoldenCase]:
    """loads every `<directory>/<category>/*.case`, sorted by category and name"""
    if not os.path.isdir(directory):
        raise CorpusError(directory, 'not a directory')
    wanted = set(categories) if categories else None
    corpus = []
    for category in sorted(os.listdir(directory)):
        category_dir = os.path.join(directory, category)
        if not os.path.isdir(category_dir) or (wanted and category not in wanted):
            continue
        for filename in sorted(os.listdir(category_dir)):
            if filename.endswith(SUFFIX):
                corpus.append(load_case(os.path.join(category_dir, filename)))
    logger.debug(f'loaded {len(corpus)} cases from {directory}')
    return corpus


def outcome_lines(outcome: CompileOutcome) -> List[str]:
    if outcome.failure is not None:
        failure = outcome.failure
        return [f'error {failure.pos.line}:{failure.pos.col} {failure.message}']
    return [f'{result.kind.value} {result.payload}' for result in outcome.results]


def run_case(case: GoldenCase) -> CaseResult:
    outcome = compile_source(case.source)
    actual = outcome_lines(outcome)
    problems = []

    if case.expected_error is not None:
        expected = case.expected_error
        failure = outcome.failure
        passed = (failure is not None
                  and (failure.pos.line, failure.pos.col) == (expected.line, expected.col)
                  and expected.message in failure.message)
    else:
        passed = actual == case.expected_lines()
        for result in outcome.results:
            if result.kind is ResultKind.NARSESE and not check_narsese_wellformed(result.payload):
                problems.append(f'not well-formed Narsese: {result.payload}')
        passed = passed and not problems
    return CaseResult(case, passed, actual, problems)


def run_corpus(corpus: Sequence[GoldenCase], workers: int = 1) -> CorpusReport:
    """runs every case, the report keeps corpus order whatever `workers` is"""
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(run_case, corpus))
    else:
        results = [run_case(case) for case in corpus]
    report = CorpusReport(results)
    logger.debug(report.summary())
    return report


def tally_categories(corpus: Iterable[GoldenCase]) -> Dict[str, int]:
    tally = {category: 0 for category in CATEGORY_MINIMUMS}
    for case in corpus:
        tally[case.category] = tally.get(case.category, 0) + 1
    return tally


def under_populated(tally: Dict[str, int]) -> Dict[str, Tuple[int, int]]:
    """categories below their minimum, as `(have, need)`"""
    return {category: (tally.get(category, 0), need)
            for category, need in CATEGORY_MINIMUMS.items()
            if tally.get(category, 0) < need}
