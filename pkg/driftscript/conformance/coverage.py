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
"""which NAL constructs the golden corpus exercises"""

from typing import Iterable, List, NamedTuple, Set, Tuple

from ..exceptions import CompileError
from ..frontend import parse_source
from .corpus import GoldenCase


class Construct(NamedTuple):
    level: int
    name: str
    spellings: Tuple[str, ...]


NAL_COVERAGE: Tuple[Construct, ...] = (
    Construct(1, 'Inheritance', ('inherit',)),
    Construct(2, 'Similarity', ('similar',)),
    Construct(2, 'Instance', ('instance',)),
    Construct(3, 'Set operations', ('ext-set', 'int-set')),
    Construct(3, 'Intersection/difference', ('ext-inter', 'int-inter', 'ext-diff', 'int-diff')),
    Construct(4, 'Product', ('product',)),
    Construct(4, 'Image', ('ext-image1', 'ext-image2', 'int-image1', 'int-image2')),
    Construct(5, 'Logical connectives', ('and', 'or', 'not')),
    Construct(5, 'Implication', ('imply',)),
    Construct(5, 'Equivalence', ('equiv',)),
    Construct(6, 'Variables', ('$', '#', '?')),
    Construct(7, 'Tense', (':now', ':past', ':future')),
    Construct(7, 'Temporal implication', ('predict',)),
    Construct(7, 'Temporal offset', (':dt',)),
    Construct(8, 'Sequential conjunction', ('seq',)),
    Construct(8, 'Operations', ('call',)),
    Construct(8, 'Goals', ('goal',)),
)


class CoverageRow(NamedTuple):
    construct: Construct
    cases: int
    missing: Tuple[str, ...]

    @property
    def covered(self) -> bool:
        return self.cases > 0 and not self.missing


def _spellings_used(case: GoldenCase) -> Set[str]:
    try:
        forms = parse_source(case.source)
    except CompileError:
        return set()
    used = set()
    for form in forms:
        for atom in form.atoms():
            symbol = atom.symbol
            if symbol:
                used.add(symbol)
                if symbol[0] in '$#?' and len(symbol) > 1:
                    used.add(symbol[0])
    return used


def coverage_report(corpus: Iterable[GoldenCase]) -> List[CoverageRow]:
    """counts the passing-expectation cases that use each construct

    Only cases expecting successful output count, an error case does not show
    that a construct compiles.
    """
    used_per_case = [_spellings_used(case) for case in corpus if case.expected is not None]
    seen: Set[str] = set().union(*used_per_case)
    rows = []
    for construct in NAL_COVERAGE:
        cases = sum(1 for used in used_per_case if used.intersection(construct.spellings))
        missing = tuple(spelling for spelling in construct.spellings if spelling not in seen)
        rows.append(CoverageRow(construct, cases, missing))
    return rows


def format_coverage(rows: Iterable[CoverageRow]) -> List[str]:
    lines = []
    for row in rows:
        status = 'covered' if row.covered else 'MISSING ' + ' '.join(row.missing or ('all',))
        lines.append(f'NAL-{row.construct.level}  {row.construct.name:<26}{row.cases:>4}  {status}')
    return lines
