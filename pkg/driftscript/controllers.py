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
"""bodies of the command line commands

Every function here returns the rows to print and leaves printing, exit codes
and stream selection to :mod:`driftscript.cli`.
"""

import logging
import os
from typing import Iterable, List, Optional, Tuple

from .api import compile_source
from .codegen import CONFIG_KEYS
from .conformance.corpus import (
    CorpusReport,
    load_corpus,
    run_corpus,
    tally_categories,
    under_populated,
)
from .conformance.coverage import coverage_report, format_coverage
from .exceptions import CorpusError
from .frontend import DEFAULT_LIMITS, Limits
from .readability import compare_stats, compute_stats, format_comparison, format_stats

logger = logging.getLogger('driftscript')


def compile_unit(
    source: str,
    limits: Limits = DEFAULT_LIMITS,
    config_keys: Iterable[str] = CONFIG_KEYS,
    kinds: bool = False,
) -> List[str]:
    """compiles `source` and returns one row per result

    :param kinds: prefix each payload with its kind and a tab
    :raises CompileError: on the first diagnostic of the unit
    """
    outcome = compile_source(source, limits=limits, config_keys=config_keys)
    outcome.raise_for_failure()
    if kinds:
        return [f'{result.kind.value}\t{result.payload}' for result in outcome.results]
    return outcome.payloads()


def check_unit(
    source: str,
    limits: Limits = DEFAULT_LIMITS,
    config_keys: Iterable[str] = CONFIG_KEYS,
) -> None:
    compile_source(source, limits=limits, config_keys=config_keys).raise_for_failure()


def stats(text: str) -> List[str]:
    return format_stats(compute_stats(text))


def compare(driftscript_text: str, narsese_text: str) -> List[str]:
    return format_comparison(compare_stats(driftscript_text, narsese_text))


def conformance(
    directory: str,
    categories: Optional[Iterable[str]] = None,
    coverage: bool = False,
    workers: int = 1,
) -> Tuple[List[str], CorpusReport]:
    """runs the golden corpus found in `directory`

    The rows hold a diff per failing case, the category tally, the optional
    coverage map and, last, the `PASS n/m` summary.

    :raises CorpusError: if the directory or one of its case files is broken
    """
    directory = os.path.expanduser(directory)
    categories = list(categories or ())
    corpus = load_corpus(directory, categories)
    if not corpus:
        raise CorpusError(directory, 'no .case files found')
    report = run_corpus(corpus, workers=workers)

    rows: List[str] = []
    for failure in report.failures:
        rows.append(f'FAIL {failure.case.ident}')
        rows.extend(failure.diff())
        rows.extend(f'  {problem}' for problem in failure.problems)

    tally = tally_categories(corpus)
    if categories:
        tally = {name: count for name, count in tally.items() if name in categories}
    short = {} if categories else under_populated(tally)
    for name, count in tally.items():
        note = f'  (needs {short[name][1]})' if name in short else ''
        rows.append(f'{name:<16}{count:>4}{note}')
    if short:
        logger.warning(f'{len(short)} categories are below their minimum case count')

    if coverage:
        rows.extend(format_coverage(coverage_report(corpus)))
    rows.append(report.summary())
    return rows, report
