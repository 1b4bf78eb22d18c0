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
"""structural readability metrics for comparing DriftScript with Narsese

Whitespace is not counted at all and the double quote is treated as a string
delimiter, so it counts towards `total_chars` but is never a symbol.
"""

from typing import Dict, FrozenSet, List, NamedTuple, Optional

COUNTS = ('total_chars', 'symbol_chars', 'distinct_symbols', 'alpha_chars')


class StatsReport(NamedTuple):
    total_chars: int
    symbol_chars: int
    distinct_symbols: int
    alpha_chars: int
    alpha_ratio: float
    symbols: FrozenSet[str] = frozenset()


class StatsComparison(NamedTuple):
    driftscript: StatsReport
    narsese: StatsReport
    # driftscript / narsese per count, None where narsese has a zero count
    ratios: Dict[str, Optional[float]]


def is_symbol(char: str) -> bool:
    return not (char.isalpha() or char.isdigit() or char.isspace() or char == '"')


def compute_stats(text: str) -> StatsReport:
    total = alpha = symbol_chars = 0
    symbols = set()
    for char in text:
        if char.isspace():
            continue
        total += 1
        if char.isalpha():
            alpha += 1
        elif is_symbol(char):
            symbol_chars += 1
            symbols.add(char)
    return StatsReport(
        total_chars=total,
        symbol_chars=symbol_chars,
        distinct_symbols=len(symbols),
        alpha_chars=alpha,
        alpha_ratio=alpha / total if total else 0.0,
        symbols=frozenset(symbols),
    )


def compare_stats(driftscript_text: str, narsese_text: str) -> StatsComparison:
    driftscript = compute_stats(driftscript_text)
    narsese = compute_stats(narsese_text)
    ratios: Dict[str, Optional[float]] = {}
    for name in COUNTS:
        denominator = getattr(narsese, name)
        ratios[name] = getattr(driftscript, name) / denominator if denominator else None
    return StatsComparison(driftscript, narsese, ratios)


def _ratio(value: Optional[float]) -> str:
    return 'n/a' if value is None else f'{value:.2f}'


def format_stats(report: StatsReport) -> List[str]:
    rows = [f'{name}: {getattr(report, name)}' for name in COUNTS]
    rows.append(f'alpha_ratio: {report.alpha_ratio:.2f}')
    rows.append(f"symbols: {''.join(sorted(report.symbols))}")
    return rows


def format_comparison(comparison: StatsComparison) -> List[str]:
    rows = [f"{'metric':<18}{'driftscript':>12}{'narsese':>10}{'ratio':>8}"]
    for name in COUNTS:
        rows.append(
            f'{name:<18}{getattr(comparison.driftscript, name):>12}'
            f'{getattr(comparison.narsese, name):>10}{_ratio(comparison.ratios[name]):>8}'
        )
    rows.append(
        f"{'alpha_ratio':<18}{comparison.driftscript.alpha_ratio:>12.2f}"
        f"{comparison.narsese.alpha_ratio:>10.2f}{'---':>8}"
    )
    return rows
