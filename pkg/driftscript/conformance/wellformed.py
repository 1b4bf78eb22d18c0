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
"""a minimal structural check for emitted Narsese sentences

This is an output oracle, not a Narsese parser: it only verifies that
brackets nest properly, the sentence carries punctuation and that nothing but
known annotations follows it.
"""

import re

_COPULA = re.compile(r'-->|<->|==>|=/>|<=>|\|->')
_NUMBER = r'[0-9]+(?:\.[0-9]+)?'
_SENTENCE = re.compile(
    r'(?P<term>.+?)'
    r'(?P<punctuation>[.?!])'
    r'(?: (?P<tense>:\|:|:\\:|:/:))?'
    r'(?: \{(?P<frequency>' + _NUMBER + r') (?P<confidence>' + _NUMBER + r')\})?'
    r'(?: :dt=[1-9][0-9]*)?',
    re.DOTALL,
)
_OPENERS = {')': '(', '>': '<', '}': '{', ']': '['}


def brackets_balanced(term: str) -> bool:
    """`<>`, `()`, `{}` and `[]` nest properly and none of them is empty

    Angle brackets inside copulas do not count.
    """
    stack = []
    previous = ''
    for char in _COPULA.sub(' ', term):
        if char in '(<{[':
            stack.append(char)
        elif char in _OPENERS:
            if not stack or stack.pop() != _OPENERS[char] or previous == _OPENERS[char]:
                return False
        previous = char
    return not stack


def check_narsese_wellformed(payload: str) -> bool:
    if '"' in payload or not payload.isprintable():
        return False
    match = _SENTENCE.fullmatch(payload)
    if match is None:
        return False
    term = match.group('term')
    if term != term.strip():
        return False
    if match.group('frequency') is not None:
        if not (0 <= float(match.group('frequency')) <= 1
                and 0 <= float(match.group('confidence')) <= 1):
            return False
    return brackets_balanced(term)
