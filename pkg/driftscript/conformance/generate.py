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
"""grammar-directed generation of random DriftScript programs

Programs are built as trees following the grammar and its arity tables, then
printed. With a non-zero `mutation_rate` some forms are damaged on purpose
(wrong arity, wrong quoting, illegal options) so that the compiler's error
paths get exercised as well.
"""

import random
from typing import List, Optional

from ..codegen import BINARY_CONNECTORS, CONFIG_KEYS, COPULAS
from ..diagnostics import SourcePos
from ..frontend import AstNode

_NAMES = ['robin', 'bird', 'animal', 'light_on', 'light_off', 'SELF', 'switch', 'park',
          'see_food', 'have_food', 'x1', 'A', 'B', 'C']
_VARIABLE_NAMES = ['x', 'y', 'what', 'animal', '1', '2', '3', '4']
_OPERATIONS = ['^press', '^grab', '^goto', '^pickup', '^unlock', '^water']
_NARY = ['product', 'ext-set', 'int-set']
_ORIGIN = SourcePos(1, 1)


def _atom(value: str, quoted: bool = False) -> AstNode:
    return AstNode.atom(value, _ORIGIN, quoted=quoted)


def _form(head: str, *children: AstNode) -> AstNode:
    return AstNode.list_of((_atom(head),) + children, _ORIGIN)


class ProgramGenerator:
    """seeded random program source, the same seed gives the same programs"""

    def __init__(self, seed: Optional[int] = None, max_depth: int = 3,
                 mutation_rate: float = 0.0, rng: Optional[random.Random] = None) -> None:
        self.rng = rng or random.Random(seed)
        self.max_depth = max_depth
        self.mutation_rate = mutation_rate

    def concept(self) -> AstNode:
        return _atom(self.rng.choice(_NAMES), quoted=True)

    def variable(self) -> AstNode:
        return _atom(self.rng.choice('$#?') + self.rng.choice(_VARIABLE_NAMES))

    def operation(self) -> AstNode:
        return _atom(self.rng.choice(_OPERATIONS))

    def atom(self) -> AstNode:
        roll = self.rng.random()
        if roll < 0.7:
            return self.concept()
        if roll < 0.9:
            return self.variable()
        return self.operation()

    def terms(self, count: int, depth: int) -> List[AstNode]:
        return [self.term(depth) for _ in range(count)]

    def term(self, depth: int = 0) -> AstNode:
        if depth >= self.max_depth or self.rng.random() < 0.4:
            return self.atom()
        roll = self.rng.random()
        if roll < 0.35:
            return _form(self.rng.choice(sorted(COPULAS)), *self.terms(2, depth + 1))
        if roll < 0.55:
            return _form(self.rng.choice(sorted(BINARY_CONNECTORS)), *self.terms(2, depth + 1))
        if roll < 0.65:
            return _form('seq', *self.terms(self.rng.randint(2, 3), depth + 1))
        if roll < 0.72:
            return _form('not', self.term(depth + 1))
        if roll < 0.85:
            return _form(self.rng.choice(_NARY), *self.terms(self.rng.randint(1, 4), depth + 1))
        return _form('call', self.operation(), *self.terms(self.rng.randint(0, 3), depth + 1))

    def truth(self) -> List[AstNode]:
        return [_atom(':truth'),
                _atom(str(self.rng.randint(0, 100) / 100)),
                _atom(str(self.rng.randint(0, 100) / 100))]

    def sentence(self) -> AstNode:
        keyword = self.rng.choice(['believe', 'believe', 'ask', 'goal'])
        options: List[List[AstNode]] = []
        tenses = {'believe': [':now', ':past'], 'ask': [':now', ':past', ':future'],
                  'goal': [':now']}[keyword]
        if self.rng.random() < 0.4:
            options.append([_atom(self.rng.choice(tenses))])
        if keyword != 'ask' and self.rng.random() < 0.3:
            options.append(self.truth())
        if self.rng.random() < 0.1:
            options.append([_atom(':dt'), _atom(str(self.rng.randint(1, 20)))])
        self.rng.shuffle(options)
        return _form(keyword, self.term(), *[atom for group in options for atom in group])

    def meta(self) -> AstNode:
        roll = self.rng.random()
        if roll < 0.5:
            return _form('cycles', _atom(str(self.rng.randint(1, 50))))
        if roll < 0.7:
            return _form('def-op', self.operation())
        if roll < 0.85:
            key = self.rng.choice(sorted(CONFIG_KEYS))
            return _form('config', _atom(key), _atom(str(self.rng.randint(0, 10) / 10)))
        return _form(self.rng.choice(['reset', 'concurrent']))

    def mutate(self, form: AstNode) -> AstNode:
        roll = self.rng.random()
        if roll < 0.2:
            # drop or duplicate the last child
            children = list(form.children)
            if len(children) > 1 and self.rng.random() < 0.5:
                children.pop()
            else:
                children.append(children[-1])
            return AstNode.list_of(children, form.pos)
        if roll < 0.4:
            # an unquoted concept
            return _form('believe', _atom(self.rng.choice(_NAMES)))
        if roll < 0.6:
            return _form('goal', self.concept(), _atom(self.rng.choice([':past', ':future'])))
        if roll < 0.8:
            return _form('believe', self.concept(), _atom(':truth'), _atom('1.5'), _atom('0.9'))
        return _form(self.rng.choice(['cycles', 'seq', 'frobnicate']), _atom('0'))

    def form(self) -> AstNode:
        form = self.sentence() if self.rng.random() < 0.75 else self.meta()
        if self.mutation_rate and self.rng.random() < self.mutation_rate:
            form = self.mutate(form)
        return form

    def forms(self, count: int) -> List[AstNode]:
        return [self.form() for _ in range(count)]

    def program(self, count: int) -> str:
        return '\n'.join(form.to_source() for form in self.forms(count))
