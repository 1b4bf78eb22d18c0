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
"""compiles top-level DriftScript forms into kind-tagged results

All validation happens here: arity of copulas and connectors, quoting rules,
truth value ranges, tense legality, config keys and variable numbering.
"""

import logging
import re
from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .diagnostics import SourcePos
from .exceptions import CodegenError
from .frontend import AstNode

logger = logging.getLogger('driftscript')


class ResultKind(Enum):
    NARSESE = 'Narsese'
    SHELL_COMMAND = 'ShellCommand'
    CYCLES = 'Cycles'
    DEF_OP = 'DefOp'


@dataclass(frozen=True)
class CompileResult:
    kind: ResultKind
    payload: str
    origin: SourcePos = field(default=SourcePos(1, 1), compare=False)

    def __str__(self) -> str:
        return self.payload


class Tense(Enum):
    NOW = ':|:'
    PAST = ':\\:'
    FUTURE = ':/:'


TENSE_KEYWORDS: Dict[str, Tense] = {
    ':now': Tense.NOW,
    ':past': Tense.PAST,
    ':future': Tense.FUTURE,
}

PUNCTUATION: Dict[str, str] = {
    'believe': '.',
    'ask': '?',
    'goal': '!',
}

COPULAS: Dict[str, str] = {
    'inherit': '-->',
    'similar': '<->',
    'imply': '==>',
    'predict': '=/>',
    'equiv': '<=>',
    'instance': '|->',
}

# infix connectors that take exactly two terms: `(A op B)`
BINARY_CONNECTORS: Dict[str, str] = {
    'and': '&&',
    'or': '||',
    'ext-inter': '&',
    'int-inter': '|',
    'ext-diff': '-',
    'int-diff': '~',
    'ext-image1': '/1',
    'ext-image2': '/2',
    'int-image1': '\\1',
    'int-image2': '\\2',
}

CONNECTORS: FrozenSet[str] = frozenset(
    ['seq', 'not', 'product', 'ext-set', 'int-set'] + list(BINARY_CONNECTORS))

META_FORMS: FrozenSet[str] = frozenset(['cycles', 'def-op', 'reset', 'config', 'concurrent'])

CONFIG_KEYS: FrozenSet[str] = frozenset(['volume', 'decisionthreshold'])

VARIABLE_PREFIXES = '$#?'

_FORBIDDEN_NAME_CHARS = frozenset('<>(){}[]"')
_INTEGER = re.compile(r'[0-9]+')
_DECIMAL = re.compile(r'[+-]?[0-9]+(?:\.[0-9]+)?')
_UNSIGNED_DECIMAL = re.compile(r'[0-9]+(?:\.[0-9]+)?')

# upper bound for cycle counts, `:dt` offsets and explicit variable numbers
MAX_INTEGER_DIGITS = 18


@dataclass
class SentenceSpec:
    keyword: str
    term: AstNode
    tense: Optional[Tense] = None
    truth: Optional[Tuple[float, float]] = None
    dt: Optional[int] = None


def _is_explicit(suffix: str) -> bool:
    return _INTEGER.fullmatch(suffix) is not None and len(suffix) <= MAX_INTEGER_DIGITS


class VarScope:
    """variable numbering for one top-level form

    Explicitly numbered variables (`$1`, `#3`) keep their number and reserve
    it, named variables get the smallest free positive number of their class
    in order of first appearance.
    """

    def __init__(self) -> None:
        self.assigned: Dict[str, Dict[str, int]] = {p: {} for p in VARIABLE_PREFIXES}
        self.reserved: Dict[str, Set[int]] = {p: set() for p in VARIABLE_PREFIXES}

    @classmethod
    def for_form(cls, form: AstNode) -> 'VarScope':
        """a fresh scope with every explicit number in `form` reserved"""
        scope = cls()
        for atom in form.atoms():
            name = atom.symbol
            if name and name[0] in VARIABLE_PREFIXES and _is_explicit(name[1:]):
                scope.reserved[name[0]].add(int(name[1:]))
        return scope

    def resolve(self, name: str) -> int:
        prefix, suffix = name[0], name[1:]
        if _is_explicit(suffix):
            return int(suffix)
        assigned = self.assigned[prefix]
        if suffix not in assigned:
            taken = self.reserved[prefix].union(assigned.values())
            number = 1
            while number in taken:
                number += 1
            assigned[suffix] = number
        return assigned[suffix]


def resolve_variable(name: str, scope: VarScope, pos: SourcePos = SourcePos(1, 1)) -> str:
    """renders variable `name` with its number in `scope`, e.g. `$animal` -> `$1`

    :raises CodegenError: if the variable has no name after its prefix or an
        explicit number longer than `MAX_INTEGER_DIGITS`
    """
    if len(name) < 2:
        raise CodegenError(f"variable name is empty after '{name[:1]}'", pos)
    if _INTEGER.fullmatch(name[1:]) and len(name) - 1 > MAX_INTEGER_DIGITS:
        raise CodegenError(f'variable number is too large (max {MAX_INTEGER_DIGITS} digits)', pos)
    return f'{name[0]}{scope.resolve(name)}'


def format_number(value: float) -> str:
    """shortest round-tripping decimal, never in exponent notation"""
    text = format(Decimal(repr(float(value))), 'f')
    if '.' not in text:
        text += '.0'
    return text


def format_truth(frequency: float, confidence: float) -> str:
    """renders a truth value annotation, e.g. `{0.8 0.9}`"""
    return f'{{{format_number(frequency)} {format_number(confidence)}}}'


def _plural(count: int, noun: str) -> str:
    return f'{count} {noun}' if count == 1 else f'{count} {noun}s'


def _positive_integer(arg: AstNode, what: str) -> int:
    digits = arg.value.lstrip('0')
    if not _INTEGER.fullmatch(arg.value) or not digits:
        raise CodegenError(f'{what} requires a positive integer', arg.pos)
    if len(digits) > MAX_INTEGER_DIGITS:
        raise CodegenError(f'{what} is too large (max {MAX_INTEGER_DIGITS} digits)', arg.pos)
    return int(digits)


def _config_value(arg: AstNode) -> str:
    """`007` -> `7`, `0.50` stays `0.50`"""
    if _DECIMAL.fullmatch(arg.value) and arg.value[0] in '+-':
        raise CodegenError(f"config value must not be signed, got '{arg.value}'", arg.pos)
    if not _UNSIGNED_DECIMAL.fullmatch(arg.value):
        raise CodegenError(f"config value must be numeric, got '{arg.value}'", arg.pos)
    whole, dot, fraction = arg.value.partition('.')
    return (whole.lstrip('0') or '0') + dot + fraction


def _check_name(name: str, what: str, pos: SourcePos) -> None:
    for char in name:
        if char in _FORBIDDEN_NAME_CHARS or char.isspace() or not char.isprintable():
            shown = repr(char)[1:-1] if char.isprintable() else f'U+{ord(char):04X}'
            raise CodegenError(f"invalid character '{shown}' in {what}", pos)


def _check_operation(node: AstNode) -> str:
    name = node.symbol
    if name is None or not name.startswith('^'):
        raise CodegenError("operation must be unquoted and start with '^'", node.pos)
    if len(name) == 1:
        raise CodegenError("operation name is empty after '^'", node.pos)
    _check_name(name[1:], 'operation name', node.pos)
    return name


def _compile_atom(node: AstNode, scope: VarScope) -> str:
    value = node.value
    if node.quoted:
        if not value:
            raise CodegenError('empty concept name', node.pos)
        if value[0] in VARIABLE_PREFIXES:
            raise CodegenError('variables must not be quoted', node.pos)
        if value[0] == '^':
            raise CodegenError('operations must not be quoted', node.pos)
        if value[0] == ':':
            raise CodegenError('keywords must not be quoted', node.pos)
        _check_name(value, 'concept name', node.pos)
        return value
    if value[0] in VARIABLE_PREFIXES:
        return resolve_variable(value, scope, node.pos)
    if value[0] == '^':
        return _check_operation(node)
    if value[0] == ':':
        raise CodegenError(f"unexpected keyword '{value}' in term position", node.pos)
    raise CodegenError('concept names must be quoted', node.pos)


def _term_list(nodes: Iterable[AstNode], scope: VarScope) -> List[str]:
    return [compile_term(node, scope) for node in nodes]


def _compile_connector(name: str, node: AstNode, scope: VarScope) -> str:
    args = node.children[1:]
    count = len(args)

    if name == 'seq':
        if count not in (2, 3):
            raise CodegenError('seq takes 2-3 elements', node.pos)
        terms = _term_list(args, scope)
        rendered = f'({terms[0]} &/ {terms[1]})'
        for term in terms[2:]:
            rendered = f'({rendered} &/ {term})'
        return rendered

    if name == 'not':
        if count != 1:
            raise CodegenError('not takes exactly 1 element', node.pos)
        return f'(-- {compile_term(args[0], scope)})'

    if name in ('product', 'ext-set', 'int-set'):
        if count < 1:
            raise CodegenError(f'{name} takes at least 1 element', node.pos)
        joined = ', '.join(_term_list(args, scope))
        if name == 'product':
            return f'(*, {joined})'
        if name == 'ext-set':
            return f'{{{joined}}}'
        return f'[{joined}]'

    if count != 2:
        raise CodegenError(f'{name} takes exactly 2 elements', node.pos)
    left, right = _term_list(args, scope)
    return f'({left} {BINARY_CONNECTORS[name]} {right})'


def _head_symbol(node: AstNode, where: str) -> str:
    head = node.head
    if head is None:
        raise CodegenError(f'empty {where}', node.pos)
    if head.is_list:
        raise CodegenError(f'{where} head must be a symbol', head.pos)
    if head.quoted:
        raise CodegenError('form head must not be quoted', head.pos)
    return head.value


def compile_term(node: AstNode, scope: VarScope) -> str:
    """compiles a term position: atoms, copulas, connectors and `call`

    :raises CodegenError: on quoting violations, unknown heads and arity errors
    """
    if node.is_atom:
        return _compile_atom(node, scope)

    name = _head_symbol(node, 'term')
    if name in COPULAS:
        args = node.children[1:]
        if len(args) != 2:
            raise CodegenError(f'{name} takes exactly 2 arguments, got {len(args)}', node.pos)
        left, right = _term_list(args, scope)
        return f'<{left} {COPULAS[name]} {right}>'
    if name in CONNECTORS:
        return _compile_connector(name, node, scope)
    if name == 'call':
        return compile_call(node, scope)
    raise CodegenError(f"unknown term form '{name}'", node.head.pos)  # type: ignore


def compile_call(node: AstNode, scope: VarScope) -> str:
    """`(call ^op)` -> `^op`, `(call ^op a b)` -> `<(*, a, b) --> ^op>`"""
    if len(node.children) < 2:
        raise CodegenError('call requires an operation', node.pos)
    operation = _check_operation(node.children[1])
    args = node.children[2:]
    if not args:
        return operation
    return f"<(*, {', '.join(_term_list(args, scope))}) --> {operation}>"


def _option_arg(form: AstNode, index: int, option: AstNode) -> AstNode:
    if index >= len(form.children) or form.children[index].is_list:
        raise CodegenError(f"'{option.value}' is missing its argument", option.pos)
    arg = form.children[index]
    if arg.quoted:
        raise CodegenError('option arguments must not be quoted', arg.pos)
    return arg


def _truth_component(form: AstNode, index: int, what: str, option: AstNode) -> float:
    arg = _option_arg(form, index, option)
    if not _DECIMAL.fullmatch(arg.value):
        raise CodegenError(f"':truth' expects two numbers, got '{arg.value}'", arg.pos)
    value = float(arg.value) + 0.0  # no negative zero
    if not 0.0 <= value <= 1.0:
        raise CodegenError(f'{what} out of range [0, 1]', arg.pos)
    return value


def _check_tense(keyword: str, tense: Tense, option: AstNode) -> None:
    if keyword == 'goal' and tense is not Tense.NOW:
        raise CodegenError(
            f"goals are always present tense, '{option.value}' is not allowed", option.pos)
    if keyword == 'believe' and tense is Tense.FUTURE:
        raise CodegenError("':future' is only allowed on ask", option.pos)


def parse_sentence(form: AstNode) -> SentenceSpec:
    """reads keyword, term and options of a `believe`/`ask`/`goal` form

    Options may come in any order but each kind at most once.
    """
    keyword = form.children[0].value
    if len(form.children) < 2:
        raise CodegenError(f'{keyword} requires a term', form.pos)
    spec = SentenceSpec(keyword=keyword, term=form.children[1])

    index = 2
    seen: Set[str] = set()
    while index < len(form.children):
        option = form.children[index]
        if option.is_list:
            raise CodegenError('expected an option keyword, got a list', option.pos)
        if option.quoted:
            if option.value.startswith(':'):
                raise CodegenError('keywords must not be quoted', option.pos)
            raise CodegenError('only one term is allowed per sentence', option.pos)
        name = option.value
        if not name.startswith(':'):
            raise CodegenError(f"expected an option keyword, got '{name}'", option.pos)

        kind = 'tense' if name in TENSE_KEYWORDS else name.lstrip(':')
        if kind in seen:
            raise CodegenError(f'duplicate {kind} option', option.pos)
        seen.add(kind)

        if name in TENSE_KEYWORDS:
            spec.tense = TENSE_KEYWORDS[name]
            _check_tense(keyword, spec.tense, option)
            index += 1
        elif name == ':truth':
            if keyword == 'ask':
                raise CodegenError("':truth' is not allowed on ask", option.pos)
            spec.truth = (
                _truth_component(form, index + 1, 'frequency', option),
                _truth_component(form, index + 2, 'confidence', option),
            )
            index += 3
        elif name == ':dt':
            spec.dt = _positive_integer(_option_arg(form, index + 1, option), "':dt'")
            index += 2
        else:
            raise CodegenError(f"unknown option '{name}'", option.pos)
    return spec


def compile_sentence(spec: SentenceSpec, scope: VarScope) -> str:
    """renders `<term><punct>[ <tense>][ {f c}][ :dt=N]`"""
    parts = [compile_term(spec.term, scope) + PUNCTUATION[spec.keyword]]
    tense = Tense.NOW if spec.keyword == 'goal' else spec.tense
    if tense is not None:
        parts.append(tense.value)
    if spec.truth is not None:
        parts.append(format_truth(*spec.truth))
    if spec.dt is not None:
        parts.append(f':dt={spec.dt}')
    return ' '.join(parts)


def _meta_args(form: AstNode, name: str, count: int) -> Tuple[AstNode, ...]:
    args = form.children[1:]
    if len(args) != count:
        if count == 0:
            raise CodegenError(f'{name} takes no arguments', form.pos)
        raise CodegenError(f'{name} takes exactly {_plural(count, "argument")}', form.pos)
    for arg in args:
        if arg.is_list:
            raise CodegenError(f'{name} arguments must be atoms', arg.pos)
    return args


def compile_meta(form: AstNode, config_keys: Iterable[str] = CONFIG_KEYS) -> CompileResult:
    """compiles `cycles`, `def-op`, `reset`, `config` and `concurrent`"""
    name = form.children[0].value

    if name == 'cycles':
        count, = _meta_args(form, name, 1)
        if count.quoted:
            raise CodegenError('meta arguments must not be quoted', count.pos)
        return CompileResult(ResultKind.CYCLES, str(_positive_integer(count, name)), form.pos)

    if name == 'def-op':
        operation, = _meta_args(form, name, 1)
        if operation.quoted:
            raise CodegenError('meta arguments must not be quoted', operation.pos)
        return CompileResult(ResultKind.DEF_OP, _check_operation(operation), form.pos)

    if name == 'config':
        key, value = _meta_args(form, name, 2)
        if key.quoted:
            raise CodegenError('config keys must not be quoted', key.pos)
        if key.value not in config_keys:
            allowed = ', '.join(sorted(config_keys))
            raise CodegenError(f"unknown config key '{key.value}' (allowed: {allowed})",
                               key.pos)
        if value.quoted:
            raise CodegenError('meta arguments must not be quoted', value.pos)
        return CompileResult(
            ResultKind.SHELL_COMMAND, f'*{key.value}={_config_value(value)}', form.pos)

    if name in ('reset', 'concurrent'):
        _meta_args(form, name, 0)
        return CompileResult(ResultKind.SHELL_COMMAND, f'*{name}', form.pos)

    raise CodegenError(f"unknown form '{name}'", form.pos)


def compile_form(form: AstNode, config_keys: Iterable[str] = CONFIG_KEYS) -> CompileResult:
    """dispatches a top-level form on its head symbol

    Every call starts from a fresh variable scope.

    :raises CodegenError: for bare atoms, quoted heads, unknown forms and
        everything the sentence, term and meta compilers reject
    """
    if form.is_atom:
        raise CodegenError('bare atom at top level', form.pos)
    name = _head_symbol(form, 'form')

    if name in PUNCTUATION:
        spec = parse_sentence(form)
        payload = compile_sentence(spec, VarScope.for_form(form))
        return CompileResult(ResultKind.NARSESE, payload, form.pos)
    if name in META_FORMS:
        return compile_meta(form, config_keys)
    raise CodegenError(f"unknown form '{name}'", form.head.pos)  # type: ignore
