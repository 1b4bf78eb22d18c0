from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from driftscript.api import compile_source
from driftscript.codegen import VarScope, compile_form, resolve_variable
from driftscript.conformance.generate import ProgramGenerator
from driftscript.diagnostics import SourcePos
from driftscript.exceptions import CodegenError
from driftscript.frontend import parse_source

variables = st.tuples(
    st.sampled_from('$#?'),
    st.sampled_from(['a', 'b', 'c', 'd', '1', '2', '3', '4']),
)


def _numbering(variable_list):
    """the smallest assignment, in order of first appearance, that keeps
    explicit numbers and never reuses a number within a class, found by
    trying every candidate"""
    numbers = {}
    for prefix in '$#?':
        suffixes = [suffix for p, suffix in variable_list if p == prefix]
        reserved = {int(suffix) for suffix in suffixes if suffix.isdigit()}
        names = list(dict.fromkeys(suffix for suffix in suffixes if not suffix.isdigit()))
        candidates = range(1, len(names) + len(reserved) + 1)
        best = min(assignment for assignment in permutations(candidates, len(names))
                   if not reserved.intersection(assignment))
        numbers.update({(prefix, name): number for name, number in zip(names, best)})
        numbers.update({(prefix, str(number)): number for number in reserved})
    return [f'{prefix}{numbers[prefix, suffix]}' for prefix, suffix in variable_list]


def _compiled_variables(variable_list):
    source = '(believe (product ' + ' '.join(p + s for p, s in variable_list) + '))'
    form, = parse_source(source)
    payload = compile_form(form).payload
    assert payload.startswith('(*, ') and payload.endswith(').')
    return payload[4:-2].split(', ')


@settings(max_examples=1000)
@given(st.lists(variables, min_size=1, max_size=15))
def test_numbering_oracle(variable_list):
    assert _compiled_variables(variable_list) == _numbering(variable_list)


def test_explicit_numbers_are_identity():
    assert resolve_variable('$2', VarScope()) == '$2'
    assert resolve_variable('#17', VarScope()) == '#17'


def test_named_after_explicit():
    assert _compiled_variables([('$', '1'), ('$', 'foo')]) == ['$1', '$2']


def test_explicit_reserved_before_first_use():
    assert _compiled_variables([('$', 'foo'), ('$', '1')]) == ['$2', '$1']


def test_same_name_same_number():
    assert _compiled_variables([('$', 'x'), ('$', 'y'), ('$', 'x')]) == ['$1', '$2', '$1']


def test_classes_are_independent():
    assert _compiled_variables([('$', 'x'), ('#', 'x'), ('?', 'y')]) == ['$1', '#1', '?1']


def test_scope_for_form_reserves_numbers():
    form, = parse_source('(believe (and (inherit $a #2) (inherit $5 ?7)))')
    scope = VarScope.for_form(form)
    assert scope.reserved == {'$': {5}, '#': {2}, '?': {7}}


def test_empty_variable_name():
    with pytest.raises(CodegenError) as excinfo:
        resolve_variable('#', VarScope(), SourcePos(3, 4))
    assert excinfo.value.message == "variable name is empty after '#'"
    assert excinfo.value.pos == SourcePos(3, 4)


def test_scope_resets_per_form():
    outcome = compile_source('(believe (inherit $x "a"))\n(believe (inherit $y "b"))')
    assert outcome.payloads() == ['<$1 --> a>.', '<$1 --> b>.']


@given(st.integers(min_value=0, max_value=2 ** 32))
def test_scope_isolation(seed):
    first, second = (form.to_source() for form in ProgramGenerator(seed).forms(2))
    together = compile_source(first + '\n' + second)
    separately = [compile_source(first), compile_source(second)]
    if all(outcome.ok for outcome in separately):
        assert together.results == separately[0].results + separately[1].results
    else:
        assert not together.ok


def test_explicit_number_too_long():
    outcome = compile_source('(believe (inherit $' + '1' * 5000 + ' "a"))')
    assert outcome.failure.message == 'variable number is too large (max 18 digits)'
    assert outcome.failure.pos == SourcePos(1, 19)
