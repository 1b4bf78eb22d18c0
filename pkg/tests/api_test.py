import pytest

from driftscript.api import CompileOutcome, compile_source, render_diagnostic
from driftscript.codegen import ResultKind
from driftscript.diagnostics import Diagnostic, SourcePos, Stage
from driftscript.exceptions import CodegenError, ParseError, TokenizeError
from driftscript.frontend import MAX_DEPTH, Limits

from .utils import _get_program


def test_deduction_program():
    outcome = compile_source(_get_program('deduction'), max_results=16)
    assert outcome.ok
    assert [result.kind for result in outcome.results] == [
        ResultKind.NARSESE, ResultKind.NARSESE, ResultKind.CYCLES,
        ResultKind.NARSESE, ResultKind.CYCLES,
    ]
    assert outcome.payloads() == [
        '<robin --> bird>.', '<bird --> animal>.', '5', '<robin --> animal>?', '5']


def test_empty_source():
    outcome = compile_source('')
    assert outcome == CompileOutcome()
    assert outcome.ok
    assert outcome.results == ()


def test_too_many_results():
    outcome = compile_source('(reset) (reset)\n(reset)', max_results=2)
    assert not outcome.ok
    assert outcome.failure == Diagnostic(Stage.COMPILE, 'too many results (max 2)',
                                         SourcePos(2, 1))


def test_exactly_max_results():
    assert len(compile_source('(reset) (reset)', max_results=2).results) == 2


def test_max_results_defaults_to_limits():
    outcome = compile_source('(reset) (reset)', limits=Limits(max_results=1))
    assert outcome.failure.message == 'too many results (max 1)'


@pytest.mark.parametrize('max_results', [0, -1])
def test_max_results_precondition(max_results):
    with pytest.raises(ValueError):
        compile_source('(reset)', max_results=max_results)


def test_fail_fast_without_partial_results():
    outcome = compile_source('(believe "a")\n(cycles 2)\n(believe b)\n(believe "c")')
    assert outcome.results == ()
    assert outcome.failure == Diagnostic(Stage.COMPILE, 'concept names must be quoted',
                                         SourcePos(3, 10))


@pytest.mark.parametrize('source,stage', [
    ('"abc', Stage.TOKENIZE),
    ('(reset', Stage.PARSE),
    ('(reset 1)', Stage.COMPILE),
])
def test_failure_stage(source, stage):
    assert compile_source(source).failure.stage is stage


def test_order_preservation():
    outcome = compile_source('(def-op ^a) (cycles 1) (reset) (believe "x") (def-op ^b)')
    assert [result.kind for result in outcome.results] == [
        ResultKind.DEF_OP, ResultKind.CYCLES, ResultKind.SHELL_COMMAND,
        ResultKind.NARSESE, ResultKind.DEF_OP,
    ]
    assert [result.origin.col for result in outcome.results] == [1, 13, 24, 32, 46]


def test_idempotence():
    source = _get_program('temporal')
    assert compile_source(source) == compile_source(source)


def test_limits_are_per_call():
    source = '(believe (inherit "a" "b"))'
    assert not compile_source(source, limits=Limits(max_tokens=4)).ok
    assert compile_source(source).ok


def test_config_keys():
    outcome = compile_source('(config babblingops 3)', config_keys=['babblingops'])
    assert outcome.payloads() == ['*babblingops=3']


@pytest.mark.parametrize('source,error_class', [
    ('"abc', TokenizeError),
    ('())', ParseError),
    ('(frobnicate)', CodegenError),
])
def test_raise_for_failure(source, error_class):
    outcome = compile_source(source)
    with pytest.raises(error_class) as excinfo:
        outcome.raise_for_failure()
    assert excinfo.value.diagnostic == outcome.failure


def test_raise_for_failure_on_success():
    compile_source('(reset)').raise_for_failure()


@pytest.mark.parametrize('diagnostic,rendered', [
    (Diagnostic(Stage.PARSE, "unexpected ')'", SourcePos(2, 5)), "2:5: error: unexpected ')'"),
    (Diagnostic(Stage.COMPILE, 'seq takes 2-3 elements', SourcePos(1, 10)),
     '1:10: error: seq takes 2-3 elements'),
    (Diagnostic(Stage.TOKENIZE, 'unterminated string', SourcePos(4, 3)),
     '4:3: error: unterminated string'),
])
def test_render_diagnostic(diagnostic, rendered):
    assert render_diagnostic(diagnostic) == rendered
    assert str(diagnostic) == rendered


@pytest.mark.parametrize('message', ['', 'two\nlines'])
def test_diagnostic_message_is_single_line(message):
    with pytest.raises(ValueError):
        Diagnostic(Stage.COMPILE, message, SourcePos(1, 1))


@pytest.mark.parametrize('source', [
    '(cycles ' + '9' * 5000 + ')',
    '(believe "a" :dt ' + '9' * 5000 + ')',
    '(believe (inherit #' + '7' * 5000 + ' "a"))',
])
def test_huge_numbers_are_diagnostics(source):
    outcome = compile_source(source)
    assert not outcome.ok
    assert outcome.failure.stage is Stage.COMPILE
    assert 'too large (max 18 digits)' in outcome.failure.message


def test_deepest_nesting_compiles():
    source = '(believe ' + '(not ' * (MAX_DEPTH - 1) + '"a"' + ')' * MAX_DEPTH
    outcome = compile_source(source, limits=Limits(max_depth=MAX_DEPTH))
    assert outcome.payloads() == ['(-- ' * (MAX_DEPTH - 1) + 'a' + ')' * (MAX_DEPTH - 1) + '.']


def test_nesting_beyond_the_cap_is_a_diagnostic():
    source = '(believe ' + '(not ' * MAX_DEPTH + '"a"' + ')' * (MAX_DEPTH + 1)
    outcome = compile_source(source, limits=Limits(max_depth=MAX_DEPTH))
    assert outcome.failure.message == f'nesting too deep (max {MAX_DEPTH})'
