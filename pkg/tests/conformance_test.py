import random
import statistics
import time

import pytest

from driftscript.api import compile_source
from driftscript.codegen import ResultKind
from driftscript.conformance import (
    CATEGORY_MINIMUMS,
    MINIMUM_TOTAL,
    check_narsese_wellformed,
    run_corpus,
    tally_categories,
)
from driftscript.conformance.corpus import (
    ExpectedError,
    GoldenCase,
    load_case,
    load_corpus,
    outcome_lines,
    parse_case,
    run_case,
    under_populated,
)
from driftscript.conformance.coverage import NAL_COVERAGE, coverage_report, format_coverage
from driftscript.conformance.generate import ProgramGenerator
from driftscript.exceptions import CorpusError

from .utils import GOLDEN, _get_program


class TestCorpus:
    def test_all_cases_pass(self, corpus):
        report = run_corpus(corpus)
        assert [failure.case.ident for failure in report.failures] == []
        assert report.ok
        assert report.summary() == f'PASS {len(corpus)}/{len(corpus)}'

    def test_parallel_report_keeps_order(self, corpus):
        sequential = run_corpus(corpus)
        parallel = run_corpus(corpus, workers=8)
        assert [r.case.ident for r in parallel.results] == \
            [r.case.ident for r in sequential.results]
        assert [r.actual for r in parallel.results] == [r.actual for r in sequential.results]

    def test_category_minimums(self, corpus):
        tally = tally_categories(corpus)
        assert set(tally) == set(CATEGORY_MINIMUMS)
        assert under_populated(tally) == {}
        assert sum(tally.values()) >= MINIMUM_TOTAL
        assert sum(CATEGORY_MINIMUMS.values()) <= MINIMUM_TOTAL

    def test_golden_translations_are_in_the_corpus(self, corpus):
        expected = {(case.source.strip(), case.expected) for case in corpus
                    if case.expected is not None}
        for source, narsese in GOLDEN:
            assert (source, ((ResultKind.NARSESE, narsese),)) in expected

    def test_seven_quoting_classes(self, corpus):
        messages = {case.expected_error.message for case in corpus
                    if case.category == 'quoting'}
        assert {
            'keywords must not be quoted',
            'operations must not be quoted',
            'variables must not be quoted',
            'concept names must be quoted',
            'form head must not be quoted',
            'config keys must not be quoted',
            'meta arguments must not be quoted',
        } <= messages

    def test_oracle_closure(self, corpus):
        for case in corpus:
            for result in compile_source(case.source).results:
                if result.kind is ResultKind.NARSESE:
                    assert check_narsese_wellformed(result.payload), case.ident

    def test_coverage(self, corpus):
        rows = coverage_report(corpus)
        assert len(rows) == len(NAL_COVERAGE)
        assert [row.construct.name for row in rows if not row.covered] == []
        assert {row.construct.level for row in rows} == set(range(1, 9))

    def test_format_coverage(self, corpus):
        lines = format_coverage(coverage_report(corpus))
        assert lines[0].startswith('NAL-1  Inheritance')
        assert lines[0].endswith('covered')


class TestHarness:
    def test_corrupted_expectation_is_the_only_failure(self, corpus):
        victim = next(case for case in corpus if case.ident == 'copulas/predict')
        corrupted = GoldenCase(victim.name, victim.category, victim.source,
                               expected=((ResultKind.NARSESE, '<A ==> B>.'),))
        cases = [corrupted if case.ident == victim.ident else case for case in corpus]
        report = run_corpus(cases)
        assert [failure.case for failure in report.failures] == [corrupted]
        assert report.summary() == f'PASS {len(corpus) - 1}/{len(corpus)}'
        diff = report.failures[0].diff()
        assert '-Narsese <A ==> B>.' in diff
        assert '+Narsese <A =/> B>.' in diff

    def test_error_expectation(self):
        case = parse_case('--- source\n(cycles 0)\n--- error\n1:9 positive integer\n')
        assert case.expected_error == ExpectedError(1, 9, 'positive integer')
        assert run_case(case).passed

    def test_error_position_must_match(self):
        case = parse_case('--- source\n(cycles 0)\n--- error\n1:1 positive integer\n')
        result = run_case(case)
        assert not result.passed
        assert result.actual == ['error 1:9 cycles requires a positive integer']

    def test_unexpected_success(self):
        case = parse_case('--- source\n(cycles 1)\n--- error\n1:9 positive integer\n')
        assert not run_case(case).passed

    def test_comments_before_first_section(self):
        case = parse_case('# a comment\n\n--- source\n(reset)\n--- expect\nShellCommand *reset\n')
        assert case.expected == ((ResultKind.SHELL_COMMAND, '*reset'),)

    def test_multiline_source(self):
        case = parse_case('--- source\n(reset)\n(cycles 2)\n--- expect\n'
                          'ShellCommand *reset\nCycles 2\n')
        assert case.source == '(reset)\n(cycles 2)'
        assert run_case(case).passed

    @pytest.mark.parametrize('text', [
        '(reset)\n',
        '--- expect\nShellCommand *reset\n',
        '--- source\n(reset)\n',
        '--- source\n(reset)\n--- expect\nShellCommand *reset\n--- error\n1:1 x\n',
        '--- source\n(reset)\n--- source\n(reset)\n--- expect\n',
        '--- source\n(reset)\n--- output\nShellCommand *reset\n',
        '--- source\n(reset)\n--- expect\nShell *reset\n',
        '--- source\n(reset)\n--- expect\nShellCommand\n',
        '--- source\n(reset)\n--- error\nsomewhere\n',
        '--- source\n(reset)\n--- error\n1:1 a\n2:2 b\n',
    ])
    def test_malformed(self, text):
        with pytest.raises(CorpusError) as excinfo:
            parse_case(text, path='bad.case')
        assert excinfo.value.path == 'bad.case'

    def test_load_case_names(self, tmpdir):
        path = tmpdir.mkdir('meta').join('reset.case')
        path.write('--- source\n(reset)\n--- expect\nShellCommand *reset\n')
        case = load_case(str(path))
        assert case.ident == 'meta/reset'

    def test_load_corpus_filters_categories(self, tmpdir):
        for category in ('meta', 'parser'):
            tmpdir.mkdir(category).join('a.case').write(
                '--- source\n(reset)\n--- expect\nShellCommand *reset\n')
        tmpdir.join('README').write('not a case')
        assert [case.ident for case in load_corpus(str(tmpdir))] == ['meta/a', 'parser/a']
        assert [case.ident for case in load_corpus(str(tmpdir), ['parser'])] == ['parser/a']

    def test_load_corpus_missing_directory(self, tmpdir):
        with pytest.raises(CorpusError):
            load_corpus(str(tmpdir.join('nope')))

    def test_unreadable_case(self, tmpdir):
        path = tmpdir.mkdir('meta').join('latin1.case')
        path.write_binary(b'--- source\n(believe "caf\xe9")\n')
        with pytest.raises(CorpusError):
            load_case(str(path))

    def test_golden_case_needs_one_expectation(self):
        with pytest.raises(ValueError):
            GoldenCase('x', 'meta', '(reset)')


class TestWellformed:
    @pytest.mark.parametrize('payload', [
        '<robin --> bird>.',
        '<(a &/ b) =/> c>. :|:',
        'a. :\\: {0.5 0.5} :dt=3',
        '<?1 --> animal>?',
        'light_off! :|:',
        '<(*, {SELF}, park) --> ^goto>.',
        '(-- (-- A)).',
        '<x --> [bright, warm]>. {1.0 0.0}',
        'a.b.',
    ])
    def test_wellformed(self, payload):
        assert check_narsese_wellformed(payload)

    @pytest.mark.parametrize('payload', [
        '<robin --> bird>',
        '<robin --> bird.',
        'robin --> bird>.',
        '<(a &/ b>) =/> c>.',
        '<"robin" --> bird>.',
        '<robin --> bird>. :|: :|:',
        '<robin --> bird>. {0.5}',
        '<robin --> bird>. {1.5 0.5}',
        '<robin --> bird>. :dt=0',
        '<robin --> bird>.\n',
        ' <robin --> bird>.',
        '<robin --> bird>. extra',
        '().',
        '.',
    ])
    def test_malformed(self, payload):
        assert not check_narsese_wellformed(payload)


class TestPrograms:
    def test_temporal(self):
        outcome = compile_source(_get_program('temporal'))
        assert outcome.payloads()[:4] == ['^grab', '*volume=0', 'see_food. :|:', '5']
        assert outcome.payloads()[4:6] == ['^grab. :|:', '5']
        assert outcome.payloads()[-3:] == ['see_food. :|:', 'have_food! :|:', '10']
        assert len(outcome.results) == 17

    def test_planning(self):
        outcome = compile_source(_get_program('planning'))
        assert [result.kind for result in outcome.results][:2] == [ResultKind.DEF_OP] * 2
        assert '<(see_key &/ ^pickup) =/> have_key>.' in outcome.payloads()

    def test_http_agent(self):
        assert compile_source(_get_program('http_agent')).payloads() == [
            '<(soil_dry &/ ^water) =/> soil_moist>.', '*decisionthreshold=0.5']


class TestGenerated:
    def test_generator_is_deterministic(self):
        assert ProgramGenerator(7).program(20) == ProgramGenerator(7).program(20)
        assert ProgramGenerator(7).program(20) != ProgramGenerator(8).program(20)

    def test_valid_programs_compile(self):
        for seed in range(200):
            outcome = compile_source(ProgramGenerator(seed).program(5))
            assert outcome.ok, (seed, outcome.failure)

    def test_fuzz_sanity(self):
        for seed in range(10000):
            source = ProgramGenerator(seed, mutation_rate=0.2).program(3)
            outcome = compile_source(source)
            if outcome.ok:
                for result in outcome.results:
                    if result.kind is ResultKind.NARSESE:
                        assert check_narsese_wellformed(result.payload), (seed, result)
            else:
                assert outcome.failure.pos.line >= 1 and outcome.failure.pos.col >= 1
                assert outcome.results == ()

    def test_mutations_produce_diagnostics(self):
        failures = sum(not compile_source(ProgramGenerator(seed, mutation_rate=1.0).program(1)).ok
                       for seed in range(100))
        assert failures > 50

    @pytest.mark.parametrize('count', [1, 2, 10, 25, 50])
    def test_concatenation(self, corpus, large_limits, count):
        passing = [case for case in corpus if case.expected is not None]
        chosen = random.Random(count).sample(passing, count)
        joined = compile_source('\n'.join(case.source for case in chosen), limits=large_limits)
        assert outcome_lines(joined) == [line for case in chosen for line in case.expected_lines()]

    def test_performance(self, large_limits):
        source = ProgramGenerator(2024).program(300)
        assert compile_source(source, limits=large_limits).ok
        timings = []
        for _ in range(100):
            start = time.perf_counter()
            compile_source(source, limits=large_limits)
            timings.append(time.perf_counter() - start)
        assert statistics.median(timings) <= 0.05
