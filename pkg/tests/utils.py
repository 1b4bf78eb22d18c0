import os
from typing import List, Tuple

from driftscript.conformance.corpus import load_corpus

TESTS = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(TESTS, 'fixtures')
PROGRAMS = os.path.join(TESTS, 'programs')
CONFIGS = os.path.join(TESTS, 'configs')

# (DriftScript, Narsese) for the canonical translations, all of them are also
# part of the fixture corpus
GOLDEN: List[Tuple[str, str]] = [
    ('(believe (inherit "robin" "bird"))', '<robin --> bird>.'),
    ('(believe (similar "cat" "dog"))', '<cat <-> dog>.'),
    ('(believe (imply "rain" "wet"))', '<rain ==> wet>.'),
    ('(believe (predict "A" "B"))', '<A =/> B>.'),
    ('(believe (equiv "A" "B"))', '<A <=> B>.'),
    ('(believe (instance "Tweety" "bird"))', '<Tweety |-> bird>.'),
    ('(believe "light_on" :now)', 'light_on. :|:'),
    ('(goal "light_off")', 'light_off! :|:'),
    ('(ask (inherit "robin" "animal"))', '<robin --> animal>?'),
    ('(ask (inherit ?x "animal"))', '<?1 --> animal>?'),
    ('(believe (predict (seq "a" "b") "c"))', '<(a &/ b) =/> c>.'),
    ('(believe (inherit (ext-set "SELF") "agent"))', '<{SELF} --> agent>.'),
    ('(believe (inherit "x" (int-set "bright")))', '<x --> [bright]>.'),
    ('(believe (inherit (product "A" "B") "rel"))', '<(*, A, B) --> rel>.'),
    ('(believe (imply (inherit $x "bird") (inherit $x "animal")))',
     '<<$1 --> bird> ==> <$1 --> animal>>.'),
    ('(believe (predict (seq "light_on" (call ^press)) "light_off"))',
     '<(light_on &/ ^press) =/> light_off>.'),
    ('(believe (call ^goto (ext-set "SELF") "park"))', '<(*, {SELF}, park) --> ^goto>.'),
    ('(believe (and "A" "B"))', '(A && B).'),
    ('(believe (not "A"))', '(-- A).'),
    ('(believe (or "A" "B"))', '(A || B).'),
]

# the light switch example, as DriftScript and as the Narsese it compiles to
LIGHT_SWITCH_DRIFTSCRIPT = (
    '(believe (predict (seq "light_on" (call ^press (ext-set "SELF") "switch")) "light_off"))'
)
LIGHT_SWITCH_NARSESE = '<(light_on &/ <(*, {SELF}, switch) --> ^press>) =/> light_off>.'

COPULA_NAMES = ['inherit', 'similar', 'imply', 'predict', 'equiv', 'instance']
# connector -> accepted argument counts
CONNECTOR_ARITIES = {
    'seq': {2, 3},
    'not': {1},
    'and': {2},
    'or': {2},
    'ext-inter': {2},
    'int-inter': {2},
    'ext-diff': {2},
    'int-diff': {2},
    'ext-image1': {2},
    'ext-image2': {2},
    'int-image1': {2},
    'int-image2': {2},
    'product': {1, 2, 3, 4, 5},
    'ext-set': {1, 2, 3, 4, 5},
    'int-set': {1, 2, 3, 4, 5},
}


def _get_program(name: str) -> str:
    with open(os.path.join(PROGRAMS, name + '.ds'), encoding='utf-8') as f:
        return f.read()


def _get_corpus():
    return load_corpus(FIXTURES)
