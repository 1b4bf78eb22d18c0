import logging

import pytest

from driftscript.codegen import VarScope
from driftscript.frontend import Limits

from .utils import _get_corpus


@pytest.fixture
def scope():
    return VarScope()


@pytest.fixture(scope='session')
def corpus():
    return _get_corpus()


@pytest.fixture
def large_limits():
    """room for a few hundred forms in a single unit"""
    return Limits(max_tokens=65536, max_nodes=131072, max_results=4096)


@pytest.fixture
def fix_caplog(monkeypatch):
    """Temporarily undoes the logging setup by click-log such that the caplog fixture can be used"""
    logger = logging.getLogger('driftscript')
    monkeypatch.setattr(logger, 'handlers', [])
    monkeypatch.setattr(logger, 'propagate', True)
