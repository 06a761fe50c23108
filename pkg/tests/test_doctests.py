"""Run the usage examples embedded in docstrings."""

import doctest

import pytest

import redword.classes
import redword.cli
import redword.perm
import redword.singleton
import redword.words

MODULES = [
    redword.perm,
    redword.words,
    redword.classes,
    redword.singleton,
    redword.cli,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_module_doctests(module):
    result = doctest.testmod(module, verbose=False)
    assert result.failed == 0
    assert result.attempted > 0
