import pytest

from qsquery import load_lexicon


@pytest.fixture(scope="session")
def lex():
    return load_lexicon()
