import pytest

from javastyle.lexicon import Lexicon


@pytest.fixture(scope="session")
def lexicon():
    return Lexicon.bundled()
