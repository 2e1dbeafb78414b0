import pytest

from dsvs import fixture_path, load_lexicon


@pytest.fixture(scope="session")
def base_lex():
    return load_lexicon(fixture_path("paper_s4"))


@pytest.fixture(scope="session")
def split_lex():
    return load_lexicon(fixture_path("split_senses"))


@pytest.fixture(scope="session")
def traces_lex():
    return load_lexicon(fixture_path("traces"))
