import pytest

from cameral.lib.rootdata import build_classical


@pytest.fixture(scope="session")
def classical():
    """
    build_classical with one datum per (type, n) for the whole session, so that
    Weyl groups are enumerated once.
    """

    cache = {}

    def build(type_tag: str, n: int):
        if (type_tag, n) not in cache:
            cache[(type_tag, n)] = build_classical(type_tag, n)
        return cache[(type_tag, n)]

    return build


@pytest.fixture
def sl3(classical):
    return classical("SL", 3)
