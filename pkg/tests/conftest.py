import pytest
from hypothesis import strategies as st

from skeletal.geometry import ALL_SIGNED_PERMUTATIONS, Isometry

matrices = st.sampled_from(ALL_SIGNED_PERMUTATIONS)
small_ints = st.integers(min_value=-3, max_value=3)
vectors = st.tuples(small_ints, small_ints, small_ints)
isometries = st.builds(Isometry, matrices, vectors)


@pytest.fixture(scope="session")
def built():
    """Catalog builds at radius 4 with default margins, shared across tests."""
    from skeletal.catalog import build_entry

    cache = {}

    def get(cid, radius=4):
        key = (cid, radius)
        if key not in cache:
            cache[key] = build_entry(cid, radius)
        return cache[key]

    return get


_ACCEPTANCE: list[tuple[int, bool, str]] = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""

    def record(number: int, passed: bool, detail: str = "") -> bool:
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'} {detail}".rstrip()
        print(line)
        _ACCEPTANCE.append((number, passed, line))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, _, line in sorted(_ACCEPTANCE):
        terminalreporter.write_line(line)
