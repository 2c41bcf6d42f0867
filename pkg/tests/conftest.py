from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lie5.qlinalg import QMat

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


small_rats = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))
small_ints = st.integers(-3, 3)


def matrices(n_min=1, n_max=4, square=True, elements=small_rats):
    @st.composite
    def build(draw):
        r = draw(st.integers(n_min, n_max))
        c = r if square else draw(st.integers(n_min, n_max))
        return QMat([[draw(elements) for _ in range(c)] for _ in range(r)])
    return build()


def invertible(n, elements=small_ints):
    return st.lists(elements, min_size=n * n, max_size=n * n).map(lambda xs: QMat.from_flat(xs, n, n)).filter(lambda m: m.det() != 0)


CATALOG_NAMES = (
    "R3⋊{xyz=1}^0",
    "R4⋊R[x^4]",
    "Nil4×E",
    "Nil4⋊R(3→1)",
    "Nil4⋊R(4→3→1)",
    "R4⋊R[diag]",
    "R4⋊R[x^2,x-1,x+1]",
    "R4⋊R[(x-1)^2,(x+1)^2]",
    "Heis-Lorentz",
    "Sol41×E",
)


def catalog_algebras():
    """Catalog algebras written in a random integer basis."""
    from lie5.catalog import emit
    from lie5.liealg import change_basis

    return st.tuples(st.sampled_from(CATALOG_NAMES), invertible(5, st.integers(-2, 2))).map(
        lambda t: change_basis(emit(t[0]), t[1])
    )


# -- acceptance summary ------------------------------------------------------------

import pytest  # noqa: E402

ACCEPTANCE_KEY = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Run a block as acceptance criterion ``n`` and record PASS/FAIL for the summary."""
    from contextlib import contextmanager

    results = request.config.stash.setdefault(ACCEPTANCE_KEY, {})

    @contextmanager
    def run(n, title):
        results[n] = (title, False)
        yield
        results[n] = (title, True)

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE_KEY, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        title, ok = results[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {title}")
