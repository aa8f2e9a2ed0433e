from hypothesis import HealthCheck, settings, strategies as st

from shiftlab.monomial import MonomialIdeal

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def ideals(draw, n_min=1, n_max=4, max_gens=5, max_exp=3):
    n = draw(st.integers(n_min, n_max))
    gens = draw(
        st.lists(
            st.tuples(*[st.integers(0, max_exp)] * n).filter(any),
            min_size=1,
            max_size=max_gens,
        )
    )
    return MonomialIdeal(n, tuple(gens))


@st.composite
def monomials(draw, n, max_exp=4):
    return draw(st.tuples(*[st.integers(0, max_exp)] * n))


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if acceptance_log.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.lines():
            terminalreporter.write_line(line)
