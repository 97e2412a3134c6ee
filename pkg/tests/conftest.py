import os

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=1500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def partitions(draw, max_size=40, max_part=15, distinct=False):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_size))
    if distinct:
        parts = set(parts)
    parts = sorted(parts, reverse=True)
    # keep sizes moderate so exhaustive helpers stay cheap
    out, total = [], 0
    for p in parts:
        if total + p > 120:
            break
        out.append(p)
        total += p
    return tuple(out)


@st.composite
def freq_lists(draw, max_len=16, max_entry=4, binary=False):
    hi = 1 if binary else max_entry
    f = draw(st.lists(st.integers(0, hi), max_size=max_len))
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


@st.composite
def words(draw, k, min_len=0, max_len=14):
    return tuple(draw(st.lists(st.integers(1, k), min_size=min_len, max_size=max_len)))


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[number].line())
