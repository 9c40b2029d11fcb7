from hypothesis import strategies as st

from cyclotors.fields import QRat
from cyclotors.rings import QInt, RingTag

TAGS = st.sampled_from([RingTag.GAUSSIAN, RingTag.OMEGA])


def qints(tag, bound=1000, nonzero=False):
    s = st.builds(lambda a, b: QInt(a, b, tag), st.integers(-bound, bound), st.integers(-bound, bound))
    return s.filter(lambda z: not z.is_zero()) if nonzero else s


def qrats(tag, bound=50, dens=20):
    return st.builds(
        lambda a, b, d: QRat(QInt(a, b, tag), d),
        st.integers(-bound, bound),
        st.integers(-bound, bound),
        st.integers(1, dens),
    )


def tagged_pair(bound=1000, nonzero=False):
    return TAGS.flatmap(lambda t: st.tuples(qints(t, bound), qints(t, bound, nonzero)))


# acceptance verdicts, filled by test_acceptance.py and echoed in the summary
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        verdict, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {verdict}  {title}")
