from hypothesis import strategies as st

from pillowcase.partitions import Partition


@st.composite
def partitions(draw, max_size=14):
    n = draw(st.integers(0, max_size))
    parts = []
    while n:
        p = draw(st.integers(1, min(n, parts[-1] if parts else n)))
        parts.append(p)
        n -= p
    return Partition(parts)


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
