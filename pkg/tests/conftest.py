from fractions import Fraction

from hypothesis import strategies as st

from garding.polycore import Polynomial

fractions = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=6),
)


@st.composite
def polynomials(draw, nvars=None, max_degree=3, max_terms=5):
    n = draw(st.integers(min_value=1, max_value=3)) if nvars is None else nvars
    exps = st.tuples(*[st.integers(min_value=0, max_value=max_degree)] * n)
    terms = draw(st.dictionaries(exps, fractions, max_size=max_terms))
    return Polynomial(n, terms)


@st.composite
def polynomial_pairs(draw, count=2):
    n = draw(st.integers(min_value=1, max_value=3))
    return tuple(draw(polynomials(nvars=n)) for _ in range(count))


def pytest_terminal_summary(terminalreporter):
    module = next((m for name, m in __import__("sys").modules.items() if name.endswith("test_acceptance")), None)
    if module is None or not getattr(module, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
