import pytest

from normforge.cli import bundled_examples
from normforge.laurent import LaurentPoly
from normforge.words import parse_presentation_text


@pytest.fixture(scope="session")
def section6():
    """The bundled two-generator one-relator link-exterior presentation."""
    return parse_presentation_text(bundled_examples()["section6.pres"])


@pytest.fixture(scope="session")
def delta_golden():
    """a^2*b - a*b - a + 1, the expected Alexander polynomial of section6."""
    a = LaurentPoly.variable(2, 0)
    b = LaurentPoly.variable(2, 1)
    return a**2 * b - a * b - a + 1
