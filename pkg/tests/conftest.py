import pytest

from zterms.terms import ZbTerm


@pytest.fixture
def zb():
    """Build a ZbTerm from constructor names, outermost first."""
    def build(*ops):
        return ZbTerm(tuple(ops))
    return build
