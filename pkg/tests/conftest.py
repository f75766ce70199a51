import pytest

import braidtwist.ordering as ordering


@pytest.fixture(autouse=True)
def _verify_every_reduction(monkeypatch):
    """Check exponent sum and permutation on every handle_reduce call."""
    monkeypatch.setattr(ordering, "VERIFY_REDUCTIONS", True)
