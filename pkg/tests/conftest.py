import random

import pytest

from nfakit import kernels


@pytest.fixture(params=["python", "cython"])
def backend(request, monkeypatch):
    """Run a test once per subset-construction backend."""
    if request.param == "cython":
        if kernels._ckernels is None:
            pytest.skip("compiled kernels not built")
    else:
        monkeypatch.setattr(kernels, "_ckernels", None)
    return request.param


@pytest.fixture
def rng():
    return random.Random(20240611)
