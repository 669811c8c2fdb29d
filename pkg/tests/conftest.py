import pytest

from pgquant import deformation

ALL_K = [4, 6, 8, 10, 12]


@pytest.fixture(params=ALL_K)
def dfm(request):
    """One deformation per supported even order."""
    return deformation(request.param)
