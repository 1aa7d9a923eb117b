import pytest

from scrollcalc import _kernels
from scrollcalc.extensions import ScrollConfig


def box(e_values=range(2, 9), b_max=40):
    """Every admissible (e, b, k) with b <= b_max."""
    for e in e_values:
        for b in range(3 * e + 1, b_max + 1):
            for k in range(b - e + 1, 2 * b - 4 * e):
                yield ScrollConfig(e, b, k)


@pytest.fixture(params=_kernels.available_backends())
def backend(request):
    previous = _kernels.BACKEND
    _kernels.use_backend(request.param)
    yield request.param
    _kernels.use_backend(previous)
