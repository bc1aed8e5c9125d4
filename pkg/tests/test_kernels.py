import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topvertex import _pykernels, kernels

try:
    from topvertex import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

polys = st.lists(st.integers(-(10**30), 10**30), min_size=1, max_size=25).filter(lambda p: p[-1] != 0)


def _naive_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@given(polys, polys)
def test_pure_mul_matches_schoolbook(a, b):
    assert _pykernels.mul(a, b) == _naive_mul(a, b)


@given(polys, polys)
def test_pure_divexact_inverts_mul(a, b):
    assert _pykernels.divexact(_naive_mul(a, b), b) == a


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
@given(polys, polys)
def test_backends_agree(a, b):
    p = _ckernels.mul(a, b)
    assert p == _pykernels.mul(a, b)
    assert _ckernels.divexact(p, b) == _pykernels.divexact(p, b) == a


@pytest.mark.parametrize("mod", [m for m in (_pykernels, _ckernels) if m is not None])
def test_divexact_signals_remainder(mod):
    assert mod.divexact([1, 0, 1], [1, 1]) is None
    assert mod.divexact([2, 3], [2]) is None
    assert mod.divexact([-1, 0, 1], [1, 1]) == [-1, 1]


def test_backend_is_selected_at_import():
    assert kernels.BACKEND in ("cython", "python")
    code = "from topvertex import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, TOPVERTEX_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
