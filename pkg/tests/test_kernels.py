from __future__ import annotations

import os
import subprocess
import sys

import pytest

from dihedralcovers import kernels
from dihedralcovers.hurwitz import BranchData, brute_force_tuple_count, classify_coverings, cover_space

needs_cython = pytest.mark.skipif("cython" not in kernels.available_backends(),
                                  reason="compiled kernels not built")


def test_python_backend_always_available():
    assert "python" in kernels.available_backends()
    assert kernels.get_backend("python").__name__.endswith("_kernels_py")


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


@needs_cython
@pytest.mark.parametrize("p,b", [(3, 4), (3, 6), (5, 4), (5, 6), (7, 4), (7, 6)])
def test_scan_parity(p, b):
    bd = BranchData(p, b)
    py = classify_coverings(bd, backend="python")
    cy = classify_coverings(bd, backend="cython")
    assert py.representatives == cy.representatives
    assert py.orbit_sizes == cy.orbit_sizes


@needs_cython
@pytest.mark.parametrize("p,b", [(3, 2), (5, 5), (7, 6)])
def test_count_parity(p, b):
    assert (brute_force_tuple_count(p, b, backend="python")
            == brute_force_tuple_count(p, b, backend="cython"))


@needs_cython
def test_chunk_boundaries():
    sp = cover_space(5)
    cy, py = kernels.get_backend("cython"), kernels.get_backend("python")
    whole = cy.scan_orbits(5, 5, 0, 3125, sp.mul, sp.inv, sp.action)
    parts = []
    for lo in range(0, 3125, 1000):
        parts += py.scan_orbits(5, 5, lo, min(lo + 1000, 3125), sp.mul, sp.inv, sp.action)
    assert whole == parts


def test_forced_fallback():
    env = dict(os.environ, DIHEDRALCOVERS_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from dihedralcovers import kernels; from dihedralcovers.hurwitz import *;"
         "print(kernels.BACKEND, classify_coverings(BranchData(5, 6)).class_count)"],
        env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "156"]
