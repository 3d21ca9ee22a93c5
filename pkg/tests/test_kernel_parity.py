"""The compiled kernel must be a bit-exact twin of the pure one."""

import random
import subprocess
import sys

import pytest

from hyparr import _fmpure

try:
    from hyparr import _fmcore
except ImportError:
    _fmcore = None

needs_ext = pytest.mark.skipif(_fmcore is None, reason="compiled kernel not built")


@needs_ext
def test_parity_on_random_systems():
    rng = random.Random(71)
    bailouts = 0
    checked = 0
    for _ in range(5000):
        d = rng.randint(1, 5)
        m = rng.randint(1, 9)
        rows = tuple(r for r in (tuple(rng.randint(-4, 4) for _ in range(d))
                                 for _ in range(m)) if any(r))
        if not rows:
            continue
        pure = _fmpure.solve(rows, d)
        comp = _fmcore.solve(rows, d)
        if comp is None:
            bailouts += 1
            continue
        checked += 1
        assert pure[0] == comp[0]
        if pure[0] == "dual":
            assert tuple(pure[1]) == tuple(comp[1])
        else:
            assert _fmpure.witness_from_stages(pure[1], d) == \
                _fmpure.witness_from_stages(comp[1], d)
    assert checked > 4000


@needs_ext
def test_bailout_on_huge_coefficients():
    rows = ((2 ** 70, 1), (-1, -1))
    assert _fmcore.solve(rows, 2) is None
    kind, _ = _fmpure.solve(rows, 2)
    assert kind in ("dual", "stages")


def test_pure_mode_env_forces_fallback():
    code = ("import hyparr.feasibility as f; print(f.kernel_name())")
    out = subprocess.run([sys.executable, "-c", code],
                         env={"HYPARR_PURE": "1", "PATH": "/usr/bin:/bin"},
                         capture_output=True, text=True)
    assert out.stdout.strip() == "pure"


@needs_ext
def test_selected_kernel_reported():
    from hyparr.feasibility import kernel_name

    assert kernel_name() == "compiled"
