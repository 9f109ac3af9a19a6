import subprocess
import sys
from fractions import Fraction

import pytest

from descentcert.polynomial import Poly


def P(*coeffs):
    return Poly.of(*coeffs)


def fr(a, b=1):
    return Fraction(a, b)


def run_cli(*args, env=None):
    """Run the CLI in a subprocess; returns (exit_code, stdout, stderr)."""
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run(
        [sys.executable, "-m", "descentcert", *args],
        capture_output=True,
        text=True,
        env=full_env,
    )
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture
def cli():
    return run_cli
