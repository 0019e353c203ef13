import subprocess
import sys

import pytest

from totcoal import _backend, _pykernels


def _selected(env_value: str | None, block_ext: bool = False) -> str:
    code = "import sys\n"
    if block_ext:
        code += "sys.modules['totcoal._ckernels'] = None\n"
    code += "from totcoal import _backend; print(_backend.BACKEND)"
    env = {} if env_value is None else {"TOTCOAL_BACKEND": env_value}
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout.strip()


def test_env_forces_python():
    assert _selected("python") == "python"


def test_falls_back_without_extension():
    assert _selected(None, block_ext=True) == "python"


@pytest.mark.skipif("cython" not in _backend.available(), reason="extension not built")
def test_compiled_preferred_by_default():
    assert _selected(None) == "cython"


def test_load_rejects_unknown():
    assert _backend.load("python") is _pykernels
    with pytest.raises(ValueError):
        _backend.load("fortran")
