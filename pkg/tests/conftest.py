import importlib
import sys

import pytest

from friezegrowth import _pykernels, kernels

_KERNEL_FUNCS = ("poly_add", "poly_sub", "poly_mul", "poly_scale", "min_exponents", "poly_divexact")


def _available_backends():
    mods = [_pykernels]
    try:
        mods.append(importlib.import_module("friezegrowth._ckernels"))
    except ImportError:
        pass
    return mods


BACKENDS = _available_backends()


@pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)
def backend(request, monkeypatch):
    """Route all polynomial arithmetic through one kernel implementation."""
    mod = request.param
    for name in _KERNEL_FUNCS:
        monkeypatch.setattr(kernels, name, getattr(mod, name))
    monkeypatch.setattr(kernels, "BACKEND", mod.BACKEND)
    return mod


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
