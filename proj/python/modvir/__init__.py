"""Exact Virasoro Verma modules, singular vectors and free-fermion realizations.

Every scalar crosses the boundary as a string ("3/4", "5 mod 7") or, for
polynomials in a formal h, as a list of coefficient strings.
"""

import json

from . import _core
from ._core import DenominatorDivisibleByP, UnsupportedCharacteristic

__all__ = [
    "DenominatorDivisibleByP",
    "UnsupportedCharacteristic",
    "fock_dims",
    "hw_vectors",
    "irreducible_dims",
    "mode_apply",
    "run",
    "singular_vectors",
    "verify",
    "vir_span_dims",
]


def run(command, **options):
    """Run a CLI command and return its JSON output as Python objects."""
    if "char" in options:
        options["characteristic"] = options.pop("char")
    return json.loads(_core.run_json(command, **options))


def singular_vectors(c, h, degree, char=0, vacuum_quotient=False):
    out = run("singvec", c=c, h=h, degree=degree, characteristic=char)
    return out["vacuum_quotient" if vacuum_quotient else "verma"]


def irreducible_dims(c, h, max_degree, char=0):
    rows = run("irrdims", c=c, h=h, max=max_degree, characteristic=char)["rows"]
    return [row["irreducible"] for row in rows]


def fock_dims(sector, parity, max_degree):
    rows = run("fock-dims", sector=sector, parity=parity, max=max_degree)["rows"]
    return [row["dim"] for row in rows]


def vir_span_dims(sector, parity, max_degree, char=0):
    rows = run("vir-span", sector=sector, parity=parity, max=max_degree, characteristic=char)["rows"]
    return [row["span"] for row in rows]


def hw_vectors(sector, parity, degree, char=0):
    return run("hwvec", sector=sector, parity=parity, degree=degree, characteristic=char)["vectors"]


def mode_apply(state, n, c="1/2", h="h", char=0, target=None):
    """Component n of a vacuum-module state ("s", "u" or a list of negative modes)."""
    if not isinstance(state, str):
        state = json.dumps(list(state))
    return run("mode-apply", state=state, mode=n, c=c, h=h, characteristic=char,
               target="" if target is None else json.dumps(target))["result"]


def verify(only=()):
    return run("verify-paper", only=list(only))
