"""Named representative states with their tabulated orbit dimensions.

Each entry stores the representative ket exactly as it is usually written
(coefficients in {0, +1, -1}, no normalization) together with the expected
``(D1, D2, D3)`` triple and, for two and three qubits, the expected ket-space
orbit dimensions under GL and SL.

``GHZ<n>`` and ``W<n>`` resolve for any n >= 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from .states import PureKet

__all__ = ["Dims", "NamedState", "UnknownName", "corpus", "names", "table_names"]


class UnknownName(LookupError):
    pass


class Dims(NamedTuple):
    D1: int
    D2: int
    D3: int


@dataclass(frozen=True)
class NamedState:
    name: str
    ket: PureKet
    expected: Dims | None = None
    # (GL, SL) ket-space orbit dimensions, where tabulated
    expected_ket: tuple[int, int] | None = None
    # entanglement type used to key the D2 ladder, e.g. "A-BCD"
    kind: str = ""

    @property
    def n(self) -> int:
        return self.ket.n


def _ket(text: str) -> PureKet:
    """Parse ``"|0000>+|0011>-|1111>"`` into a ket with unit coefficients."""
    terms = {}
    for sign, label in re.findall(r"([+-]?)\|([01]+)>", text):
        terms[label] = -1 if sign == "-" else 1
    n = len(next(iter(terms)))
    return PureKet.from_terms(n, terms)


# name, aliases, representative, (D1, D2, D3), (GL, SL) ket dims, kind
_TABLE = [
    # one qubit
    ("A", ("1-qubit",), "|0>", (2, 2, 0), (4, 4), "A"),
    # two qubits
    ("Entangled", ("Bell", "GHZ2"), "|00>+|11>", (6, 5, 1), (8, 6), "AB"),
    ("Disentangled", ("A-B",), "|00>", (4, 4, 0), (6, 6), "A-B"),
    # three qubits
    ("GHZ3", ("GHZ",), "|000>+|111>", (14, 9, 5), (16, 14), "ABC"),
    ("W3", ("W",), "|100>+|010>+|001>", (12, 9, 3), (14, 14), "ABC"),
    ("Biseparable", ("A-BC",), "|000>+|011>", (8, 7, 1), (10, 10), "A-BC"),
    ("Product3", ("A-B-C",), "|000>", (6, 6, 0), (8, 8), "A-B-C"),
    # four qubits, genuinely entangled
    ("GHZ4", (), "|0000>+|1111>", (18, 12, 6), None, "ABCD"),
    ("W4", (), "|1000>+|0100>+|0010>+|0001>", (16, 12, 4), None, "ABCD"),
    ("C4", (), "|0011>+|1100>+|0101>+|1010>+|0110>+|1001>", (22, 12, 10), None, "ABCD"),
    ("kappa4", ("κ4",), "|0000>+|0011>+|1010>-|1111>", (22, 12, 10), None, "ABCD"),
    ("E4", (), "|0000>+|0101>+|1001>-|1111>", (22, 12, 10), None, "ABCD"),
    ("L4", (), "|0000>+|0011>+|1001>-|1111>", (22, 12, 10), None, "ABCD"),
    ("H4", (), "|0011>+|0110>+|1100>", (20, 12, 8), None, "ABCD"),
    ("lambda4", ("λ4",), "|0101>+|0110>+|1010>", (20, 12, 8), None, "ABCD"),
    ("M4", (), "|0011>+|0101>+|1100>", (20, 12, 8), None, "ABCD"),
    ("pi4", ("π4",), "|0000>+|0011>+|0101>+|0110>+|1010>+|1111>", (20, 12, 8), None, "ABCD"),
    ("theta4", ("θ4",), "|0000>+|0101>+|0110>+|1010>+|1100>+|1111>", (20, 12, 8), None, "ABCD"),
    ("sigma4", ("σ4",), "|0000>+|0011>+|1001>+|1010>+|1100>+|1111>", (20, 12, 8), None, "ABCD"),
    ("rho4", ("ρ4",), "|0000>+|0011>+|0110>+|1010>+|1100>+|1111>", (20, 12, 8), None, "ABCD"),
    ("xi4", ("ξ4",), "|0000>+|0110>+|1001>+|1010>+|1100>+|1111>", (20, 12, 8), None, "ABCD"),
    ("epsilon4", ("ε4", "ϵ4"), "|0000>+|0011>+|0110>+|1001>+|1010>+|1111>", (20, 12, 8), None, "ABCD"),
    ("chi4", ("χ4",), "|0000>+|0011>+|0110>+|1010>+|1100>-|1111>", (24, 12, 12), None, "ABCD"),
    ("psi4", ("ψ4",), "|0000>+|0101>+|1010>-|1111>", (20, 12, 8), None, "ABCD"),
    ("phi4", ("φ4",), "|0000>+|0011>+|1100>-|1111>", (20, 12, 8), None, "ABCD"),
    ("mu4", ("μ4",), "|0000>+|0110>+|1001>-|1111>", (20, 12, 8), None, "ABCD"),
    ("varphi4", ("ϕ4",), "|0001>+|0110>+|1011>", (18, 12, 6), None, "ABCD"),
    ("vartheta4", ("ϑ4",), "|0010>+|0101>+|1011>", (18, 12, 6), None, "ABCD"),
    ("tau4", ("τ4",), "|0001>+|0111>+|1010>", (18, 12, 6), None, "ABCD"),
    ("varrho4", ("ϱ4",), "|0010>+|0111>+|1001>", (18, 12, 6), None, "ABCD"),
    ("zeta4", ("ζ4",), "|0000>+|1011>+|1100>", (18, 12, 6), None, "ABCD"),
    ("iota4", ("ι4",), "|0000>+|0011>+|1101>", (18, 12, 6), None, "ABCD"),
    ("nu4", ("ν4",), "|0010>+|0101>+|1001>+|1011>", (20, 12, 8), None, "ABCD"),
    ("omega4", ("ω4",), "|0000>+|0101>+|1000>+|1110>", (20, 12, 8), None, "ABCD"),
    ("varpi4", ("ϖ4",), "|0010>+|0101>+|1000>+|1100>", (20, 12, 8), None, "ABCD"),
    # four qubits, not genuinely entangled
    ("A-B-C-D", (), "|0000>", (8, 8, 0), None, "A-B-C-D"),
    ("A-B-CD", (), "|0000>+|0011>", (10, 9, 1), None, "A-B-CD"),
    ("AB-CD", (), "|0000>+|0011>+|1100>+|1111>", (12, 10, 2), None, "AB-CD"),
    ("A-GHZ", (), "|0000>+|0111>", (16, 11, 5), None, "A-BCD"),
    ("A-W", (), "|0100>+|0010>+|0001>", (14, 11, 3), None, "A-BCD"),
]

_ENTRIES: dict[str, NamedState] = {}
_ALIASES: dict[str, str] = {}
for _name, _aliases, _rep, _dims, _ket_dims, _kind in _TABLE:
    _ENTRIES[_name] = NamedState(_name, _ket(_rep), Dims(*_dims), _ket_dims, _kind)
    for _alias in _aliases:
        _ALIASES[_alias] = _name


def ghz(n: int) -> PureKet:
    return PureKet.from_terms(n, {"0" * n: 1, "1" * n: 1})


def w_state(n: int) -> PureKet:
    return PureKet.from_terms(n, {format(1 << k, f"0{n}b"): 1 for k in range(n)})


def names() -> list[str]:
    """Canonical names of every tabulated entry, in table order."""
    return list(_ENTRIES)


def table_names(n: int) -> list[str]:
    return [name for name, entry in _ENTRIES.items() if entry.n == n]


def corpus(name: str) -> NamedState:
    """Look up a named state; raises :class:`UnknownName` if it is not cataloged."""
    key = _ALIASES.get(name, name)
    if key in _ENTRIES:
        return _ENTRIES[key]
    m = re.fullmatch(r"(GHZ|W)(\d+)", name)
    if m and int(m.group(2)) >= 2:
        n = int(m.group(2))
        ket = ghz(n) if m.group(1) == "GHZ" else w_state(n)
        return NamedState(name, ket, kind="genuine")
    raise UnknownName(f"unknown state name {name!r}")
