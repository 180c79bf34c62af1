"""Exact n-qubit kets, their realification, and the JSON state-file format.

Amplitudes are Gaussian rationals (complex numbers with rational real and
imaginary parts), so every quantity derived from a ket stays exact.  Kets are
unnormalized: all orbit dimensions are invariant under rescaling.

Basis label ``i_1 ... i_n`` sits at array index ``sum_k i_k 2**(n-k)``, i.e.
qubit 1 is the most significant bit.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "GaussianRational",
    "PureKet",
    "StateError",
    "ZeroKet",
    "BadIndex",
    "BadRational",
    "DuplicateIndex",
    "realify",
    "derealify",
    "scalar_mul_i",
    "parse_rational",
    "parse_state",
    "serialize_state",
]


class StateError(ValueError):
    """Base class for malformed kets and state files."""


class ZeroKet(StateError):
    pass


class BadIndex(StateError):
    pass


class BadRational(StateError):
    pass


class DuplicateIndex(StateError):
    pass


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """Complex number ``re + i*im`` with exact rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        # Fraction normalizes sign and gcd on construction.
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", Fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(Fraction(value))

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def mul_i(self) -> "GaussianRational":
        return GaussianRational(-self.im, self.re)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, complex, float)):
            other = GaussianRational.coerce(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class PureKet:
    """An unnormalized, nonzero n-qubit ket with Gaussian-rational amplitudes."""

    n: int
    amps: tuple[GaussianRational, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise StateError(f"qubit count must be a positive integer, got {self.n!r}")
        amps = tuple(GaussianRational.coerce(a) for a in self.amps)
        if len(amps) != 1 << self.n:
            raise StateError(
                f"{self.n}-qubit ket needs {1 << self.n} amplitudes, got {len(amps)}"
            )
        if not any(amps):
            raise ZeroKet("the zero vector is not a state")
        object.__setattr__(self, "amps", amps)

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[str, object]) -> "PureKet":
        """Build a ket from ``{"0101": amplitude, ...}``; missing labels are 0."""
        amps = [ZERO] * (1 << n)
        for label, value in terms.items():
            amps[basis_index(label, n)] = GaussianRational.coerce(value)
        return cls(n, tuple(amps))

    @classmethod
    def basis(cls, label: str) -> "PureKet":
        return cls.from_terms(len(label), {label: 1})

    def terms(self) -> list[tuple[str, GaussianRational]]:
        """Nonzero ``(label, amplitude)`` pairs in index order."""
        return [
            (format(j, f"0{self.n}b"), a) for j, a in enumerate(self.amps) if a
        ]

    def scaled(self, factor) -> "PureKet":
        factor = GaussianRational.coerce(factor)
        return PureKet(self.n, tuple(a * factor for a in self.amps))

    def to_numpy(self):
        import numpy as np

        return np.array([complex(a) for a in self.amps], dtype=complex)

    def __str__(self):
        parts = []
        for label, a in self.terms():
            if a == ONE:
                coeff = "+"
            elif a == -ONE:
                coeff = "-"
            else:
                coeff = f"+{a}"
            parts.append(f"{coeff}|{label}>")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


_LABEL = re.compile(r"[01]+\Z")


def basis_index(label: str, n: int) -> int:
    if not isinstance(label, str) or len(label) != n or not _LABEL.match(label):
        raise BadIndex(f"basis label {label!r} is not a binary string of length {n}")
    return int(label, 2)


def realify(ket: PureKet) -> tuple[Fraction, ...]:
    """Interleave real and imaginary parts: ``(a_0, b_0, a_1, b_1, ...)``."""
    out = []
    for a in ket.amps:
        out.append(a.re)
        out.append(a.im)
    return tuple(out)


def derealify(vec: Iterable[Fraction]) -> PureKet:
    vec = tuple(vec)
    n = (len(vec) // 2).bit_length() - 1
    if len(vec) != 2 << n or n < 1:
        raise StateError(f"length {len(vec)} is not 2**(n+1) for any n >= 1")
    amps = tuple(GaussianRational(vec[2 * j], vec[2 * j + 1]) for j in range(1 << n))
    return PureKet(n, amps)


def scalar_mul_i(vec: Iterable[Fraction]) -> tuple[Fraction, ...]:
    """Realified multiplication by i: each pair ``(a, b)`` becomes ``(-b, a)``."""
    vec = tuple(vec)
    out = []
    for j in range(0, len(vec), 2):
        out.append(-vec[j + 1])
        out.append(vec[j])
    return tuple(out)


_RATIONAL = re.compile(r"\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*\Z")


def parse_rational(text) -> Fraction:
    """Parse ``"3"``, ``"-3/7"`` or an int exactly; floats and junk are rejected."""
    if isinstance(text, bool):
        raise BadRational(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL.match(text):
        raise BadRational(f"not a rational: {text!r}")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise BadRational(f"zero denominator in {text!r}") from None


def _from_document(doc) -> PureKet:
    if not isinstance(doc, dict) or "n" not in doc or "terms" not in doc:
        raise StateError('state document needs "n" and "terms" keys')
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise StateError(f'"n" must be a positive integer, got {n!r}')
    if not isinstance(doc["terms"], list):
        raise StateError('"terms" must be a list')
    seen = set()
    amps = [ZERO] * (1 << n)
    for term in doc["terms"]:
        if not isinstance(term, dict) or "basis" not in term:
            raise StateError(f"malformed term {term!r}")
        label = term["basis"]
        j = basis_index(label, n)
        if j in seen:
            raise DuplicateIndex(f"basis label {label!r} appears twice")
        seen.add(j)
        amps[j] = GaussianRational(
            parse_rational(term.get("re", "0")), parse_rational(term.get("im", "0"))
        )
    return PureKet(n, tuple(amps))


def parse_state(text) -> PureKet:
    """Read a ket from a JSON state document (a string or an already-decoded dict).

    Schema::

        {"n": 2, "terms": [{"basis": "00", "re": "1", "im": "0"}, ...]}

    Omitted labels have amplitude zero.  ``re``/``im`` default to ``"0"``.
    """
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise StateError(f"invalid JSON: {exc}") from None
    else:
        doc = text
    return _from_document(doc)


def state_document(ket: PureKet) -> dict:
    return {
        "n": ket.n,
        "terms": [
            {"basis": label, "re": str(a.re), "im": str(a.im)}
            for label, a in ket.terms()
        ],
    }


def serialize_state(ket: PureKet, indent=None) -> str:
    return json.dumps(state_document(ket), indent=indent)
