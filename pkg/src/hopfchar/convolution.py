"""The truncated convolution algebra of linear functionals on a Hopf algebra.

A ``TruncatedFunctional`` stores one coefficient-ring value per basis element
of degree <= N (sparse storage, absent means zero).  The convolution of two
functionals evaluates, on each basis element, the ring sum of products of the
two factors over the coproduct table.  Because the coproduct respects the
grading, every degree-n output value only involves inputs of degree <= n, so
degree-wise truncation is exact: the degree-n part of any result agrees with
the one computed at any larger truncation.

Inversion follows the unit-group structure of graded algebras: a functional
is invertible iff its degree-0 value is a ring unit, and then the inverse is
the geometric series in the augmentation part (here summed directly; the
functional-calculus route in :mod:`hopfchar.series` reproduces it and is
cross-checked in the tests).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping

from .errors import AugmentationError, IncompatibleError, NotInvertibleError
from .hopf import GradedVector, HopfStructure, resolve_hopf
from .rings import resolve_ring

_ONE = Fraction(1)


class TruncatedFunctional:
    """An element of Hom(H, B) known on all basis elements of degree <= N.

    Immutable; all operations return fresh functionals.
    """

    __slots__ = ("hopf", "ring", "truncation", "values")

    def __init__(self, hopf: HopfStructure, ring, truncation: int,
                 values: Mapping | None = None):
        if truncation < 0:
            raise ValueError(f"truncation must be >= 0, got {truncation}")
        self.hopf = hopf
        self.ring = ring
        self.truncation = truncation
        vals = {}
        if values:
            for basis, value in values.items():
                if basis.degree > truncation:
                    raise ValueError(
                        f"value on degree-{basis.degree} element exceeds truncation {truncation}"
                    )
                if not ring.is_zero(value):
                    vals[basis] = value
        self.values = vals

    # -- basic structure ----------------------------------------------------

    def value(self, basis):
        """The stored value on a basis element (ring zero when absent)."""
        return self.values.get(basis, self.ring.zero)

    def evaluate(self, vec: GradedVector):
        """Linear extension to rational combinations of basis elements."""
        ring = self.ring
        total = ring.zero
        for basis, coeff in vec:
            if basis.degree <= self.truncation:
                value = self.values.get(basis)
                if value is not None:
                    total = ring.add(total, ring.scale(value, coeff))
        return total

    @property
    def degree0(self):
        return self.value(self.hopf.unit_basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedFunctional)
            and self.hopf.key == other.hopf.key
            and self.ring.key == other.ring.key
            and self.truncation == other.truncation
            and self.values == other.values
        )

    def __hash__(self):
        raise TypeError("TruncatedFunctional is not hashable")

    def __repr__(self) -> str:
        items = ", ".join(
            f"{b.serial}: {self.ring.format_element(v)}"
            for b, v in sorted(self.values.items(), key=lambda kv: (kv[0].degree, kv[0].serial))
        )
        return f"<functional {self.hopf.key}/{self.ring.key} N={self.truncation} {{{items}}}>"

    def _compatible(self, other: "TruncatedFunctional") -> None:
        if (
            self.hopf.key != other.hopf.key
            or self.ring.key != other.ring.key
            or self.truncation != other.truncation
        ):
            raise IncompatibleError(
                f"functionals disagree: ({self.hopf.key},{self.ring.key},N={self.truncation})"
                f" vs ({other.hopf.key},{other.ring.key},N={other.truncation})"
            )

    def _build(self, values: dict) -> "TruncatedFunctional":
        return TruncatedFunctional(self.hopf, self.ring, self.truncation, values)

    # -- linear operations --------------------------------------------------

    def __add__(self, other: "TruncatedFunctional") -> "TruncatedFunctional":
        self._compatible(other)
        out = dict(self.values)
        for basis, value in other.values.items():
            out[basis] = self.ring.add(out.get(basis, self.ring.zero), value)
        return self._build(out)

    def __sub__(self, other: "TruncatedFunctional") -> "TruncatedFunctional":
        return self + (-other)

    def __neg__(self) -> "TruncatedFunctional":
        return self._build({b: self.ring.neg(v) for b, v in self.values.items()})

    def scale(self, q) -> "TruncatedFunctional":
        """Scalar multiple by a rational."""
        q = Fraction(q)
        return self._build({b: self.ring.scale(v, q) for b, v in self.values.items()})

    def scale_ring(self, r) -> "TruncatedFunctional":
        """Pointwise multiple by a ring element."""
        return self._build({b: self.ring.mul(v, r) for b, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, TruncatedFunctional):
            return convolve(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    # -- graded structure ---------------------------------------------------

    def project(self, degree: int) -> "TruncatedFunctional":
        """Keep only the values on basis elements of the given degree."""
        if degree > self.truncation:
            raise ValueError(f"degree {degree} exceeds truncation {self.truncation}")
        return self._build({b: v for b, v in self.values.items() if b.degree == degree})

    def drop_degree0(self) -> "TruncatedFunctional":
        return self._build(
            {b: v for b, v in self.values.items() if b.degree >= 1}
        )

    def restrict(self, truncation: int) -> "TruncatedFunctional":
        """The same functional at a smaller truncation degree."""
        if truncation > self.truncation:
            raise ValueError("restrict cannot raise the truncation")
        return TruncatedFunctional(
            self.hopf, self.ring, truncation,
            {b: v for b, v in self.values.items() if b.degree <= truncation},
        )

    def is_zero(self) -> bool:
        return not self.values

    # -- convolution-algebra operations --------------------------------------

    def precompose_antipode(self) -> "TruncatedFunctional":
        """The functional b -> self(S(b))."""
        out = {}
        for basis in self.hopf.all_basis_upto(self.truncation):
            value = self.evaluate(self.hopf.antipode(basis))
            if not self.ring.is_zero(value):
                out[basis] = value
        return self._build(out)

    def to_json_dict(self) -> dict:
        values = {
            b.serial: self.ring.format_element(v)
            for b, v in sorted(self.values.items(), key=lambda kv: (kv[0].degree, kv[0].serial))
        }
        return {
            "hopf": self.hopf.key,
            "ring": self.ring.key,
            "truncation": self.truncation,
            "values": values,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @staticmethod
    def from_json_dict(data: dict) -> "TruncatedFunctional":
        hopf = resolve_hopf(data["hopf"])
        ring = resolve_ring(data["ring"])
        truncation = int(data["truncation"])
        values = {
            hopf.parse_basis(key): ring.parse_element(text)
            for key, text in data.get("values", {}).items()
        }
        return TruncatedFunctional(hopf, ring, truncation, values)

    @staticmethod
    def from_json(text: str) -> "TruncatedFunctional":
        return TruncatedFunctional.from_json_dict(json.loads(text))


def conv_unit(hopf: HopfStructure, ring, truncation: int) -> TruncatedFunctional:
    """The convolution unit: the ring unit on the degree-0 basis element."""
    return TruncatedFunctional(hopf, ring, truncation, {hopf.unit_basis: ring.one})


def delta(hopf: HopfStructure, ring, truncation: int, basis) -> TruncatedFunctional:
    """The indicator functional of a single basis element."""
    return TruncatedFunctional(hopf, ring, truncation, {basis: ring.one})


def convolve(phi: TruncatedFunctional, psi: TruncatedFunctional) -> TruncatedFunctional:
    """Convolution: on each basis element, sum phi(left) * psi(right) over the
    coproduct table.  Associative with unit ``conv_unit``."""
    phi._compatible(psi)
    ring = phi.ring
    out = {}
    for basis in phi.hopf.all_basis_upto(phi.truncation):
        total = ring.zero
        for coeff, left, right in phi.hopf.coproduct(basis):
            a = phi.values.get(left)
            if a is None:
                continue
            b = psi.values.get(right)
            if b is None:
                continue
            term = ring.mul(a, b)
            if coeff != 1:
                term = ring.scale(term, coeff)
            total = ring.add(total, term)
        if not ring.is_zero(total):
            out[basis] = total
    return phi._build(out)


def conv_power(phi: TruncatedFunctional, exponent: int) -> TruncatedFunctional:
    """Iterated convolution power (exponent >= 0)."""
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    result = conv_unit(phi.hopf, phi.ring, phi.truncation)
    for _ in range(exponent):
        result = convolve(result, phi)
    return result


def conv_inverse(phi: TruncatedFunctional) -> TruncatedFunctional:
    """Convolution inverse, defined exactly when the degree-0 value is a ring
    unit.  Computed as ``(sum_k (-a0^{-1} b)^k) * a0^{-1}`` with b the
    positive-degree part; the series terminates at the truncation degree."""
    ring = phi.ring
    a0 = phi.degree0
    if not ring.is_unit(a0):
        raise NotInvertibleError("degree-0 value is not a unit of the coefficient ring")
    a0_inv = ring.inv(a0)
    b = phi.drop_degree0().scale_ring(a0_inv).scale(-1)
    # Geometric series, Horner-style: 1 + b(1 + b(1 + ...)).
    acc = conv_unit(phi.hopf, ring, phi.truncation)
    for _ in range(phi.truncation):
        acc = conv_unit(phi.hopf, ring, phi.truncation) + convolve(b, acc)
    return acc.scale_ring(a0_inv)


def require_augmentation(phi: TruncatedFunctional) -> None:
    """Raise unless the functional vanishes in degree 0."""
    if not phi.ring.is_zero(phi.degree0):
        raise AugmentationError("functional has nonzero degree-0 part")


def require_unit_normalized(phi: TruncatedFunctional) -> None:
    """Raise unless the degree-0 value equals the ring unit."""
    if phi.degree0 != phi.ring.one:
        raise AugmentationError("functional degree-0 part is not the ring unit")
