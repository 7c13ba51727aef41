"""Exact solver for the right-translation evolution equation
eta'(t) = eta(t) * gamma(t), eta(0) = unit, for polynomial-in-t curves gamma
into the infinitesimal characters.

Because gamma vanishes in degree 0 and convolution respects the grading, the
degree-n component of eta(t) * gamma(t) on a basis element only involves eta
components of degree < n.  So the solution builds up degree by degree: each
basis value of eta is a polynomial in t obtained by integrating an already
known polynomial, with eta vanishing at t=0 in positive degree.  Everything
stays in exact rational arithmetic, and the solutions land in the character
group (checked, not assumed, by ``evol``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .characters import Character, InfinitesimalCharacter, character_violation
from .convolution import TruncatedFunctional
from .errors import IncompatibleError, InternalError
from .hopf import HopfStructure


class Poly:
    """A polynomial in the time variable with coefficient-ring values."""

    __slots__ = ("ring", "coefficients")

    def __init__(self, ring, coefficients: Iterable = ()):
        coeffs = list(coefficients)
        while coeffs and ring.is_zero(coeffs[-1]):
            coeffs.pop()
        self.ring = ring
        self.coefficients = tuple(coeffs)

    @classmethod
    def zero(cls, ring) -> "Poly":
        return cls(ring)

    @classmethod
    def constant(cls, ring, value) -> "Poly":
        return cls(ring, [value])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.ring.key == other.ring.key
            and self.coefficients == other.coefficients
        )

    def __add__(self, other: "Poly") -> "Poly":
        ring = self.ring
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, value in enumerate(b):
            out[i] = ring.add(out[i], value)
        return Poly(ring, out)

    def __mul__(self, other: "Poly") -> "Poly":
        ring = self.ring
        if not self.coefficients or not other.coefficients:
            return Poly.zero(ring)
        out = [ring.zero] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] = ring.add(out[i + j], ring.mul(a, b))
        return Poly(ring, out)

    def scale(self, q) -> "Poly":
        q = Fraction(q)
        return Poly(self.ring, [self.ring.scale(c, q) for c in self.coefficients])

    def shift_scale(self, q, power: int) -> "Poly":
        """q * t^power * self."""
        q = Fraction(q)
        return Poly(
            self.ring,
            [self.ring.zero] * power
            + [self.ring.scale(c, q) for c in self.coefficients],
        )

    def integrate(self) -> "Poly":
        """Antiderivative with zero constant term."""
        out = [self.ring.zero]
        for k, c in enumerate(self.coefficients):
            out.append(self.ring.scale(c, Fraction(1, k + 1)))
        return Poly(self.ring, out)

    def differentiate(self) -> "Poly":
        return Poly(
            self.ring,
            [
                self.ring.scale(c, Fraction(k))
                for k, c in enumerate(self.coefficients)
            ][1:],
        )

    def __call__(self, t):
        """Evaluate at a rational time."""
        t = Fraction(t)
        total = self.ring.zero
        power = Fraction(1)
        for c in self.coefficients:
            total = self.ring.add(total, self.ring.scale(c, power))
            power *= t
        return total

    def __repr__(self) -> str:
        return f"Poly({list(self.coefficients)})"


class FunctionalCurve:
    """gamma(t) = sum_j t^j gamma_j with every coefficient an infinitesimal
    character over a shared Hopf algebra, ring and truncation."""

    __slots__ = ("coefficients", "hopf", "ring", "truncation")

    def __init__(self, coefficients: Iterable[TruncatedFunctional]):
        coeffs = tuple(coefficients)
        if not coeffs:
            raise ValueError("a curve needs at least one coefficient")
        first = coeffs[0]
        for c in coeffs:
            if (
                c.hopf.key != first.hopf.key
                or c.ring.key != first.ring.key
                or c.truncation != first.truncation
            ):
                raise IncompatibleError("curve coefficients disagree on hopf/ring/N")
            InfinitesimalCharacter(c)  # raises MembershipError if not infinitesimal
        self.coefficients = coeffs
        self.hopf: HopfStructure = first.hopf
        self.ring = first.ring
        self.truncation = first.truncation

    @property
    def poly_degree(self) -> int:
        return len(self.coefficients) - 1

    def value_poly(self, basis) -> Poly:
        """gamma evaluated at one basis element, as a polynomial in t."""
        return Poly(self.ring, [c.value(basis) for c in self.coefficients])

    def to_json_dict(self) -> dict:
        return {"coeffs": [c.to_json_dict() for c in self.coefficients]}

    @staticmethod
    def from_json_dict(data: dict) -> "FunctionalCurve":
        return FunctionalCurve(
            TruncatedFunctional.from_json_dict(entry) for entry in data["coeffs"]
        )


def evolve_polynomials(curve: FunctionalCurve) -> dict:
    """The full solution: for each basis element of degree <= N, the value of
    eta as a ``Poly`` in t.  Degree-0 is constantly one; the degree-n values
    integrate the convolution of the lower-degree solution with the curve."""
    hopf, ring = curve.hopf, curve.ring
    eta: dict = {hopf.unit_basis: Poly.constant(ring, ring.one)}
    for degree in range(1, curve.truncation + 1):
        for basis in hopf.basis(degree):
            rate = Poly.zero(ring)
            for coeff, left, right in hopf.coproduct(basis):
                if right.degree == 0:
                    continue  # gamma vanishes in degree 0
                gamma_poly = curve.value_poly(right)
                if not gamma_poly.coefficients:
                    continue
                rate = rate + (eta[left] * gamma_poly).scale(coeff)
            eta[basis] = rate.integrate()
    return eta


def evolve(curve: FunctionalCurve, t_end) -> TruncatedFunctional:
    """eta(t_end), exactly."""
    eta = evolve_polynomials(curve)
    ring = curve.ring
    values = {}
    for basis, poly in eta.items():
        value = poly(t_end)
        if not ring.is_zero(value):
            values[basis] = value
    return TruncatedFunctional(curve.hopf, ring, curve.truncation, values)


def evol(curve: FunctionalCurve) -> Character:
    """The time-1 evolution, wrapped as a character.

    A predicate failure here signals a solver bug, never expected input.
    """
    functional = evolve(curve, 1)
    violation = character_violation(functional)
    if violation is not None:
        b1, b2 = violation
        raise InternalError(
            f"evolution left the character group at ({b1.serial}, {b2.serial})"
        )
    return Character._wrap(functional)
