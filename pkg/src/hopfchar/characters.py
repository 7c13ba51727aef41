"""Characters and infinitesimal characters at a finite truncation.

A character is a unital algebra homomorphism into the coefficient ring; an
infinitesimal character is the corresponding derivation-like object.  At
truncation N both predicates reduce (by bilinearity) to finite checks over
basis pairs with degree sum <= N, so membership is exactly decidable.

Characters form a group under convolution with inverse given by antipode
precomposition; the convolution exponential restricts to a bijection from
infinitesimal characters onto characters, with the commutator bracket as the
Lie structure.  For the rooted-forest algebra the group is the Butcher group
of tree maps, and ``butcher_compose`` evaluates its composition law directly
from root-containing subtrees.
"""

from __future__ import annotations

from typing import Mapping

from . import series
from .convolution import TruncatedFunctional, conv_unit, convolve
from .errors import MembershipError
from .hopf import HopfStructure, ck_hopf
from .rings import RATIONAL
from .trees import RootedTree, enumerate_trees, ordered_subtrees, single_tree_forest


def character_violation(phi: TruncatedFunctional):
    """None when phi is a character; otherwise the first violating basis pair.

    The pair ``(unit, unit)`` reports a wrong value on the algebra unit.
    """
    ring = phi.ring
    unit = phi.hopf.unit_basis
    if phi.degree0 != ring.one:
        return (unit, unit)
    for b1, b2 in _basis_pairs(phi.hopf, phi.truncation):
        lhs = phi.evaluate(phi.hopf.product(b1, b2))
        rhs = ring.mul(phi.value(b1), phi.value(b2))
        if lhs != rhs:
            return (b1, b2)
    return None


def infinitesimal_violation(phi: TruncatedFunctional):
    """None when phi is an infinitesimal character; otherwise the first
    violating pair (``(unit, unit)`` for a nonzero value on the unit)."""
    ring = phi.ring
    hopf = phi.hopf
    unit = hopf.unit_basis
    if not ring.is_zero(phi.degree0):
        return (unit, unit)
    for b1, b2 in _basis_pairs(hopf, phi.truncation):
        lhs = phi.evaluate(hopf.product(b1, b2))
        rhs = ring.add(
            ring.scale(phi.value(b1), hopf.counit(b2)),
            ring.scale(phi.value(b2), hopf.counit(b1)),
        )
        if lhs != rhs:
            return (b1, b2)
    return None


def _basis_pairs(hopf: HopfStructure, truncation: int):
    for i in range(truncation + 1):
        for b1 in hopf.basis(i):
            for j in range(truncation + 1 - i):
                for b2 in hopf.basis(j):
                    yield b1, b2


def is_character(phi: TruncatedFunctional) -> bool:
    return character_violation(phi) is None


def is_infinitesimal(phi: TruncatedFunctional) -> bool:
    return infinitesimal_violation(phi) is None


class Character:
    """A functional that passed the character predicate at construction."""

    __slots__ = ("functional",)

    def __init__(self, functional: TruncatedFunctional):
        violation = character_violation(functional)
        if violation is not None:
            b1, b2 = violation
            raise MembershipError(
                f"not a character: violated at ({b1.serial}, {b2.serial})"
            )
        self.functional = functional

    @classmethod
    def _wrap(cls, functional: TruncatedFunctional) -> "Character":
        """Wrap without re-checking; for constructions that are multiplicative
        by design (multiplicative extension of generator values)."""
        char = cls.__new__(cls)
        char.functional = functional
        return char

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.functional == other.functional

    def __repr__(self) -> str:
        return f"Character({self.functional!r})"


class InfinitesimalCharacter:
    """A functional that passed the infinitesimal-character predicate."""

    __slots__ = ("functional",)

    def __init__(self, functional: TruncatedFunctional):
        violation = infinitesimal_violation(functional)
        if violation is not None:
            b1, b2 = violation
            raise MembershipError(
                f"not an infinitesimal character: violated at ({b1.serial}, {b2.serial})"
            )
        self.functional = functional

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, InfinitesimalCharacter)
            and self.functional == other.functional
        )

    def __repr__(self) -> str:
        return f"InfinitesimalCharacter({self.functional!r})"


# -- group and Lie-algebra operations ----------------------------------------


def char_unit(hopf: HopfStructure, ring, truncation: int) -> Character:
    return Character(conv_unit(hopf, ring, truncation))


def char_mul(phi: Character, psi: Character) -> Character:
    """Group product; characters are closed under convolution."""
    return Character(convolve(phi.functional, psi.functional))


def char_inv(phi: Character) -> Character:
    """Group inverse: precomposition with the antipode."""
    return Character(phi.functional.precompose_antipode())


def char_exp(phi: InfinitesimalCharacter) -> Character:
    """The convolution exponential, landing in the character group."""
    return Character(series.exp(phi.functional))


def char_log(psi: Character) -> InfinitesimalCharacter:
    """The convolution logarithm, landing in the infinitesimal characters."""
    return InfinitesimalCharacter(series.log(psi.functional))


def lie_bracket(
    phi: InfinitesimalCharacter, psi: InfinitesimalCharacter
) -> InfinitesimalCharacter:
    """Commutator bracket; infinitesimal characters are closed under it."""
    f, g = phi.functional, psi.functional
    return InfinitesimalCharacter(convolve(f, g) - convolve(g, f))


# -- the Butcher-group view on the rooted-forest instance ---------------------


def char_from_tree_values(
    values: Mapping[RootedTree, object],
    truncation: int,
    ring=RATIONAL,
    hopf=None,
) -> Character:
    """The unique character with the given values on single trees.

    Missing trees count as zero; forests get the product of their tree values.
    """
    hopf = hopf if hopf is not None else ck_hopf()
    out = {}
    for basis in hopf.all_basis_upto(truncation):
        value = ring.one
        for tree in basis.trees:
            value = ring.mul(value, values.get(tree, ring.zero))
        if not ring.is_zero(value):
            out[basis] = value
    return Character._wrap(TruncatedFunctional(hopf, ring, truncation, out))


def tree_values(phi: Character) -> dict[RootedTree, object]:
    """Restriction of a rooted-forest character to single trees."""
    out = {}
    for basis, value in phi.functional.values.items():
        if len(basis.trees) == 1:
            out[basis.trees[0]] = value
    return out


def tree_values_to_json_dict(
    values: Mapping[RootedTree, object], truncation: int, ring=RATIONAL
) -> dict:
    """Tree-value map codec: ``{"truncation": N, "trees": {"[]": "1", ...}}``."""
    data = {"truncation": truncation}
    if ring.key != "rational":
        data["ring"] = ring.key
    data["trees"] = {
        tree.serial: ring.format_element(value)
        for tree, value in sorted(
            values.items(), key=lambda kv: (kv[0].order, kv[0].serial)
        )
        if not ring.is_zero(value)
    }
    return data


def tree_values_from_json_dict(data: dict):
    """Inverse codec; returns (values, truncation, ring)."""
    from .rings import resolve_ring
    from .trees import parse_tree

    ring = resolve_ring(data.get("ring", "rational"))
    truncation = int(data["truncation"])
    values = {
        parse_tree(key): ring.parse_element(text)
        for key, text in data.get("trees", {}).items()
    }
    return values, truncation, ring


def infinitesimal_from_tree_values(
    values: Mapping[RootedTree, object],
    truncation: int,
    ring=RATIONAL,
    hopf=None,
) -> InfinitesimalCharacter:
    """The infinitesimal character supported on single trees with the given
    values (zero on the unit and on every multi-tree forest)."""
    hopf = hopf if hopf is not None else ck_hopf()
    out = {}
    for tree, value in values.items():
        if tree.order <= truncation and not ring.is_zero(value):
            out[single_tree_forest(tree)] = value
    return InfinitesimalCharacter(TruncatedFunctional(hopf, ring, truncation, out))


def butcher_compose(
    a: Mapping[RootedTree, object],
    b: Mapping[RootedTree, object],
    truncation: int,
    ring=RATIONAL,
) -> dict[RootedTree, object]:
    """The Butcher composition law on tree maps, evaluated directly:
    (a.b)(tree) sums b(kept subtree) * prod of a over the cut forest, over all
    root-containing subtrees.  Matches the character-group product under the
    tree-values correspondence."""
    out: dict[RootedTree, object] = {}
    for level in enumerate_trees(truncation):
        for tree in level:
            total = ring.zero
            for cut, kept in ordered_subtrees(tree):
                term = ring.one if not kept.trees else b.get(kept.trees[0], ring.zero)
                for theta in cut.trees:
                    term = ring.mul(term, a.get(theta, ring.zero))
                total = ring.add(total, term)
            out[tree] = total
    return out


# -- the additive view on the tensor instance ---------------------------------


def tensor_char_group_iso(phi: Character) -> tuple:
    """Restrict a tensor-algebra character to the degree-1 words.

    This is a group isomorphism onto d-vectors under componentwise addition.
    """
    hopf = phi.functional.hopf
    return tuple(phi.functional.value(w) for w in hopf.basis(1))


def tensor_char_from_vector(
    vector, hopf: HopfStructure, truncation: int, ring=RATIONAL
) -> Character:
    """Multiplicative extension of degree-1 values to a tensor-algebra character."""
    vector = tuple(vector)
    out = {}
    for basis in hopf.all_basis_upto(truncation):
        value = ring.one
        for letter in basis.letters:
            value = ring.mul(value, vector[letter])
        if not ring.is_zero(value):
            out[basis] = value
    return Character._wrap(TruncatedFunctional(hopf, ring, truncation, out))
