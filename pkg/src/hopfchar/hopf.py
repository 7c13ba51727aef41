"""Graded connected Hopf algebra structures.

Two instances share one interface:

* ``CKHopf`` — the commutative algebra of rooted forests.  The coproduct of a
  tree sums (cut forest) x (kept subtree) over its root-containing subtrees;
  the antipode of a tree sums signed cut forests over edge subsets, with sign
  ``(-1)^(number of components)``.  Both extend multiplicatively to forests.
* ``TensorHopf(d)`` — the tensor algebra on d generators with word basis,
  concatenation product, unshuffle coproduct and antipode
  ``w -> (-1)^|w| reversed(w)``.

Structure constants are exact integers carried as ``Fraction`` coefficients
inside ``GradedVector``.  Instances are stateless apart from write-once memo
tables, so shared read-only use across threads is safe.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import ParseError, TruncationOverflowError
from .trees import (
    DEFAULT_ORDER_CAP,
    EMPTY_FOREST,
    Forest,
    edge_partitions,
    enumerate_forests,
    ordered_subtrees,
    parse_forest,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Word:
    """A word in generators ``v0 .. v(d-1)``; the empty word serializes as "1"."""

    __slots__ = ("letters", "degree", "serial", "_hash")

    def __init__(self, letters: Iterable[int] = ()):
        self.letters: tuple[int, ...] = tuple(int(i) for i in letters)
        self.degree = len(self.letters)
        self.serial = "".join(f"v{i}" for i in self.letters) if self.letters else "1"
        self._hash = hash(("word", self.letters))

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Word({self.serial!r})"

    def __str__(self) -> str:
        return self.serial


EMPTY_WORD = Word()


def parse_word(text: str) -> Word:
    text = text.strip()
    if text == "1":
        return EMPTY_WORD
    letters: list[int] = []
    pos = 0
    while pos < len(text):
        if text[pos] != "v":
            raise ParseError("expected 'v'", pos)
        pos += 1
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected generator index", pos)
        letters.append(int(text[start:pos]))
    return Word(letters)


class GradedVector:
    """A finite rational linear combination of basis elements.

    No zero coefficients are stored.  Supports +, -, and scalar * by
    int/Fraction; products in the algebra live on the Hopf structure.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for basis, coeff in items:
            c = Fraction(coeff)
            if c:
                c += data.pop(basis, _ZERO)
                if c:
                    data[basis] = c
                else:
                    data.pop(basis, None)
        self.terms: dict = data

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedVector) and self.terms == other.terms

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, basis) -> Fraction:
        return self.terms.get(basis, _ZERO)

    def __add__(self, other: "GradedVector") -> "GradedVector":
        out = dict(self.terms)
        for basis, coeff in other.terms.items():
            c = out.pop(basis, _ZERO) + coeff
            if c:
                out[basis] = c
        vec = GradedVector()
        vec.terms = out
        return vec

    def __sub__(self, other: "GradedVector") -> "GradedVector":
        return self + (-other)

    def __neg__(self) -> "GradedVector":
        return self * -1

    def __mul__(self, scalar) -> "GradedVector":
        q = Fraction(scalar)
        vec = GradedVector()
        if q:
            vec.terms = {basis: coeff * q for basis, coeff in self.terms.items()}
        return vec

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"GradedVector({self.format()!r})"

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {basis.degree for basis in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a nonzero homogeneous vector."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("vector is zero or not homogeneous")
        return degs.pop()

    def format(self) -> str:
        """Signed sum in canonical basis order, e.g. ``"-[[]] + [] []"``."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for basis in sorted(self.terms, key=lambda b: (b.degree, b.serial)):
            coeff = self.terms[basis]
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = basis.serial if mag == 1 else f"{mag} {basis.serial}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def vector_of(basis) -> GradedVector:
    return GradedVector([(basis, 1)])


class HopfStructure:
    """Common driver for a graded connected Hopf algebra with a chosen basis.

    Subclasses provide the basis per degree and the raw structure maps on
    basis elements; this class supplies linear extensions and memoization.
    """

    key: str

    def basis(self, degree: int) -> tuple:
        raise NotImplementedError

    @property
    def unit_basis(self):
        return self.basis(0)[0]

    def all_basis_upto(self, max_degree: int) -> list:
        out = []
        for n in range(max_degree + 1):
            out.extend(self.basis(n))
        return out

    def product(self, b1, b2, truncation: int | None = None) -> GradedVector:
        """Algebra product of two basis elements (a single basis term here)."""
        if truncation is not None and b1.degree + b2.degree > truncation:
            raise TruncationOverflowError(
                f"product degree {b1.degree + b2.degree} exceeds truncation {truncation}"
            )
        return vector_of(self._product_basis(b1, b2))

    def multiply(self, v1: GradedVector, v2: GradedVector,
                 truncation: int | None = None) -> GradedVector:
        """Bilinear extension of the product, optionally dropping terms above
        the truncation degree."""
        terms = []
        for b1, c1 in v1:
            for b2, c2 in v2:
                if truncation is not None and b1.degree + b2.degree > truncation:
                    continue
                terms.append((self._product_basis(b1, b2), c1 * c2))
        return GradedVector(terms)

    def coproduct(self, basis) -> tuple[tuple[Fraction, object, object], ...]:
        """Coproduct terms ``(coefficient, left, right)`` with equal pairs
        combined; coefficients are positive integers."""
        raise NotImplementedError

    def counit(self, basis) -> Fraction:
        return _ONE if basis.degree == 0 else _ZERO

    def antipode(self, basis) -> GradedVector:
        raise NotImplementedError

    def antipode_vector(self, vec: GradedVector) -> GradedVector:
        out = GradedVector()
        for basis, coeff in vec:
            out = out + self.antipode(basis) * coeff
        return out

    def parse_basis(self, text: str):
        raise NotImplementedError

    def _product_basis(self, b1, b2):
        raise NotImplementedError


class CKHopf(HopfStructure):
    """The rooted-forest Hopf algebra, graded by total node count."""

    key = "ck"

    def __init__(self, order_cap: int = DEFAULT_ORDER_CAP):
        self.order_cap = order_cap
        self._coproduct_cache: dict[Forest, tuple] = {}
        self._antipode_cache: dict = {}

    def basis(self, degree: int) -> tuple[Forest, ...]:
        return tuple(enumerate_forests(degree, cap=self.order_cap))

    def _product_basis(self, b1: Forest, b2: Forest) -> Forest:
        return b1.union(b2)

    def coproduct(self, basis: Forest):
        cached = self._coproduct_cache.get(basis)
        if cached is not None:
            return cached
        # Componentwise tensor product over the trees of the forest.
        pairs: dict[tuple[Forest, Forest], Fraction] = {(EMPTY_FOREST, EMPTY_FOREST): _ONE}
        for tree in basis.trees:
            new_pairs: dict[tuple[Forest, Forest], Fraction] = {}
            for (left, right), coeff in pairs.items():
                for cut, kept in ordered_subtrees(tree):
                    pair = (left.union(cut), right.union(kept))
                    new_pairs[pair] = new_pairs.get(pair, _ZERO) + coeff
            pairs = new_pairs
        result = tuple((coeff, left, right) for (left, right), coeff in pairs.items())
        self._coproduct_cache[basis] = result
        return result

    def _tree_antipode(self, tree) -> GradedVector:
        cached = self._antipode_cache.get(tree)
        if cached is None:
            cached = GradedVector(
                (forest, (-1) ** len(forest.trees))
                for forest, _skeleton in edge_partitions(tree)
            )
            self._antipode_cache[tree] = cached
        return cached

    def antipode(self, basis: Forest) -> GradedVector:
        # Algebra anti-morphism; the target is commutative, so a plain
        # product of the per-tree antipodes.
        out = vector_of(EMPTY_FOREST)
        for tree in basis.trees:
            out = self.multiply(out, self._tree_antipode(tree))
        return out

    def parse_basis(self, text: str) -> Forest:
        return parse_forest(text)

    def __repr__(self) -> str:
        return f"CKHopf(order_cap={self.order_cap})"


class TensorHopf(HopfStructure):
    """The tensor algebra on d generators, graded by word length."""

    def __init__(self, dimension: int = 2):
        if dimension < 1:
            raise ValueError(f"tensor dimension must be >= 1, got {dimension}")
        self.dimension = dimension
        self.key = f"tensor({dimension})"
        self._coproduct_cache: dict[Word, tuple] = {}

    def basis(self, degree: int) -> tuple[Word, ...]:
        return tuple(
            Word(letters)
            for letters in itertools.product(range(self.dimension), repeat=degree)
        )

    def _product_basis(self, b1: Word, b2: Word) -> Word:
        return Word(b1.letters + b2.letters)

    def coproduct(self, basis: Word):
        cached = self._coproduct_cache.get(basis)
        if cached is not None:
            return cached
        n = basis.degree
        pairs: dict[tuple[Word, Word], Fraction] = {}
        for mask in range(1 << n):
            left = Word(basis.letters[i] for i in range(n) if mask >> i & 1)
            right = Word(basis.letters[i] for i in range(n) if not mask >> i & 1)
            pairs[(left, right)] = pairs.get((left, right), _ZERO) + 1
        result = tuple((coeff, left, right) for (left, right), coeff in pairs.items())
        self._coproduct_cache[basis] = result
        return result

    def antipode(self, basis: Word) -> GradedVector:
        return GradedVector([(Word(reversed(basis.letters)), (-1) ** basis.degree)])

    def parse_basis(self, text: str) -> Word:
        word = parse_word(text)
        if any(i >= self.dimension for i in word.letters):
            raise ParseError(f"generator index out of range for {self.key}", 0)
        return word

    def __repr__(self) -> str:
        return f"TensorHopf({self.dimension})"


@functools.lru_cache(maxsize=None)
def ck_hopf(order_cap: int = DEFAULT_ORDER_CAP) -> CKHopf:
    return CKHopf(order_cap)


@functools.lru_cache(maxsize=None)
def tensor_hopf(dimension: int = 2) -> TensorHopf:
    return TensorHopf(dimension)


def resolve_hopf(key: str) -> HopfStructure:
    """Map a Hopf algebra id ("ck" or "tensor(d)") to a shared instance."""
    if key == "ck":
        return ck_hopf()
    if key.startswith("tensor(") and key.endswith(")"):
        try:
            return tensor_hopf(int(key[7:-1]))
        except ValueError:
            raise ParseError(f"bad Hopf algebra id {key!r}", 0) from None
    if key.startswith("tensor:"):
        try:
            return tensor_hopf(int(key.split(":", 1)[1]))
        except ValueError:
            raise ParseError(f"bad Hopf algebra id {key!r}", 0) from None
    raise ParseError(f"unknown Hopf algebra id {key!r}", 0)
