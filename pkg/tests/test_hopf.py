from fractions import Fraction

import pytest

from hopfchar.errors import ParseError, TruncationOverflowError
from hopfchar.hopf import (
    EMPTY_WORD,
    GradedVector,
    Word,
    ck_hopf,
    parse_word,
    resolve_hopf,
    tensor_hopf,
    vector_of,
)
from hopfchar.trees import EMPTY_FOREST, LEAF, Forest, parse_tree

from helpers import antipode_by_axiom, as_multiset, coproduct_triple

CK = ck_hopf()
T2 = tensor_hopf(2)
CHAIN = parse_tree("[[]]")
CHERRY = parse_tree("[[] []]")
F_LEAF = Forest([LEAF])
F_CHAIN = Forest([CHAIN])
F_LL = Forest([LEAF, LEAF])


def coproduct_multiset(hopf, basis):
    return {(l.serial, r.serial): c for c, l, r in hopf.coproduct(basis)}


# -- words and vectors ---------------------------------------------------------


def test_word_basics():
    w = Word([0, 1, 0])
    assert w.degree == 3
    assert w.serial == "v0v1v0"
    assert EMPTY_WORD.serial == "1"
    assert parse_word("v0v1v0") == w
    assert parse_word("1") == EMPTY_WORD
    assert parse_word("v12") == Word([12])
    with pytest.raises(ParseError):
        parse_word("w0")
    with pytest.raises(ParseError):
        parse_word("v")


def test_graded_vector_arithmetic():
    v = vector_of(F_LEAF) * 2 + vector_of(F_CHAIN)
    w = v - vector_of(F_CHAIN)
    assert w == vector_of(F_LEAF) * 2
    assert (v - v).is_zero()
    assert v[F_LEAF] == 2
    assert v[F_LL] == 0
    assert v.degrees() == {1, 2}
    assert not v.is_homogeneous()
    assert (vector_of(F_LL) * Fraction(1, 3)).degree() == 2


def test_graded_vector_format():
    v = vector_of(F_LL) - vector_of(F_CHAIN)
    assert v.format() == "-[[]] + [] []"
    assert GradedVector().format() == "0"
    assert (vector_of(F_LEAF) * -2).format() == "-2 []"


# -- structure maps: frozen small cases ---------------------------------------


def test_ck_coproduct_unit_and_leaf():
    assert coproduct_multiset(CK, EMPTY_FOREST) == {("1", "1"): 1}
    assert coproduct_multiset(CK, F_LEAF) == {("[]", "1"): 1, ("1", "[]"): 1}


def test_ck_coproduct_of_square_matches_bialgebra_expansion():
    # oracle: square (leaf x 1 + 1 x leaf) in the componentwise product
    base = [(F_LEAF, EMPTY_FOREST), (EMPTY_FOREST, F_LEAF)]
    expected = {}
    for l1, r1 in base:
        for l2, r2 in base:
            key = (l1.union(l2).serial, r1.union(r2).serial)
            expected[key] = expected.get(key, 0) + 1
    assert coproduct_multiset(CK, F_LL) == expected
    assert expected[("[]", "[]")] == 2


def test_ck_coproduct_chain_and_cherry():
    assert coproduct_multiset(CK, F_CHAIN) == {
        ("[[]]", "1"): 1,
        ("[]", "[]"): 1,
        ("1", "[[]]"): 1,
    }
    assert coproduct_multiset(CK, Forest([CHERRY])) == {
        ("[[] []]", "1"): 1,
        ("[] []", "[]"): 1,
        ("[]", "[[]]"): 2,
        ("1", "[[] []]"): 1,
    }


def test_ck_counit():
    assert CK.counit(EMPTY_FOREST) == 1
    assert CK.counit(F_LEAF) == 0
    assert CK.counit(Forest([LEAF, CHAIN])) == 0


def test_ck_antipode_small_cases():
    assert CK.antipode(EMPTY_FOREST) == vector_of(EMPTY_FOREST)
    assert CK.antipode(F_LEAF) == -vector_of(F_LEAF)
    assert CK.antipode(F_CHAIN) == vector_of(F_LL) - vector_of(F_CHAIN)
    # forests multiply: S(leaf^2) = (-leaf)^2
    assert CK.antipode(F_LL) == vector_of(F_LL)


def test_tensor_coproduct_small_cases():
    assert coproduct_multiset(T2, EMPTY_WORD) == {("1", "1"): 1}
    assert coproduct_multiset(T2, Word([0])) == {("v0", "1"): 1, ("1", "v0"): 1}
    # oracle: product (v0 x 1 + 1 x v0)(v1 x 1 + 1 x v1) in the tensor square
    base0 = [(Word([0]), EMPTY_WORD), (EMPTY_WORD, Word([0]))]
    base1 = [(Word([1]), EMPTY_WORD), (EMPTY_WORD, Word([1]))]
    expected = {}
    for l1, r1 in base0:
        for l2, r2 in base1:
            key = (
                Word(l1.letters + l2.letters).serial,
                Word(r1.letters + r2.letters).serial,
            )
            expected[key] = expected.get(key, 0) + 1
    assert coproduct_multiset(T2, Word([0, 1])) == expected
    assert expected == {
        ("v0v1", "1"): 1,
        ("v0", "v1"): 1,
        ("v1", "v0"): 1,
        ("1", "v0v1"): 1,
    }


def test_tensor_antipode():
    assert T2.antipode(EMPTY_WORD) == vector_of(EMPTY_WORD)
    assert T2.antipode(Word([0])) == -vector_of(Word([0]))
    assert T2.antipode(Word([0, 1])) == vector_of(Word([1, 0]))
    assert T2.antipode(Word([0, 1, 1])) == -vector_of(Word([1, 1, 0]))


# -- axioms --------------------------------------------------------------------


@pytest.mark.parametrize("hopf", [CK, T2], ids=lambda h: h.key)
def test_coassociativity_through_degree_5(hopf):
    for basis in hopf.all_basis_upto(5):
        assert coproduct_triple(hopf, basis, True) == coproduct_triple(hopf, basis, False)


@pytest.mark.parametrize("hopf", [CK, T2], ids=lambda h: h.key)
def test_counit_axiom_through_degree_6(hopf):
    for basis in hopf.all_basis_upto(6):
        left = GradedVector(
            (right, coeff * hopf.counit(l))
            for coeff, l, right in hopf.coproduct(basis)
        )
        right_side = GradedVector(
            (l, coeff * hopf.counit(r)) for coeff, l, r in hopf.coproduct(basis)
        )
        assert left == vector_of(basis)
        assert right_side == vector_of(basis)


@pytest.mark.parametrize("hopf", [CK, T2], ids=lambda h: h.key)
def test_antipode_axiom_through_degree_5(hopf):
    unit = vector_of(hopf.unit_basis)
    for basis in hopf.all_basis_upto(5):
        target = unit * hopf.counit(basis)
        left = GradedVector()
        right = GradedVector()
        for coeff, a, b in hopf.coproduct(basis):
            left = left + hopf.multiply(hopf.antipode(a), vector_of(b)) * coeff
            right = right + hopf.multiply(vector_of(a), hopf.antipode(b)) * coeff
        assert left == target
        assert right == target


@pytest.mark.parametrize("hopf", [CK, T2], ids=lambda h: h.key)
def test_antipode_matches_axiom_recursion(hopf):
    # the explicit formulas against the independent degree-by-degree solve
    for basis in hopf.all_basis_upto(5):
        assert hopf.antipode(basis) == antipode_by_axiom(hopf, basis)


@pytest.mark.parametrize("hopf", [CK, T2], ids=lambda h: h.key)
def test_coproduct_respects_grading(hopf):
    for basis in hopf.all_basis_upto(6):
        for coeff, left, right in hopf.coproduct(basis):
            assert coeff > 0
            assert left.degree + right.degree == basis.degree


@pytest.mark.parametrize("hopf", [CK, T2], ids=lambda h: h.key)
def test_connectedness(hopf):
    assert len(hopf.basis(0)) == 1


# -- products and bases ---------------------------------------------------------


def test_algebra_product():
    assert CK.product(EMPTY_FOREST, F_LEAF) == vector_of(F_LEAF)
    assert CK.product(F_LEAF, F_LEAF) == vector_of(F_LL)
    v0, v1 = Word([0]), Word([1])
    assert T2.product(v0, v1) == vector_of(Word([0, 1]))
    assert T2.product(v0, v1) != T2.product(v1, v0)


def test_product_truncation_overflow():
    with pytest.raises(TruncationOverflowError):
        CK.product(F_CHAIN, F_CHAIN, truncation=3)
    assert CK.product(F_CHAIN, F_CHAIN, truncation=4) == vector_of(
        Forest([CHAIN, CHAIN])
    )
    # multiply drops overflow terms instead of raising
    clipped = CK.multiply(vector_of(F_CHAIN), vector_of(F_CHAIN), truncation=3)
    assert clipped.is_zero()


def test_basis_sizes():
    assert [len(CK.basis(n)) for n in range(7)] == [1, 1, 2, 4, 9, 20, 48]
    assert [len(T2.basis(n)) for n in range(5)] == [1, 2, 4, 8, 16]
    assert [len(tensor_hopf(3).basis(n)) for n in range(4)] == [1, 3, 9, 27]


def test_parse_basis():
    assert CK.parse_basis("[] [[]]") == Forest([LEAF, CHAIN])
    assert T2.parse_basis("v0v1") == Word([0, 1])
    with pytest.raises(ParseError):
        T2.parse_basis("v2")  # out of range for d=2


def test_resolve_hopf():
    assert resolve_hopf("ck") is CK
    assert resolve_hopf("tensor(2)") is T2
    assert resolve_hopf("tensor:3") is tensor_hopf(3)
    with pytest.raises(ParseError):
        resolve_hopf("group-algebra")
    with pytest.raises(ValueError):
        tensor_hopf(0)


def test_multiset_helper_consistency():
    # the helper used across the suite counts multiplicities
    pairs = [(F_LEAF, F_LEAF), (F_LEAF, F_LEAF), (F_LEAF, F_CHAIN)]
    assert as_multiset(pairs) == {("[]", "[]"): 2, ("[]", "[[]]"): 1}
