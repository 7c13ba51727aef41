"""Independent oracles shared by the test modules.

Everything here recomputes expected values along a different route than the
library: graph-level isomorphism instead of canonical serialization, raw
vertex-subset enumeration instead of the child recursion, the antipode axiom
instead of the partition formula, the per-degree composition sum instead of
Horner evaluation, and a linear-span ideal membership test instead of
generator-only evaluation.
"""

from fractions import Fraction

from hopfchar.convolution import TruncatedFunctional, conv_unit, convolve
from hopfchar.hopf import GradedVector
from hopfchar.linalg import in_span
from hopfchar.trees import Forest, RootedTree


# -- rooted trees -------------------------------------------------------------


def trees_isomorphic(a: RootedTree, b: RootedTree) -> bool:
    """Root-preserving graph isomorphism by recursive multiset matching.

    Does not look at serializations: children are matched by searching over
    assignments.
    """
    if a.order != b.order or len(a.children) != len(b.children):
        return False
    remaining = list(b.children)
    for child in a.children:
        for i, candidate in enumerate(remaining):
            if trees_isomorphic(child, candidate):
                del remaining[i]
                break
        else:
            return False
    return True


def grow_trees(max_order: int) -> list[list[RootedTree]]:
    """Enumerate trees by attaching a new leaf to every vertex of every
    smaller tree, deduplicating by canonical form.  Independent of the
    child-multiset recursion the library uses."""

    def attach_everywhere(tree: RootedTree) -> list[RootedTree]:
        grown = [RootedTree(tree.children + (RootedTree(),))]
        for i, child in enumerate(tree.children):
            rest = tree.children[:i] + tree.children[i + 1 :]
            grown.extend(
                RootedTree(rest + (bigger,)) for bigger in attach_everywhere(child)
            )
        return grown

    levels = [[RootedTree()]]
    for _ in range(max_order - 1):
        seen = {}
        for tree in levels[-1]:
            for grown in attach_everywhere(tree):
                seen[grown.serial] = grown
        levels.append(sorted(seen.values(), key=lambda t: t.serial))
    return levels


def subtree_pairs_by_vertex_subsets(tree: RootedTree) -> list[tuple[Forest, Forest]]:
    """All (cut forest, kept part) pairs by brute-force enumeration of vertex
    subsets, filtering for connectivity through the root."""
    parents = tree.parent_array()
    n = tree.order
    children_of = [[] for _ in range(n)]
    for v in range(1, n):
        children_of[parents[v]].append(v)

    def build(v: int, keep) -> RootedTree:
        return RootedTree(build(c, keep) for c in children_of[v] if c in keep)

    pairs = []
    for mask in range(1 << n):
        keep = {v for v in range(n) if mask >> v & 1}
        if keep and 0 not in keep:
            continue
        # connected through the root: every kept vertex's parent is kept
        if any(v != 0 and parents[v] not in keep for v in keep):
            continue
        # a cut component's top vertex is not kept while its parent is (or it
        # is the tree root itself, for the empty subset)
        cut_roots = [v for v in range(n) if v not in keep and (v == 0 or parents[v] in keep)]
        full = set(range(n))
        cut_forest = Forest(build(r, full - keep) for r in cut_roots)
        kept_part = Forest([build(0, keep)]) if keep else Forest()
        pairs.append((cut_forest, kept_part))
    return pairs


def as_multiset(pairs) -> dict:
    out = {}
    for item in pairs:
        key = tuple(str(x) for x in item)
        out[key] = out.get(key, 0) + 1
    return out


# -- Hopf structure -----------------------------------------------------------


def antipode_by_axiom(hopf, basis) -> GradedVector:
    """Solve m (S x id) Delta = unit . counit degree by degree."""
    if basis.degree == 0:
        return GradedVector([(basis, 1)])
    total = GradedVector()
    for coeff, left, right in hopf.coproduct(basis):
        if left.degree == basis.degree and right.degree == 0:
            continue  # the S(basis) term itself
        total = total + hopf.multiply(
            antipode_by_axiom(hopf, left), GradedVector([(right, coeff)])
        )
    return -total


def coproduct_triple(hopf, basis, left_first: bool):
    """(Delta x id) Delta or (id x Delta) Delta as a combined term multiset."""
    out = {}
    for coeff, a, b in hopf.coproduct(basis):
        inner = hopf.coproduct(a) if left_first else hopf.coproduct(b)
        for c2, x, y in inner:
            key = (x, y, b) if left_first else (a, x, y)
            out[key] = out.get(key, 0) + coeff * c2
    return {k: v for k, v in out.items() if v}


# -- functional calculus ------------------------------------------------------


def compositions(total: int, parts: int):
    """All ways to write ``total`` as an ordered tuple of ``parts`` positive ints."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def apply_series_raw(series, a: TruncatedFunctional) -> TruncatedFunctional:
    """The per-degree composition-sum formula for f[a], term by term."""
    n_max = a.truncation
    parts = [a.project(n) for n in range(n_max + 1)]
    coeffs = series.padded(n_max).coefficients
    result = conv_unit(a.hopf, a.ring, a.truncation).scale(coeffs[0])
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            if not coeffs[k]:
                continue
            for alpha in compositions(n, k):
                term = parts[alpha[0]]
                for index in alpha[1:]:
                    term = convolve(term, parts[index])
                result = result + term.scale(coeffs[k])
    return result


# -- ideals -------------------------------------------------------------------


def ideal_degree_span(ideal, degree: int) -> tuple[list, list[list[Fraction]]]:
    """Basis elements of the given degree and spanning vectors of the ideal's
    degree-``degree`` piece, namely all products generator * basis monomial."""
    hopf = ideal.hopf
    basis = list(hopf.basis(degree))
    index = {b: i for i, b in enumerate(basis)}
    vectors = []
    for gen in ideal.generators_upto(degree):
        cofactor_degree = degree - gen.degree()
        for monomial in hopf.basis(cofactor_degree):
            product = hopf.multiply(gen, GradedVector([(monomial, 1)]))
            vec = [Fraction(0)] * len(basis)
            for b, c in product:
                vec[index[b]] += c
            if any(vec):
                vectors.append(vec)
    return basis, vectors


def vector_in_ideal_degree(ideal, vec: GradedVector, degree: int) -> bool:
    basis, span = ideal_degree_span(ideal, degree)
    index = {b: i for i, b in enumerate(basis)}
    target = [Fraction(0)] * len(basis)
    for b, c in vec:
        if b.degree != degree:
            return False
        target[index[b]] += c
    return in_span(span, target)


def coproduct_in_coideal(ideal, gen: GradedVector) -> bool:
    """Whether Delta(gen) lies in I (x) H + H (x) I, bidegree by bidegree."""
    hopf = ideal.hopf
    degree = gen.degree()
    # Collect Delta(gen) terms by bidegree.
    by_bidegree: dict[tuple[int, int], dict] = {}
    for basis, coeff in gen:
        for c, left, right in hopf.coproduct(basis):
            key = (left.degree, right.degree)
            slot = by_bidegree.setdefault(key, {})
            slot[(left, right)] = slot.get((left, right), Fraction(0)) + coeff * c
    for (i, j), terms in by_bidegree.items():
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            continue
        left_basis = list(hopf.basis(i))
        right_basis = list(hopf.basis(j))
        pair_index = {}
        for li, lb in enumerate(left_basis):
            for ri, rb in enumerate(right_basis):
                pair_index[(lb, rb)] = li * len(right_basis) + ri
        dim = len(left_basis) * len(right_basis)
        target = [Fraction(0)] * dim
        for pair, value in terms.items():
            target[pair_index[pair]] += value
        span = []
        _, iv_left = ideal_degree_span(ideal, i)
        for vec in iv_left:
            for ri in range(len(right_basis)):
                row = [Fraction(0)] * dim
                for li, value in enumerate(vec):
                    row[li * len(right_basis) + ri] = value
                span.append(row)
        _, iv_right = ideal_degree_span(ideal, j)
        for vec in iv_right:
            for li in range(len(left_basis)):
                row = [Fraction(0)] * dim
                for ri, value in enumerate(vec):
                    row[li * len(right_basis) + ri] = value
                span.append(row)
        if not in_span(span, target):
            return False
    return True
