"""The affine chart at a fixed point: coordinates, weights, matrix pattern.

The chart at the fixed point indexed by beta is an affine space of dimension
n(n+1)/2 whose coordinates y_ab are indexed by pairs (a, b) with a in the
complement beta', b in beta, and a <= bar(b).  The torus scales y_ab by
t_b / t_a (with t_bar(k) = 1/t_k), and coordinate subspaces cut out by
tableau-indexed coordinate sets carry the classes summed by the restriction
formulas.
"""

from __future__ import annotations

from .indexing import IsotropicIndex, bar, sigma
from .laurent import LaurentPolynomial, bar_var_k, bar_var_h
from .tableaux import SetValuedShiftedTableau


class ChartIndexSet:
    """The coordinate index pairs of the chart at beta, in (a, b) order."""

    __slots__ = ("beta", "pairs")

    def __init__(self, beta: IsotropicIndex) -> None:
        n = beta.n
        bp = beta.complement().values
        self.beta = beta
        self.pairs = tuple((a, b) for a in bp for b in beta.values
                           if a <= bar(b, n))

    def __contains__(self, pair) -> bool:
        return tuple(pair) in set(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __repr__(self) -> str:
        return f"ChartIndexSet(beta={self.beta}, pairs={self.pairs})"


def chart_index_set(beta: IsotropicIndex) -> ChartIndexSet:
    return ChartIndexSet(beta)


def coordinate_weight_k(a: int, b: int, n: int) -> LaurentPolynomial:
    """Torus character t_b / t_a of the coordinate y_ab, bar labels resolved."""
    num = bar_var_k(b, n)
    (eb, cb), = num.terms()
    den = bar_var_k(a, n)
    (ea, ca), = den.terms()
    exps = tuple(x - y for x, y in zip(eb, ea))
    return LaurentPolynomial.monomial(n, exps, cb * ca)


def coordinate_weight_h(a: int, b: int, n: int) -> LaurentPolynomial:
    """Linear form t_b - t_a with the cohomology convention t_bar(k) = -t_k."""
    return bar_var_h(b, n) - bar_var_h(a, n)


def chart_matrix_pattern(beta: IsotropicIndex) -> list[list[tuple]]:
    """Cell-for-cell symbolic 2n x n matrix of the chart.

    Cells are ("zero",), ("one",), or ("y", sign, a, b): rows indexed by beta
    carry the identity, rows indexed by beta' carry the coordinates with the
    antidiagonal mirror (a, b) -> (bar(b), bar(a)) filling pairs outside the
    index set, and row signs come from the diagonal sign matrix (-1 on rows
    r <= n not in beta).
    """
    n = beta.n
    in_beta = set(beta.values)
    index_set = set(chart_index_set(beta).pairs)
    rows = []
    for r in range(1, 2 * n + 1):
        row = []
        for j in range(1, n + 1):
            b = beta.values[j - 1]
            if r in in_beta:
                row.append(("one",) if r == b else ("zero",))
                continue
            a = r
            pair = (a, b) if (a, b) in index_set else (bar(b, n), bar(a, n))
            sign = 1 if (r in in_beta or r > n) else -1
            row.append(("y", sign, pair[0], pair[1]))
        rows.append(row)
    return rows


class SubspaceSpec:
    """A coordinate subspace of the chart, given by the coordinates set to zero."""

    __slots__ = ("chart", "cut")

    def __init__(self, chart: ChartIndexSet, cut) -> None:
        cut = tuple(sorted(set(map(tuple, cut))))
        pairs = set(chart.pairs)
        for pair in cut:
            if pair not in pairs:
                raise ValueError(f"cut pair {pair} outside the chart index set")
        self.chart = chart
        self.cut = cut

    def class_k(self) -> LaurentPolynomial:
        """Product of (1 - weight) over the cut coordinates; the chart itself is 1."""
        n = self.chart.beta.n
        out = LaurentPolynomial.one(n)
        for a, b in self.cut:
            out = out * (LaurentPolynomial.one(n) - coordinate_weight_k(a, b, n))
        return out

    def __repr__(self) -> str:
        return f"SubspaceSpec(beta={self.chart.beta}, cut={self.cut})"


def tableau_cut_pairs(s: SetValuedShiftedTableau, beta: IsotropicIndex) -> list[tuple[int, int]]:
    """Coordinate pairs (beta'(x), bar(beta'(z(x)))) over the entries of s.

    Raises if an entry falls outside the shifted diagram of sigma(beta), which
    means s is not on that shape.
    """
    n = beta.n
    bp = beta.complement().values
    pairs = []
    for e in s.entries():
        if e.x > n or e.z > n:
            raise ValueError(f"entry {e} not on sigma(beta) for beta={beta}")
        pairs.append((bp[e.x - 1], bar(bp[e.z - 1], n)))
    return pairs


def subspace_of_tableau(s: SetValuedShiftedTableau, beta: IsotropicIndex) -> SubspaceSpec:
    """The coordinate subspace cut out by the entries of a tableau on sigma(beta)."""
    mu = sigma(beta)
    for e in s.entries():
        if e.x > len(mu) or e.z > mu[e.x - 1] + e.x - 1:
            raise ValueError(f"tableau is not on {mu}: entry {e}")
    return SubspaceSpec(chart_index_set(beta), tableau_cut_pairs(s, beta))
