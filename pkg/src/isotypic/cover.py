"""Graded model of a quotient cover for a faithful linear group action.

The group acts on polynomial functions in n variables by
(g . f)(x) = f(rho(g)^-1 x); each graded piece is a finite-dimensional
representation, and the generating function of the multiplicities of an
irreducible across degrees is a rational function (a finite sum over the
group).  The rank of each multiplicity module over the invariant ring is
read off exactly as the t -> 1 limit of series ratios, and the expected
identities (generic rank = irreducible dimension, fixed-ring dimension
counts, product vanishing patterns) are verified degree by degree.

Per-degree multiplicities from projector ranks are true integers; series
coefficients live in F_p, so series-side comparisons are congruences
mod p.  The load-bearing cross-check between the two is mandatory at
series construction and pins down the orientation conventions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .arith import Poly, RatFunc, limit_at_one, root_of_unity, series_prefix
from .characters import CharacterTable, char_dual, restrict_invariant_dim, tensor_multiplicities
from .errors import NotFaithful, OrientationMismatch
from .groups import Group, Subgroup, subgroup_closure
from .polymat import bareiss_det
from .reps import MatrixRep, decompose, isotypic_projector, rep_from_matrices

DEFAULT_CHECK_DEGREE = 6


@dataclass
class GradedPiece:
    """Degree-d monomials (graded-lex order) with the induced action."""

    d: int
    monomials: tuple[tuple[int, ...], ...]
    rep: MatrixRep

    @property
    def dim(self) -> int:
        return len(self.monomials)


class LinearCoverAction:
    """Faithful linear action on polynomial functions in n variables."""

    def __init__(self, group: Group, p: int, rep: MatrixRep, name: str = "custom"):
        self.group = group
        self.p = p
        self.rep = rep
        self.n = rep.dim
        self.name = name
        self._pieces: dict[int, GradedPiece] = {}
        self._piece_data: dict[int, tuple] = {}
        self._series: dict[int, RatFunc] = {}
        self._dets: list[Poly] | None = None
        self._mul_maps: dict[tuple[int, int], np.ndarray] = {}
        kernel = [g for g in range(group.order) if np.array_equal(rep.mats[g], rep.mats[0])]
        if len(kernel) != 1:
            raise NotFaithful(
                f"{len(kernel)} elements act trivially; the cover group would be a quotient"
            )

    # -- graded pieces ---------------------------------------------------------

    def piece(self, d: int) -> GradedPiece:
        if d not in self._pieces:
            self._pieces[d] = self._build_piece(d)
        return self._pieces[d]

    def _monomials(self, d: int) -> list[tuple[int, ...]]:
        # graded-lex: within a degree, exponent tuples in descending lex order
        def gen(rem, slots):
            if slots == 1:
                yield (rem,)
                return
            for first in range(rem, -1, -1):
                for rest in gen(rem - first, slots - 1):
                    yield (first,) + rest

        return list(gen(d, self.n))

    def _build_piece(self, d: int) -> GradedPiece:
        p = self.p
        order = self.group.order
        monos = self._monomials(d)
        index = {m: i for i, m in enumerate(monos)}
        if d == 0:
            mats = np.ones((order, 1, 1), dtype=np.int64)
            return GradedPiece(0, tuple(monos), MatrixRep(self.group, p, mats, validate=False))
        if d == 1:
            # g . x_j = sum_i (rho(g)^-1)[j, i] x_i: the contragredient action
            inv = np.stack([linalg.inverse(self.rep.mats[g], p) for g in range(order)])
            mats = inv.transpose(0, 2, 1) % p
            return GradedPiece(1, tuple(monos), MatrixRep(self.group, p, mats, validate=False))

        prev = self.piece(d - 1)
        lin = self.piece(1)
        prev_index = {m: i for i, m in enumerate(prev.monomials)}
        # split each monomial as (monomial of degree d-1) * (variable)
        splits = []
        for mono in monos:
            j = max(i for i, e in enumerate(mono) if e)
            beta = list(mono)
            beta[j] -= 1
            splits.append((prev_index[tuple(beta)], j))
        # scatter map: (index in d-1 basis, variable) -> index in d basis
        scatter = np.empty((len(prev.monomials), self.n), dtype=np.int64)
        for bi, beta in enumerate(prev.monomials):
            for i in range(self.n):
                up = list(beta)
                up[i] += 1
                scatter[bi, i] = index[tuple(up)]
        mats = np.zeros((order, len(monos), len(monos)), dtype=np.int64)
        for g in range(order):
            pm = prev.rep.mats[g]
            lm = lin.rep.mats[g]
            for col, (beta_idx, j) in enumerate(splits):
                col_beta = pm[:, beta_idx]
                target = np.zeros(len(monos), dtype=np.int64)
                for i in range(self.n):
                    c = lm[i, j]
                    if c:
                        target[scatter[:, i]] = (target[scatter[:, i]] + col_beta * c) % p
                mats[g, :, col] = target
        return GradedPiece(d, tuple(monos), MatrixRep(self.group, p, mats, validate=False))

    def piece_decomposition(self, d: int, table: CharacterTable):
        """(components, true multiplicities) of the degree-d piece, memoized."""
        if d not in self._piece_data:
            decomp, rtype = decompose(self.piece(d).rep, table)
            self._piece_data[d] = (decomp, rtype.multiplicities)
        return self._piece_data[d]

    def multiplication_map(self, a: int, b: int) -> np.ndarray:
        """0/1 structural matrix (dim B_a * dim B_b) x dim B_{a+b}.

        Row index (alpha, beta) flattened; column = index of alpha + beta.
        """
        key = (a, b)
        if key not in self._mul_maps:
            pa, pb, pab = self.piece(a), self.piece(b), self.piece(a + b)
            index = {m: i for i, m in enumerate(pab.monomials)}
            s = np.zeros((pa.dim * pb.dim, pab.dim), dtype=np.int64)
            for ia, alpha in enumerate(pa.monomials):
                for ib, beta in enumerate(pb.monomials):
                    target = index[tuple(x + y for x, y in zip(alpha, beta))]
                    s[ia * pb.dim + ib, target] = 1
            self._mul_maps[key] = s
        return self._mul_maps[key]

    def to_dict(self) -> dict:
        return {
            "group": self.group.name,
            "modulus": self.p,
            "variables": self.n,
            "generator_matrices": [
                self.rep.mats[g].reshape(-1).tolist() for g in self.group.generator_indices
            ],
        }


def validate_action(
    group: Group, gen_mats, p: int, name: str = "custom", n: int = 1
) -> LinearCoverAction:
    """Extend generator matrices to a faithful action on coordinates.

    `n` is only consulted for the generator-free trivial group, where it
    fixes the number of variables.
    """
    rep = rep_from_matrices(group, p, gen_mats, dim=n)
    return LinearCoverAction(group, p, rep, name=name)


# -- builtin actions -------------------------------------------------------------


def perm_action(group: Group, p: int) -> LinearCoverAction:
    """The defining permutation matrices acting on one variable per point."""
    gen_mats = []
    deg = group.degree
    for g in group.generators:
        m = np.zeros((deg, deg), dtype=np.int64)
        m[np.array(g.images), np.arange(deg)] = 1
        gen_mats.append(m)
    return validate_action(group, gen_mats, p, name=f"perm{deg}")


def reflection_action(group: Group, p: int, n: int) -> LinearCoverAction:
    """Two-dimensional rotation/reflection matrices for a dihedral group.

    Expects the builtin generator order (rotation, reflection): the
    rotation becomes [[0, -1], [1, zeta + zeta^-1]] for zeta of order n,
    the reflection swaps the two coordinates.
    """
    zeta = root_of_unity(p, n)
    trace = (zeta + linalg.inv_mod(zeta, p)) % p
    rot = np.array([[0, -1], [1, trace]], dtype=np.int64) % p
    ref = np.array([[0, 1], [1, 0]], dtype=np.int64)
    return validate_action(group, [rot, ref], p, name="reflection2")


def scalar_action(group: Group, p: int, n: int) -> LinearCoverAction:
    """One-variable action of a cyclic group: the generator scales by a
    primitive n-th root of unity."""
    zeta = root_of_unity(p, n)
    return validate_action(group, [np.array([[zeta]], dtype=np.int64)], p, name="scalar1")


def degree_piece(action: LinearCoverAction, d: int) -> GradedPiece:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return action.piece(d)


# -- multiplicity series -----------------------------------------------------------


def _inverse_dets(action: LinearCoverAction) -> list[Poly]:
    """det(I - t rho(g)^-1) for every element, memoized."""
    if action._dets is None:
        p = action.p
        dets = []
        for g in range(action.group.order):
            inv = linalg.inverse(action.rep.mats[g], p)
            mat = [
                [
                    Poly(p, ((1 if i == j else 0), -int(inv[i, j])))
                    for j in range(action.n)
                ]
                for i in range(action.n)
            ]
            dets.append(bareiss_det(mat))
        action._dets = dets
    return action._dets


def molien_multiplicity_series(
    action: LinearCoverAction,
    i: int,
    table: CharacterTable,
    check_degree: int = DEFAULT_CHECK_DEGREE,
) -> RatFunc:
    """Generating function of the multiplicities of irreducible i by degree.

    The finite sum (1/|G|) sum_g chi_i(g^-1) / det(1 - t rho(g)^-1) is
    cross-checked coefficient-by-coefficient against projector-derived
    multiplicities up to check_degree; the opposite character orientation
    is tried if the first fails, and OrientationMismatch is raised when
    neither matches (an implementation bug, not a data error).
    """
    if i in action._series:
        return action._series[i]
    group, classes, p = table.group, table.classes, table.p
    dets = _inverse_dets(action)

    def assemble(use_inverse_char: bool) -> RatFunc:
        acc = RatFunc.const(p, 0)
        for g in range(group.order):
            c = group.inv[g] if use_inverse_char else g
            chi = table.values[i][classes.class_of[c]]
            acc = acc + RatFunc(Poly.const(p, chi), dets[g])
        return acc.scale(linalg.inv_mod(group.order % p, p))

    expected = [
        action.piece_decomposition(d, table)[1][i] % p for d in range(check_degree + 1)
    ]
    for orientation in (True, False):
        series = assemble(orientation)
        if series_prefix(series, check_degree) == expected:
            action._series[i] = series
            return series
    raise OrientationMismatch(
        f"no orientation of the series formula matches the projectors for irreducible {i}"
    )


def generic_multiplicity(action: LinearCoverAction, i: int, table: CharacterTable) -> int:
    """Rank of the i-th multiplicity module over the invariant ring.

    Computed as the exact limit at t = 1 of M_i / M_0, clearing the common
    pole; the structure theory predicts this equals dim V_i.
    """
    m_i = molien_multiplicity_series(action, i, table)
    m_0 = molien_multiplicity_series(action, 0, table)
    return limit_at_one(m_i / m_0, 0)


# -- verification checks --------------------------------------------------------------


@dataclass
class InvariantsRow:
    d: int
    fixed_dim: int
    char_side_mod_p: int
    char_side_int: int
    ok: bool


def invariants_series_check(
    action: LinearCoverAction, h: Subgroup, max_degree: int, table: CharacterTable
) -> list[InvariantsRow]:
    """Degree-by-degree check dim (B_d)^H = sum_i m_{i,d} dim V_i^H.

    The left side is an averaging-projector rank (a true integer); the
    series side is reduced mod p while the projector-multiplicity side is
    exact, and both must agree.
    """
    group, classes, p = table.group, table.classes, table.p
    fixed_dims = [
        restrict_invariant_dim(table.values[i], h, group, classes, p)
        for i in range(table.num_irreps)
    ]
    coeffs = [
        series_prefix(molien_multiplicity_series(action, i, table), max_degree)
        for i in range(table.num_irreps)
    ]
    h_inv = linalg.inv_mod(h.order % p, p)
    rows = []
    for d in range(max_degree + 1):
        rep = action.piece(d).rep
        acc = np.zeros((rep.dim, rep.dim), dtype=np.int64)
        for x in h.element_indices:
            acc = (acc + rep.mats[x]) % p
        lhs = linalg.rank(acc * h_inv % p, p)
        mults = action.piece_decomposition(d, table)[1]
        rhs_mod = sum(coeffs[i][d] * fixed_dims[i] for i in range(table.num_irreps)) % p
        rhs_int = sum(mults[i] * fixed_dims[i] for i in range(table.num_irreps))
        rows.append(InvariantsRow(d, lhs, rhs_mod, rhs_int, lhs % p == rhs_mod and lhs == rhs_int))
    return rows


@dataclass
class ProductCheck:
    i: int
    j: int
    a: int
    b: int
    required_zero: tuple[int, ...]
    observed_ranks: tuple[int, ...]
    ok: bool
    witness: dict | None = None


def product_structure_check(
    action: LinearCoverAction, i: int, j: int, a: int, b: int, table: CharacterTable
) -> ProductCheck:
    """Multiply the i-component of B_a by the j-component of B_b and project.

    Every projection onto an irreducible absent from V_i tensor V_j must
    vanish; the observed rank pattern is reported either way.
    """
    p = table.p
    tens = _tensor_mults(action, table)
    comp_a = action.piece_decomposition(a, table)[0].components[i]
    comp_b = action.piece_decomposition(b, table)[0].components[j]
    target = action.piece(a + b).rep
    if comp_a.shape[0] == 0 or comp_b.shape[0] == 0:
        span = np.zeros((0, target.dim), dtype=np.int64)
    else:
        outer = np.einsum("sa,tb->stab", comp_a, comp_b).reshape(
            comp_a.shape[0] * comp_b.shape[0], -1
        ) % p
        products = outer @ action.multiplication_map(a, b) % p
        span = linalg.row_space(products, p)
    required = tuple(l for l in range(table.num_irreps) if tens[i, j, l] == 0)
    ranks = []
    witness = None
    for l in range(table.num_irreps):
        if span.shape[0] == 0:
            ranks.append(0)
            continue
        proj = span @ isotypic_projector(target, l, table).T % p
        r = linalg.rank(proj, p)
        ranks.append(r)
        if r and l in required and witness is None:
            witness = {
                "component": l,
                "degree": a + b,
                "vector": proj[np.nonzero(proj.any(axis=1))[0][0]].tolist(),
            }
    ok = all(ranks[l] == 0 for l in required)
    return ProductCheck(i, j, a, b, required, tuple(ranks), ok, witness)


def _tensor_mults(action: LinearCoverAction, table: CharacterTable) -> np.ndarray:
    if not hasattr(action, "_tensor_mults"):
        action._tensor_mults = tensor_multiplicities(table)
    return action._tensor_mults


# -- full report -----------------------------------------------------------------------


@dataclass
class CoverOutcome:
    check: str
    anchor: str
    passed: bool
    witness: dict | None = None

    def to_dict(self) -> dict:
        d = {"check": self.check, "anchor": self.anchor, "pass": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class CoverReport:
    """Everything the cover verification produces, JSON-serializable."""

    action: LinearCoverAction
    table: CharacterTable
    max_degree: int
    generic_mults: list[int]
    degree_table: list[list[int]]
    invariant_series: RatFunc
    outcomes: list[CoverOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def to_dict(self) -> dict:
        return {
            "action": self.action.to_dict(),
            "degrees": list(self.table.degrees),
            "max_degree": self.max_degree,
            "generic_multiplicities": self.generic_mults,
            "multiplicities_by_degree": self.degree_table,
            "invariant_series": self.invariant_series.to_dict(),
            "outcomes": [o.to_dict() for o in self.outcomes],
            "pass": self.passed,
        }


def cyclic_subgroups(group: Group) -> list[Subgroup]:
    seen = {}
    for g in range(group.order):
        h = subgroup_closure(group, [g])
        seen.setdefault(h.element_indices, h)
    return sorted(seen.values(), key=lambda s: (s.order, s.element_indices))


def pushforward_report(
    action: LinearCoverAction,
    max_degree: int,
    table: CharacterTable,
    product_degree: int = 4,
) -> CoverReport:
    """Run the full structure verification for one cover action.

    Checks: every generic multiplicity equals the irreducible dimension
    (regular type at the generic point), Molien coefficients match
    projector multiplicities mod p through max_degree, the fixed-ring
    dimension count holds for every cyclic subgroup, and component
    products respect the tensor vanishing pattern at small degrees.
    """
    group, p = action.group, action.p
    outcomes: list[CoverOutcome] = []

    generic = [generic_multiplicity(action, i, table) for i in range(table.num_irreps)]
    outcomes.append(
        CoverOutcome(
            "cover.generic_rank",
            "rank of each multiplicity module equals the irreducible dimension",
            generic == list(table.degrees),
            None if generic == list(table.degrees) else {"generic": generic, "degrees": list(table.degrees)},
        )
    )

    degree_table = []
    series_ok = True
    series_witness = None
    prefixes = [
        series_prefix(molien_multiplicity_series(action, i, table), max_degree)
        for i in range(table.num_irreps)
    ]
    for d in range(max_degree + 1):
        mults = list(action.piece_decomposition(d, table)[1])
        degree_table.append(mults)
        for i in range(table.num_irreps):
            if mults[i] % p != prefixes[i][d]:
                series_ok = False
                if series_witness is None:
                    series_witness = {"degree": d, "irrep": i}
    outcomes.append(
        CoverOutcome(
            "cover.series_vs_projectors",
            "series coefficients equal projector multiplicities (mod p)",
            series_ok,
            series_witness,
        )
    )

    inv_ok = True
    inv_witness = None
    for h in cyclic_subgroups(group):
        for row in invariants_series_check(action, h, max_degree, table):
            if not row.ok:
                inv_ok = False
                if inv_witness is None:
                    inv_witness = {"subgroup": list(h.element_indices), "degree": row.d}
    outcomes.append(
        CoverOutcome(
            "cover.invariants",
            "fixed-ring dimensions match the weighted multiplicity count",
            inv_ok,
            inv_witness,
        )
    )

    prod_ok = True
    prod_witness = None
    for i in range(table.num_irreps):
        for j in range(table.num_irreps):
            for a in range(1, product_degree + 1):
                for b in range(a, product_degree + 1):
                    res = product_structure_check(action, i, j, a, b, table)
                    if not res.ok:
                        prod_ok = False
                        if prod_witness is None:
                            prod_witness = {"i": i, "j": j, "a": a, "b": b, "detail": res.witness}
    outcomes.append(
        CoverOutcome(
            "cover.product_pattern",
            "component products vanish outside the tensor decomposition",
            prod_ok,
            prod_witness,
        )
    )

    return CoverReport(
        action,
        table,
        max_degree,
        generic,
        degree_table,
        molien_multiplicity_series(action, 0, table),
        outcomes,
    )
