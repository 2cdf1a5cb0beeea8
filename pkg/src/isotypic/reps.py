"""Explicit matrix representations over F_p and their isotypic structure.

A representation assigns one invertible matrix per group element, indexed
by the canonical element order.  Central projectors cut out the isotypic
components; multiplicity spaces are bases of intertwiners from an
irreducible model, and the evaluation map assembled from them is checked
to be an isomorphism onto the component.

All rank and null-space computations go through the deterministic
eliminations in `linalg`, so component bases are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import linalg
from .characters import (
    CharacterTable,
    char_dual,
    char_tensor,
    char_trivial,
    inner_mult,
)
from .errors import (
    DimensionMismatch,
    InconsistentMultiplicity,
    MethodMismatch,
    NotAHomomorphism,
    NotInjective,
    SingularMatrix,
    SplitFailure,
    WrongImage,
)
from .groups import ConjugacyClasses, Group, Subgroup
from .linalg import inv_mod

EXHAUSTIVE_LIMIT = 64
SAMPLED_PAIRS = 1000


class MatrixRep:
    """One invertible dim x dim matrix over F_p per group element."""

    def __init__(self, group: Group, p: int, mats: np.ndarray, validate: bool = True):
        self.group = group
        self.p = p
        self.mats = np.asarray(mats, dtype=np.int64) % p
        self.dim = int(self.mats.shape[1]) if self.mats.ndim == 3 else 0
        self.validation = "skipped"
        if validate:
            self._validate()

    def _validate(self):
        group, p, mats = self.group, self.p, self.mats
        if mats.shape != (group.order, self.dim, self.dim):
            raise NotAHomomorphism("matrix block count or shape does not match the group")
        if not np.array_equal(mats[0] % p, linalg.identity(self.dim)):
            raise NotAHomomorphism("identity element must map to the identity matrix")
        for g in range(group.order):
            if not np.array_equal(mats[g] @ mats[group.inv[g]] % p, linalg.identity(self.dim)):
                raise SingularMatrix(f"matrix of element {g} is not invertible mod {p}")
        if group.order <= EXHAUSTIVE_LIMIT:
            for a in range(group.order):
                prod = np.einsum("ij,bjk->bik", mats[a], mats) % p
                if not np.array_equal(prod, mats[group.mult[a]]):
                    b = next(
                        b for b in range(group.order)
                        if not np.array_equal(prod[b], mats[group.mult[a, b]])
                    )
                    raise NotAHomomorphism(
                        f"rho({a})rho({b}) != rho({a}*{b})",
                        word=(group.word_string(a), group.word_string(b)),
                    )
            self.validation = "exhaustive"
        else:
            rng = random.Random(0)
            pairs = [(a, b) for a in group.generator_indices for b in range(group.order)]
            pairs += [
                (rng.randrange(group.order), rng.randrange(group.order))
                for _ in range(SAMPLED_PAIRS)
            ]
            for a, b in pairs:
                if not np.array_equal(mats[a] @ mats[b] % p, mats[group.mult[a, b]]):
                    raise NotAHomomorphism(
                        f"rho({a})rho({b}) != rho({a}*{b})",
                        word=(group.word_string(a), group.word_string(b)),
                    )
            self.validation = "sampled"

    def matrix(self, g: int) -> np.ndarray:
        return self.mats[g]

    def to_dict(self) -> dict:
        return {
            "modulus": self.p,
            "dim": self.dim,
            "matrices": [m.reshape(-1).tolist() for m in self.mats],
        }

    def __repr__(self) -> str:
        return f"MatrixRep(group={self.group.name}, dim={self.dim}, p={self.p})"


@dataclass(frozen=True)
class RepType:
    """Multiplicity vector (m_0, ..., m_r) of a representation."""

    multiplicities: tuple[int, ...]


@dataclass
class IsotypicDecomposition:
    """Per-irreducible bases (row matrices) of the projector images."""

    components: list[np.ndarray]

    def dims(self) -> tuple[int, ...]:
        return tuple(int(c.shape[0]) for c in self.components)


@dataclass
class MultiplicitySpace:
    """Basis of the intertwiners from an irreducible model into a rep.

    Each basis element T has shape (dim E, dim V) and satisfies
    rho_E(g) T = T rho_V(g) for every g.
    """

    irrep_index: int
    basis: list[np.ndarray]

    @property
    def dim(self) -> int:
        return len(self.basis)


# -- constructors ---------------------------------------------------------------


def trivial_rep(group: Group, p: int, dim: int = 1) -> MatrixRep:
    mats = np.broadcast_to(linalg.identity(dim), (group.order, dim, dim)).copy()
    return MatrixRep(group, p, mats, validate=False)


def regular_rep(group: Group, p: int) -> MatrixRep:
    """Left-translation action on the group algebra basis."""
    n = group.order
    mats = np.zeros((n, n, n), dtype=np.int64)
    cols = np.arange(n)
    for g in range(n):
        mats[g, group.mult[g, cols], cols] = 1
    return MatrixRep(group, p, mats)


def permutation_rep(group: Group, p: int, action=None) -> MatrixRep:
    """Permutation matrices of an action on points (defaults to the
    defining permutation realization of the group)."""
    perms = list(action) if action is not None else [group.elements[g] for g in range(group.order)]
    deg = perms[0].degree
    mats = np.zeros((group.order, deg, deg), dtype=np.int64)
    cols = np.arange(deg)
    for g in range(group.order):
        mats[g, np.array(perms[g].images), cols] = 1
    return MatrixRep(group, p, mats)


def rep_from_matrices(group: Group, p: int, gen_mats, dim: int = 1) -> MatrixRep:
    """Extend generator matrices along the breadth-first words.

    Every element's matrix is the word product of generator matrices; the
    extension must be single-valued on every generator edge of the Cayley
    graph, otherwise the assignment is not a homomorphism.  `dim` is only
    consulted for the generator-free trivial group.
    """
    gen_mats = [np.asarray(m, dtype=np.int64) % p for m in gen_mats]
    if len(gen_mats) != len(group.generators):
        raise NotAHomomorphism(
            f"expected {len(group.generators)} generator matrices, got {len(gen_mats)}"
        )
    if gen_mats:
        dim = gen_mats[0].shape[0]
        for m in gen_mats:
            if m.shape != (dim, dim):
                raise NotAHomomorphism("generator matrices must be square of equal size")
            try:
                linalg.inverse(m, p)
            except SingularMatrix:
                raise SingularMatrix("generator matrix is singular mod p") from None
    mats = np.zeros((group.order, dim, dim), dtype=np.int64)
    mats[0] = linalg.identity(dim)
    for k in range(1, group.order):
        parent, gen_pos = group.words[k]
        mats[k] = mats[parent] @ gen_mats[gen_pos] % p
    for h in range(group.order):
        for gen_pos, g in enumerate(group.generator_indices):
            k = int(group.mult[h, g])
            if not np.array_equal(mats[h] @ gen_mats[gen_pos] % p, mats[k]):
                raise NotAHomomorphism(
                    f"words disagree at element {k}",
                    word=group.word_string(h) + f".g{gen_pos}",
                )
    return MatrixRep(group, p, mats)


def direct_sum_rep(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    if a.group is not b.group or a.p != b.p:
        raise ValueError("direct sum requires a common group and modulus")
    n = a.group.order
    d = a.dim + b.dim
    mats = np.zeros((n, d, d), dtype=np.int64)
    mats[:, : a.dim, : a.dim] = a.mats
    mats[:, a.dim :, a.dim :] = b.mats
    return MatrixRep(a.group, a.p, mats, validate=False)


def conjugate_rep(rep: MatrixRep, s: np.ndarray) -> MatrixRep:
    """Change of basis rho'(g) = S rho(g) S^-1."""
    s = linalg.asmat(s, rep.p)
    s_inv = linalg.inverse(s, rep.p)
    mats = np.einsum("ij,bjk,kl->bil", s, rep.mats, s_inv) % rep.p
    return MatrixRep(rep.group, rep.p, mats, validate=False)


# -- characters and projectors ---------------------------------------------------


def character_of(rep: MatrixRep, classes: ConjugacyClasses) -> tuple[int, ...]:
    return tuple(int(np.trace(rep.mats[r]) % rep.p) for r in classes.reps)


def isotypic_projector(rep: MatrixRep, i: int, table: CharacterTable) -> np.ndarray:
    """Central projector deg_i/|G| * sum_g chi_i(g^-1) rho(g)."""
    group, classes, p = table.group, table.classes, table.p
    coef = np.array(
        [table.values[i][classes.class_of[group.inv[g]]] for g in range(group.order)],
        dtype=np.int64,
    )
    c = table.degrees[i] * inv_mod(group.order % p, p) % p
    acc = np.einsum("g,gij->ij", coef, rep.mats) % p
    return acc * c % p


def decompose(rep: MatrixRep, table: CharacterTable) -> tuple[IsotypicDecomposition, RepType]:
    """Isotypic decomposition plus the multiplicity vector.

    Multiplicities are true integers rank(P_i)/deg_i; each one is cross-
    checked against the character inner product, which lives mod p, so the
    two methods must agree as residues.
    """
    group, classes, p = table.group, table.classes, table.p
    chi = character_of(rep, classes)
    components = []
    mults = []
    total = 0
    for i in range(table.num_irreps):
        proj = isotypic_projector(rep, i, table)
        basis = linalg.row_space(proj.T, p)
        r = basis.shape[0]
        if r % table.degrees[i] != 0:
            raise InconsistentMultiplicity(
                f"projector rank {r} is not a multiple of degree {table.degrees[i]}"
            )
        m = r // table.degrees[i]
        char_m = inner_mult(chi, table.values[i], group, classes, p)
        if m % p != char_m:
            raise InconsistentMultiplicity(
                f"projector multiplicity {m} != character multiplicity {char_m} (mod {p})"
            )
        components.append(basis)
        mults.append(m)
        total += r
    if total != rep.dim:
        raise InconsistentMultiplicity("component dimensions do not fill the representation")
    return IsotypicDecomposition(components), RepType(tuple(mults))


def restrict_to_subspace(rep: MatrixRep, basis: np.ndarray) -> MatrixRep:
    """Action matrices on an invariant row-subspace, in basis coordinates."""
    p = rep.p
    mats = []
    for g in range(rep.group.order):
        images = basis @ rep.mats[g].T % p
        coords = linalg.coords_in_rowspace(basis, images, p)
        mats.append(coords.T % p)
    return MatrixRep(rep.group, p, np.stack(mats), validate=False)


# -- hom spaces -------------------------------------------------------------------


def _intertwiner_system(r1: MatrixRep, r2: MatrixRep) -> np.ndarray:
    """Linear system whose null space is {T : T rho1(g) = rho2(g) T}.

    T has shape (dim2, dim1) and is flattened row-major; one block of
    equations per generator suffices.
    """
    p = r1.p
    d1, d2 = r1.dim, r2.dim
    blocks = []
    for g_pos, g in enumerate(r1.group.generator_indices):
        a = np.kron(linalg.identity(d2), r1.mats[g].T)
        b = np.kron(r2.mats[g], linalg.identity(d1))
        blocks.append((a - b) % p)
    if not blocks:
        return np.zeros((0, d1 * d2), dtype=np.int64)
    return np.concatenate(blocks, axis=0)


def intertwiner_basis(r1: MatrixRep, r2: MatrixRep) -> list[np.ndarray]:
    """Deterministic basis of Hom_G(r1, r2) as (dim2 x dim1) matrices."""
    null = linalg.nullspace(_intertwiner_system(r1, r2), r1.p)
    return [row.reshape(r2.dim, r1.dim) for row in null]


def hom_dim(r1: MatrixRep, r2: MatrixRep, table: CharacterTable) -> int:
    """Dimension of the intertwiner space, computed two independent ways.

    The null-space count is the returned integer; the character inner
    product <chi_1^dual * chi_2, 1> must match it mod p.
    """
    group, classes, p = table.group, table.classes, table.p
    nullity = len(intertwiner_basis(r1, r2))
    chi = char_tensor(
        char_dual(character_of(r1, classes), classes), character_of(r2, classes), p
    )
    char_val = inner_mult(chi, char_trivial(table), group, classes, p)
    if nullity % p != char_val:
        raise MethodMismatch(
            f"nullity {nullity} and character value {char_val} disagree mod {p}"
        )
    return nullity


# -- functorial constructions -----------------------------------------------------


def dual_rep(rep: MatrixRep) -> MatrixRep:
    """Contragredient action rho(g^-1)^T on the dual basis."""
    mats = rep.mats[list(rep.group.inv)].transpose(0, 2, 1) % rep.p
    return MatrixRep(rep.group, rep.p, mats, validate=False)


def tensor_rep(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    """Tensor product on the lexicographic basis e_i (x) f_j."""
    if a.group is not b.group or a.p != b.p:
        raise ValueError("tensor requires a common group and modulus")
    mats = np.stack(
        [np.kron(a.mats[g], b.mats[g]) % a.p for g in range(a.group.order)]
    )
    return MatrixRep(a.group, a.p, mats, validate=False)


def _multisets(dim: int, k: int):
    from itertools import combinations_with_replacement

    return list(combinations_with_replacement(range(dim), k))


def sym_power_rep(rep: MatrixRep, k: int) -> MatrixRep:
    """Symmetric power on the lexicographic multiset basis.

    Columns expand the product of the images of the basis vectors in the
    polynomial model of the symmetric algebra.
    """
    if k < 0:
        raise ValueError("power must be nonnegative")
    p = rep.p
    basis = _multisets(rep.dim, k)
    index = {m: i for i, m in enumerate(basis)}
    out = np.zeros((rep.group.order, len(basis), len(basis)), dtype=np.int64)
    for g in range(rep.group.order):
        mat = rep.mats[g]
        for col, mset in enumerate(basis):
            terms = {(): 1}
            for j in mset:
                new: dict = {}
                for key, val in terms.items():
                    for i in range(rep.dim):
                        c = mat[i, j]
                        if c:
                            nk = tuple(sorted(key + (i,)))
                            new[nk] = (new.get(nk, 0) + val * c) % p
                terms = new
            for key, val in terms.items():
                out[g, index[key], col] = val
    return MatrixRep(rep.group, p, out, validate=False)


def ext_power_rep(rep: MatrixRep, k: int) -> MatrixRep:
    """Exterior power: the k-th compound matrix on lexicographic subsets."""
    from itertools import combinations

    if not 0 <= k <= rep.dim:
        raise ValueError("power must satisfy 0 <= k <= dim")
    p = rep.p
    subsets = list(combinations(range(rep.dim), k))
    out = np.zeros((rep.group.order, len(subsets), len(subsets)), dtype=np.int64)
    for g in range(rep.group.order):
        mat = rep.mats[g]
        for a, rows in enumerate(subsets):
            for b, cols in enumerate(subsets):
                minor = mat[np.ix_(rows, cols)]
                out[g, a, b] = _det_small(minor, p)
    return MatrixRep(rep.group, p, out, validate=False)


def _det_small(m: np.ndarray, p: int) -> int:
    n = m.shape[0]
    if n == 0:
        return 1
    m = m.copy() % p
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r, col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            m[[col, piv]] = m[[piv, col]]
            det = -det
        det = det * int(m[col, col]) % p
        inv = inv_mod(int(m[col, col]), p)
        for r in range(col + 1, n):
            if m[r, col]:
                m[r] = (m[r] - m[r, col] * inv * m[col]) % p
    return det % p


# -- invariants and the evaluation map ---------------------------------------------


def subgroup_invariants(rep: MatrixRep, h: Subgroup, table: CharacterTable) -> np.ndarray:
    """Basis of the H-fixed subspace via the averaging projector.

    The dimension is cross-checked against the character-side count
    sum_i m_i * dim V_i^H; a mismatch indicts the implementation.
    """
    from .characters import restrict_invariant_dim

    p = rep.p
    acc = np.zeros((rep.dim, rep.dim), dtype=np.int64)
    for x in h.element_indices:
        acc = (acc + rep.mats[x]) % p
    proj = acc * inv_mod(h.order % p, p) % p
    basis = linalg.row_space(proj.T, p)
    _, rtype = decompose(rep, table)
    expected = sum(
        m * restrict_invariant_dim(table.values[i], h, table.group, table.classes, p)
        for i, m in enumerate(rtype.multiplicities)
    )
    if basis.shape[0] != expected:
        raise DimensionMismatch(
            f"fixed subspace has dim {basis.shape[0]}, character predicts {expected}"
        )
    return basis


def multiplicity_space(rep: MatrixRep, i: int, model: MatrixRep) -> MultiplicitySpace:
    """Intertwiners from the irreducible model i into rep."""
    return MultiplicitySpace(i, intertwiner_basis(model, rep))


def evaluation_iso_check(
    rep: MatrixRep, i: int, table: CharacterTable, model: MatrixRep
) -> tuple[bool, np.ndarray]:
    """Assemble V_i (x) Hom_G(V_i, rep) -> rep and certify it.

    The map v (x) T -> T v must be injective with image exactly the i-th
    isotypic component; both failures are impossible for valid inputs and
    raise.
    """
    if hom_dim(model, model, table) != 1:
        raise WrongImage("the supplied model is not irreducible (endomorphisms != scalars)")
    p = rep.p
    space = multiplicity_space(rep, i, model)
    m = space.dim
    n_i = model.dim
    assembled = np.zeros((rep.dim, n_i * m), dtype=np.int64)
    for a in range(n_i):
        for s, t_mat in enumerate(space.basis):
            assembled[:, a * m + s] = t_mat[:, a]
    if linalg.rank(assembled, p) != n_i * m:
        raise NotInjective(f"evaluation map for irreducible {i} has a kernel")
    component = linalg.row_space(isotypic_projector(rep, i, table).T, p)
    image = linalg.row_space(assembled.T, p)
    if image.shape != component.shape or not np.array_equal(image, component):
        raise WrongImage(f"evaluation image differs from isotypic component {i}")
    return True, assembled


# -- irreducible models --------------------------------------------------------------


def irreducible_models(group: Group, table: CharacterTable) -> list[MatrixRep]:
    """One explicit matrix model per irreducible character.

    Each model is cut out of the regular representation: the isotypic
    component is shrunk to a single copy by intersecting with eigenspaces
    of commutant elements (found by linear solve), scanning a
    deterministic, seeded candidate sequence.
    """
    p = table.p
    reg = regular_rep(group, p)
    decomp, _ = decompose(reg, table)
    models = []
    for i in range(table.num_irreps):
        n_i = table.degrees[i]
        basis = decomp.components[i]
        while basis.shape[0] > n_i:
            basis = _shrink_once(reg, basis, p)
        model = restrict_to_subspace(reg, basis)
        model._validate()
        models.append(model)
    return models


def _shrink_once(rep: MatrixRep, basis: np.ndarray, p: int) -> np.ndarray:
    """Replace an invariant subspace by a proper invariant subspace.

    Candidates are commutant elements of the restricted action; a proper
    eigenspace of any of them is again invariant.  The commutant is a full
    matrix algebra, so splittable candidates are plentiful; the seeded
    scan is deterministic.
    """
    sub = restrict_to_subspace(rep, basis)
    comm = intertwiner_basis(sub, sub)
    m = basis.shape[0]
    rng = random.Random(0)

    def candidates():
        for t in comm:
            yield t
        while True:
            coeffs = [rng.randrange(p) for _ in comm]
            yield sum((c * t for c, t in zip(coeffs, comm)), np.zeros((m, m), dtype=np.int64)) % p

    for tries, t_mat in enumerate(candidates()):
        if tries > 500:
            break
        for lam in range(p):
            null = linalg.nullspace((t_mat - lam * np.eye(m, dtype=np.int64)) % p, p)
            if 0 < null.shape[0] < m:
                return null @ basis % p
    raise SplitFailure("could not split the isotypic component to a single copy")
