"""Desk-scale cyclotomic Hecke algebra workbench over Q(zeta_e).

The algebra on generators T_0..T_{n-1} is realized through its left regular
representation.  Products against a normal-form coordinate space (exponent
vectors of the commuting Jucys-Murphy elements times symmetric-group words)
provide the ambient coordinates; a spanning-set saturation from the identity
word then certifies the construction: the closure must reach dimension
l^n * n! exactly, and every defining relation must vanish as a matrix.
Nothing is trusted to the straightening rules alone.

Derived product rules, writing x = J_{i-1}, y = J_i, T = T_i:
    T x^a y^b = x^b y^a T - (q-1) * sum_{k=1..a-b} x^(a-k) y^(b+k)   (a >= b)
    T x^a y^b = x^b y^a T + (q-1) * sum_{k=1..b-a} x^(b-k) y^(a+k)   (a < b)
T_i commutes with every other J, and T_0 = J_0 commutes with all of them;
J_0^l reduces through the cyclotomic relation.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import _linalg
from ._rat import RAT
from .cyclotomic import Cyc, mat_mul_cyc, matrix_rank_cyc
from .multipartition import (
    Multicharge,
    Multipartition,
    boxes,
    enumerate_multipartitions,
    residue,
)
from .structure_analysis import AxiomReport

DEFAULT_DIM_BOUND = 200

Matrix = list  # list[list[Cyc]]


@dataclass(frozen=True)
class HeckeParams:
    """Rational reflection parameters and their root-of-unity exponentials."""

    h: Fraction
    h_list: tuple[Fraction, ...]
    q: Cyc
    q_list: tuple[Cyc, ...]


def params_from_charge(charge: Multicharge) -> HeckeParams:
    e, s, l = charge.e, charge.s, charge.level
    return HeckeParams(
        h=Fraction(-1, e),
        h_list=tuple(
            Fraction(s[p + 1] - s[p], e) - Fraction(1, l) for p in range(l - 1)
        ),
        q=Cyc.zeta(e),
        q_list=tuple(Cyc.zeta(e, sp) for sp in s),
    )


def _identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _swap_values(w: tuple[int, ...], a: int) -> tuple[int, ...]:
    # left multiplication by the simple reflection exchanging values a, a+1
    return tuple(a + 1 if x == a else a if x == a + 1 else x for x in w)


class _Engine:
    """Structure constants for left multiplication by generators."""

    def __init__(self, l: int, n: int, charge: Multicharge):
        self.l = l
        self.n = n
        self.e = charge.e
        params = params_from_charge(charge)
        self.params = params
        self.q = params.q
        self.qm1 = params.q - 1
        # signed elementary symmetric functions of q_1..q_l for J_0^l
        sigma = [Cyc.one(charge.e)]
        for qp in params.q_list:
            sigma.append(Cyc.zero(charge.e))
            for k in range(len(sigma) - 1, 0, -1):
                sigma[k] = sigma[k] + sigma[k - 1] * qp
        self.sigma = sigma  # sigma[k] = e_k(q_1..q_l)

    def identity_element(self) -> dict:
        return {((0,) * self.n, _identity_perm(self.n)): Cyc.one(self.e)}

    def mult_gen(self, g: int, element: dict) -> dict:
        out: dict = {}

        def emit(label, coeff):
            if not coeff:
                return
            acc = out.get(label)
            total = coeff if acc is None else acc + coeff
            if total:
                out[label] = total
            elif acc is not None:
                del out[label]

        for (exps, w), c in element.items():
            if g == 0:
                a0 = exps[0] + 1
                if a0 < self.l:
                    emit(((a0,) + exps[1:], w), c)
                else:
                    for k in range(1, self.l + 1):
                        sign = 1 if k % 2 == 1 else -1
                        emit(
                            ((self.l - k,) + exps[1:], w),
                            c * self.sigma[k] * sign,
                        )
                continue

            a, b = exps[g - 1], exps[g]
            swapped = list(exps)
            swapped[g - 1], swapped[g] = b, a
            swapped = tuple(swapped)
            # main term: the generator passes the J-monomial and hits T_w
            value = g - 1  # reflection exchanges values g-1, g
            if w.index(value) < w.index(value + 1):
                emit((swapped, _swap_values(w, value)), c)
            else:
                emit((swapped, w), c * self.qm1)
                emit((swapped, _swap_values(w, value)), c * self.q)
            # spawned terms keep the word and redistribute the exponent pair
            if a > b:
                for k in range(1, a - b + 1):
                    spawned = list(exps)
                    spawned[g - 1], spawned[g] = a - k, b + k
                    emit((tuple(spawned), w), -(c * self.qm1))
            elif a < b:
                for k in range(1, b - a + 1):
                    spawned = list(exps)
                    spawned[g - 1], spawned[g] = b - k, a + k
                    emit((tuple(spawned), w), c * self.qm1)
        return out


def _all_labels(l: int, n: int) -> list:
    exps: list[tuple[int, ...]] = [()]
    for _ in range(n):
        exps = [t + (v,) for t in exps for v in range(l)]
    perms = _permutations_sorted(n)
    return sorted((a, w) for a in exps for w in perms)


def _permutations_sorted(n: int) -> list[tuple[int, ...]]:
    from itertools import permutations

    return sorted(permutations(range(n)))


@dataclass
class FinDimAlgebraRep:
    """Generator matrices of the left regular representation."""

    l: int
    n: int
    charge: Multicharge
    params: HeckeParams
    dimension: int
    words: tuple[tuple[int, ...], ...]
    gens: list  # list of dimension x dimension matrices over Cyc
    _jm_cache: list | None = field(default=None, repr=False, compare=False)
    _sym_cache: list | None = field(default=None, repr=False, compare=False)

    def word_labels(self) -> list[str]:
        return [
            "Id" if not w else "*".join(f"T{g}" for g in w) for w in self.words
        ]

    def zero(self) -> Cyc:
        return Cyc.zero(self.charge.e)

    def one(self) -> Cyc:
        return Cyc.one(self.charge.e)

    def identity_matrix(self) -> Matrix:
        return _linalg.mat_identity(self.dimension, self.zero(), self.one())

    def to_json(self) -> dict:
        return {
            "e": self.charge.e,
            "s": list(self.charge.s),
            "l": self.l,
            "n": self.n,
            "dimension": self.dimension,
            "words": self.word_labels(),
            "generators": [
                [[entry.to_json() for entry in row] for row in mat]
                for mat in self.gens
            ],
        }


def build_algebra(
    l: int, n: int, charge: Multicharge, max_dim: int | None = None
) -> FinDimAlgebraRep:
    """Saturate words from the identity into a certified regular representation.

    Left-multiplies known basis words by generators breadth-first, reduces
    each product against the current row space by exact elimination, and
    stops at closure.  The closure dimension must equal l^n * n!; any other
    outcome signals an inconsistency and raises.
    """
    if l != charge.level:
        raise ValueError(f"level mismatch: l={l} but charge has {charge.level}")
    if n < 1:
        raise ValueError("n must be at least 1")
    target = l**n * factorial(n)
    if max_dim is None:
        max_dim = int(os.environ.get("FOCK_MAX_DIM", DEFAULT_DIM_BOUND))
    if target > max_dim:
        raise ValueError(
            f"dimension overflow: l^n*n! = {target} exceeds bound {max_dim}"
        )

    engine = _Engine(l, n, charge)
    labels = _all_labels(l, n)
    index = {lab: k for k, lab in enumerate(labels)}
    zero, one = Cyc.zero(charge.e), Cyc.one(charge.e)

    def dense(element: dict) -> list:
        vec = [zero] * len(labels)
        for lab, c in element.items():
            vec[index[lab]] = c
        return vec

    tracker = _linalg.SpanTracker(len(labels), zero, one)
    basis_words: list[tuple[int, ...]] = []
    basis_elements: list[dict] = []
    queue: deque = deque([((), engine.identity_element())])
    while queue:
        word, element = queue.popleft()
        if not tracker.insert(dense(element)):
            continue
        basis_words.append(word)
        basis_elements.append(element)
        for g in range(n):
            queue.append(((g,) + word, engine.mult_gen(g, element)))

    if tracker.dim != target:
        raise RuntimeError(
            f"closure dimension {tracker.dim} != l^n*n! = {target}; "
            "generator rules and presentation are inconsistent"
        )

    gens = []
    for g in range(n):
        mat = [[zero] * target for _ in range(target)]
        for k, element in enumerate(basis_elements):
            coords = tracker.express(dense(engine.mult_gen(g, element)))
            if coords is None:
                raise RuntimeError("product escaped the saturated span")
            for r in range(target):
                mat[r][k] = coords[r]
        gens.append(mat)

    return FinDimAlgebraRep(
        l=l,
        n=n,
        charge=charge,
        params=params_from_charge(charge),
        dimension=target,
        words=tuple(basis_words),
        gens=gens,
    )


def _nonzero_witness(name: str, mat: Matrix) -> list[dict]:
    for r, row in enumerate(mat):
        for c, entry in enumerate(row):
            if entry:
                return [{"relation": name, "row": r, "col": c,
                         "entry": str(entry)}]
    return []


def check_relations(rep: FinDimAlgebraRep) -> list[AxiomReport]:
    """Evaluate every defining relation as a matrix identity."""
    ident = rep.identity_matrix()
    gens = rep.gens
    q = rep.params.q
    witnesses: list[dict] = []

    acc = ident
    for qp in rep.params.q_list:
        acc = mat_mul_cyc(acc, _linalg.mat_sub(gens[0], _scale_id(rep, qp)))
    witnesses += _nonzero_witness("cyclotomic_T0", acc)

    for i in range(1, rep.n):
        prod = mat_mul_cyc(
            _linalg.mat_sub(gens[i], _scale_id(rep, -rep.one())),
            _linalg.mat_sub(gens[i], _scale_id(rep, q)),
        )
        witnesses += _nonzero_witness(f"quadratic_T{i}", prod)

    if rep.n >= 2:
        lhs = _chain(rep, [0, 1, 0, 1])
        rhs = _chain(rep, [1, 0, 1, 0])
        witnesses += _nonzero_witness("braid_T0T1", _linalg.mat_sub(lhs, rhs))

    for i in range(1, rep.n - 1):
        lhs = _chain(rep, [i, i + 1, i])
        rhs = _chain(rep, [i + 1, i, i + 1])
        witnesses += _nonzero_witness(
            f"braid_T{i}T{i + 1}", _linalg.mat_sub(lhs, rhs)
        )

    for i in range(rep.n):
        for j in range(i + 2, rep.n):
            lhs = mat_mul_cyc(gens[i], gens[j])
            rhs = mat_mul_cyc(gens[j], gens[i])
            witnesses += _nonzero_witness(
                f"commute_T{i}T{j}", _linalg.mat_sub(lhs, rhs)
            )

    return [AxiomReport("relations", tuple(witnesses))]


def _scale_id(rep: FinDimAlgebraRep, f: Cyc) -> Matrix:
    return _linalg.mat_scale(rep.identity_matrix(), f)


def _chain(rep: FinDimAlgebraRep, indices: list[int]) -> Matrix:
    out = rep.gens[indices[0]]
    for i in indices[1:]:
        out = mat_mul_cyc(out, rep.gens[i])
    return out


def jm_elements(rep: FinDimAlgebraRep) -> list[Matrix]:
    """J_0 = T_0 and J_i = q^{-1} T_i J_{i-1} T_i; all invertible."""
    if rep._jm_cache is not None:
        return rep._jm_cache
    qinv = rep.params.q.inverse()
    out = [rep.gens[0]]
    for i in range(1, rep.n):
        m = mat_mul_cyc(rep.gens[i], out[-1])
        m = mat_mul_cyc(m, rep.gens[i])
        out.append(_linalg.mat_scale(m, qinv))
    for i, m in enumerate(out):
        if matrix_rank_cyc(m, rep.dimension) != rep.dimension:
            raise RuntimeError(f"Jucys-Murphy element J_{i} is singular")
    rep._jm_cache = out
    return out


def symmetric_jm(rep: FinDimAlgebraRep, k: int) -> Matrix:
    """k-th elementary symmetric polynomial of the Jucys-Murphy matrices."""
    if not 0 <= k <= rep.n:
        raise ValueError(f"k={k} out of 0..{rep.n}")
    if rep._sym_cache is None:
        rep._sym_cache = _elementary_symmetric_matrices(rep, jm_elements(rep))
    return rep._sym_cache[k]


def _elementary_symmetric_matrices(
    rep: FinDimAlgebraRep, mats: list[Matrix]
) -> list[Matrix]:
    zero = rep.zero()
    zero_mat = [[zero] * rep.dimension for _ in range(rep.dimension)]
    table = [rep.identity_matrix()] + [zero_mat] * len(mats)
    for m in mats:
        new = [table[0]]
        for k in range(1, len(table)):
            new.append(
                _matrix_add(table[k], mat_mul_cyc(table[k - 1], m))
            )
        table = new
    return table


def _matrix_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


@dataclass(frozen=True)
class CentralCharacter:
    """Elementary symmetric values of the residue exponentials of a shape.

    Determined by the residue multiset: two shapes share a character exactly
    when their box residues agree with multiplicity.
    """

    e: int
    values: tuple[Cyc, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def poly_string(self) -> str:
        terms = [f"z^{self.n}" if self.n > 1 else "z"]
        for k, v in enumerate(self.values, start=1):
            if not v:
                continue
            sign = -v if k % 2 == 1 else v
            power = self.n - k
            mono = "" if power == 0 else ("*z" if power == 1 else f"*z^{power}")
            terms.append(f"+ ({sign}){mono}")
        return " ".join(terms)

    def to_json(self) -> list[list[str]]:
        return [v.to_json() for v in self.values]


def a_poly(mp: Multipartition, charge: Multicharge) -> CentralCharacter:
    """Character of a shape: e_k of {zeta^res(v) : v a box}, k = 1..rank."""
    roots = [Cyc.zeta(charge.e, residue(box, charge)) for box in boxes(mp)]
    sym = [Cyc.one(charge.e)]
    for r in roots:
        sym.append(Cyc.zero(charge.e))
        for k in range(len(sym) - 1, 0, -1):
            sym[k] = sym[k] + sym[k - 1] * r
    return CentralCharacter(charge.e, tuple(sym[1:]))


@dataclass(frozen=True)
class AttainedCharacter:
    character: CentralCharacter
    dimension: int
    members: tuple[Multipartition, ...]


@dataclass(frozen=True)
class CharacterSpectrum:
    dimension: int
    attained: tuple[AttainedCharacter, ...]
    reports: tuple[AxiomReport, ...]


def _entry_blocks(entry: Cyc, e: int, d: int) -> list[tuple]:
    """Columns of the d x d rational matrix of multiplication by entry."""
    from .cyclotomic import _reduce

    cols = []
    for s in range(d):
        shifted = [0] * s + list(entry.coeffs)
        cols.append(_reduce(shifted, e, d))
    return cols


def _blow_matrix(m: Matrix, e: int) -> list:
    """Rational realification: every entry becomes its multiplication block.

    Ring homomorphism, so products, powers and kernel dimensions transfer;
    rational dimensions are exactly deg(Phi_e) times the cyclotomic ones.
    """
    d = Cyc.degree(e)
    if d == 1:
        return [[RAT(entry.coeffs[0]) for entry in row] for row in m]
    n = len(m)
    blocks = [[_entry_blocks(entry, e, d) for entry in row] for row in m]
    out = []
    for r in range(n):
        for rr in range(d):
            out.append(
                [blocks[r][c][s][rr] for c in range(len(m[r])) for s in range(d)]
            )
    return out


def _stabilized_power_rat(m: list, ncols: int) -> list:
    """First power of a rational matrix whose rank has stabilized."""
    zero = RAT(0)
    power = m
    rank = _linalg.matrix_rank(power, ncols)
    while True:
        nxt = _linalg.mat_mul(power, m, zero)
        nxt_rank = _linalg.matrix_rank(nxt, ncols)
        if nxt_rank == rank:
            return power
        power, rank = nxt, nxt_rank


def central_characters(
    rep: FinDimAlgebraRep, n: int, charge: Multicharge
) -> CharacterSpectrum:
    """Joint generalized eigenspaces of the symmetric Jucys-Murphy elements.

    Candidate characters are read off the rank-n shapes; for every distinct
    candidate the exact generalized-eigenspace dimension is computed (with
    the nilpotency exponent capped by the algebra dimension, reached through
    rank stabilization), and the spectrum is certified to carry total mass
    l^n * n! with nothing outside the candidate set.
    """
    if n != rep.n:
        raise ValueError(f"rep was built for n={rep.n}, asked for n={n}")
    dim = rep.dimension
    e = charge.e
    d = Cyc.degree(e)
    dim_r = dim * d
    zero, one = RAT(0), RAT(1)

    candidates: dict[CentralCharacter, list[Multipartition]] = {}
    for mp in enumerate_multipartitions(n, rep.l):
        candidates.setdefault(a_poly(mp, charge), []).append(mp)

    sym_r = [
        _blow_matrix(symmetric_jm(rep, k), e) for k in range(1, n + 1)
    ]
    scalar_blocks = {
        char: [
            _blow_matrix(_scale_id(rep, char.values[k]), e) for k in range(n)
        ]
        for char in candidates
    }

    attained = []
    total = 0
    for char, members in candidates.items():
        stacked: list = []
        for k in range(n):
            shifted = _linalg.mat_sub(sym_r[k], scalar_blocks[char][k])
            stacked.extend(_stabilized_power_rat(shifted, dim_r))
        nullity = dim_r - _linalg.matrix_rank(stacked, dim_r)
        assert nullity % d == 0
        d_chi = nullity // d
        total += d_chi
        if d_chi > 0:
            attained.append(AttainedCharacter(char, d_chi, tuple(members)))

    witnesses = []
    if total != dim:
        witnesses.append({"total_generalized_dim": total, "expected": dim})
    mass_report = AxiomReport("spectral_mass", tuple(witnesses))

    support_witnesses = []
    for k in range(n):
        prod = _linalg.mat_identity(dim_r, zero, one)
        for char in candidates:
            prod = _linalg.mat_mul(
                prod, _linalg.mat_sub(sym_r[k], scalar_blocks[char][k]), zero
            )
        power = prod
        while True:
            if _linalg.mat_is_zero(power):
                nilpotent = True
                break
            nxt = _linalg.mat_mul(power, prod, zero)
            # rank stalls strictly above zero only for non-nilpotent matrices
            if _linalg.matrix_rank(nxt, dim_r) == _linalg.matrix_rank(power, dim_r):
                nilpotent = False
                break
            power = nxt
        if not nilpotent:
            support_witnesses.append({"k": k + 1, "nilpotent": False})
    support_report = AxiomReport("spectral_support", tuple(support_witnesses))

    return CharacterSpectrum(
        dimension=dim,
        attained=tuple(attained),
        reports=(mass_report, support_report),
    )
