"""The twisted cochain complex of a Hom-pre-Lie algebra.

Degree-n cochains are pairs (phi, psi) with phi an n-linear and psi an
(n-1)-linear map into the representation space; the psi component is
absent in degree 1.  Four component differentials combine into the
total differential

    d(phi, psi) = (d_nu_nu(phi) - d_alpha_nu(psi),
                   d_nu_alpha(phi) - d_alpha_alpha(psi)),

and the complex squares to zero.  The source derivation of the two
less-standard components contains typographical slips at higher arity,
so this module carries a built-in self-test: :class:`ComplexAssembly`
refuses to hand out matrices unless consecutive assembled differentials
compose to zero, exactly, on the given algebra.

Two independent evaluation routes are provided on purpose:

* the ``d_*`` functions evaluate the defining formulas tuple by tuple
  (slow, transparent; the oracle), and
* ``component_matrix``/``assemble_differential`` build the same maps as
  sparse-assembled exact matrices via index bookkeeping (fast path).

Tests require the two routes to agree on random cochains.

Basis ordering is frozen: a degree-n cochain flattens as the phi block
followed by the psi block, each block ordered by input multi-index
(row-major, first slot most significant), then output index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactlin import Matrix, ZERO, rank, nullspace_basis
from .algebra import (HomPreLieAlgebra, MultiMap, Representation, Vec,
                      basis_vec, regular_representation, vadd, vec_is_zero,
                      vscale, vsub, vzero)

DEFAULT_DEGREE_CAP = 4


@dataclass(frozen=True)
class AlphaCochain:
    """Degree-n element (phi, psi); psi is None exactly in degree 1."""
    degree: int
    phi: MultiMap
    psi: Optional[MultiMap]

    def __post_init__(self):
        n = self.degree
        if n < 1:
            raise ValueError("degree must be >= 1")
        if self.phi.arity != n:
            raise ValueError(f"phi arity {self.phi.arity} != degree {n}")
        if n == 1:
            if self.psi is not None:
                raise ValueError("degree-1 cochains have no psi component")
        else:
            if self.psi is None or self.psi.arity != n - 1:
                raise ValueError("psi must have arity degree - 1")

    def is_zero(self) -> bool:
        return self.phi.is_zero() and (self.psi is None or self.psi.is_zero())

    def add(self, other: "AlphaCochain") -> "AlphaCochain":
        psi = None if self.psi is None else self.psi.add(other.psi)
        return AlphaCochain(self.degree, self.phi.add(other.phi), psi)

    def sub(self, other: "AlphaCochain") -> "AlphaCochain":
        psi = None if self.psi is None else self.psi.sub(other.psi)
        return AlphaCochain(self.degree, self.phi.sub(other.phi), psi)

    def scale(self, c: Fraction) -> "AlphaCochain":
        psi = None if self.psi is None else self.psi.scale(c)
        return AlphaCochain(self.degree, self.phi.scale(c), psi)

    def to_vec(self) -> list[Fraction]:
        out = self.phi.to_vec()
        if self.psi is not None:
            out.extend(self.psi.to_vec())
        return out

    @staticmethod
    def zero(d: int, e: int, degree: int) -> "AlphaCochain":
        phi = MultiMap.zero((d,) * degree, e)
        psi = None if degree == 1 else MultiMap.zero((d,) * (degree - 1), e)
        return AlphaCochain(degree, phi, psi)

    @staticmethod
    def from_vec(d: int, e: int, degree: int, vec: Sequence[Fraction]) -> "AlphaCochain":
        phi_len = d ** degree * e
        phi = MultiMap.from_vec((d,) * degree, e, vec[:phi_len])
        if degree == 1:
            if len(vec) != phi_len:
                raise ValueError("vector length mismatch")
            return AlphaCochain(1, phi, None)
        psi = MultiMap.from_vec((d,) * (degree - 1), e, vec[phi_len:])
        return AlphaCochain(degree, phi, psi)


def cochain_space_dim(d: int, e: int, degree: int) -> int:
    base = d ** degree * e
    return base if degree == 1 else base + d ** (degree - 1) * e


# ---------------------------------------------------------------------------
# naive evaluators (the defining formulas, used as the oracle)
# ---------------------------------------------------------------------------

def _alpha_pow_cols(algebra: HomPreLieAlgebra, k: int) -> list[Vec]:
    m = algebra.alpha_power(k)
    return [m.column(j) for j in range(algebra.dim)]


def d_nu_nu(algebra: HomPreLieAlgebra, rep: Representation, phi: MultiMap) -> MultiMap:
    """phi of arity n >= 1 to arity n + 1."""
    n = phi.arity
    if n < 1:
        raise ValueError("d_nu_nu needs arity >= 1")
    d, e = algebra.dim, rep.space_dim
    if phi.domain_dims != (d,) * n or phi.codomain_dim != e:
        raise ValueError("phi must map A^n to V")
    ap = _alpha_pow_cols(algebra, n - 1)
    a1 = _alpha_pow_cols(algebra, 1)
    basis = [basis_vec(d, i) for i in range(d)]

    def value(T):
        args = [basis[t] for t in T]
        acc = vzero(e)
        for i in range(1, n + 1):
            sign = Fraction(-1) ** (i + 1)
            rest = args[:i - 1] + args[i:]
            acc = vadd(acc, vscale(sign, rep.rho.apply([ap[T[i - 1]], phi.apply(rest)])))
            rest = args[:i - 1] + args[i:n] + [args[i - 1]]
            acc = vadd(acc, vscale(sign, rep.mu.apply([ap[T[n]], phi.apply(rest)])))
            rest = [a1[t] for t in T[:i - 1] + T[i:n]] + [algebra.product(args[i - 1], args[n])]
            acc = vadd(acc, vscale(-sign, phi.apply(rest)))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                sign = Fraction(-1) ** (i + j)
                rest = [algebra.bracket(args[i - 1], args[j - 1])] + \
                    [a1[T[k]] for k in range(n + 1) if k != i - 1 and k != j - 1]
                acc = vadd(acc, vscale(sign, phi.apply(rest)))
        return acc

    return MultiMap.from_function((d,) * (n + 1), e, value)


def d_alpha_alpha(algebra: HomPreLieAlgebra, rep: Representation, psi: MultiMap) -> MultiMap:
    """psi of arity m >= 1 to arity m + 1.

    Same shape as d_nu_nu on arity m, except the rho/mu twists carry one
    more power of alpha (alpha^m instead of alpha^(m-1)); that power
    bump is what makes the square-zero identities close.  The printed
    source formula also over-runs its first sum by one term, which
    already breaks the complex in degree 2; the corrected range is used
    here and the ComplexAssembly gate holds by construction.
    """
    m = psi.arity
    if m < 1:
        raise ValueError("d_alpha_alpha needs arity >= 1")
    d, e = algebra.dim, rep.space_dim
    if psi.domain_dims != (d,) * m or psi.codomain_dim != e:
        raise ValueError("psi must map A^(n-1) to V")
    ap = _alpha_pow_cols(algebra, m)
    a1 = _alpha_pow_cols(algebra, 1)
    basis = [basis_vec(d, i) for i in range(d)]

    def value(T):
        args = [basis[t] for t in T]
        acc = vzero(e)
        for i in range(1, m + 1):
            sign = Fraction(-1) ** (i + 1)
            rest = args[:i - 1] + args[i:]
            acc = vadd(acc, vscale(sign, rep.rho.apply([ap[T[i - 1]], psi.apply(rest)])))
            rest = args[:i - 1] + args[i:m] + [args[i - 1]]
            acc = vadd(acc, vscale(sign, rep.mu.apply([ap[T[m]], psi.apply(rest)])))
            rest = [a1[t] for t in T[:i - 1] + T[i:m]] + [algebra.product(args[i - 1], args[m])]
            acc = vadd(acc, vscale(-sign, psi.apply(rest)))
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                sign = Fraction(-1) ** (i + j)
                rest = [algebra.bracket(args[i - 1], args[j - 1])] + \
                    [a1[T[k]] for k in range(m + 1) if k != i - 1 and k != j - 1]
                acc = vadd(acc, vscale(sign, psi.apply(rest)))
        return acc

    return MultiMap.from_function((d,) * (m + 1), e, value)


def d_nu_alpha(algebra: HomPreLieAlgebra, rep: Representation, phi: MultiMap) -> MultiMap:
    """beta . phi - phi . alpha^(x)n, arity preserved."""
    n = phi.arity
    if n < 1:
        raise ValueError("d_nu_alpha needs arity >= 1")
    d, e = algebra.dim, rep.space_dim
    a1 = _alpha_pow_cols(algebra, 1)
    basis = [basis_vec(d, i) for i in range(d)]

    def value(T):
        lhs = rep.beta.apply([phi.apply([basis[t] for t in T])])
        rhs = phi.apply([a1[t] for t in T])
        return vsub(lhs, rhs)

    return MultiMap.from_function((d,) * n, e, value)


def _append_shuffles(m: int):
    """Signed arrangements (sign, order) with one of m slots moved to the
    end and the rest kept in place: order t = (0..t-1 skipped..m-1, t),
    sign (-1)^(m-1-t).  The same omit-and-append pattern as the mu term
    of the main differential; trivial for m = 1."""
    for t in range(m):
        order = tuple(u for u in range(m) if u != t) + (t,)
        yield (Fraction(-1) ** (m - 1 - t), order)


def d_alpha_nu(algebra: HomPreLieAlgebra, rep: Representation, psi: MultiMap) -> MultiMap:
    """psi of arity m >= 1 to arity m + 2.

    mu part: the product operand pairs each position k with the last
    argument (sign (-1)^(N-k)), and the cochain runs over the signed
    append shuffles of the remaining arguments; rho part: bracket over
    interior pairs exactly as in the source; twist alpha^(m-1)
    throughout.  For m = 1 the shuffle sum is a single term and this is
    verbatim the printed formula (the only arity the source displays);
    the shuffle sum at higher arity is what closes the square-zero
    identities, which the ComplexAssembly gate re-checks per algebra.
    """
    m = psi.arity
    if m < 1:
        raise ValueError("d_alpha_nu needs arity >= 1")
    d, e = algebra.dim, rep.space_dim
    N = m + 2
    ap = _alpha_pow_cols(algebra, m - 1)
    basis = [basis_vec(d, i) for i in range(d)]
    shuffles = list(_append_shuffles(m))

    def value(T):
        args = [basis[t] for t in T]
        acc = vzero(e)
        for k in range(1, N):
            sign0 = Fraction(-1) ** (N - k)
            spect = [args[t] for t in range(N - 1) if t != k - 1]
            operand = algebra.alpha_power(m - 1).apply(algebra.product(args[k - 1], args[N - 1]))
            for sgn, order in shuffles:
                val = psi.apply([spect[p] for p in order])
                if not vec_is_zero(val):
                    acc = vadd(acc, vscale(sign0 * sgn, rep.mu.apply([operand, val])))
        for i in range(1, N):
            for j in range(i + 1, N):
                sign = Fraction(-1) ** (i + j)
                rest = [args[t] for t in range(N) if t != i - 1 and t != j - 1]
                val = psi.apply(rest)
                if vec_is_zero(val):
                    continue
                br = algebra.bracket(ap[T[i - 1]], ap[T[j - 1]])
                acc = vadd(acc, vscale(-sign, rep.rho.apply([br, val])))
        return acc

    return MultiMap.from_function((d,) * N, e, value)


def d_total(algebra: HomPreLieAlgebra, rep: Representation, c: AlphaCochain) -> AlphaCochain:
    """Total differential: degree n to degree n + 1."""
    n = c.degree
    phi_part = d_nu_nu(algebra, rep, c.phi)
    psi_part = d_nu_alpha(algebra, rep, c.phi)
    if c.psi is not None:
        phi_part = phi_part.sub(d_alpha_nu(algebra, rep, c.psi))
        psi_part = psi_part.sub(d_alpha_alpha(algebra, rep, c.psi))
    return AlphaCochain(n + 1, phi_part, psi_part)


# ---------------------------------------------------------------------------
# fast matrix assembly (independent bookkeeping route)
# ---------------------------------------------------------------------------

class _Tables:
    """Per-(algebra, representation) lookup tables for sparse assembly."""

    def __init__(self, algebra: HomPreLieAlgebra, rep: Representation, max_power: int):
        d, e = algebra.dim, rep.space_dim
        self.d, self.e = d, e
        self.alpha_pows = [algebra.alpha_power(k) for k in range(max_power + 1)]
        # alpha_row_support[k][t] = nonzero (source, coeff) with alpha^k(e_src)[t] = coeff
        self.alpha_row_support = []
        for k in range(max_power + 1):
            mat = self.alpha_pows[k]
            self.alpha_row_support.append(
                [[(b, mat.entry(t, b)) for b in range(d) if mat.entry(t, b) != 0]
                 for t in range(d)])
        rho_mats = [rep.rho_matrix(b) for b in range(d)]
        mu_mats = [rep.mu_matrix(b) for b in range(d)]
        def op_of_vec(mats, vec):
            out = Matrix.zero(e, e)
            acc = [ZERO] * (e * e)
            for b, c in enumerate(vec):
                if c == 0:
                    continue
                mb = mats[b].entries
                for idx in range(e * e):
                    if mb[idx] != 0:
                        acc[idx] += c * mb[idx]
            return Matrix(e, e, acc)
        # rho/mu of alpha^k(e_b)
        self.rho_pow = [[op_of_vec(rho_mats, self.alpha_pows[k].column(b)) for b in range(d)]
                        for k in range(max_power + 1)]
        self.mu_pow = [[op_of_vec(mu_mats, self.alpha_pows[k].column(b)) for b in range(d)]
                       for k in range(max_power + 1)]
        prod = [[algebra.mult.entry((i, j)) for j in range(d)] for i in range(d)]
        self.prod_support = [[(i, j, prod[i][j][t]) for i in range(d) for j in range(d)
                              if prod[i][j][t] != 0] for t in range(d)]
        brk = [[vsub(prod[i][j], prod[j][i]) for j in range(d)] for i in range(d)]
        self.bracket_support = [[(i, j, brk[i][j][t]) for i in range(d) for j in range(d)
                                 if brk[i][j][t] != 0] for t in range(d)]
        # mu(alpha^k(e_u . e_v)) and rho([alpha^k e_u, alpha^k e_v]) as e x e matrices
        self.mu_powprod = []
        self.rho_powbracket = []
        for k in range(max_power + 1):
            ak = self.alpha_pows[k]
            mu_k = [[op_of_vec(mu_mats, ak.apply(prod[u][v])) for v in range(d)] for u in range(d)]
            au = [ak.column(u) for u in range(d)]
            rho_k = [[op_of_vec(rho_mats, vsub(algebra.mult.apply([au[u], au[v]]),
                                               algebra.mult.apply([au[v], au[u]])))
                      for v in range(d)] for u in range(d)]
            self.mu_powprod.append(mu_k)
            self.rho_powbracket.append(rho_k)
        self.beta = rep.beta.as_matrix()


_tables_cache: dict = {}


def _tables(algebra: HomPreLieAlgebra, rep: Representation, max_power: int) -> _Tables:
    key = (algebra, rep)
    cached = _tables_cache.get(key)
    if cached is None or len(cached.alpha_pows) <= max_power:
        cached = _Tables(algebra, rep, max(max_power, DEFAULT_DEGREE_CAP + 1))
        _tables_cache[key] = cached
    return cached


def _flat(T: Sequence[int], d: int) -> int:
    f = 0
    for t in T:
        f = f * d + t
    return f


def component_matrix(algebra: HomPreLieAlgebra, rep: Representation,
                     kind: str, input_arity: int) -> Matrix:
    """Matrix of one component differential on Hom(A^(x)arity, V).

    kind: "nu_nu" (arity n -> n+1), "alpha_alpha" (m -> m+1),
    "nu_alpha" (n -> n), "alpha_nu" (m -> m+2).  Columns follow the
    frozen basis order (input multi-index major, output index minor).
    """
    d, e = algebra.dim, rep.space_dim
    m = input_arity
    if m < 1:
        raise ValueError("input arity must be >= 1")
    tb = _tables(algebra, rep, m + 1)
    out_arity = {"nu_nu": m + 1, "alpha_alpha": m + 1, "nu_alpha": m, "alpha_nu": m + 2}[kind]
    nrows = d ** out_arity * e
    ncols = d ** m * e
    entries = [ZERO] * (nrows * ncols)

    def add(T, w, col, val):
        if val != 0:
            entries[(_flat(T, d) * e + w) * ncols + col] += val

    col = 0
    for I in itertools.product(range(d), repeat=m):
        for j in range(e):
            if kind in ("nu_nu", "alpha_alpha"):
                power = m - 1 if kind == "nu_nu" else m
                rho_pow, mu_pow = tb.rho_pow[power], tb.mu_pow[power]
                for i in range(1, m + 1):
                    sign = 1 if i % 2 == 1 else -1
                    for b in range(d):
                        # rho term: omitted slot i is free
                        T = I[:i - 1] + (b,) + I[i - 1:]
                        vec = rho_pow[b].column(j)
                        for w in range(e):
                            add(T, w, col, sign * vec[w])
                        # mu term: last input entry re-appended at slot i, new last free
                        T = I[:i - 1] + (I[m - 1],) + I[i - 1:m - 1] + (b,)
                        vec = mu_pow[b].column(j)
                        for w in range(e):
                            add(T, w, col, sign * vec[w])
                    # insertion term: spectators alpha-twisted once, product in last input slot
                    spect_rows = [tb.alpha_row_support[1][I[t]] for t in range(m - 1)]
                    for choice in itertools.product(*spect_rows) if m > 1 else [()]:
                        coeff0 = Fraction(1)
                        for _, c in choice:
                            coeff0 *= c
                        spect = [b for b, _ in choice]
                        for (u, v, pc) in tb.prod_support[I[m - 1]]:
                            T = tuple(spect[:i - 1]) + (u,) + tuple(spect[i - 1:]) + (v,)
                            add(T, j, col, -sign * coeff0 * pc)
                for i in range(1, m + 1):
                    for jj in range(i + 1, m + 1):
                        sign = 1 if (i + jj) % 2 == 0 else -1
                        spect_rows = [tb.alpha_row_support[1][I[t]] for t in range(1, m)]
                        for choice in itertools.product(*spect_rows) if m > 1 else [()]:
                            coeff0 = Fraction(1)
                            for _, c in choice:
                                coeff0 *= c
                            spect = [b for b, _ in choice]
                            for (u, v, bc) in tb.bracket_support[I[0]]:
                                T = [None] * (m + 1)
                                T[i - 1], T[jj - 1] = u, v
                                it = iter(spect)
                                for t in range(m + 1):
                                    if T[t] is None:
                                        T[t] = next(it)
                                add(tuple(T), j, col, sign * coeff0 * bc)
            elif kind == "nu_alpha":
                vec = tb.beta.column(j)
                for w in range(e):
                    add(I, w, col, vec[w])
                spect_rows = [tb.alpha_row_support[1][I[t]] for t in range(m)]
                for choice in itertools.product(*spect_rows):
                    coeff0 = Fraction(1)
                    for _, c in choice:
                        coeff0 *= c
                    T = tuple(b for b, _ in choice)
                    add(T, j, col, -coeff0)
            elif kind == "alpha_nu":
                N = m + 2
                mu_pp = tb.mu_powprod[m - 1]
                rho_pb = tb.rho_powbracket[m - 1]
                for k in range(1, N):
                    sign0 = 1 if (N - k) % 2 == 0 else -1
                    spect_positions = [t for t in range(N - 1) if t != k - 1]
                    for sgn, order in _append_shuffles(m):
                        # psi slot t reads spectator position spect_positions[order[t]]
                        assign = {}
                        for t in range(m):
                            assign[spect_positions[order[t]]] = I[t]
                        s = sign0 * (1 if sgn > 0 else -1)
                        for u in range(d):
                            for v in range(d):
                                matv = mu_pp[u][v].column(j)
                                if all(x == 0 for x in matv):
                                    continue
                                T = [None] * N
                                T[k - 1], T[N - 1] = u, v
                                for pos, val in assign.items():
                                    T[pos] = val
                                for w in range(e):
                                    add(tuple(T), w, col, s * matv[w])
                for i in range(1, N):
                    for jj in range(i + 1, N):
                        sign = 1 if (i + jj) % 2 == 0 else -1
                        rest_positions = [t for t in range(N) if t != i - 1 and t != jj - 1]
                        for u in range(d):
                            for v in range(d):
                                matv = rho_pb[u][v].column(j)
                                if all(x == 0 for x in matv):
                                    continue
                                T = [None] * N
                                T[i - 1], T[jj - 1] = u, v
                                for t, val in zip(rest_positions, I):
                                    T[t] = val
                                for w in range(e):
                                    add(tuple(T), w, col, -sign * matv[w])
            else:
                raise ValueError(f"unknown component kind {kind!r}")
            col += 1
    return Matrix(nrows, ncols, entries)


def assemble_differential(algebra: HomPreLieAlgebra, rep: Representation, n: int) -> Matrix:
    """Matrix of the total differential in degree n.

    Columns: phi block Hom(A^(x)n, V) then (for n >= 2) psi block
    Hom(A^(x)(n-1), V); rows: the same layout one degree up.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    d, e = algebra.dim, rep.space_dim
    m_nn = component_matrix(algebra, rep, "nu_nu", n)
    m_na = component_matrix(algebra, rep, "nu_alpha", n)
    top_rows = d ** (n + 1) * e
    bot_rows = d ** n * e
    phi_cols = d ** n * e
    if n == 1:
        ncols = phi_cols
        entries = [ZERO] * ((top_rows + bot_rows) * ncols)
        for i in range(top_rows):
            row = m_nn.row(i)
            for c in range(ncols):
                entries[i * ncols + c] = row[c]
        for i in range(bot_rows):
            row = m_na.row(i)
            for c in range(ncols):
                entries[(top_rows + i) * ncols + c] = row[c]
        return Matrix(top_rows + bot_rows, ncols, entries)
    m_an = component_matrix(algebra, rep, "alpha_nu", n - 1)
    m_aa = component_matrix(algebra, rep, "alpha_alpha", n - 1)
    psi_cols = d ** (n - 1) * e
    ncols = phi_cols + psi_cols
    entries = [ZERO] * ((top_rows + bot_rows) * ncols)
    for i in range(top_rows):
        base = i * ncols
        row = m_nn.row(i)
        for c in range(phi_cols):
            entries[base + c] = row[c]
        row = m_an.row(i)
        for c in range(psi_cols):
            entries[base + phi_cols + c] = -row[c]
    for i in range(bot_rows):
        base = (top_rows + i) * ncols
        row = m_na.row(i)
        for c in range(phi_cols):
            entries[base + c] = row[c]
        row = m_aa.row(i)
        for c in range(psi_cols):
            entries[base + phi_cols + c] = -row[c]
    return Matrix(top_rows + bot_rows, ncols, entries)


class SquareZeroError(AssertionError):
    """Raised when the assembled differentials fail d.d = 0 on an input."""


class ComplexAssembly:
    """Assembled total differentials for degrees 1..degree_cap, gated by
    an exact d.d = 0 self-test at build time."""

    def __init__(self, algebra: HomPreLieAlgebra, representation: Optional[Representation] = None,
                 degree_cap: int = DEFAULT_DEGREE_CAP):
        if degree_cap < 1:
            raise ValueError("degree cap must be >= 1")
        self.algebra = algebra
        self.representation = representation if representation is not None \
            else regular_representation(algebra)
        self.degree_cap = degree_cap
        self.matrices = {n: assemble_differential(algebra, self.representation, n)
                         for n in range(1, degree_cap + 1)}
        self._self_test()

    def _self_test(self):
        d, e = self.algebra.dim, self.representation.space_dim
        for n in range(1, self.degree_cap):
            prod = self.matrices[n + 1].mul(self.matrices[n])
            if not prod.is_zero():
                for c in range(prod.cols):
                    colvec = prod.column(c)
                    if not vec_is_zero(colvec):
                        raise SquareZeroError(
                            f"square-zero self-test failed: d({n + 1}) . d({n}) != 0 "
                            f"on basis cochain #{c} of degree {n} "
                            f"(algebra dim {d}, coefficients dim {e}); "
                            "the loaded structure constants expose a defect in the "
                            "differential formulas")

    def differential(self, n: int) -> Matrix:
        if not 1 <= n <= self.degree_cap:
            raise ValueError(f"degree {n} outside 1..{self.degree_cap}")
        return self.matrices[n]

    def cohomology_dim(self, n: int) -> int:
        if not 1 <= n <= self.degree_cap:
            raise ValueError(f"degree {n} outside cap 1..{self.degree_cap}")
        dn = self.matrices[n]
        kernel = dn.cols - rank(dn)
        if n == 1:
            return kernel
        return kernel - rank(self.matrices[n - 1])

    def apply(self, c: AlphaCochain) -> AlphaCochain:
        """Matrix route for the total differential (for oracle checks)."""
        vec = self.differential(c.degree).apply(c.to_vec())
        return AlphaCochain.from_vec(self.algebra.dim, self.representation.space_dim,
                                     c.degree + 1, vec)


def cohomology_dim(algebra: HomPreLieAlgebra, rep: Optional[Representation],
                   n: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    return ComplexAssembly(algebra, rep, degree_cap).cohomology_dim(n)


def component_identity_defects(algebra: HomPreLieAlgebra, rep: Representation,
                               arity: int) -> list[str]:
    """Check the four square-zero component identities at the given
    input arity as exact matrix equalities; returns violated names."""
    k = arity
    m_nn_k = component_matrix(algebra, rep, "nu_nu", k)
    m_nn_k1 = component_matrix(algebra, rep, "nu_nu", k + 1)
    m_na_k = component_matrix(algebra, rep, "nu_alpha", k)
    m_na_k1 = component_matrix(algebra, rep, "nu_alpha", k + 1)
    m_na_k2 = component_matrix(algebra, rep, "nu_alpha", k + 2)
    m_aa_k = component_matrix(algebra, rep, "alpha_alpha", k)
    m_aa_k1 = component_matrix(algebra, rep, "alpha_alpha", k + 1)
    m_an_k = component_matrix(algebra, rep, "alpha_nu", k)
    m_an_k1 = component_matrix(algebra, rep, "alpha_nu", k + 1)
    m_nn_k2 = component_matrix(algebra, rep, "nu_nu", k + 2)
    bad = []
    if m_nn_k1.mul(m_nn_k) != m_an_k.mul(m_na_k):
        bad.append("nu_nu.nu_nu != alpha_nu.nu_alpha")
    if m_nn_k2.mul(m_an_k) != m_an_k1.mul(m_aa_k):
        bad.append("nu_nu.alpha_nu != alpha_nu.alpha_alpha")
    if m_aa_k1.mul(m_aa_k) != m_na_k2.mul(m_an_k):
        bad.append("alpha_alpha.alpha_alpha != nu_alpha.alpha_nu")
    if m_na_k1.mul(m_nn_k) != m_aa_k.mul(m_na_k):
        bad.append("nu_alpha.nu_nu != alpha_alpha.nu_alpha")
    return bad


# ---------------------------------------------------------------------------
# classical subcomplex
# ---------------------------------------------------------------------------

class SubcomplexMembershipError(ValueError):
    """The cochain is not beta/alpha-compatible."""


def classical_differential(algebra: HomPreLieAlgebra, rep: Representation,
                           f: MultiMap) -> MultiMap:
    """The untwisted coboundary on the compatible subcomplex
    {f : beta . f = f . alpha^(x)n}; equals d_nu_nu restricted."""
    if not d_nu_alpha(algebra, rep, f).is_zero():
        raise SubcomplexMembershipError(
            "cochain is not in the compatible subcomplex (beta.f != f.alpha^n)")
    return d_nu_nu(algebra, rep, f)


def classical_subcomplex_dim(algebra: HomPreLieAlgebra, rep: Representation, n: int) -> int:
    """dim { f in Hom(A^(x)n, V) : d_nu_alpha(f) = 0 }."""
    m = component_matrix(algebra, rep, "nu_alpha", n)
    return len(nullspace_basis(m))
