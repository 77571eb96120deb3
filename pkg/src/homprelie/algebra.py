"""Structure-constant models of Hom-pre-Lie algebras and their representations.

A Hom-pre-Lie algebra is a vector space with a bilinear product and a
multiplicative linear structure map, subject to the twisted
left-symmetry identity; the commutator of the product yields the
sub-adjacent Hom-Lie algebra.  Everything here is finite dimensional
and exact: multilinear maps are stored as structure-constant tensors
over Fraction, and every identity is checked on basis tuples only
(multilinearity makes that equivalent to the universally quantified
statement).

Validators return a list of :class:`Defect` records naming the violated
condition, the basis indices at which it fails, and the nonzero defect
vector, so bad user input is diagnosable rather than just refused.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exactlin import Matrix, ZERO, ONE, rank

Vec = tuple[Fraction, ...]


def vzero(n: int) -> Vec:
    return (ZERO,) * n

def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a + b for a, b in zip(u, v))

def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a - b for a, b in zip(u, v))

def vscale(c: Fraction, v: Sequence[Fraction]) -> Vec:
    return tuple(c * x for x in v)

def vec_is_zero(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)

def basis_vec(n: int, i: int) -> Vec:
    return tuple(ONE if k == i else ZERO for k in range(n))


class MultiMap:
    """An n-ary multilinear map between based vector spaces, stored as a
    structure-constant tensor: coeffs[flat(i1..in)][j] is the e_j
    coefficient of m(b_{i1}, ..., b_{in}).  Slots may have different
    dimensions (needed for representation maps A (x) V -> V)."""

    __slots__ = ("arity", "domain_dims", "codomain_dim", "coeffs")

    def __init__(self, domain_dims: Sequence[int], codomain_dim: int,
                 coeffs: Iterable[Sequence[Fraction]]):
        domain_dims = tuple(int(d) for d in domain_dims)
        coeffs = tuple(tuple(Fraction(x) for x in row) for row in coeffs)
        size = 1
        for d in domain_dims:
            size *= d
        if len(coeffs) != size:
            raise ValueError(f"need {size} coefficient rows, got {len(coeffs)}")
        if any(len(row) != codomain_dim for row in coeffs):
            raise ValueError("coefficient row length != codomain dimension")
        object.__setattr__(self, "arity", len(domain_dims))
        object.__setattr__(self, "domain_dims", domain_dims)
        object.__setattr__(self, "codomain_dim", codomain_dim)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("MultiMap is immutable")

    @property
    def domain_dim(self) -> int:
        dims = set(self.domain_dims)
        if len(dims) > 1:
            raise ValueError("mixed slot dimensions")
        return self.domain_dims[0] if self.domain_dims else 0

    # -- construction -------------------------------------------------
    @staticmethod
    def zero(domain_dims: Sequence[int], codomain_dim: int) -> "MultiMap":
        size = 1
        for d in domain_dims:
            size *= d
        return MultiMap(domain_dims, codomain_dim, (vzero(codomain_dim),) * size)

    @staticmethod
    def identity(dim: int) -> "MultiMap":
        return MultiMap((dim,), dim, tuple(basis_vec(dim, i) for i in range(dim)))

    @staticmethod
    def from_function(domain_dims: Sequence[int], codomain_dim: int, fn) -> "MultiMap":
        """fn(multi_index_tuple) -> output coefficient sequence."""
        rows = [tuple(Fraction(x) for x in fn(idx))
                for idx in itertools.product(*[range(d) for d in domain_dims])]
        return MultiMap(domain_dims, codomain_dim, rows)

    @staticmethod
    def from_matrix(m: Matrix) -> "MultiMap":
        """Linear map from a matrix whose column j is the image of b_j."""
        return MultiMap((m.cols,), m.rows, tuple(m.column(j) for j in range(m.cols)))

    # -- indexing -----------------------------------------------------
    def flat_index(self, idx: Sequence[int]) -> int:
        f = 0
        for d, i in zip(self.domain_dims, idx):
            if not 0 <= i < d:
                raise IndexError(f"index {idx} out of range")
            f = f * d + i
        return f

    def entry(self, idx: Sequence[int]) -> Vec:
        return self.coeffs[self.flat_index(idx)]

    def input_indices(self):
        return itertools.product(*[range(d) for d in self.domain_dims])

    # -- evaluation ---------------------------------------------------
    def apply(self, vectors: Sequence[Sequence[Fraction]]) -> Vec:
        """Evaluate on coefficient vectors by multilinear expansion."""
        if len(vectors) != self.arity:
            raise ValueError(f"arity {self.arity} map applied to {len(vectors)} vectors")
        for v, d in zip(vectors, self.domain_dims):
            if len(v) != d:
                raise ValueError("vector dimension mismatch")
        out = [ZERO] * self.codomain_dim
        def rec(slot: int, coeff: Fraction, flat: int):
            if slot == self.arity:
                row = self.coeffs[flat]
                for j, x in enumerate(row):
                    if x != 0:
                        out[j] += coeff * x
                return
            d = self.domain_dims[slot]
            vec = vectors[slot]
            for i in range(d):
                c = vec[i]
                if c != 0:
                    rec(slot + 1, coeff * c, flat * d + i)
        rec(0, ONE, 0)
        return tuple(out)

    def as_matrix(self) -> Matrix:
        """Arity-1 map as a matrix (column j = image of b_j)."""
        if self.arity != 1:
            raise ValueError("as_matrix needs arity 1")
        e, d = self.codomain_dim, self.domain_dims[0]
        return Matrix(e, d, tuple(self.coeffs[j][i] for i in range(e) for j in range(d)))

    # -- linear structure ---------------------------------------------
    def _check_shape(self, other: "MultiMap"):
        if (self.domain_dims != other.domain_dims
                or self.codomain_dim != other.codomain_dim):
            raise ValueError("shape mismatch")

    def add(self, other: "MultiMap") -> "MultiMap":
        self._check_shape(other)
        return MultiMap(self.domain_dims, self.codomain_dim,
                        tuple(vadd(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def sub(self, other: "MultiMap") -> "MultiMap":
        self._check_shape(other)
        return MultiMap(self.domain_dims, self.codomain_dim,
                        tuple(vsub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: Fraction) -> "MultiMap":
        return MultiMap(self.domain_dims, self.codomain_dim,
                        tuple(vscale(Fraction(c), row) for row in self.coeffs))

    def is_zero(self) -> bool:
        return all(vec_is_zero(row) for row in self.coeffs)

    def to_vec(self) -> list[Fraction]:
        """Flatten in the canonical order: input multi-index major, output minor."""
        out = []
        for row in self.coeffs:
            out.extend(row)
        return out

    @staticmethod
    def from_vec(domain_dims: Sequence[int], codomain_dim: int,
                 vec: Sequence[Fraction]) -> "MultiMap":
        size = 1
        for d in domain_dims:
            size *= d
        if len(vec) != size * codomain_dim:
            raise ValueError("flat vector length mismatch")
        rows = [tuple(Fraction(x) for x in vec[k * codomain_dim:(k + 1) * codomain_dim])
                for k in range(size)]
        return MultiMap(domain_dims, codomain_dim, rows)

    def __eq__(self, other) -> bool:
        return (isinstance(other, MultiMap) and self.domain_dims == other.domain_dims
                and self.codomain_dim == other.codomain_dim and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.domain_dims, self.codomain_dim, self.coeffs))

    def __repr__(self) -> str:
        return f"MultiMap(arity={self.arity}, dims={self.domain_dims}->{self.codomain_dim})"


@dataclass(frozen=True)
class Defect:
    """One violated identity: which condition, at which basis indices,
    with the nonzero defect vector."""
    condition: str
    indices: tuple[int, ...]
    defect: Vec

    def describe(self) -> str:
        ids = ", ".join(str(i + 1) for i in self.indices)
        return f"{self.condition} fails at basis indices ({ids})"


class HomPreLieAlgebra:
    """(A, nu, alpha): dimension, bilinear product, structure map."""

    __slots__ = ("dim", "mult", "structure_map")

    def __init__(self, dim: int, mult: MultiMap, structure_map: MultiMap):
        if mult.arity != 2 or mult.domain_dims != (dim, dim) or mult.codomain_dim != dim:
            raise ValueError("mult must be a bilinear map A x A -> A")
        if structure_map.arity != 1 or structure_map.domain_dims != (dim,) \
                or structure_map.codomain_dim != dim:
            raise ValueError("structure map must be linear A -> A")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "structure_map", structure_map)

    def __setattr__(self, name, value):
        raise AttributeError("HomPreLieAlgebra is immutable")

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomPreLieAlgebra) and self.dim == other.dim
                and self.mult == other.mult and self.structure_map == other.structure_map)

    def __hash__(self) -> int:
        return hash((self.dim, self.mult, self.structure_map))

    def __repr__(self) -> str:
        return f"HomPreLieAlgebra(dim={self.dim})"

    # -- basic evaluations ---------------------------------------------
    def product(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
        return self.mult.apply([u, v])

    def alpha(self, v: Sequence[Fraction]) -> Vec:
        return self.structure_map.apply([v])

    def alpha_power(self, k: int) -> Matrix:
        m = Matrix.identity(self.dim)
        a = self.structure_map.as_matrix()
        for _ in range(k):
            m = a.mul(m)
        return m

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
        return vsub(self.product(u, v), self.product(v, u))

    def validate(self) -> list[Defect]:
        return validate_hom_pre_lie(self.dim, self.mult, self.structure_map)


def validate_hom_pre_lie(dim: int, mult: MultiMap, alpha: MultiMap) -> list[Defect]:
    """Empty iff twisted left-symmetry and multiplicativity hold on all
    basis tuples."""
    if mult.arity != 2 or mult.domain_dims != (dim, dim) or mult.codomain_dim != dim:
        raise ValueError("mult must be a bilinear map A x A -> A")
    if alpha.arity != 1 or alpha.domain_dims != (dim,) or alpha.codomain_dim != dim:
        raise ValueError("alpha must be linear A -> A")
    defects = []
    basis = [basis_vec(dim, i) for i in range(dim)]
    amat = [alpha.entry((i,)) for i in range(dim)]
    prod = lambda u, v: mult.apply([u, v])
    for i, j, k in itertools.product(range(dim), repeat=3):
        a, b, c = basis[i], basis[j], basis[k]
        ac = amat[k]
        lhs = vsub(prod(prod(a, b), ac), prod(amat[i], prod(b, c)))
        rhs = vsub(prod(prod(b, a), ac), prod(amat[j], prod(a, c)))
        diff = vsub(lhs, rhs)
        if not vec_is_zero(diff):
            defects.append(Defect("left-symmetry", (i, j, k), diff))
    for i, j in itertools.product(range(dim), repeat=2):
        diff = vsub(alpha.apply([prod(basis[i], basis[j])]),
                    prod(amat[i], amat[j]))
        if not vec_is_zero(diff):
            defects.append(Defect("multiplicativity", (i, j), diff))
    return defects


def is_regular(algebra: HomPreLieAlgebra) -> bool:
    """True iff the structure map is invertible."""
    return rank(algebra.structure_map.as_matrix()) == algebra.dim


class HomLieAlgebra:
    """(g, bracket, alpha); only produced via commutator_algebra here."""

    __slots__ = ("dim", "bracket_map", "structure_map")

    def __init__(self, dim: int, bracket_map: MultiMap, structure_map: MultiMap):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "bracket_map", bracket_map)
        object.__setattr__(self, "structure_map", structure_map)

    def __setattr__(self, name, value):
        raise AttributeError("HomLieAlgebra is immutable")

    def validate(self) -> list[Defect]:
        return validate_hom_lie(self.dim, self.bracket_map, self.structure_map)


def validate_hom_lie(dim: int, bracket: MultiMap, alpha: MultiMap) -> list[Defect]:
    """Skew-symmetry and the Hom-Jacobi identity on basis tuples."""
    defects = []
    basis = [basis_vec(dim, i) for i in range(dim)]
    amat = [alpha.entry((i,)) for i in range(dim)]
    br = lambda u, v: bracket.apply([u, v])
    for i, j in itertools.product(range(dim), repeat=2):
        diff = vadd(br(basis[i], basis[j]), br(basis[j], basis[i]))
        if not vec_is_zero(diff):
            defects.append(Defect("skew-symmetry", (i, j), diff))
    for i, j, k in itertools.product(range(dim), repeat=3):
        x, y, z = basis[i], basis[j], basis[k]
        s = vadd(vadd(br(amat[i], br(y, z)), br(amat[j], br(z, x))),
                 br(amat[k], br(x, y)))
        if not vec_is_zero(s):
            defects.append(Defect("hom-jacobi", (i, j, k), s))
    return defects


def commutator_algebra(algebra: HomPreLieAlgebra) -> HomLieAlgebra:
    """Sub-adjacent Hom-Lie algebra: [x, y] = x.y - y.x, same alpha."""
    d = algebra.dim
    bracket = MultiMap.from_function(
        (d, d), d,
        lambda idx: vsub(algebra.mult.entry(idx), algebra.mult.entry((idx[1], idx[0]))))
    lie = HomLieAlgebra(d, bracket, algebra.structure_map)
    defects = lie.validate()
    if defects:
        # guaranteed for valid input; reaching this means the input was bad
        raise ValueError("commutator bracket failed Hom-Lie validation: "
                         + "; ".join(x.describe() for x in defects))
    return lie


class Representation:
    """(V, rho, mu, beta) over a Hom-pre-Lie algebra.

    rho and mu are stored as MultiMaps with slots (A, V) -> V: rho(a)v
    is the left action, mu(a)v the right action (mu(a)v = "v . a" in the
    regular case)."""

    __slots__ = ("algebra", "space_dim", "rho", "mu", "beta")

    def __init__(self, algebra: HomPreLieAlgebra, space_dim: int,
                 rho: MultiMap, mu: MultiMap, beta: MultiMap):
        d, e = algebra.dim, space_dim
        for name, m in (("rho", rho), ("mu", mu)):
            if m.domain_dims != (d, e) or m.codomain_dim != e:
                raise ValueError(f"{name} must map A x V -> V")
        if beta.domain_dims != (e,) or beta.codomain_dim != e:
            raise ValueError("beta must be linear V -> V")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "space_dim", space_dim)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "beta", beta)

    def __setattr__(self, name, value):
        raise AttributeError("Representation is immutable")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Representation) and self.algebra == other.algebra
                and self.space_dim == other.space_dim and self.rho == other.rho
                and self.mu == other.mu and self.beta == other.beta)

    def __hash__(self) -> int:
        return hash((self.algebra, self.space_dim, self.rho, self.mu, self.beta))

    def rho_matrix(self, a_index: int) -> Matrix:
        e = self.space_dim
        return Matrix(e, e, tuple(self.rho.entry((a_index, v))[w]
                                  for w in range(e) for v in range(e)))

    def mu_matrix(self, a_index: int) -> Matrix:
        e = self.space_dim
        return Matrix(e, e, tuple(self.mu.entry((a_index, v))[w]
                                  for w in range(e) for v in range(e)))

    def validate(self) -> list[Defect]:
        return validate_representation(self)


def regular_representation(algebra: HomPreLieAlgebra) -> Representation:
    """V = A, rho(a)b = a.b, mu(a)b = b.a, beta = alpha."""
    d = algebra.dim
    rho = MultiMap.from_function((d, d), d, lambda idx: algebra.mult.entry(idx))
    mu = MultiMap.from_function((d, d), d, lambda idx: algebra.mult.entry((idx[1], idx[0])))
    rep = Representation(algebra, d, rho, mu, algebra.structure_map)
    defects = validate_representation(rep)
    if defects:
        raise ValueError("regular representation failed validation (invalid algebra?): "
                         + "; ".join(x.describe() for x in defects))
    return rep


def validate_representation(rep: Representation) -> list[Defect]:
    """Check the sub-adjacent Hom-Lie representation identities for rho
    and the two mu-compatibility identities, on all basis tuples."""
    A = rep.algebra
    d, e = A.dim, rep.space_dim
    defects = []
    vbasis = [basis_vec(e, i) for i in range(e)]
    amat = [A.structure_map.entry((i,)) for i in range(d)]
    beta = lambda v: rep.beta.apply([v])
    rho = lambda a, v: rep.rho.apply([a, v])
    mu = lambda a, v: rep.mu.apply([a, v])
    abasis = [basis_vec(d, i) for i in range(d)]

    for x, v in itertools.product(range(d), range(e)):
        # rho(alpha(x)) . beta = beta . rho(x)
        diff = vsub(rho(amat[x], beta(vbasis[v])), beta(rho(abasis[x], vbasis[v])))
        if not vec_is_zero(diff):
            defects.append(Defect("rho-beta compatibility", (x, v), diff))
        # beta . mu(x) = mu(alpha(x)) . beta
        diff = vsub(beta(mu(abasis[x], vbasis[v])), mu(amat[x], beta(vbasis[v])))
        if not vec_is_zero(diff):
            defects.append(Defect("mu-beta compatibility", (x, v), diff))
    for x, y, v in itertools.product(range(d), range(d), range(e)):
        bx, by, bv = abasis[x], abasis[y], vbasis[v]
        # rho([x,y]) . beta = rho(alpha(x)) rho(y) - rho(alpha(y)) rho(x)
        lhs = rho(A.bracket(bx, by), beta(bv))
        rhs = vsub(rho(amat[x], rho(by, bv)), rho(amat[y], rho(bx, bv)))
        diff = vsub(lhs, rhs)
        if not vec_is_zero(diff):
            defects.append(Defect("rho hom-lie representation", (x, y, v), diff))
        # mu(alpha(y)) mu(x) - mu(x.y) beta = mu(alpha(y)) rho(x) - rho(alpha(x)) mu(y)
        lhs = vsub(mu(amat[y], mu(bx, bv)), mu(A.product(bx, by), beta(bv)))
        rhs = vsub(mu(amat[y], rho(bx, bv)), rho(amat[x], mu(by, bv)))
        diff = vsub(lhs, rhs)
        if not vec_is_zero(diff):
            defects.append(Defect("mu pre-lie representation", (x, y, v), diff))
    return defects


def validate_morphism(src: HomPreLieAlgebra, dst: HomPreLieAlgebra,
                      phi: MultiMap) -> list[Defect]:
    """phi(a .1 b) = phi(a) .2 phi(b) and phi . alpha1 = alpha2 . phi."""
    if phi.arity != 1 or phi.domain_dims != (src.dim,) or phi.codomain_dim != dst.dim:
        raise ValueError("phi must be linear from src to dst")
    defects = []
    basis = [basis_vec(src.dim, i) for i in range(src.dim)]
    pmat = [phi.entry((i,)) for i in range(src.dim)]
    for i, j in itertools.product(range(src.dim), repeat=2):
        diff = vsub(phi.apply([src.product(basis[i], basis[j])]),
                    dst.product(pmat[i], pmat[j]))
        if not vec_is_zero(diff):
            defects.append(Defect("morphism-product", (i, j), diff))
    for i in range(src.dim):
        diff = vsub(phi.apply([src.alpha(basis[i])]), dst.alpha(pmat[i]))
        if not vec_is_zero(diff):
            defects.append(Defect("morphism-structure-map", (i,), diff))
    return defects
