"""Graded bracket blocks, kernel checks, and the density exponent phi.

For Y concentrated in degree k of a cocharacter grading, the bracket
restricts to blocks [Y, .] : g(-i) -> g(k-i), i = 1..k-1, written in
the root-vector bases.  phi is the product of |det|^(1/2) over the
blocks, kept symbolic as q**(-e/2) with an integer half-exponent e;
the kernel theorem makes the blocks square and invertible on optimal
instances, and the functional equations of phi are exact identities on
these exponents.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .fields import has_valuation
from .grading import delta_exponent
from .lie import LieElement, StructureConstants, bracket, root_vector
from .rootsystem import RootSystem


@dataclass(frozen=True)
class AbsValue:
    """Symbolic absolute value q**(-half_exponent/2); None encodes 0."""

    q: int
    half_exponent: int | None

    def is_zero(self) -> bool:
        return self.half_exponent is None

    def __mul__(self, other: "AbsValue") -> "AbsValue":
        if self.q != other.q:
            raise ValueError("absolute values over different residue fields")
        if self.is_zero() or other.is_zero():
            return AbsValue(self.q, None)
        return AbsValue(self.q, self.half_exponent + other.half_exponent)

    def to_json(self):
        return {"q": self.q,
                "half_exponent": "inf" if self.half_exponent is None else self.half_exponent}

    def __repr__(self):
        if self.is_zero():
            return "0"
        return f"{self.q}^(-{self.half_exponent}/2)"


@dataclass
class GradedBlockMap:
    """Matrices of [Y, .] : g(-i) -> g(k-i) in fixed root-vector bases."""

    k: int
    blocks: dict[int, list[list]]          # i -> matrix, shape d_{k-i} x d_{-i}
    domain_basis: dict[int, list[int]]     # i -> root indices of g(-i)
    codomain_basis: dict[int, list[int]]   # i -> root indices of g(k-i)

    def shapes(self) -> dict[int, tuple[int, int]]:
        return {i: (len(self.codomain_basis[i]), len(self.domain_basis[i]))
                for i in self.blocks}

    def is_square(self) -> bool:
        return all(r == c for r, c in self.shapes().values())


def homogeneous_component_degree(rs: RootSystem, X: LieElement, lam) -> int:
    """The single degree of X's support, or raise if X is not graded."""
    if X.is_zero():
        raise ValueError("zero element has no degree")
    degs = set()
    for key in X.coeffs:
        if key[0] == "H":
            degs.add(0)
        else:
            degs.add(int(rs.pair(rs.roots[key[1]], lam)))
    if len(degs) != 1:
        raise ValueError(f"element is not concentrated in one degree: {sorted(degs)}")
    return degs.pop()


def graded_ad(rs: RootSystem, sc: StructureConstants, Y: LieElement, lam,
              k: int | None = None) -> GradedBlockMap:
    """Blocks of ad Y on the grading of lam; Y must live in degree k."""
    deg = homogeneous_component_degree(rs, Y, lam)
    if k is None:
        k = deg
    if deg != k or k < 1:
        raise ValueError(f"Y must be concentrated in degree k = {k}, found {deg}")
    field = Y.field
    lam = tuple(lam)
    by_degree: dict[int, list[int]] = {}
    for ri, a in enumerate(rs.roots):
        by_degree.setdefault(int(rs.pair(a, lam)), []).append(ri)
    blocks, dom, cod = {}, {}, {}
    for i in range(1, k):
        src = sorted(by_degree.get(-i, []))
        dst = sorted(by_degree.get(k - i, []))
        dst_pos = {ri: r for r, ri in enumerate(dst)}
        mat = [[field.zero for _ in src] for _ in dst]
        for c, ri in enumerate(src):
            img = bracket(sc, Y, root_vector(rs, field, ri))
            for key, val in img.coeffs.items():
                assert key[0] == "E", "graded blocks never touch the Cartan"
                mat[dst_pos[key[1]]][c] = val
        blocks[i] = mat
        dom[i] = src
        cod[i] = dst
    return GradedBlockMap(k=k, blocks=blocks, domain_basis=dom, codomain_basis=cod)


def check_kernel(field, gbm: GradedBlockMap) -> dict[int, dict]:
    """Exact rank of every block; injectivity and surjectivity flags."""
    out = {}
    for i, mat in sorted(gbm.blocks.items()):
        rows = len(gbm.codomain_basis[i])
        cols = len(gbm.domain_basis[i])
        r = linalg.rank(field, mat) if rows and cols else 0
        out[i] = {
            "rows": rows,
            "cols": cols,
            "rank": r,
            "injective": r == cols,
            "surjective": r == rows,
        }
    return out


def phi(field, gbm: GradedBlockMap) -> AbsValue:
    """Product over the blocks of |det|^(1/2) as a symbolic q-power.

    The half-exponent is the sum of the determinant valuations; a zero
    determinant gives the distinguished infinite exponent.  The empty
    product (k = 1, or no roots in range) is the value 1.
    """
    if not has_valuation(field):
        raise ValueError("phi needs a field with a valuation")
    q = field.residue_cardinality
    if not gbm.is_square():
        raise ValueError(f"blocks are not square: {gbm.shapes()}")
    e = 0
    for i, mat in gbm.blocks.items():
        if not mat:
            continue
        d = linalg.det(field, mat)
        if not d:
            return AbsValue(q, None)
        e += field.valuation(d)
    return AbsValue(q, e)


def phi_of(rs: RootSystem, sc: StructureConstants, X: LieElement, lam, k: int,
           field=None) -> AbsValue:
    """phi of a degree-k element (X determines its own blocks)."""
    fld = field if field is not None else X.field
    if X.is_zero():
        if not has_valuation(fld):
            raise ValueError("phi needs a field with a valuation")
        q = fld.residue_cardinality
        lam = tuple(lam)
        degs = [int(rs.pair(a, lam)) for a in rs.roots]
        for i in range(1, k):
            if -i in degs or (k - i) in degs:
                return AbsValue(q, None)  # some zero block of positive size
        return AbsValue(q, 0)
    gbm = graded_ad(rs, sc, X, lam, k)
    return phi(fld, gbm)


def verify_phi_inverse(rs: RootSystem, sc: StructureConstants, X: LieElement,
                       lam, k: int, field=None) -> bool:
    """phi(-X) = phi(X): the exponent is blind to the sign."""
    a = phi_of(rs, sc, X, lam, k, field)
    b = phi_of(rs, sc, -X, lam, k, field)
    return a == b


def torus_conjugate(rs: RootSystem, X: LieElement, v) -> LieElement:
    """Ad of the torus point with valuation vector v: the coefficient of
    E_a is scaled by uniformizer**<a, v>."""
    field = X.field
    pi = field.uniformizer()
    out = {}
    for key, val in X.coeffs.items():
        if key[0] == "H":
            out[key] = val
            continue
        e = int(rs.pair(rs.roots[key[1]], v))
        c = val
        if e >= 0:
            for _ in range(e):
                c = c * pi
        else:
            for _ in range(-e):
                c = c / pi
        out[key] = c
    return LieElement(field, out)


def verify_rrao(rs: RootSystem, sc: StructureConstants, X: LieElement, lam,
                k: int, v, field=None) -> bool:
    """phi(Ad_m X) = delta_{lam,(1,k)}(m) phi(X) as exact exponents.

    m is the torus element of valuation v; the exponent shift is twice
    the delta exponent of the (1, k) slice.  Infinite exponents must
    match on both sides.
    """
    before = phi_of(rs, sc, X, lam, k, field)
    after = phi_of(rs, sc, torus_conjugate(rs, X, v), lam, k, field)
    if before.is_zero() or after.is_zero():
        return before.is_zero() and after.is_zero()
    shift = 2 * delta_exponent(rs, lam, 1, k, v) if k > 1 else 0
    return after.half_exponent == before.half_exponent + shift


def lattice_image(rs: RootSystem, sc: StructureConstants, Y: LieElement, lam,
                  k: int, i: int, m: int):
    """t-adic elementary divisor valuations of the block A_{-i}(Y),
    capped at the truncation level m.

    Y must have coefficients integral at t (the GF(q)[t] model); the
    output describes the image lattice [Y, g(-i; o)] inside g(k-i; o)
    up to t**m, and stabilizes in m once m exceeds the largest divisor.
    Rank deficiency over the fraction field shows up as None entries.
    """
    if m < 1:
        raise ValueError("truncation level m must be >= 1")
    field = Y.field
    if not has_valuation(field):
        raise ValueError("lattice computations need a valued field")
    for val in Y.coeffs.values():
        if field.valuation(val) < 0:
            raise ValueError("Y must be integral at the uniformizer")
    gbm = graded_ad(rs, sc, Y, lam, k)
    if i not in gbm.blocks:
        raise ValueError(f"block index i = {i} outside 1..{k - 1}")
    from .snf import dvr_divisor_valuations

    return dvr_divisor_valuations(field, gbm.blocks[i], m_cap=m)


def block_report(rs: RootSystem, sc: StructureConstants, Y: LieElement, lam,
                 k: int, field) -> dict:
    """Per-instance JSON payload: dims, ranks, det valuations, phi."""
    gbm = graded_ad(rs, sc, Y, lam, k)
    kern = check_kernel(field, gbm)
    per_i = {}
    for i in sorted(gbm.blocks):
        entry = dict(kern[i])
        if entry["rows"] == entry["cols"] and entry["rows"] > 0 and has_valuation(field):
            d = linalg.det(field, gbm.blocks[i])
            entry["det_valuation"] = field.valuation(d) if d else "inf"
        per_i[str(i)] = entry
    out = {"k": k, "blocks": per_i}
    if has_valuation(field) and gbm.is_square():
        out["phi"] = phi(field, gbm).to_json()
    return out
