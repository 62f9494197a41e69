"""Reduced root systems with an invariant pairing, coroots and chains.

Roots are stored as integer coordinate tuples in the simple-root basis.
Cocharacters live in the lattice of the chosen isogeny type: the coroot
lattice for simply connected groups (basis = simple coroots), the
coweight lattice for adjoint groups (basis = fundamental coweights).
The invariant form is normalized so long roots have squared length 2 in
each irreducible factor; an optional per-factor positive rational scale
exposes the norm-independence tests.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import solve

Root = tuple[int, ...]

SIMPLY_CONNECTED = "simply_connected"
ADJOINT = "adjoint"

ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


def _validate(series: str, rank: int):
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(series)
    if not ok:
        raise ValueError(f"invalid Cartan type {series}{rank}")


def _dynkin_data(series: str, rank: int):
    """Edges and squared lengths (long = 2) of one irreducible factor."""
    chain = [(i, i + 1) for i in range(rank - 1)]
    two = Fraction(2)
    if series == "A":
        return chain, [two] * rank
    if series == "B":
        return chain, [two] * (rank - 1) + [Fraction(1)]
    if series == "C":
        return chain, [Fraction(1)] * (rank - 1) + [two]
    if series == "D":
        edges = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
        return edges, [two] * rank
    if series == "E":
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if rank >= 7:
            edges.append((5, 6))
        if rank == 8:
            edges.append((6, 7))
        return edges, [two] * rank
    if series == "F":
        return chain, [two, two, Fraction(1), Fraction(1)]
    if series == "G":
        return chain, [Fraction(2, 3), two]
    raise ValueError(series)


def _close_under_reflections(cartan, rank):
    """All roots of one factor, by closure under simple reflections."""
    roots = set()
    frontier = []
    for i in range(rank):
        e = tuple(1 if j == i else 0 for j in range(rank))
        roots.add(e)
        frontier.append(e)
    while frontier:
        beta = frontier.pop()
        for i in range(rank):
            p = sum(beta[j] * cartan[i][j] for j in range(rank))
            if p == 0:
                continue
            img = list(beta)
            img[i] -= p
            img = tuple(img)
            if img not in roots:
                roots.add(img)
                frontier.append(img)
    return roots


class RootSystem:
    """A reduced root system (possibly a product) with its pairing data."""

    def __init__(self, cartan_type, isogeny, scale=None):
        if isinstance(cartan_type, str):
            cartan_type = parse_cartan_type(cartan_type)
        cartan_type = [(str(s).upper(), int(r)) for s, r in cartan_type]
        if not cartan_type:
            raise ValueError("empty Cartan type")
        for series, r in cartan_type:
            _validate(series, r)
        if isogeny not in (SIMPLY_CONNECTED, ADJOINT):
            raise ValueError(f"unknown isogeny type {isogeny!r}")
        self.cartan_type = tuple(cartan_type)
        self.isogeny = isogeny
        self.rank = sum(r for _, r in cartan_type)
        if scale is None:
            scale = [Fraction(1)] * len(cartan_type)
        scale = [Fraction(s) for s in scale]
        if len(scale) != len(cartan_type) or any(s <= 0 for s in scale):
            raise ValueError("scale must give one positive rational per factor")
        self.scale = tuple(scale)

        n = self.rank
        self.factor_of = []  # simple-root index -> factor index
        for f, (_, r) in enumerate(cartan_type):
            self.factor_of += [f] * r

        # symmetric form on the character space, long roots squared length 2,
        # then scaled per factor
        form = [[Fraction(0)] * n for _ in range(n)]
        self.cartan = [[0] * n for _ in range(n)]
        offset = 0
        for f, (series, r) in enumerate(cartan_type):
            edges, lengths = _dynkin_data(series, r)
            s = scale[f]
            for i in range(r):
                form[offset + i][offset + i] = lengths[i] * s
            for (i, j) in edges:
                v = -max(lengths[i], lengths[j]) / 2 * s
                form[offset + i][offset + j] = v
                form[offset + j][offset + i] = v
            offset += r
        self.char_form = form
        for i in range(n):
            for j in range(n):
                c = 2 * form[i][j] / form[i][i]
                assert c.denominator == 1
                self.cartan[i][j] = int(c)

        # roots, factor by factor, positives first sorted by (height, coords)
        all_roots = []
        offset = 0
        for f, (series, r) in enumerate(cartan_type):
            sub = [[self.cartan[offset + i][offset + j] for j in range(r)] for i in range(r)]
            for root in _close_under_reflections(sub, r):
                full = (0,) * offset + root + (0,) * (n - offset - r)
                all_roots.append(full)
            offset += r
        # height first, then leftmost-simple-root first (so a1 < a2 < ...,
        # matching the usual extraspecial-pair convention)
        positives = sorted((a for a in all_roots if sum(a) > 0),
                           key=lambda a: (sum(a), tuple(-c for c in a)))
        assert all(all(c >= 0 for c in a) for a in positives)
        self.roots = positives + [tuple(-c for c in a) for a in positives]
        self.root_index = {a: i for i, a in enumerate(self.roots)}
        self.positive_roots = list(range(len(positives)))
        self.simple_roots = [self.root_index[tuple(1 if j == i else 0 for j in range(n))]
                             for i in range(n)]
        expected = sum(ROOT_COUNTS[s](r) for s, r in cartan_type)
        if len(self.roots) != expected:
            raise AssertionError(f"root count {len(self.roots)} != classical {expected}")

        # pairing of roots against the cocharacter lattice basis
        if isogeny == SIMPLY_CONNECTED:
            self.basis_pairing = [[self.cartan[j][i] for j in range(n)] for i in range(n)]
        else:
            self.basis_pairing = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

        self._coroot_simple = {}  # root -> expansion of the coroot over simple coroots
        for a in self.roots:
            la = self.root_len_sq(a)
            ks = []
            for i in range(n):
                k = a[i] * form[i][i] / la
                assert k.denominator == 1
                ks.append(int(k))
            self._coroot_simple[a] = tuple(ks)

        # Gram matrix of the cocharacter basis for the dual invariant form
        gram_cor = [[4 * form[i][j] / (form[i][i] * form[j][j]) for j in range(n)]
                    for i in range(n)]
        if isogeny == SIMPLY_CONNECTED:
            self.gram = gram_cor
        else:
            # coweights omega satisfy cartan . omega = coroot basis
            q = RootSystem._QField
            cart = [[Fraction(x) for x in row] for row in self.cartan]
            minv = []
            for i in range(n):
                rhs = [Fraction(1) if j == i else Fraction(0) for j in range(n)]
                col = solve(q, cart, rhs)
                minv.append(col)
            # minv[i] = column i of cartan^{-1}; omega_i = sum_k (C^-1)[k][i] coroot_k
            gram = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                for j in range(n):
                    acc = Fraction(0)
                    for k in range(n):
                        for l in range(n):
                            acc += minv[i][k] * minv[j][l] * gram_cor[k][l]
                    gram[i][j] = acc
            self.gram = gram

    class _QField:
        zero = Fraction(0)
        one = Fraction(1)

    # -- basic queries ------------------------------------------------

    def is_root(self, coords) -> bool:
        return tuple(coords) in self.root_index

    def is_positive(self, a: Root) -> bool:
        return sum(a) > 0

    def height(self, a: Root) -> int:
        return sum(a)

    def root_form(self, a, b) -> Fraction:
        """Invariant form (a, b) on the character space."""
        acc = Fraction(0)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        acc += ai * bj * self.char_form[i][j]
        return acc

    def root_len_sq(self, a) -> Fraction:
        return self.root_form(a, a)

    def pair(self, a, lam) -> Fraction | int:
        """Canonical pairing <a, lam> of a character with a cocharacter."""
        acc = 0
        for i, ai in enumerate(a):
            if ai:
                for j, lj in enumerate(lam):
                    if lj:
                        acc += ai * lj * self.basis_pairing[i][j]
        return acc

    def coroot(self, a) -> tuple[int, ...]:
        """Coordinates of the coroot of a in the cocharacter basis."""
        ks = self._coroot_simple[tuple(a)]
        n = self.rank
        if self.isogeny == SIMPLY_CONNECTED:
            return ks
        return tuple(sum(ks[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    def cochar_form(self, x, y) -> Fraction:
        """Invariant form (x, y) on the cocharacter space."""
        acc = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        acc += Fraction(xi) * Fraction(yj) * self.gram[i][j]
        return acc

    def norm_sq(self, lam) -> Fraction:
        return self.cochar_form(lam, lam)

    def nu(self, a) -> tuple[Fraction, ...]:
        """Image of the root a under the pairing-induced map into
        cocharacter space: <b, nu(a)> = (b, a) and (lam, nu(a)) = <a, lam>."""
        pvec = [Fraction(self.pair(a, tuple(1 if j == k else 0 for j in range(self.rank))))
                for k in range(self.rank)]
        x = solve(RootSystem._QField, [[self.gram[i][j] for j in range(self.rank)]
                                       for i in range(self.rank)], pvec)
        return tuple(x)

    def reflect(self, a, b) -> Root:
        """s_a(b) = b - <b, coroot(a)> a."""
        c = 2 * self.root_form(a, b) / self.root_len_sq(a)
        assert c.denominator == 1
        return tuple(bi - int(c) * ai for ai, bi in zip(a, b))

    def reflect_cochar(self, i: int, lam):
        """Simple reflection s_i acting on a cocharacter coordinate vector."""
        alpha = self.roots[self.simple_roots[i]]
        p = self.pair(alpha, lam)
        cor = self.coroot(alpha)
        return tuple(l - p * c for l, c in zip(lam, cor))

    def alpha_chain(self, a, b) -> tuple[int, int]:
        """Largest q, r >= 0 with {j a + b : j in [-q, r]} inside the roots."""
        a, b = tuple(a), tuple(b)
        if a not in self.root_index or b not in self.root_index:
            raise ValueError("chain endpoints must be roots")
        if a == b or a == tuple(-x for x in b):
            raise ValueError("alpha-chain of proportional roots is undefined")
        q = 0
        while tuple(bi - (q + 1) * ai for ai, bi in zip(a, b)) in self.root_index:
            q += 1
        r = 0
        while tuple(bi + (r + 1) * ai for ai, bi in zip(a, b)) in self.root_index:
            r += 1
        return q, r

    def dim(self) -> int:
        return len(self.roots) + self.rank

    def type_string(self) -> str:
        return "x".join(f"{s}{r}" for s, r in self.cartan_type)

    def to_json(self) -> dict:
        return {
            "cartan_type": self.type_string(),
            "isogeny": self.isogeny,
            "rank": self.rank,
            "root_count": len(self.roots),
            "roots": [list(a) for a in self.roots],
            "simple_roots": self.simple_roots,
            "positive_roots": self.positive_roots,
            "cartan_matrix": self.cartan,
            "pairing_matrix": [[str(x) for x in row] for row in self.gram],
            "coroots": {str(i): list(self.coroot(a)) for i, a in enumerate(self.roots)},
        }


def parse_cartan_type(text: str):
    """Parse "A2", "G2", or products like "A2xA1"."""
    factors = []
    for part in text.replace("X", "x").split("x"):
        part = part.strip()
        if len(part) < 2 or not part[0].isalpha():
            raise ValueError(f"cannot parse Cartan type {text!r}")
        factors.append((part[0].upper(), int(part[1:])))
    return factors


def build(cartan_type, isogeny=SIMPLY_CONNECTED, scale=None) -> RootSystem:
    """Construct a root system of the given type and isogeny."""
    return RootSystem(cartan_type, isogeny, scale=scale)
