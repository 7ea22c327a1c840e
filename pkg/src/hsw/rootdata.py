"""Root data and finite Weyl groups.

A root datum here is a weight lattice X = Z^rank together with simple roots
(vectors in X) and simple coroots (integer functionals on X).  Weights are
int tuples in the X basis, coweights are int tuples in the dual basis, and
the pairing is the dot product.  Weyl elements act on X by integer matrices.

Construction validates the generalized Cartan matrix, finite type (the root
closure must terminate), and the standing assumption that the coweight
lattice modulo the coroot lattice is torsion-free.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

_CLOSURE_CAP = 2000


def pair(vec: Sequence[int], cov: Sequence[int]) -> int:
    """Natural pairing of a weight with a coweight (dot product)."""
    return sum(a * b for a, b in zip(vec, cov))


def vec_add(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vec_neg(a: Sequence[int]) -> Vec:
    return tuple(-x for x in a)


def vec_scale(k: int, a: Sequence[int]) -> Vec:
    return tuple(k * x for x in a)


def mat_identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(m: Matrix, v: Sequence[int]) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def mat_transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def _det_int(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _rank_fraction(rows: Iterable[Sequence[int]]) -> int:
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][c]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][c]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][c]:
                f = work[r][c]
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class PosRoot:
    """A positive root with its coroot and both coordinate expansions.

    root_coords / coroot_coords are the integer coefficients in terms of the
    simple roots / simple coroots respectively.
    """

    vec: Vec
    cov: Vec
    root_coords: Vec
    coroot_coords: Vec

    @property
    def height(self) -> int:
        return sum(self.root_coords)

    @property
    def dual_height(self) -> int:
        return sum(self.coroot_coords)


class WeylElt:
    """An element of the finite Weyl group, stored as its matrix on X."""

    __slots__ = ("datum", "matrix", "_len", "_inv", "_hash")

    def __init__(self, datum: "RootDatum", matrix: Matrix):
        self.datum = datum
        self.matrix = matrix
        self._len: int | None = None
        self._inv: "WeylElt | None" = None
        self._hash: int | None = None

    def act(self, v: Sequence[int]) -> Vec:
        return mat_vec(self.matrix, v)

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return self.datum._intern_weyl(mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElt":
        if self._inv is None:
            n = self.datum.rank
            aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
                   for i, row in enumerate(self.matrix)]
            for c in range(n):
                piv = next(r for r in range(c, n) if aug[r][c])
                aug[c], aug[piv] = aug[piv], aug[c]
                inv = 1 / aug[c][c]
                aug[c] = [x * inv for x in aug[c]]
                for r in range(n):
                    if r != c and aug[r][c]:
                        f = aug[r][c]
                        aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
            mat = tuple(tuple(int(x) for x in row[n:]) for row in aug)
            self._inv = self.datum._intern_weyl(mat)
            self._inv._inv = self
        return self._inv

    @property
    def length(self) -> int:
        if self._len is None:
            roots = self.datum.positive_roots()
            neg = self.datum._negative_root_set
            self._len = sum(1 for r in roots if mat_vec(self.matrix, r.vec) in neg)
        return self._len

    def is_identity(self) -> bool:
        return self.matrix == mat_identity(self.datum.rank)

    def descents(self) -> list[int]:
        """Simple indices i with l(w s_i) < l(w), i.e. w(alpha_i) negative."""
        self.datum.positive_roots()
        neg = self.datum._negative_root_set
        return [i for i, r in enumerate(self.datum.simple_roots)
                if mat_vec(self.matrix, r) in neg]

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced expression as simple indices, chosen by smallest descent."""
        out: list[int] = []
        w = self
        while True:
            ds = w.descents()
            if not ds:
                break
            i = ds[0]
            out.append(i)
            w = w * self.datum.simple_reflection(i)
        if w.length != 0:
            raise RuntimeError("descent recursion failed to reach the identity")
        out.reverse()
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeylElt):
            return self.matrix == other.matrix and self.datum is other.datum
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.matrix)
        return self._hash

    def __repr__(self) -> str:
        word = ".".join(f"s{i + 1}" for i in self.reduced_word())
        return f"WeylElt({word or 'e'})"


class RootDatum:
    """A finite-type root datum with torsion-free coweight quotient."""

    def __init__(self, simple_roots: Sequence[Sequence[int]],
                 simple_coroots: Sequence[Sequence[int]],
                 name: str = "custom"):
        self.simple_roots: tuple[Vec, ...] = tuple(tuple(int(x) for x in r) for r in simple_roots)
        self.simple_coroots: tuple[Vec, ...] = tuple(tuple(int(x) for x in r) for r in simple_coroots)
        self.name = name
        if len(self.simple_roots) != len(self.simple_coroots):
            raise ValueError("simple roots and coroots must come in equal number")
        if not self.simple_roots:
            raise ValueError("at least one simple root is required")
        ranks = {len(r) for r in self.simple_roots} | {len(c) for c in self.simple_coroots}
        if len(ranks) != 1:
            raise ValueError("all simple roots and coroots must have the same length")
        self.rank: int = ranks.pop()
        self.nsimples: int = len(self.simple_roots)
        self._weyl_intern: dict[Matrix, WeylElt] = {}
        self._pos_roots: tuple[PosRoot, ...] | None = None
        self._negative_root_set: frozenset[Vec] = frozenset()
        self._weyl_list: tuple[WeylElt, ...] | None = None
        self._validate()

    # -- validation -------------------------------------------------------------

    def cartan_matrix(self) -> Matrix:
        """Entries a[i][j] = <alpha_j, alpha_i-check>."""
        return tuple(tuple(pair(self.simple_roots[j], self.simple_coroots[i])
                           for j in range(self.nsimples)) for i in range(self.nsimples))

    def _validate(self) -> None:
        a = self.cartan_matrix()
        n = self.nsimples
        for i in range(n):
            if a[i][i] != 2:
                raise ValueError(f"<alpha_{i + 1}, alpha_{i + 1}-check> must be 2, got {a[i][i]}")
            for j in range(n):
                if i == j:
                    continue
                if a[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be nonpositive")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise ValueError("Cartan zero pattern must be symmetric")
        if _rank_fraction(self.simple_roots) != n:
            raise ValueError("simple roots must be linearly independent")
        if _rank_fraction(self.simple_coroots) != n:
            raise ValueError("simple coroots must be linearly independent")
        self.positive_roots()  # raises when the closure does not terminate
        self._check_coweight_torsion()

    def _check_coweight_torsion(self) -> None:
        # coweights mod coroots is torsion-free iff the gcd of all maximal
        # minors of the coroot matrix is 1
        k = self.nsimples
        rows = [list(c) for c in self.simple_coroots]
        g = 0
        for cols in itertools.combinations(range(self.rank), k):
            minor = _det_int([[row[c] for c in cols] for row in rows])
            g = _gcd(g, minor)
            if g == 1:
                return
        raise ValueError(
            "coweight lattice modulo the coroot lattice has torsion "
            f"(minor gcd {g}); this datum is outside the supported class")

    # -- roots -------------------------------------------------------------------

    def positive_roots(self) -> tuple[PosRoot, ...]:
        if self._pos_roots is not None:
            return self._pos_roots
        n = self.nsimples
        unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen: dict[Vec, PosRoot] = {}
        queue: list[PosRoot] = []
        for i in range(n):
            r = PosRoot(self.simple_roots[i], self.simple_coroots[i], unit[i], unit[i])
            seen[r.vec] = r
            queue.append(r)
        head = 0
        while head < len(queue):
            beta = queue[head]
            head += 1
            for i in range(n):
                if beta.root_coords == unit[i]:
                    continue
                p = pair(beta.vec, self.simple_coroots[i])
                q = pair(self.simple_roots[i], beta.cov)
                new = PosRoot(
                    vec_sub(beta.vec, vec_scale(p, self.simple_roots[i])),
                    vec_sub(beta.cov, vec_scale(q, self.simple_coroots[i])),
                    vec_sub(beta.root_coords, vec_scale(p, unit[i])),
                    vec_sub(beta.coroot_coords, vec_scale(q, unit[i])),
                )
                if any(x < 0 for x in new.root_coords):
                    raise ValueError("root closure left the positive cone; invalid datum")
                if new.vec not in seen:
                    seen[new.vec] = new
                    queue.append(new)
                    if len(seen) > _CLOSURE_CAP:
                        raise ValueError(
                            f"root closure exceeded {_CLOSURE_CAP} roots; not finite type")
        self._pos_roots = tuple(sorted(seen.values(), key=lambda r: (r.height, r.root_coords)))
        self._negative_root_set = frozenset(vec_neg(r.vec) for r in self._pos_roots)
        return self._pos_roots

    def two_rho(self) -> Vec:
        """Sum of the positive roots."""
        out = (0,) * self.rank
        for r in self.positive_roots():
            out = vec_add(out, r.vec)
        return out

    def two_rho_cov(self) -> Vec:
        """Sum of the positive coroots."""
        out = (0,) * self.rank
        for r in self.positive_roots():
            out = vec_add(out, r.cov)
        return out

    # -- Weyl group ---------------------------------------------------------------

    def _intern_weyl(self, matrix: Matrix) -> WeylElt:
        w = self._weyl_intern.get(matrix)
        if w is None:
            w = WeylElt(self, matrix)
            self._weyl_intern[matrix] = w
        return w

    def weyl_identity(self) -> WeylElt:
        return self._intern_weyl(mat_identity(self.rank))

    def simple_reflection(self, i: int) -> WeylElt:
        root, cov = self.simple_roots[i], self.simple_coroots[i]
        mat = tuple(tuple((1 if r == c else 0) - root[r] * cov[c] for c in range(self.rank))
                    for r in range(self.rank))
        return self._intern_weyl(mat)

    def reflection_of(self, root: PosRoot) -> WeylElt:
        mat = tuple(tuple((1 if r == c else 0) - root.vec[r] * root.cov[c]
                          for c in range(self.rank)) for r in range(self.rank))
        return self._intern_weyl(mat)

    def weyl_elements(self) -> tuple[WeylElt, ...]:
        """All Weyl elements in breadth-first order from the identity."""
        if self._weyl_list is not None:
            return self._weyl_list
        simples = [self.simple_reflection(i) for i in range(self.nsimples)]
        order: list[WeylElt] = [self.weyl_identity()]
        seen = {order[0]}
        head = 0
        while head < len(order):
            w = order[head]
            head += 1
            for s in simples:
                nxt = w * s
                if nxt not in seen:
                    seen.add(nxt)
                    order.append(nxt)
        self._weyl_list = tuple(order)
        return self._weyl_list

    def longest_element(self) -> WeylElt:
        best = max(self.weyl_elements(), key=lambda w: w.length)
        top = [w for w in self.weyl_elements() if w.length == best.length]
        if len(top) != 1:
            raise RuntimeError("longest element is not unique; invalid datum")
        return best

    # -- dominance ------------------------------------------------------------------

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(pair(lam, c) >= 0 for c in self.simple_coroots)

    def dominant_rep(self, lam: Sequence[int]) -> Vec:
        """The dominant Weyl-orbit representative of a weight."""
        lam = tuple(int(x) for x in lam)
        while True:
            for i in range(self.nsimples):
                p = pair(lam, self.simple_coroots[i])
                if p < 0:
                    lam = vec_sub(lam, vec_scale(p, self.simple_roots[i]))
                    break
            else:
                return lam

    # -- structure -------------------------------------------------------------------

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the Coxeter diagram, as simple-index tuples."""
        a = self.cartan_matrix()
        n = self.nsimples
        seen: set[int] = set()
        comps: list[tuple[int, ...]] = []
        for start in range(n):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if j not in seen and a[i][j] != 0:
                        seen.add(j)
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def highest_dual_root(self, component: tuple[int, ...]) -> PosRoot:
        """The root of the component whose coroot has maximal dual height."""
        comp = set(component)
        candidates = [r for r in self.positive_roots()
                      if {i for i, c in enumerate(r.root_coords) if c} <= comp]
        best = max(candidates, key=lambda r: r.dual_height)
        top = [r for r in candidates if r.dual_height == best.dual_height]
        if len(top) != 1:
            raise RuntimeError("highest coroot is not unique; invalid component")
        return best

    def fundamental_group_order(self) -> int | None:
        """Order of X modulo the root lattice, or None when infinite."""
        if self.nsimples != self.rank:
            return None
        det = _det_int([list(col) for col in zip(*self.simple_roots)])
        return abs(det)

    # -- serialization ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "simple_roots": [list(r) for r in self.simple_roots],
            "simple_coroots": [list(c) for c in self.simple_coroots],
        }

    def __repr__(self) -> str:
        return f"RootDatum({self.name!r}, rank={self.rank})"


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


# -- presets and loading ---------------------------------------------------------------


def _simply_connected(cartan: Sequence[Sequence[int]], name: str) -> RootDatum:
    # weight lattice spanned by fundamental weights: coroots are unit covectors,
    # roots are the Cartan columns
    n = len(cartan)
    roots = [tuple(cartan[i][j] for i in range(n)) for j in range(n)]
    coroots = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return RootDatum(roots, coroots, name)


def _general_linear(n: int) -> RootDatum:
    roots = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        roots.append(tuple(v))
    return RootDatum(roots, roots, f"GL{n}")


_PRESET_CARTANS = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
}


def _build_preset(token: str) -> RootDatum:
    if token in _PRESET_CARTANS:
        return _simply_connected(_PRESET_CARTANS[token], token)
    if token.startswith("GL") and token[2:].isdigit():
        n = int(token[2:])
        if n < 2:
            raise ValueError("GL presets need n >= 2")
        return _general_linear(n)
    raise ValueError(f"unknown preset {token!r}; known: A1 A2 B2 G2 GLn and x-products")


def product_datum(a: RootDatum, b: RootDatum, name: str | None = None) -> RootDatum:
    """Block-diagonal product of two data."""
    ra, rb = a.rank, b.rank
    roots = [r + (0,) * rb for r in a.simple_roots] + [(0,) * ra + r for r in b.simple_roots]
    coroots = [c + (0,) * rb for c in a.simple_coroots] + [(0,) * ra + c for c in b.simple_coroots]
    return RootDatum(roots, coroots, name or f"{a.name}x{b.name}")


def datum_preset(name: str) -> RootDatum:
    """Build a named preset; factors joined by 'x' give block products.

    >>> datum_preset("A1xA1").rank
    2
    """
    tokens = name.split("x")
    datum = _build_preset(tokens[0])
    for token in tokens[1:]:
        datum = product_datum(datum, _build_preset(token))
    datum.name = name
    return datum


def datum_from_json(obj) -> RootDatum:
    if isinstance(obj, list):
        datum = datum_from_json(obj[0])
        for block in obj[1:]:
            datum = product_datum(datum, datum_from_json(block))
        return datum
    return RootDatum(obj["simple_roots"], obj["simple_coroots"], obj.get("name", "custom"))


def datum_from_file(path: str) -> RootDatum:
    with open(path, "r", encoding="utf-8") as fh:
        return datum_from_json(json.load(fh))


def load_datum(spec: str) -> RootDatum:
    """Resolve a preset name or a path to a JSON datum file."""
    if "/" in spec or spec.endswith(".json"):
        return datum_from_file(spec)
    return datum_preset(spec)


# Operation-style aliases matching the public contract.

def positive_roots(datum: RootDatum) -> tuple[PosRoot, ...]:
    return datum.positive_roots()


def weyl_enumerate(datum: RootDatum) -> tuple[WeylElt, ...]:
    return datum.weyl_elements()
