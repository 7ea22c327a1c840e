"""The extended affine Weyl group attached to a root datum.

Elements are pairs w * t_lam with w in the finite Weyl group and t_lam the
translation by a weight lam.  Multiplication follows
(w1 t_a)(w2 t_b) = (w1 w2) t_{w2^{-1}(a) + b}.  Lengths come from the closed
pairing formula over positive roots, so no Coxeter presentation is needed to
measure an element.  The length-zero subgroup (isomorphic to the weight
lattice modulo the root lattice) is handled lazily and never enumerated
unless it is finite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootdata import (PosRoot, RootDatum, Vec, WeylElt, mat_vec, pair,
                       vec_add, vec_neg, vec_sub)


class AffineElt:
    """An element w * t_lam of the extended affine Weyl group."""

    __slots__ = ("datum", "w", "lam", "_len", "_hash")

    def __init__(self, datum: RootDatum, w: WeylElt, lam: Vec):
        self.datum = datum
        self.w = w
        self.lam = lam
        self._len: int | None = None
        self._hash: int | None = None

    def __mul__(self, other: "AffineElt") -> "AffineElt":
        lam = vec_add(other.w.inverse().act(self.lam), other.lam)
        return affine_elt(self.datum, self.w * other.w, lam)

    def inverse(self) -> "AffineElt":
        return affine_elt(self.datum, self.w.inverse(), vec_neg(self.w.act(self.lam)))

    @property
    def length(self) -> int:
        if self._len is None:
            datum = self.datum
            roots = datum.positive_roots()
            neg = datum._negative_root_set
            total = 0
            for r in roots:
                p = pair(self.lam, r.cov)
                if mat_vec(self.w.matrix, r.vec) in neg:
                    total += abs(1 + p)
                else:
                    total += abs(p)
            self._len = total
        return self._len

    def is_identity(self) -> bool:
        return self.w.is_identity() and not any(self.lam)

    def is_translation(self) -> bool:
        return self.w.is_identity()

    def act_level1(self, xi: Vec) -> Vec:
        """The level-one affine action on weights: (w t_lam)(xi) = w(xi + lam)."""
        return self.w.act(vec_add(xi, self.lam))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AffineElt):
            return self is other or (self.w == other.w and self.lam == other.lam)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.w.matrix, self.lam))
        return self._hash

    def __repr__(self) -> str:
        wpart = ".".join(f"s{i + 1}" for i in self.w.reduced_word()) or "e"
        return f"AffineElt({wpart} * t{self.lam})"

    def to_json(self) -> dict:
        return {"w_word": [i + 1 for i in self.w.reduced_word()],
                "translation": list(self.lam)}


@dataclass(frozen=True)
class SimpleReflection:
    """A simple generator of the affine Weyl group with its label.

    Finite generators are labeled s1..sn by simple index.  Each component of
    the diagram contributes one affine generator, labeled s0 (or s0:k with a
    1-based component index when there are several components).
    """

    label: str
    kind: str  # "finite" or "affine"
    index: int
    elt: AffineElt
    root: PosRoot

    def __repr__(self) -> str:
        return f"SimpleReflection({self.label})"


class _AffineState:
    """Per-datum interning tables and caches."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.elts: dict[tuple, AffineElt] = {}
        self.simples: tuple[SimpleReflection, ...] | None = None
        self.reduced: dict[AffineElt, tuple[AffineElt, tuple[SimpleReflection, ...]]] = {}
        self.min_reps: dict[Vec, AffineElt] = {}
        self.mul_simple: dict[tuple[AffineElt, str], AffineElt] = {}
        self.omegas: tuple[AffineElt, ...] | None = None


def _state(datum: RootDatum) -> _AffineState:
    st = getattr(datum, "_affine_state", None)
    if st is None:
        st = _AffineState(datum)
        datum._affine_state = st
    return st


def affine_elt(datum: RootDatum, w: WeylElt, lam) -> AffineElt:
    lam = tuple(int(x) for x in lam)
    st = _state(datum)
    key = (w.matrix, lam)
    el = st.elts.get(key)
    if el is None:
        el = AffineElt(datum, w, lam)
        st.elts[key] = el
    return el


def affine_identity(datum: RootDatum) -> AffineElt:
    return affine_elt(datum, datum.weyl_identity(), (0,) * datum.rank)


def translation(datum: RootDatum, lam) -> AffineElt:
    return affine_elt(datum, datum.weyl_identity(), lam)


def from_weyl(w: WeylElt) -> AffineElt:
    return affine_elt(w.datum, w, (0,) * w.datum.rank)


def aff_length(x: AffineElt) -> int:
    return x.length


def simple_reflections(datum: RootDatum) -> tuple[SimpleReflection, ...]:
    """Finite simple generators followed by one affine generator per component."""
    st = _state(datum)
    if st.simples is None:
        out: list[SimpleReflection] = []
        by_vec = {r.vec: r for r in datum.positive_roots()}
        for i in range(datum.nsimples):
            root = by_vec[datum.simple_roots[i]]
            el = from_weyl(datum.simple_reflection(i))
            out.append(SimpleReflection(f"s{i + 1}", "finite", i, el, root))
        comps = datum.components()
        for k, comp in enumerate(comps):
            seed = datum.highest_dual_root(comp)
            el = affine_elt(datum, datum.reflection_of(seed), vec_neg(seed.vec))
            label = "s0" if len(comps) == 1 else f"s0:{k + 1}"
            out.append(SimpleReflection(label, "affine", k, el, seed))
        for s in out:
            if s.elt.length != 1:
                raise RuntimeError(f"generator {s.label} has length {s.elt.length}, not 1")
        st.simples = tuple(out)
    return st.simples


def mul_simple(x: AffineElt, s: SimpleReflection) -> AffineElt:
    """Right multiplication x * s with per-datum caching."""
    st = _state(x.datum)
    key = (x, s.label)
    out = st.mul_simple.get(key)
    if out is None:
        out = x * s.elt
        st.mul_simple[key] = out
    return out


def reduced_word(x: AffineElt) -> tuple[AffineElt, tuple[SimpleReflection, ...]]:
    """Factor x = omega * s_1 ... s_r with omega of length zero, r = l(x).

    The word is chosen deterministically by scanning generators in label
    order for a descent at every step.
    """
    st = _state(x.datum)
    cached = st.reduced.get(x)
    if cached is not None:
        return cached
    simples = simple_reflections(x.datum)
    letters: list[SimpleReflection] = []
    cur = x
    while cur.length > 0:
        for s in simples:
            if mul_simple(cur, s).length < cur.length:
                letters.append(s)
                cur = mul_simple(cur, s)
                break
        else:
            raise RuntimeError(f"no descent found at positive length for {cur!r}")
    letters.reverse()
    result = (cur, tuple(letters))
    st.reduced[x] = result
    return result


def omega_part(x: AffineElt) -> AffineElt:
    return reduced_word(x)[0]


def min_rep(datum: RootDatum, lam) -> AffineElt:
    """The unique shortest element of the coset W * t_lam."""
    lam = tuple(int(x) for x in lam)
    st = _state(datum)
    cached = st.min_reps.get(lam)
    if cached is not None:
        return cached
    candidates = [affine_elt(datum, u, lam) for u in datum.weyl_elements()]
    best = min(candidates, key=lambda e: e.length)
    ties = [e for e in candidates if e.length == best.length]
    if len(ties) != 1:
        raise RuntimeError(f"minimal coset representative for {lam} is not unique")
    st.min_reps[lam] = best
    return best


def coset_decompose(x: AffineElt) -> tuple[WeylElt, Vec]:
    """Write x = u * m with u finite and m the shortest element of W t_lam.

    Returns (u, lam); lengths add: l(x) = l(u) + l(m).
    """
    m = min_rep(x.datum, x.lam)
    u_aff = x * m.inverse()
    if any(u_aff.lam):
        raise RuntimeError("coset decomposition produced a non-finite part")
    u = u_aff.w
    if u.length + m.length != x.length:
        raise RuntimeError("coset decomposition violated length additivity")
    return u, x.lam


def omega_elements(datum: RootDatum) -> tuple[AffineElt, ...]:
    """All length-zero elements, when the fundamental group is finite."""
    st = _state(datum)
    if st.omegas is not None:
        return st.omegas
    n = datum.fundamental_group_order()
    if n is None:
        raise ValueError("the length-zero subgroup of this datum is infinite")
    found: set[AffineElt] = set()
    bound = 1
    while len(found) < n:
        if bound > max(4, n + 2):
            raise RuntimeError("failed to locate all length-zero elements")
        for lam in _box(datum.rank, bound):
            el = min_rep(datum, lam)
            if el.length == 0:
                found.add(el)
        bound += 1
    st.omegas = tuple(sorted(found, key=lambda e: (e.lam, e.w.matrix)))
    return st.omegas


def _box(rank: int, bound: int):
    if rank == 0:
        yield ()
        return
    for rest in _box(rank - 1, bound):
        for x in range(-bound, bound + 1):
            yield (x,) + rest


def parse_weight(text: str, rank: int) -> Vec:
    """Parse a comma-separated integer weight, checking the coordinate count."""
    parts = [p.strip() for p in str(text).split(",")]
    try:
        lam = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"bad weight {text!r}: coordinates must be integers") from exc
    if len(lam) != rank:
        raise ValueError(f"weight {text!r} has {len(lam)} coordinates; expected {rank}")
    return lam


def parse_word(datum: RootDatum, text: str) -> tuple[SimpleReflection, ...]:
    """Parse a comma-separated generator word like ``s1,s0`` or ``s,s0:2``.

    ``s`` is accepted for the unique finite generator of a rank-one diagram
    and ``s0`` for the affine generator of a connected diagram.
    """
    text = text.strip()
    if not text:
        return ()
    simples = simple_reflections(datum)
    by_label = {s.label: s for s in simples}
    finite = [s for s in simples if s.kind == "finite"]
    affine = [s for s in simples if s.kind == "affine"]
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in by_label:
            out.append(by_label[tok])
        elif tok == "s" and len(finite) == 1:
            out.append(finite[0])
        elif tok == "s0" and len(affine) == 1:
            out.append(affine[0])
        else:
            raise ValueError(f"unknown generator {tok!r}; "
                             f"known: {', '.join(s.label for s in simples)}")
    return tuple(out)


def word_elt(datum: RootDatum, word) -> AffineElt:
    out = affine_identity(datum)
    for s in word:
        out = mul_simple(out, s)
    return out
