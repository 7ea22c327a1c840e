"""The spherical right module over the affine Hecke algebra.

The module has a basis m_lam indexed by weights.  The projection sends a
standard basis symbol T_x with x = u * m (u finite, m the shortest element
of its translation coset) to v^{l(u)} m_lam.  Characters of Bott-Samelson
type are built by acting with C_s = T_s + v^-1 on the basepoint m_0, an
optional length-zero twist in front.

The canonical basis is computed by the standard bar-triangular recursion:
start from a product of C_s factors (bar-invariant by construction) and
strip symmetrized coefficients at lower terms until every off-top
coefficient lies in v^-1 Z[v^-1].
"""

from __future__ import annotations

from .affine import (AffineElt, SimpleReflection, min_rep, mul_simple,
                     reduced_word, simple_reflections)
from .hecke import HeckeElt, hecke_T, hecke_bar_T, hecke_mul
from .laurent import ONE, ZERO, LaurentPoly, v_power
from .rootdata import RootDatum, Vec

_VINV = v_power(-1)
_XI = LaurentPoly({1: 1, -1: -1})


class _SphState:
    def __init__(self):
        self.act_simple: dict[tuple, dict] = {}
        self.bar_basis: dict[Vec, "SphElt"] = {}
        self.canonical: dict[Vec, "SphElt"] = {}
        self.coset: dict[AffineElt, tuple[int, Vec]] = {}


def _sstate(datum: RootDatum) -> _SphState:
    st = getattr(datum, "_sph_state", None)
    if st is None:
        st = _SphState()
        datum._sph_state = st
    return st


def _coset(x: AffineElt) -> tuple[int, Vec]:
    """(l(u), lam) for the decomposition x = u * m_lam."""
    st = _sstate(x.datum)
    cached = st.coset.get(x)
    if cached is not None:
        return cached
    m = min_rep(x.datum, x.lam)
    ulen = x.length - m.length
    if ulen < 0:
        raise RuntimeError("coset decomposition violated length additivity")
    st.coset[x] = (ulen, x.lam)
    return st.coset[x]


class SphElt:
    """A finite Laurent-combination of basis symbols m_lam."""

    __slots__ = ("datum", "_m")

    def __init__(self, datum: RootDatum, terms: dict[Vec, LaurentPoly]):
        self.datum = datum
        self._m = terms

    @staticmethod
    def zero(datum: RootDatum) -> "SphElt":
        return SphElt(datum, {})

    @staticmethod
    def basis(datum: RootDatum, lam) -> "SphElt":
        return SphElt(datum, {tuple(int(x) for x in lam): ONE})

    def coeff(self, lam) -> LaurentPoly:
        return self._m.get(tuple(lam), ZERO)

    def support(self) -> list[Vec]:
        return [lam for lam, _ in self.items()]

    def items(self) -> list[tuple[Vec, LaurentPoly]]:
        """Terms sorted by descending (l(w_lam), lam): leading term first."""
        return sorted(self._m.items(),
                      key=lambda kv: (-min_rep(self.datum, kv[0]).length,
                                      tuple(-x for x in kv[0])))

    def is_zero(self) -> bool:
        return not self._m

    def __bool__(self) -> bool:
        return bool(self._m)

    def __add__(self, other: "SphElt") -> "SphElt":
        m = dict(self._m)
        for k, c in other._m.items():
            s = m.get(k)
            s = c if s is None else s + c
            if s:
                m[k] = s
            elif k in m:
                del m[k]
        return SphElt(self.datum, m)

    def __neg__(self) -> "SphElt":
        return SphElt(self.datum, {k: -c for k, c in self._m.items()})

    def __sub__(self, other: "SphElt") -> "SphElt":
        return self + (-other)

    def scale(self, c) -> "SphElt":
        c = LaurentPoly.coerce(c)
        if not c:
            return SphElt.zero(self.datum)
        return SphElt(self.datum, {k: a * c for k, a in self._m.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return sph_act(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SphElt):
            return self._m == other._m
        return NotImplemented

    def __hash__(self):
        raise TypeError("SphElt is not hashable")

    def __repr__(self) -> str:
        if not self._m:
            return "SphElt(0)"
        bits = []
        for lam, c in self.items():
            coeffs = str(c)
            label = "m[" + ",".join(str(x) for x in lam) + "]"
            bits.append(label if coeffs == "1" else f"({coeffs})*{label}")
        return "SphElt(" + " + ".join(bits) + ")"

    def to_json(self) -> list[dict]:
        return [{"weight": list(lam), "coeff": c.to_json()} for lam, c in self.items()]


def m_zero(datum: RootDatum) -> SphElt:
    return SphElt.basis(datum, (0,) * datum.rank)


def sph_project(h: HeckeElt) -> SphElt:
    """Project from the algebra: T_x -> v^{l(u)} m_lam for x = u * m_lam."""
    acc: dict[Vec, LaurentPoly] = {}
    for x, c in h._m.items():
        ulen, lam = _coset(x)
        t = c * v_power(ulen) if ulen else c
        s = acc.get(lam)
        s = t if s is None else s + t
        if s:
            acc[lam] = s
        elif lam in acc:
            del acc[lam]
    return SphElt(h.datum, acc)


def sph_act(m: SphElt, h: HeckeElt) -> SphElt:
    """Right action: m_lam * h = projection of T_{w_lam} h."""
    datum = m.datum
    acc = SphElt.zero(datum)
    for lam, c in m._m.items():
        prod = hecke_mul(hecke_T(min_rep(datum, lam)), h)
        acc = acc + sph_project(prod).scale(c)
    return acc


def _act_cs(m: SphElt, s: SimpleReflection) -> SphElt:
    """Act by C_s = T_s + v^-1, with the basis action cached per weight."""
    datum = m.datum
    st = _sstate(datum)
    acc: dict[Vec, LaurentPoly] = {}

    def bump(key: Vec, val: LaurentPoly) -> None:
        cur = acc.get(key)
        cur = val if cur is None else cur + val
        if cur:
            acc[key] = cur
        elif key in acc:
            del acc[key]

    for lam, c in m._m.items():
        key = (lam, s.label)
        cached = st.act_simple.get(key)
        if cached is None:
            w = min_rep(datum, lam)
            ws = mul_simple(w, s)
            ulen, mu = _coset(ws)
            cached = {mu: v_power(ulen)}
            if ws.length < w.length:
                cur = cached.get(lam, ZERO) + _XI
                if cur:
                    cached[lam] = cur
                elif lam in cached:
                    del cached[lam]
            st.act_simple[key] = cached
        for mu, d in cached.items():
            bump(mu, c * d)
        bump(lam, c * _VINV)
    return SphElt(datum, acc)


def bs_char(datum: RootDatum, omega: AffineElt, word) -> SphElt:
    """The module character of the twisted generator chain (omega, word)."""
    if omega.length != 0:
        raise ValueError("the twist in front of a generator chain must have length zero")
    m = SphElt.basis(datum, omega.lam)
    for s in word:
        m = _act_cs(m, s)
    return m


def fl_bs_char(datum: RootDatum, word) -> HeckeElt:
    """The same chain built in the algebra: the product of C_s factors."""
    one = HeckeElt.one(datum)
    out = one
    for s in word:
        cs = hecke_T(s.elt) + one.scale(_VINV)
        out = hecke_mul(out, cs)
    return out


def sph_pairing(a: SphElt, b: SphElt) -> LaurentPoly:
    """The bilinear-after-bar pairing: sum over weights of bar(c) * bar(d)."""
    out = ZERO
    small, big = (a, b) if len(a._m) <= len(b._m) else (b, a)
    for lam, c in small._m.items():
        d = big._m.get(lam)
        if d is not None:
            out = out + c.bar() * d.bar()
    return out


def hom_rank(datum: RootDatum, left: tuple, right: tuple) -> LaurentPoly:
    """Graded rank prediction for morphisms between two generator chains."""
    a = bs_char(datum, left[0], left[1])
    b = bs_char(datum, right[0], right[1])
    return sph_pairing(a, b)


def _bar_basis(datum: RootDatum, lam: Vec) -> SphElt:
    st = _sstate(datum)
    cached = st.bar_basis.get(lam)
    if cached is None:
        cached = sph_project(hecke_bar_T(min_rep(datum, lam)))
        st.bar_basis[lam] = cached
    return cached


def sph_bar(m: SphElt) -> SphElt:
    """The bar involution of the module, semilinear over the algebra bar."""
    acc = SphElt.zero(m.datum)
    for lam, c in m._m.items():
        acc = acc + _bar_basis(m.datum, lam).scale(c.bar())
    return acc


def canonical_basis(datum: RootDatum, lam) -> SphElt:
    """The bar-invariant basis element with top term m_lam.

    Characterized by bar-invariance together with c = m_lam + (terms with
    coefficients in v^-1 Z[v^-1] at weights of strictly smaller coset length).
    """
    lam = tuple(int(x) for x in lam)
    st = _sstate(datum)
    cached = st.canonical.get(lam)
    if cached is not None:
        return cached
    w = min_rep(datum, lam)
    om, word = reduced_word(w)
    cur = bs_char(datum, om, word)
    top_len = w.length
    while True:
        bad = [(min_rep(datum, mu).length, mu, f)
               for mu, f in cur._m.items()
               if mu != lam and not f.in_v_inverse()]
        if not bad:
            break
        blen, mu, f = max(bad, key=lambda t: (t[0], t[1]))
        if blen >= top_len:
            raise RuntimeError(
                f"triangularity failed at {mu} (length {blen} >= {top_len})")
        cur = cur - canonical_basis(datum, mu).scale(f.sym_complete())
    if cur.coeff(lam) != ONE:
        raise RuntimeError(f"leading coefficient at {lam} is {cur.coeff(lam)}, not 1")
    st.canonical[lam] = cur
    return cur


def decompose_bs(datum: RootDatum, omega: AffineElt, word) -> dict[Vec, LaurentPoly]:
    """Expand a generator chain over the canonical basis (characteristic 0).

    Returns the multiplicity map weight -> Laurent coefficient; the chain
    equals the sum of coefficient * canonical element over the map.
    """
    rest = bs_char(datum, omega, word)
    out: dict[Vec, LaurentPoly] = {}
    while rest:
        blen, mu = max((min_rep(datum, mu).length, mu) for mu in rest._m)
        f = rest.coeff(mu)
        out[mu] = f
        rest = rest - canonical_basis(datum, mu).scale(f)
        if mu in rest._m:
            raise RuntimeError("decomposition failed to clear the leading term")
    return out
