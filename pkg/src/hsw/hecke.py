"""The affine Hecke algebra in its standard basis.

Elements are finite sums of basis symbols T_x over extended affine Weyl
group elements x, with Laurent coefficients.  Right multiplication by a
generator follows

    T_y T_s = T_{ys}                      when l(ys) > l(y)
    T_y T_s = T_{ys} + (v - v^-1) T_y     when l(ys) < l(y)

and T_y T_om = T_{y om} for length-zero om.  General products factor the
right operand through its reduced word.  The commutative family theta_lam
is defined by theta_lam = T_{t_mu} T_{t_nu}^{-1} for any splitting
lam = mu - nu into dominant weights; independence of the splitting is part
of the verified relation battery.
"""

from __future__ import annotations

from .affine import (AffineElt, SimpleReflection, affine_elt, affine_identity,
                     from_weyl, mul_simple, reduced_word, simple_reflections,
                     translation)
from .laurent import ONE, ZERO, LaurentPoly, v_power
from .rootdata import RootDatum, pair, vec_add, vec_scale, vec_sub

_XI = LaurentPoly({1: 1, -1: -1})  # v - v^-1


class _HeckeState:
    def __init__(self):
        self.inv_T: dict[AffineElt, "HeckeElt"] = {}
        self.bar_T: dict[AffineElt, "HeckeElt"] = {}
        self.theta: dict[tuple, "HeckeElt"] = {}
        self.units_dominant: bool | None = None


def _hstate(datum: RootDatum) -> _HeckeState:
    st = getattr(datum, "_hecke_state", None)
    if st is None:
        st = _HeckeState()
        datum._hecke_state = st
    return st


class HeckeElt:
    """A finite Laurent-combination of standard basis symbols T_x."""

    __slots__ = ("datum", "_m")

    def __init__(self, datum: RootDatum, terms: dict[AffineElt, LaurentPoly]):
        self.datum = datum
        self._m = terms

    # -- constructors ------------------------------------------------------------

    @staticmethod
    def zero(datum: RootDatum) -> "HeckeElt":
        return HeckeElt(datum, {})

    @staticmethod
    def one(datum: RootDatum) -> "HeckeElt":
        return HeckeElt(datum, {affine_identity(datum): ONE})

    @staticmethod
    def basis(x: AffineElt) -> "HeckeElt":
        return HeckeElt(x.datum, {x: ONE})

    @staticmethod
    def from_terms(datum: RootDatum, items) -> "HeckeElt":
        m: dict[AffineElt, LaurentPoly] = {}
        for x, c in items:
            c = LaurentPoly.coerce(c)
            s = m.get(x, ZERO) + c
            if s:
                m[x] = s
            elif x in m:
                del m[x]
        return HeckeElt(datum, m)

    # -- inspection --------------------------------------------------------------

    def coeff(self, x: AffineElt) -> LaurentPoly:
        return self._m.get(x, ZERO)

    def support(self) -> list[AffineElt]:
        return [x for x, _ in self.items()]

    def items(self) -> list[tuple[AffineElt, LaurentPoly]]:
        """Terms sorted by (length, translation part, matrix) for determinism."""
        return sorted(self._m.items(), key=lambda kv: (kv[0].length, kv[0].lam, kv[0].w.matrix))

    def is_zero(self) -> bool:
        return not self._m

    def __bool__(self) -> bool:
        return bool(self._m)

    # -- linear structure ----------------------------------------------------------

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        m = dict(self._m)
        for x, c in other._m.items():
            s = m.get(x)
            s = c if s is None else s + c
            if s:
                m[x] = s
            elif x in m:
                del m[x]
        return HeckeElt(self.datum, m)

    def __neg__(self) -> "HeckeElt":
        return HeckeElt(self.datum, {x: -c for x, c in self._m.items()})

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + (-other)

    def scale(self, c) -> "HeckeElt":
        c = LaurentPoly.coerce(c)
        if not c:
            return HeckeElt.zero(self.datum)
        return HeckeElt(self.datum, {x: a * c for x, a in self._m.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return hecke_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HeckeElt):
            return self._m == other._m
        return NotImplemented

    def __hash__(self):
        raise TypeError("HeckeElt is mutable-adjacent; not hashable")

    # -- rendering ----------------------------------------------------------------

    def __repr__(self) -> str:
        if not self._m:
            return "HeckeElt(0)"
        bits = []
        for x, c in self.items():
            wpart = ".".join(f"s{i + 1}" for i in x.w.reduced_word()) or "e"
            label = f"T[{wpart} * t{x.lam}]" if any(x.lam) else f"T[{wpart}]"
            coeffs = str(c)
            bits.append(label if coeffs == "1" else f"({coeffs})*{label}")
        return "HeckeElt(" + " + ".join(bits) + ")"

    def to_json(self) -> list[dict]:
        return [{"element": x.to_json(), "coeff": c.to_json()} for x, c in self.items()]


# -- core multiplication ------------------------------------------------------------


def _rmul_simple(datum: RootDatum, m: dict, s: SimpleReflection) -> dict:
    out: dict[AffineElt, LaurentPoly] = {}
    for y, c in m.items():
        ys = mul_simple(y, s)
        a = out.get(ys)
        a = c if a is None else a + c
        if a:
            out[ys] = a
        elif ys in out:
            del out[ys]
        if ys.length < y.length:
            d = c * _XI
            a = out.get(y)
            a = d if a is None else a + d
            if a:
                out[y] = a
            elif y in out:
                del out[y]
    return out


def _rmul_simple_inv(datum: RootDatum, m: dict, s: SimpleReflection) -> dict:
    # T_s^{-1} = T_s - (v - v^-1)
    out = _rmul_simple(datum, m, s)
    for y, c in m.items():
        d = c * _XI
        a = out.get(y)
        a = -d if a is None else a - d
        if a:
            out[y] = a
        elif y in out:
            del out[y]
    return out


def _rmul_omega(datum: RootDatum, m: dict, om: AffineElt) -> dict:
    if om.is_identity():
        return m
    return {y * om: c for y, c in m.items()}


def hecke_mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """Product in the standard basis, factoring b through reduced words."""
    if a.datum is not b.datum:
        raise ValueError("operands live over different data")
    datum = a.datum
    acc: dict[AffineElt, LaurentPoly] = {}
    for x, c in b._m.items():
        om, word = reduced_word(x)
        cur = _rmul_omega(datum, a._m, om)
        for s in word:
            cur = _rmul_simple(datum, cur, s)
        for y, d in cur.items():
            t = d * c
            s0 = acc.get(y)
            s0 = t if s0 is None else s0 + t
            if s0:
                acc[y] = s0
            elif y in acc:
                del acc[y]
    return HeckeElt(datum, acc)


def hecke_T(x: AffineElt) -> HeckeElt:
    return HeckeElt.basis(x)


def hecke_inv_T(x: AffineElt) -> HeckeElt:
    """The inverse of the basis symbol T_x."""
    st = _hstate(x.datum)
    cached = st.inv_T.get(x)
    if cached is not None:
        return cached
    om, word = reduced_word(x)
    cur = {affine_identity(x.datum): ONE}
    for s in reversed(word):
        cur = _rmul_simple_inv(x.datum, cur, s)
    cur = _rmul_omega(x.datum, cur, om.inverse())
    out = HeckeElt(x.datum, cur)
    st.inv_T[x] = out
    return out


def hecke_bar_T(x: AffineElt) -> HeckeElt:
    """bar(T_x) = (T_{x^{-1}})^{-1}."""
    st = _hstate(x.datum)
    cached = st.bar_T.get(x)
    if cached is not None:
        return cached
    out = hecke_inv_T(x.inverse())
    st.bar_T[x] = out
    return out


def hecke_bar(a: HeckeElt) -> HeckeElt:
    """The bar involution: v -> v^-1 on coefficients, T_x -> (T_{x^-1})^-1."""
    acc = HeckeElt.zero(a.datum)
    for x, c in a._m.items():
        acc = acc + hecke_bar_T(x).scale(c.bar())
    return acc


# -- the commutative family -----------------------------------------------------------


def _dominant_split(datum: RootDatum, lam: tuple) -> tuple[tuple, tuple]:
    """Split lam = mu - nu with mu, nu dominant."""
    st = _hstate(datum)
    if st.units_dominant is None:
        st.units_dominant = all(
            datum.is_dominant(tuple(int(i == j) for j in range(datum.rank)))
            for i in range(datum.rank))
    if st.units_dominant:
        mu = tuple(max(x, 0) for x in lam)
        nu = tuple(max(-x, 0) for x in lam)
        return mu, nu
    # fall back to a strictly dominant corrector: <2rho, alpha_i-check> = 2
    two_rho = datum.two_rho()
    worst = min(pair(lam, c) for c in datum.simple_coroots)
    k = (-worst + 1) // 2 if worst < 0 else 0
    nu = vec_scale(k, two_rho)
    return vec_add(lam, nu), nu


def hecke_theta(datum: RootDatum, lam) -> HeckeElt:
    """The commuting basis element attached to a weight.

    For dominant lam this is v^0 T_{t_lam}; in general it is the ratio
    T_{t_mu} T_{t_nu}^{-1} for a dominant splitting, independent of choice.
    """
    lam = tuple(int(x) for x in lam)
    st = _hstate(datum)
    cached = st.theta.get(lam)
    if cached is not None:
        return cached
    mu, nu = _dominant_split(datum, lam)
    if not datum.is_dominant(mu) or not datum.is_dominant(nu):
        raise RuntimeError(f"dominant splitting failed for {lam}")
    out = hecke_T(translation(datum, mu))
    if any(nu):
        out = hecke_mul(out, hecke_inv_T(translation(datum, nu)))
    st.theta[lam] = out
    return out


# -- relation batteries -----------------------------------------------------------------


def verify_quadratic_affine(datum: RootDatum) -> list[dict]:
    """(T_s0 + v^-1)(T_s0 - v) = 0 for every affine generator, from the rule."""
    rows = []
    one = HeckeElt.one(datum)
    for s in simple_reflections(datum):
        if s.kind != "affine":
            continue
        t = hecke_T(s.elt)
        prod = hecke_mul(t + one.scale(v_power(-1)), t - one.scale(v_power(1)))
        rows.append({"relation": "quadratic", "generator": s.label,
                     "pass": prod.is_zero()})
    return rows


def verify_quadratic_all(datum: RootDatum) -> list[dict]:
    rows = []
    one = HeckeElt.one(datum)
    for s in simple_reflections(datum):
        t = hecke_T(s.elt)
        prod = hecke_mul(t + one.scale(v_power(-1)), t - one.scale(v_power(1)))
        rows.append({"relation": "quadratic", "generator": s.label,
                     "pass": prod.is_zero()})
    return rows


def _weights_box(rank: int, bound: int):
    out = [()]
    for _ in range(rank):
        out = [w + (x,) for w in out for x in range(-bound, bound + 1)]
    return out


def verify_bernstein(datum: RootDatum, box: int) -> list[dict]:
    """The four defining relations of the commutative family, on a box.

    Checks, in the standard basis:
      B1  T_v T_w = T_{vw} when finite lengths add
      B2  theta_lam theta_mu = theta_{lam+mu} for all lam, mu in the box
      B3  T_s theta_lam = theta_lam T_s when <lam, alpha_s-check> = 0
      B4  theta_lam = T_s theta_{lam - alpha_s} T_s when <lam, alpha_s-check> = 1
    """
    rows = []
    w_elts = datum.weyl_elements()
    for vw in w_elts:
        for ww in w_elts:
            if vw.length + ww.length != (vw * ww).length:
                continue
            lhs = hecke_mul(hecke_T(from_weyl(vw)), hecke_T(from_weyl(ww)))
            ok = lhs == hecke_T(from_weyl(vw * ww))
            rows.append({"relation": "B1", "case": f"{vw!r}*{ww!r}", "pass": ok})
    box_weights = _weights_box(datum.rank, box)
    for lam in box_weights:
        for mu in box_weights:
            lhs = hecke_mul(hecke_theta(datum, lam), hecke_theta(datum, mu))
            ok = lhs == hecke_theta(datum, vec_add(lam, mu))
            rows.append({"relation": "B2", "case": f"{lam}+{mu}", "pass": ok})
    finite = [s for s in simple_reflections(datum) if s.kind == "finite"]
    for s in finite:
        ts = hecke_T(s.elt)
        for lam in box_weights:
            p = pair(lam, datum.simple_coroots[s.index])
            th = hecke_theta(datum, lam)
            if p == 0:
                ok = hecke_mul(ts, th) == hecke_mul(th, ts)
                rows.append({"relation": "B3", "case": f"{s.label},{lam}", "pass": ok})
            elif p == 1:
                shifted = hecke_theta(datum, vec_sub(lam, datum.simple_roots[s.index]))
                ok = th == hecke_mul(hecke_mul(ts, shifted), ts)
                rows.append({"relation": "B4", "case": f"{s.label},{lam}", "pass": ok})
    return rows
