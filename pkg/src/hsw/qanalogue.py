"""Graded weight multiplicities and their ungraded oracle.

Three layers:

* a q-Kostant partition counter over the positive roots (exact dynamic
  programming on root-lattice coordinates),
* the alternating Weyl sum producing the graded multiplicity polynomial of
  a dominant weight inside an irreducible highest-weight module,
* an independent Freudenthal recursion for the same multiplicity at q = 1,
  using the symmetrized invariant form, exact over the rationals.

The polynomials here live in the variable q; the comparison against module
coefficients substitutes q = v^-2.

All formulas are run through doubled weights (2 eta + 2 rho and friends) so
that every intermediate stays in the integer lattice.
"""

from __future__ import annotations

from fractions import Fraction

from .affine import min_rep
from .laurent import ONE, ZERO, LaurentPoly, laurent_substitute
from .rootdata import (RootDatum, Vec, pair, vec_add, vec_neg, vec_scale,
                       vec_sub)


class _QState:
    def __init__(self):
        self.solver = None
        self.kostant: dict[tuple, LaurentPoly] = {}
        self.partial: dict[tuple, LaurentPoly] = {}
        self.symmetrizer: tuple[int, ...] | None = None
        self.freud: dict[Vec, dict[Vec, int]] = {}
        self.weights: dict[Vec, tuple[Vec, ...]] = {}


def _qstate(datum: RootDatum) -> _QState:
    st = getattr(datum, "_q_state", None)
    if st is None:
        st = _QState()
        datum._q_state = st
    return st


# -- root-lattice coordinates -------------------------------------------------------


def _solver(datum: RootDatum):
    """Pivot rows and inverse submatrix for expanding vectors in simple roots."""
    st = _qstate(datum)
    if st.solver is None:
        n = datum.nsimples
        cols = [list(r) for r in datum.simple_roots]
        pivots: list[int] = []
        work = [[Fraction(cols[j][i]) for j in range(n)] for i in range(datum.rank)]
        used: list[list[Fraction]] = []
        for i in range(datum.rank):
            trial = used + [work[i]]
            if _frac_rank(trial) == len(trial):
                used.append(work[i])
                pivots.append(i)
                if len(pivots) == n:
                    break
        sub = [[Fraction(datum.simple_roots[j][i]) for j in range(n)] for i in pivots]
        inv = _frac_inverse(sub)
        st.solver = (tuple(pivots), inv)
    return st.solver


def _frac_rank(rows) -> int:
    work = [row[:] for row in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(work)) if work[r][c]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        f = work[rank][c]
        work[rank] = [x / f for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][c]:
                g = work[r][c]
                work[r] = [x - g * y for x, y in zip(work[r], work[rank])]
        rank += 1
    return rank


def _frac_inverse(mat):
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        f = aug[c][c]
        aug[c] = [x / f for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                g = aug[r][c]
                aug[r] = [x - g * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def root_coords(datum: RootDatum, vec) -> tuple[Fraction, ...] | None:
    """Coordinates of a vector in the simple roots, or None if outside the span."""
    vec = tuple(int(x) for x in vec)
    pivots, inv = _solver(datum)
    rhs = [Fraction(vec[i]) for i in pivots]
    c = [sum(inv[i][j] * rhs[j] for j in range(len(rhs))) for i in range(len(rhs))]
    for i in range(datum.rank):
        if sum(cc * datum.simple_roots[j][i] for j, cc in enumerate(c)) != vec[i]:
            return None
    return tuple(c)


def root_coords_int(datum: RootDatum, vec) -> Vec | None:
    c = root_coords(datum, vec)
    if c is None or any(x.denominator != 1 for x in c):
        return None
    return tuple(int(x) for x in c)


# -- q-Kostant partitions --------------------------------------------------------------


def kostant_q(datum: RootDatum, beta) -> LaurentPoly:
    """Partition count of beta into positive roots, graded by part count.

    Returns the polynomial sum over unordered decompositions of q^(number of
    parts); zero when beta is not a nonnegative integral root combination.
    """
    st = _qstate(datum)
    rc = root_coords_int(datum, beta)
    if rc is None or any(x < 0 for x in rc):
        return ZERO
    cached = st.kostant.get(rc)
    if cached is not None:
        return cached
    roots = sorted((r.root_coords for r in datum.positive_roots()),
                   key=lambda t: (-sum(t), t))
    out = _kostant_rec(st, tuple(roots), 0, rc)
    st.kostant[rc] = out
    return out


def _kostant_rec(st: _QState, roots, i: int, rem: Vec) -> LaurentPoly:
    if not any(rem):
        return ONE
    if i == len(roots):
        return ZERO
    key = (i, rem)
    cached = st.partial.get(key)
    if cached is not None:
        return cached
    rc = roots[i]
    kmax = min(rem[j] // rc[j] for j in range(len(rc)) if rc[j])
    total = ZERO
    cur = rem
    for k in range(kmax + 1):
        if k:
            cur = tuple(a - b for a, b in zip(cur, rc))
        sub = _kostant_rec(st, roots, i + 1, cur)
        if sub:
            total = total + sub * LaurentPoly({k: 1})
    st.partial[key] = total
    return total


# -- graded multiplicity ------------------------------------------------------------------


def lusztig_q(datum: RootDatum, chi, eta) -> LaurentPoly:
    """The graded multiplicity polynomial of weight chi in the module of
    highest weight eta (eta must be dominant), as an alternating Weyl sum of
    q-Kostant values.
    """
    chi = tuple(int(x) for x in chi)
    eta = tuple(int(x) for x in eta)
    if not datum.is_dominant(eta):
        raise ValueError(f"highest weight {eta} must be dominant")
    two_rho = datum.two_rho()
    target = vec_add(vec_scale(2, chi), two_rho)
    out = ZERO
    for w in datum.weyl_elements():
        arg2 = vec_sub(w.act(vec_add(vec_scale(2, eta), two_rho)), target)
        if any(x % 2 for x in arg2):
            raise RuntimeError("doubled weight difference is odd; invariant broken")
        half = tuple(x // 2 for x in arg2)
        term = kostant_q(datum, half)
        if term:
            out = out + term if w.length % 2 == 0 else out - term
    return out


# -- Freudenthal oracle -------------------------------------------------------------------


def _symmetrizer(datum: RootDatum) -> tuple[int, ...]:
    """Minimal positive integers d_i with d_i a_ij = d_j a_ji."""
    st = _qstate(datum)
    if st.symmetrizer is not None:
        return st.symmetrizer
    a = datum.cartan_matrix()
    n = datum.nsimples
    d: list[Fraction | None] = [None] * n
    for comp in datum.components():
        d[comp[0]] = Fraction(1)
        queue = [comp[0]]
        while queue:
            i = queue.pop()
            for j in comp:
                if d[j] is None and a[i][j]:
                    d[j] = d[i] * Fraction(a[i][j], a[j][i])
                    queue.append(j)
    denom_lcm = 1
    for x in d:
        denom_lcm = denom_lcm * x.denominator // _gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    ints = [x // g for x in ints]
    for i in range(n):
        for j in range(n):
            if ints[i] * a[i][j] != ints[j] * a[j][i]:
                raise RuntimeError("symmetrizer failed; Cartan matrix not symmetrizable")
    st.symmetrizer = tuple(ints)
    return st.symmetrizer


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _form(datum: RootDatum, x_coords, y) -> Fraction:
    """Invariant form B(x, y) with x given in root coordinates."""
    d = _symmetrizer(datum)
    total = Fraction(0)
    for j, c in enumerate(x_coords):
        if c:
            total += Fraction(c) * d[j] * pair(y, datum.simple_coroots[j])
    return total


def freudenthal_mult(datum: RootDatum, eta, chi) -> int:
    """Ungraded multiplicity of chi in the module of highest weight eta,
    by the Freudenthal recursion (independent of the alternating sum).
    """
    eta = tuple(int(x) for x in eta)
    chi = tuple(int(x) for x in chi)
    if not datum.is_dominant(eta):
        raise ValueError(f"highest weight {eta} must be dominant")
    st = _qstate(datum)
    memo = st.freud.setdefault(eta, {})
    two_rho = datum.two_rho()
    # doubled arguments throughout: B(2x, 2y) = 4 B(x, y) cancels in the ratio
    eta2 = vec_scale(2, eta)

    def mult(chip: Vec) -> int:
        if chip == eta:
            return 1
        cached = memo.get(chip)
        if cached is not None:
            return cached
        gap = root_coords_int(datum, vec_sub(eta, chip))
        if gap is None or any(x < 0 for x in gap):
            memo[chip] = 0
            return 0
        chip2 = vec_scale(2, chip)
        denom = _form(datum, vec_scale(2, gap), vec_add(vec_add(eta2, chip2), vec_scale(2, two_rho)))
        if denom == 0:
            memo[chip] = 0
            return 0
        total = Fraction(0)
        for r in datum.positive_roots():
            k = 1
            while True:
                mu = vec_add(chip, vec_scale(k, r.vec))
                mup = datum.dominant_rep(mu)
                gap2 = root_coords_int(datum, vec_sub(eta, mup))
                if gap2 is None or any(x < 0 for x in gap2):
                    break
                m = mult(mup)
                if m:
                    total += m * _form(datum, vec_scale(2, r.root_coords),
                                       vec_scale(2, mu))
                k += 1
        val = 2 * total / denom
        if val.denominator != 1:
            raise RuntimeError("Freudenthal recursion produced a non-integer")
        memo[chip] = int(val)
        return memo[chip]

    return mult(datum.dominant_rep(chi))


def weyl_dim(datum: RootDatum, eta) -> int:
    """Dimension of the module of highest weight eta, by the product formula."""
    eta = tuple(int(x) for x in eta)
    if not datum.is_dominant(eta):
        raise ValueError(f"highest weight {eta} must be dominant")
    two_rho = datum.two_rho()
    num, den = 1, 1
    top = vec_add(vec_scale(2, eta), two_rho)
    for r in datum.positive_roots():
        num *= pair(top, r.cov)
        den *= pair(two_rho, r.cov)
    q, rr = divmod(num, den)
    if rr:
        raise RuntimeError("dimension formula produced a non-integer")
    return q


def weights_of_irrep(datum: RootDatum, eta) -> tuple[Vec, ...]:
    """All weights of the module of highest weight eta (with repetitions
    ignored), found by descending simple-root steps inside the saturation.
    """
    eta = tuple(int(x) for x in eta)
    if not datum.is_dominant(eta):
        raise ValueError(f"highest weight {eta} must be dominant")
    st = _qstate(datum)
    cached = st.weights.get(eta)
    if cached is not None:
        return cached

    def inside(chi: Vec) -> bool:
        gap = root_coords_int(datum, vec_sub(eta, datum.dominant_rep(chi)))
        return gap is not None and all(x >= 0 for x in gap)

    seen = {eta}
    queue = [eta]
    head = 0
    while head < len(queue):
        chi = queue[head]
        head += 1
        for a in datum.simple_roots:
            for nxt in (vec_sub(chi, a), vec_add(chi, a)):
                if nxt not in seen and inside(nxt):
                    seen.add(nxt)
                    queue.append(nxt)
    out = tuple(sorted(seen))
    st.weights[eta] = out
    return out


# -- the graded comparison across the two sides ----------------------------------------------


def kato_check(datum: RootDatum, lam, mu) -> dict:
    """Compare a canonical-basis coefficient with a graded multiplicity.

    For dominant lam, mu the coefficient of m_{-mu} in the canonical element
    at -w0(lam), shifted by v^(l(w_{-w0 mu}) - l(w_{-mu})), must equal the
    graded multiplicity polynomial of -w0(mu) in the module of highest
    weight -w0(lam) evaluated at q = v^-2.
    """
    from .spherical import canonical_basis

    lam = tuple(int(x) for x in lam)
    mu = tuple(int(x) for x in mu)
    if not datum.is_dominant(lam) or not datum.is_dominant(mu):
        raise ValueError("both weights must be dominant")
    w0 = datum.longest_element()
    lam_star = vec_neg(w0.act(lam))
    mu_star = vec_neg(w0.act(mu))
    shift = min_rep(datum, mu_star).length - min_rep(datum, vec_neg(mu)).length
    coeff = canonical_basis(datum, lam_star).coeff(vec_neg(mu))
    lhs = coeff * LaurentPoly({shift: 1})
    rhs = laurent_substitute(lusztig_q(datum, mu_star, lam_star), -2)
    return {
        "lambda": list(lam), "mu": list(mu),
        "lhs": lhs.to_json(), "rhs": rhs.to_json(),
        "pass": lhs == rhs,
    }


def dominant_weights_by_length(datum: RootDatum, max_len: int) -> list[Vec]:
    """Dominant weights lam with l(w_{-lam}) <= max_len, by box search."""
    if datum.fundamental_group_order() is None:
        raise ValueError("this datum has central directions; the grid is infinite")
    bound = max_len + datum.longest_element().length
    out = []
    for lam in _box_weights(datum.rank, bound):
        if datum.is_dominant(lam) and min_rep(datum, vec_neg(lam)).length <= max_len:
            out.append(lam)
    return sorted(out)


def _box_weights(rank: int, bound: int):
    out = [()]
    for _ in range(rank):
        out = [w + (x,) for w in out for x in range(-bound, bound + 1)]
    return out


def kato_grid(datum: RootDatum, max_len: int) -> list[dict]:
    """Run the comparison over all dominant pairs within the length bound."""
    lams = dominant_weights_by_length(datum, max_len)
    rows = []
    for lam in lams:
        for mu in lams:
            rows.append(kato_check(datum, lam, mu))
    return rows
