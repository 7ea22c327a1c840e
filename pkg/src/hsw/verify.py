"""Cross-checks wiring the independent computation paths against each other.

Each check returns a report dictionary with a verdict, the number of cases
inspected, and a short list of failing cases; ``run_suite`` collects them.
The command line ``verify`` verb prints these reports and the test suite
asserts on them.
"""

from __future__ import annotations

import itertools
import random
import time

from .affine import (affine_identity, omega_elements, reduced_word,
                     simple_reflections)
from .hecke import hecke_mul, hecke_T, verify_bernstein, verify_quadratic_all
from .laurent import ONE, LaurentPoly
from .qanalogue import freudenthal_mult, kato_grid, lusztig_q, weights_of_irrep
from .rootdata import RootDatum
from .spherical import (bs_char, canonical_basis, decompose_bs, fl_bs_char,
                        sph_act, sph_bar, sph_project)


def _twists(datum: RootDatum):
    """Length-zero elements to seed walks from; just the identity when the
    fundamental group is infinite."""
    if datum.fundamental_group_order() is None:
        return (affine_identity(datum),)
    return omega_elements(datum)


def _report(name: str, checked: int, failures: list, started: float,
            detail: str = "") -> dict:
    return {
        "name": name,
        "pass": not failures,
        "checked": checked,
        "failures": [str(f) for f in failures[:8]],
        "seconds": round(time.time() - started, 3),
        "detail": detail,
    }


def check_quadratic(datum: RootDatum) -> dict:
    """Every generator satisfies the quadratic relation."""
    started = time.time()
    rows = verify_quadratic_all(datum)
    bad = [r["generator"] for r in rows if not r["pass"]]
    return _report("quadratic", len(rows), bad, started,
                   detail="finite and affine generators")


def check_bernstein(datum: RootDatum, box: int = 1) -> dict:
    """The defining relations of the commutative family on a coordinate box."""
    started = time.time()
    rows = verify_bernstein(datum, box)
    bad = [f"{r['relation']}:{r['case']}" for r in rows if not r["pass"]]
    return _report("bernstein", len(rows), bad, started, detail=f"box={box}")


def check_length_bfs(datum: RootDatum, max_len: int = 4) -> dict:
    """The closed length formula equals word distance from the length-zero set.

    Breadth-first search over right multiplication by the generators grows
    the group layer by layer; the layer index must match the formula on
    every element reached.
    """
    started = time.time()
    simples = simple_reflections(datum)
    frontier = list(_twists(datum))
    seen = {x: 0 for x in frontier}
    bad = [f"omega {x!r} has length {x.length}" for x in frontier if x.length != 0]
    dist = 0
    while frontier and dist < max_len:
        dist += 1
        nxt = []
        for x in frontier:
            for s in simples:
                y = x * s.elt
                if y not in seen:
                    seen[y] = dist
                    nxt.append(y)
        frontier = nxt
    for x, k in seen.items():
        if x.length != k:
            bad.append(f"{x!r}: formula {x.length}, word distance {k}")
    return _report("length", len(seen), bad, started,
                   detail=f"max_len={max_len}, elements={len(seen)}")


def weights_by_length(datum: RootDatum, max_len: int) -> list:
    """All weights whose coset representative has length at most max_len."""
    from .affine import min_rep
    if datum.fundamental_group_order() is None:
        raise ValueError("this datum has central directions; the set is infinite")
    bound = max_len + datum.longest_element().length
    out = []
    for lam in itertools.product(range(-bound, bound + 1), repeat=datum.rank):
        if min_rep(datum, lam).length <= max_len:
            out.append(lam)
    out.sort()
    return out


def check_canonical(datum: RootDatum, max_len: int = 3) -> dict:
    """Shape of the bar-invariant basis on all weights up to a length bound.

    For each weight: bar-invariance, unitriangularity with strictly lower
    terms in negative powers only, nonnegative coefficients, and a
    nonnegative expansion of the corresponding chain character.
    """
    started = time.time()
    from .affine import min_rep
    bad = []
    weights = weights_by_length(datum, max_len)
    for lam in weights:
        b = canonical_basis(datum, lam)
        if sph_bar(b) != b:
            bad.append(f"{lam}: not bar invariant")
            continue
        top_len = min_rep(datum, lam).length
        if b.coeff(lam) != ONE:
            bad.append(f"{lam}: leading coefficient {b.coeff(lam)}")
        for mu in b.support():
            if mu == lam:
                continue
            c = b.coeff(mu)
            if min_rep(datum, mu).length >= top_len:
                bad.append(f"{lam}: term at {mu} is not strictly lower")
            if not c.in_v_inverse():
                bad.append(f"{lam}: coefficient at {mu} is {c}")
            if not c.is_nonnegative():
                bad.append(f"{lam}: negative coefficient at {mu}")
        omega, word = reduced_word(min_rep(datum, lam))
        mults = decompose_bs(datum, omega, word)
        for mu, c in mults.items():
            if not c.is_nonnegative():
                bad.append(f"{lam}: chain multiplicity at {mu} is {c}")
        if mults.get(lam) != ONE:
            bad.append(f"{lam}: chain does not contain its own weight once")
    return _report("canonical", len(weights), bad, started,
                   detail=f"max_len={max_len}, weights={len(weights)}")


def check_kato(datum: RootDatum, max_len: int = 3) -> dict:
    """Canonical-basis coefficients against graded weight multiplicities."""
    started = time.time()
    rows = kato_grid(datum, max_len)
    bad = [f"{r['lambda']},{r['mu']}: {r['lhs']} vs {r['rhs']}"
           for r in rows if not r["pass"]]
    return _report("kato", len(rows), bad, started, detail=f"max_len={max_len}")


def check_multiplicity(datum: RootDatum, box: int = 1) -> dict:
    """Graded multiplicities at q = 1 against the Freudenthal recursion."""
    started = time.time()
    checked = 0
    bad = []
    for eta in itertools.product(range(box + 1), repeat=datum.rank):
        if not datum.is_dominant(eta):
            continue
        for chi in weights_of_irrep(datum, eta):
            graded = lusztig_q(datum, chi, eta)
            if graded.at_one() != freudenthal_mult(datum, eta, chi):
                bad.append(f"eta={eta}, chi={chi}")
            checked += 1
    return _report("multiplicity", checked, bad, started, detail=f"box={box}")


def check_projection(datum: RootDatum, n_random: int = 100, max_len: int = 3,
                     seed: int = 7) -> dict:
    """Projection intertwines the products: act(project(a), b) = project(a*b)."""
    started = time.time()
    rng = random.Random(seed)
    simples = simple_reflections(datum)
    omegas = _twists(datum)

    def random_elt():
        x = rng.choice(omegas)
        for _ in range(rng.randrange(max_len + 1)):
            x = x * rng.choice(simples).elt
        return x

    bad = []
    for _ in range(n_random):
        x, y = random_elt(), random_elt()
        a, b = hecke_T(x), hecke_T(y)
        if sph_act(sph_project(a), b) != sph_project(hecke_mul(a, b)):
            bad.append(f"x={x!r}, y={y!r}")
    return _report("projection", n_random, bad, started,
                   detail=f"max_len={max_len}, seed={seed}")


def check_pushforward(datum: RootDatum, max_word: int = 3) -> dict:
    """Chains built in the algebra project onto chains built in the module."""
    started = time.time()
    simples = simple_reflections(datum)
    checked = 0
    bad = []
    for omega in _twists(datum):
        t_om = hecke_T(omega)
        for n in range(max_word + 1):
            for word in itertools.product(simples, repeat=n):
                lhs = sph_project(hecke_mul(t_om, fl_bs_char(datum, word)))
                if lhs != bs_char(datum, omega, word):
                    bad.append(f"omega={omega!r}, word={[s.label for s in word]}")
                checked += 1
    return _report("pushforward", checked, bad, started, detail=f"max_word={max_word}")


def check_oracle(datum: RootDatum, max_word: int | None = None,
                 cutoff: int = 16) -> dict:
    """Graded Hom ranks of chain modules against the pairing prediction.

    In rank one the whole alphabet is available; otherwise only the finite
    wall atoms exist and affine letters are skipped.
    """
    started = time.time()
    from .soergel import oracle_vs_hecke
    if max_word is None:
        max_word = 2 if datum.rank == 1 else 1
    simples = simple_reflections(datum)
    if datum.rank == 1 and datum.nsimples == 1:
        alphabet = list(simples)
    else:
        alphabet = [s for s in simples if s.kind == "finite"]
    e = affine_identity(datum)
    chains = [(om, ()) for om in _twists(datum)]
    for n in range(1, max_word + 1):
        for word in itertools.product(alphabet, repeat=n):
            chains.append((e, word))
    bad = []
    rows = 0
    for left in chains:
        for right in chains:
            row = oracle_vs_hecke(datum, left, right, cutoff=cutoff)
            rows += 1
            if not row["pass"]:
                bad.append(f"{row['left']} vs {row['right']}: "
                           f"{row['oracle']} != {row['predicted']}")
    return _report("oracle", rows, bad, started,
                   detail=f"max_word={max_word}, cutoff={cutoff}, chains={len(chains)}")


def check_modules(datum: RootDatum, seed: int = 7, n_random: int = 6) -> dict:
    """Structural laws of the module category on random small chains.

    Construction itself validates commutation and homogeneity; on top of
    that the tensor product must be associative, unital, and multiplicative
    on graded ranks, and rank-one twists must compose.
    """
    started = time.time()
    from .affine import translation
    from .soergel import atom_E, atom_for, bs_module, modules_equal, tensor
    rng = random.Random(seed)
    simples = simple_reflections(datum)
    if datum.rank == 1 and datum.nsimples == 1:
        alphabet = list(simples)
    else:
        alphabet = [s for s in simples if s.kind == "finite"]
    e = affine_identity(datum)
    unit = atom_E(datum, e)
    bad = []
    checked = 0
    for _ in range(n_random):
        word = tuple(rng.choice(alphabet) for _ in range(rng.randrange(1, 4)))
        m = bs_module(datum, e, word)
        if m.grk() != _word_grk(datum, word):
            bad.append(f"grk of {[s.label for s in word]}")
        if not modules_equal(tensor(unit, m), m):
            bad.append(f"left unit on {[s.label for s in word]}")
        if not modules_equal(tensor(m, unit), m):
            bad.append(f"right unit on {[s.label for s in word]}")
        checked += 3
    for _ in range(n_random):
        atoms = [atom_for(datum, rng.choice(alphabet)) for _ in range(3)]
        lhs = tensor(tensor(atoms[0], atoms[1]), atoms[2])
        rhs = tensor(atoms[0], tensor(atoms[1], atoms[2]))
        if not modules_equal(lhs, rhs):
            bad.append("associativity on random atoms")
        checked += 1
    box = [t for t in itertools.product(range(-1, 2), repeat=datum.rank)]
    for _ in range(n_random):
        x = rng.choice(_twists(datum)) * translation(datum, rng.choice(box))
        y = rng.choice(_twists(datum)) * translation(datum, rng.choice(box))
        if not modules_equal(tensor(atom_E(datum, x), atom_E(datum, y)), atom_E(datum, x * y)):
            bad.append(f"twist composition at {x!r}, {y!r}")
        checked += 1
    return _report("modules", checked, bad, started, detail=f"seed={seed}")


def _word_grk(datum: RootDatum, word) -> LaurentPoly:
    from .laurent import v_power
    out = ONE
    for _ in word:
        out = out * (v_power(-1) + v_power(1))
    return out


CHECKS = {
    "quadratic": check_quadratic,
    "bernstein": check_bernstein,
    "length": check_length_bfs,
    "canonical": check_canonical,
    "kato": check_kato,
    "multiplicity": check_multiplicity,
    "projection": check_projection,
    "pushforward": check_pushforward,
    "oracle": check_oracle,
    "modules": check_modules,
}

FAST_CHECKS = ("quadratic", "length", "projection", "pushforward", "modules")


def run_suite(datum: RootDatum, names=None, **knobs) -> list[dict]:
    """Run the named checks (all by default) with per-check keyword knobs.

    knobs maps a check name to a dict of keyword arguments for it, for
    example run_suite(d, bernstein={"box": 2}).
    """
    if names is None:
        names = list(CHECKS)
    reports = []
    for name in names:
        fn = CHECKS.get(name)
        if fn is None:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
        reports.append(fn(datum, **knobs.get(name, {})))
    return reports
