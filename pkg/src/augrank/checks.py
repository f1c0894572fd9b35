"""Randomized and exhaustive identity checks, reusable from the CLI and tests.

Each check returns a :class:`CheckReport`; a failing report names the claim,
the parameters, and the offending entry so conventions can be debugged from
the report alone.
"""

from __future__ import annotations

import random

from .action import (
    cabled_generator_closed_form,
    chain_compose,
    phi,
    phi_left,
    phi_right,
    phi_star,
    tau_closed_form,
)
from .braids import BraidWord, cable, perm, tau_word
from .freealg import NCPoly
from .reporting import CheckReport


def random_word(rng: random.Random, n: int, max_len: int) -> BraidWord:
    length = rng.randint(0, max_len)
    pool = [e for e in range(-(n - 1), n) if e != 0]
    return BraidWord(n, tuple(rng.choice(pool) for _ in range(length)))


def check_chain_rule(n: int, count: int = 200, seed: int = 0, max_len: int = 5) -> CheckReport:
    """Action matrices of a product agree with the letter-fold composition."""
    rng = random.Random(seed)
    diffs = []
    for idx in range(count):
        b1, b2 = random_word(rng, n, max_len), random_word(rng, n, max_len)
        prod = b1 * b2
        if chain_compose(phi_left(b1), phi_left(b2), b1) != phi_left(prod):
            diffs.append({"pair": idx, "side": "L", "beta1": b1.to_text(), "beta2": b2.to_text()})
        if chain_compose(phi_right(b1), phi_right(b2), b1) != phi_right(prod):
            diffs.append({"pair": idx, "side": "R", "beta1": b1.to_text(), "beta2": b2.to_text()})
    return CheckReport(
        claim="chain rule for action matrices",
        parameters={"n": n, "count": count, "seed": seed, "max_len": max_len},
        diffs=diffs,
    )


def check_transpose(n: int, count: int = 200, seed: int = 0, max_len: int = 6) -> CheckReport:
    """Right matrix equals the transpose of the entrywise conjugate of the left."""
    rng = random.Random(seed)
    diffs = []
    for idx in range(count):
        b = random_word(rng, n, max_len)
        if phi_right(b) != phi_left(b).conj_transpose():
            diffs.append({"word": b.to_text(), "index": idx})
    return CheckReport(
        claim="transpose symmetry between left and right matrices",
        parameters={"n": n, "count": count, "seed": seed, "max_len": max_len},
        diffs=diffs,
    )


def check_monomial_structure(n: int, count: int = 100, seed: int = 0, max_len: int = 5) -> CheckReport:
    """Every left-matrix entry is a sum of index chains from perm(beta)(i) to j."""
    rng = random.Random(seed)
    diffs = []
    for idx in range(count):
        b = random_word(rng, n, max_len)
        pm = perm(b)
        m = phi_left(b)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for mon in m.at(i, j).terms:
                    if not mon:
                        if pm(i) != j:
                            diffs.append({"word": b.to_text(), "i": i, "j": j, "bad": "constant"})
                        continue
                    chain_ok = all(mon[t][1] == mon[t + 1][0] for t in range(len(mon) - 1))
                    if mon[0][0] != pm(i) or mon[-1][1] != j or not chain_ok:
                        diffs.append(
                            {"word": b.to_text(), "i": i, "j": j, "bad": str(mon)}
                        )
    return CheckReport(
        claim="left-matrix monomials are chains from the permuted row index",
        parameters={"n": n, "count": count, "seed": seed, "max_len": max_len},
        diffs=diffs,
    )


def check_braid_relations(n: int) -> CheckReport:
    """Both braid relations hold on every generator of the algebra."""
    diffs = []
    gens = [
        NCPoly.gen(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j
    ]
    for i in range(1, n - 1):
        lhs_w, rhs_w = BraidWord(n, (i, i + 1, i)), BraidWord(n, (i + 1, i, i + 1))
        for g in gens:
            if phi(lhs_w, g) != phi(rhs_w, g):
                diffs.append({"relation": f"adjacent {i}", "generator": g.render()})
    for i in range(1, n):
        for j in range(i + 2, n):
            lhs_w, rhs_w = BraidWord(n, (i, j)), BraidWord(n, (j, i))
            for g in gens:
                if phi(lhs_w, g) != phi(rhs_w, g):
                    diffs.append({"relation": f"commuting {i},{j}", "generator": g.render()})
    return CheckReport(
        claim="braid relations hold for the action",
        parameters={"n": n},
        diffs=diffs,
    )


def check_tau_forms(n: int) -> CheckReport:
    """The ascending band word closed form matches the direct action."""
    diffs = []
    for m in range(1, n):
        for p in range(1, n - m + 1):
            w = tau_word(m, p, n)
            for star in (False, True):
                top = n + 1 if star else n
                for i in range(1, top + 1):
                    for j in range(i + 1, top + 1):
                        got = tau_closed_form(m, p, i, j, n, star=star)
                        gen = NCPoly.gen(n, i, j, star=star)
                        want = phi_star(w, gen) if star else phi(w, gen)
                        if got != want:
                            diffs.append(
                                {
                                    "m": m,
                                    "p": p,
                                    "i": i,
                                    "j": "star" if star and j == n + 1 else j,
                                    "lhs": got.render(),
                                    "rhs": want.render(),
                                }
                            )
    return CheckReport(
        claim="ascending band word closed form",
        parameters={"n": n},
        diffs=diffs,
    )


def check_cabled_letter_forms(k: int, p: int) -> CheckReport:
    """The cabled-generator closed form matches the direct action, star slot included."""
    kp = k * p
    diffs = []
    for n_gen in range(1, k):
        cab = cable(BraidWord(k, (n_gen,)), p)
        for star in (False, True):
            top = kp + 1 if star else kp
            for i in range(1, top + 1):
                for j in range(i + 1, top + 1):
                    got = cabled_generator_closed_form(n_gen, p, k, i, j, star=star)
                    gen = NCPoly.gen(kp, i, j, star=star)
                    want = phi_star(cab, gen) if star else phi(cab, gen)
                    if got != want:
                        diffs.append(
                            {
                                "n_gen": n_gen,
                                "i": i,
                                "j": "star" if star and j == kp + 1 else j,
                                "lhs": got.render(),
                                "rhs": want.render(),
                            }
                        )
    return CheckReport(
        claim="cabled generator closed form",
        parameters={"k": k, "p": p},
        diffs=diffs,
    )
