"""Augmentations of braid closures: residuals, rank, search, and construction.

A rank-n augmentation of the closure of beta in B_n is determined by complex
generator values under which both action matrices evaluate to the diagonal
sign matrix of the writhe.  The solver looks for such values by damped
Gauss-Newton (Levenberg-Marquardt style) least squares over seeded random
restarts; the satellite constructor instead produces the values of a
maximal-rank augmentation of a satellite directly from certificates for the
companion and the pattern, with no search.

Numeric fast path: evaluating the action matrices under an assignment never
builds symbolic entries.  Folding the word letter by letter, keep the current
evaluated matrices together with the generator values pushed forward through
each letter's substitution; one letter costs O(n) scalar operations, and the
whole fold is batched over many points at once for finite differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from .braids import BraidWord, Perm, component_count, perm, satellite_braid, tau_word, writhe
from .braids import cable, include_bar
from .action import phi_left
from .freealg import Assignment, Gen, NCPoly
from .reporting import CheckReport
from . import jsonio

ACCEPT_TOL = 1e-9
RANK_REL_THRESHOLD = 1e-8
MU_UNITY_GAP = 1e-12


class MuOneError(ValueError):
    """mu = 1 is outside the theory; rank is undefined there."""


class ConstructionError(RuntimeError):
    """The deterministic satellite construction failed verification."""


def gen_order(n: int) -> list[Gen]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def values_to_array(values: Mapping[Gen, complex], n: int) -> np.ndarray:
    v = np.zeros((n, n), dtype=complex)
    for (i, j), val in values.items():
        v[i - 1, j - 1] = val
    return v


def array_to_values(v: np.ndarray) -> dict[Gen, complex]:
    n = v.shape[-1]
    return {(i, j): complex(v[i - 1, j - 1]) for i, j in gen_order(n)}


# ---------------------------------------------------------------------------
# Numeric letter fold
# ---------------------------------------------------------------------------


def _letter_step(ml: np.ndarray, mr: np.ndarray, v: np.ndarray, e: int) -> np.ndarray:
    """Advance the fold by one letter; updates ml/mr in place, returns new values."""
    n = v.shape[-1]
    k0 = abs(e) - 1
    k1 = k0 + 1
    oth = np.array([t for t in range(n) if t not in (k0, k1)], dtype=int)
    a_k1k = v[..., k1, k0].copy()
    a_kk1 = v[..., k0, k1].copy()
    if e > 0:
        row = -a_k1k[..., None] * ml[..., k0, :] + ml[..., k1, :]
        ml[..., k1, :] = ml[..., k0, :]
        ml[..., k0, :] = row
        col = -a_kk1[..., None] * mr[..., :, k0] + mr[..., :, k1]
        mr[..., :, k1] = mr[..., :, k0]
        mr[..., :, k0] = col
    else:
        row = ml[..., k0, :] - a_kk1[..., None] * ml[..., k1, :]
        ml[..., k0, :] = ml[..., k1, :]
        ml[..., k1, :] = row
        col = mr[..., :, k0] - a_k1k[..., None] * mr[..., :, k1]
        mr[..., :, k0] = mr[..., :, k1]
        mr[..., :, k1] = col
    w = v.copy()
    if e > 0:
        if oth.size:
            w[..., k1, oth] = v[..., k0, oth]
            w[..., oth, k1] = v[..., oth, k0]
            w[..., k0, oth] = v[..., k1, oth] - a_k1k[..., None] * v[..., k0, oth]
            w[..., oth, k0] = v[..., oth, k1] - v[..., oth, k0] * a_kk1[..., None]
        w[..., k0, k1] = -a_k1k
        w[..., k1, k0] = -a_kk1
    else:
        if oth.size:
            w[..., k0, oth] = v[..., k1, oth]
            w[..., oth, k0] = v[..., oth, k1]
            w[..., k1, oth] = v[..., k0, oth] - a_kk1[..., None] * v[..., k1, oth]
            w[..., oth, k1] = v[..., oth, k0] - v[..., oth, k1] * a_k1k[..., None]
        w[..., k0, k1] = -a_k1k
        w[..., k1, k0] = -a_kk1
    return w


def eval_phi_matrices(beta: BraidWord, values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate both action matrices of beta at the given generator values.

    values has shape (..., n, n); both results share the leading batch shape.
    """
    n = beta.n
    v = np.array(values, dtype=complex)
    if v.shape[-2:] != (n, n):
        raise ValueError(f"values must have trailing shape ({n}, {n})")
    batch = v.shape[:-2]
    eye = np.eye(n, dtype=complex)
    ml = np.broadcast_to(eye, batch + (n, n)).copy()
    mr = np.broadcast_to(eye, batch + (n, n)).copy()
    for e in beta.letters:
        v = _letter_step(ml, mr, v, e)
    return ml, mr


def delta_diag(beta: BraidWord) -> np.ndarray:
    d = np.ones(beta.n, dtype=complex)
    d[0] = (-1) ** (writhe(beta) % 2)
    return d


def matrix_delta(beta: BraidWord) -> np.ndarray:
    """The diagonal sign matrix diag[(-1)^writhe, 1, ..., 1]."""
    return np.diag(delta_diag(beta))


def matrix_lambda(beta: BraidWord, lam: complex, mu: complex) -> np.ndarray:
    """diag[lambda mu^writhe, 1, ..., 1]."""
    if lam == 0 or mu == 0:
        raise ValueError("lambda and mu must be nonzero")
    d = np.ones(beta.n, dtype=complex)
    d[0] = lam * mu ** writhe(beta)
    return np.diag(d)


def matrix_a(n: int, eps: Assignment | None = None):
    """The n x n matrix with a_ij above, -mu a_ij below, 1-mu on the diagonal.

    With an assignment the matrix is numeric; without one it is returned as a
    grid of canonical strings.
    """
    if eps is None:
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                if i == j:
                    row.append("1 - mu")
                elif i < j:
                    row.append(NCPoly.gen(n, i, j).render())
                else:
                    row.append(f"-mu*{NCPoly.gen(n, i, j).render()}")
            rows.append(row)
        return rows
    if eps.n != n:
        raise ValueError("assignment ambient mismatch")
    out = np.empty((n, n), dtype=complex)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                out[i - 1, j - 1] = 1 - eps.mu
            elif i < j:
                out[i - 1, j - 1] = eps.value(i, j)
            else:
                out[i - 1, j - 1] = -eps.mu * eps.value(i, j)
    return out


def full_rank_residual(beta: BraidWord, eps: Assignment) -> tuple[float, float]:
    """Max-abs entry error of each evaluated action matrix against the sign matrix."""
    if eps.n != beta.n:
        raise ValueError("assignment ambient mismatch")
    ml, mr = eval_phi_matrices(beta, values_to_array(eps.values, beta.n))
    d = matrix_delta(beta)
    return float(np.abs(ml - d).max()), float(np.abs(mr - d).max())


def ideal_residual(beta: BraidWord, eps: Assignment) -> float:
    """Max-abs evaluated value over the 2n^2 defining relations of the closure."""
    if eps.n != beta.n:
        raise ValueError("assignment ambient mismatch")
    ml, mr = eval_phi_matrices(beta, values_to_array(eps.values, beta.n))
    a0 = matrix_a(beta.n, eps)
    lam_d = np.ones(beta.n, dtype=complex)
    lam_d[0] = eps.lam * eps.mu ** writhe(beta)
    e1 = a0 - lam_d[:, None] * (ml @ a0)
    e2 = a0 - (a0 @ mr) / lam_d[None, :]
    return float(max(np.abs(e1).max(), np.abs(e2).max()))


def numerical_rank(m: np.ndarray, rel_threshold: float = RANK_REL_THRESHOLD) -> int:
    s = np.linalg.svd(np.asarray(m, dtype=complex), compute_uv=False)
    if s.size == 0:
        return 0
    cutoff = rel_threshold * max(1.0, float(s[0]))
    return int(np.count_nonzero(s > cutoff))


def aug_rank(eps: Assignment, n: int) -> int:
    """Numerical rank of the evaluated relation matrix; undefined at mu = 1."""
    if abs(eps.mu - 1) < MU_UNITY_GAP:
        raise MuOneError("augmentation rank is undefined at mu = 1")
    return numerical_rank(matrix_a(n, eps))


# ---------------------------------------------------------------------------
# Damped Gauss-Newton core
# ---------------------------------------------------------------------------

FD_STEP = 1e-7


def _lm_minimize(
    resid: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]],
    x0: np.ndarray,
    max_iter: int,
    floor: float = 1e-14,
) -> tuple[np.ndarray, float]:
    """Minimize 0.5 |r|^2 with damped Gauss-Newton steps.

    resid maps a batch (B, m) to (residual batch (B, d), max-abs metric (B,)).
    Jacobians come from forward differences with relative step FD_STEP,
    evaluated as one batch.  Returns the best point and its max-abs metric.
    """
    m = x0.size
    x = x0.astype(float)
    r, ma = resid(x[None])
    r, best_ma = r[0], float(ma[0])
    cost = 0.5 * float(r @ r)
    lam = 1e-3
    for _ in range(max_iter):
        if best_ma < floor:
            break
        h = FD_STEP * np.maximum(1.0, np.abs(x))
        xb = x[None, :] + np.diag(h)
        rb, _ = resid(xb)
        jac = (rb - r[None, :]).T / h[None, :]
        grad = jac.T @ r
        jtj = jac.T @ jac
        diag = np.diag(jtj).copy()
        diag[diag < 1e-12] = 1e-12
        improved = False
        for _ in range(10):
            try:
                step = np.linalg.solve(jtj + lam * np.diag(diag), -grad)
            except np.linalg.LinAlgError:
                lam *= 10.0
                continue
            rt, mat = resid((x + step)[None])
            ct = 0.5 * float(rt[0] @ rt[0])
            if ct < cost:
                x = x + step
                r, best_ma, cost = rt[0], float(mat[0]), ct
                lam = max(lam / 3.0, 1e-14)
                improved = True
                break
            lam *= 10.0
            if lam > 1e12:
                break
        if not improved:
            break
    # final polish: plain Gauss-Newton once the basin is reached
    if best_ma < 1e-6:
        for _ in range(2):
            h = FD_STEP * np.maximum(1.0, np.abs(x))
            xb = x[None, :] + np.diag(h)
            rb, _ = resid(xb)
            jac = (rb - r[None, :]).T / h[None, :]
            step, *_ = np.linalg.lstsq(jac, -r, rcond=None)
            rt, mat = resid((x + step)[None])
            if float(mat[0]) < best_ma:
                x = x + step
                r, best_ma = rt[0], float(mat[0])
            else:
                break
    return x, best_ma


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """A numeric witness for a maximal-rank augmentation of a braid closure."""

    braid: BraidWord
    assignment: Assignment
    residual_L: float
    residual_R: float
    ideal_residual: float
    rank: int
    seed: int
    restarts: int
    tol: float

    @property
    def accepted(self) -> bool:
        return self.residual_L <= self.tol and self.residual_R <= self.tol

    def to_obj(self) -> dict:
        gens = [
            {"i": i, "j": j, "re": self.assignment.value(i, j).real, "im": self.assignment.value(i, j).imag}
            for i, j in gen_order(self.braid.n)
        ]
        return {
            "braid": {"n": self.braid.n, "word": list(self.braid.letters)},
            "lambda": {"re": self.assignment.lam.real, "im": self.assignment.lam.imag},
            "mu": {"re": self.assignment.mu.real, "im": self.assignment.mu.imag},
            "generators": gens,
            "residual_L": self.residual_L,
            "residual_R": self.residual_R,
            "ideal_residual": self.ideal_residual,
            "rank": self.rank,
            "seed": self.seed,
            "restarts": self.restarts,
            "tol": self.tol,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "Certificate":
        try:
            braid = BraidWord(int(obj["braid"]["n"]), tuple(int(e) for e in obj["braid"]["word"]))
            values = {
                (int(g["i"]), int(g["j"])): complex(float(g["re"]), float(g["im"]))
                for g in obj["generators"]
            }
            assignment = Assignment(
                braid.n,
                values,
                complex(float(obj["lambda"]["re"]), float(obj["lambda"]["im"])),
                complex(float(obj["mu"]["re"]), float(obj["mu"]["im"])),
            )
            return cls(
                braid=braid,
                assignment=assignment,
                residual_L=float(obj["residual_L"]),
                residual_R=float(obj["residual_R"]),
                ideal_residual=float(obj["ideal_residual"]),
                rank=int(obj["rank"]),
                seed=int(obj["seed"]),
                restarts=int(obj["restarts"]),
                tol=float(obj["tol"]),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"not a certificate object (missing {exc})") from exc

    def to_json(self) -> str:
        return jsonio.dumps(self.to_obj())

    def save(self, path: str) -> None:
        jsonio.dump_file(path, self.to_obj())

    @classmethod
    def load(cls, path: str) -> "Certificate":
        return cls.from_obj(jsonio.load_file(path))


@dataclass(frozen=True)
class NotFound:
    """Search outcome when no acceptable point was reached; carries evidence."""

    braid: BraidWord
    best_residual: float
    seed: int
    restarts: int
    tol: float
    residual_summary: dict

    def to_obj(self) -> dict:
        return {
            "braid": {"n": self.braid.n, "word": list(self.braid.letters)},
            "found": False,
            "best_residual": self.best_residual,
            "residual_summary": dict(self.residual_summary),
            "seed": self.seed,
            "restarts": self.restarts,
            "tol": self.tol,
        }


@dataclass(frozen=True)
class SolveOptions:
    restarts: int = 256
    seed: int = 0
    tol: float = ACCEPT_TOL
    max_iter: int = 120


def _summary(values: list[float]) -> dict:
    if not values:
        return {"count": 0}
    arr = np.sort(np.array(values))
    q = lambda t: float(arr[min(len(arr) - 1, int(t * (len(arr) - 1)))])
    return {
        "count": len(values),
        "min": float(arr[0]),
        "q25": q(0.25),
        "median": q(0.5),
        "q75": q(0.75),
        "max": float(arr[-1]),
    }


def _sample_mu(rng: np.random.Generator) -> complex:
    while True:
        mu = complex(rng.standard_normal(), rng.standard_normal())
        if 0.3 <= abs(mu) <= 3.0 and abs(mu - 1) >= 0.3:
            return mu


def recover_lambda_mu(
    beta: BraidWord, values: Mapping[Gen, complex], rng: np.random.Generator
) -> tuple[complex, complex, float]:
    """Pick (lambda, mu) minimizing the relation residual for fixed generator values.

    Every nonzero mu != 1 extends a solution of the sign-matrix equations:
    lambda = (-1)^w mu^-w zeroes both relation families.  That closed form
    seeds a short joint minimization over (lambda, mu), whose result is
    reported with its residual.
    """
    n, w = beta.n, writhe(beta)
    ml, mr = eval_phi_matrices(beta, values_to_array(values, n))
    upper = np.triu(np.ones((n, n)), 1)
    lower = np.tril(np.ones((n, n)), -1)
    vmat = values_to_array(values, n)

    def ideal_stack(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        lam = x[:, 0] + 1j * x[:, 1]
        mu = x[:, 2] + 1j * x[:, 3]
        b = x.shape[0]
        a0 = (
            upper[None] * vmat[None]
            - mu[:, None, None] * lower[None] * vmat[None]
            + (1 - mu)[:, None, None] * np.eye(n)[None]
        )
        lam_d = np.ones((b, n), dtype=complex)
        lam_d[:, 0] = lam * mu**w
        e1 = a0 - lam_d[:, :, None] * (ml[None] @ a0)
        e2 = a0 - (a0 @ mr[None]) / lam_d[:, None, :]
        flat = np.concatenate(
            [e1.real.reshape(b, -1), e1.imag.reshape(b, -1), e2.real.reshape(b, -1), e2.imag.reshape(b, -1)],
            axis=1,
        )
        maxabs = np.maximum(np.abs(e1).reshape(b, -1).max(axis=1), np.abs(e2).reshape(b, -1).max(axis=1))
        return flat, maxabs

    mu0 = _sample_mu(rng)
    lam0 = (-1) ** (w % 2) * mu0 ** (-w)
    x0 = np.array([lam0.real, lam0.imag, mu0.real, mu0.imag])
    x, _ = _lm_minimize(ideal_stack, x0, max_iter=40, floor=1e-15)
    lam = complex(x[0], x[1])
    mu = complex(x[2], x[3])
    if abs(mu - 1) < 0.05 or abs(mu) < 1e-6 or lam == 0:
        lam, mu = lam0, mu0  # polish drifted into the excluded locus; keep the seed point
    _, res = ideal_stack(np.array([[lam.real, lam.imag, mu.real, mu.imag]]))
    return lam, mu, float(res[0])


def _certificate_from_values(
    beta: BraidWord,
    values: dict[Gen, complex],
    rng: np.random.Generator,
    seed: int,
    restarts: int,
    tol: float,
) -> Certificate:
    lam, mu, ideal_res = recover_lambda_mu(beta, values, rng)
    eps = Assignment(beta.n, values, lam, mu)
    res_l, res_r = full_rank_residual(beta, eps)
    return Certificate(
        braid=beta,
        assignment=eps,
        residual_L=res_l,
        residual_R=res_r,
        ideal_residual=ideal_res,
        rank=aug_rank(eps, beta.n),
        seed=seed,
        restarts=restarts,
        tol=tol,
    )


def solve_full_rank(beta: BraidWord, options: SolveOptions = SolveOptions()) -> Certificate | NotFound:
    """Multi-start search for generator values satisfying the sign-matrix equations.

    Restarts draw independent substreams from the seed and run in index
    order; the first accepted point wins, so the outcome is a deterministic
    function of (seed, restarts, tol).
    """
    if component_count(beta) != 1:
        raise ValueError("closure must be a knot")
    n = beta.n
    m = n * (n - 1)
    d = delta_diag(beta)

    if m == 0:
        rng = np.random.default_rng(np.random.SeedSequence(options.seed))
        return _certificate_from_values(beta, {}, rng, options.seed, options.restarts, options.tol)

    letters = beta.letters

    def resid(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        b = x.shape[0]
        v = np.zeros((b, n, n), dtype=complex)
        idx = np.array(gen_order(n))
        v[:, idx[:, 0] - 1, idx[:, 1] - 1] = x[:, :m] + 1j * x[:, m:]
        ml, mr = eval_phi_matrices(beta, v)
        cl = ml - np.diag(d)[None]
        cr = mr - np.diag(d)[None]
        flat = np.concatenate(
            [cl.real.reshape(b, -1), cl.imag.reshape(b, -1), cr.real.reshape(b, -1), cr.imag.reshape(b, -1)],
            axis=1,
        )
        maxabs = np.maximum(np.abs(cl).reshape(b, -1).max(axis=1), np.abs(cr).reshape(b, -1).max(axis=1))
        return flat, maxabs

    children = np.random.SeedSequence(options.seed).spawn(options.restarts)
    best = math.inf
    log: list[float] = []
    for child in children:
        rng = np.random.default_rng(child)
        x0 = rng.standard_normal(2 * m)
        x, ma = _lm_minimize(resid, x0, max_iter=options.max_iter)
        log.append(ma)
        best = min(best, ma)
        if ma <= options.tol:
            vals = {
                g: complex(x[t], x[m + t]) for t, g in enumerate(gen_order(n))
            }
            return _certificate_from_values(
                beta, vals, rng, options.seed, options.restarts, options.tol
            )
    return NotFound(
        braid=beta,
        best_residual=best,
        seed=options.seed,
        restarts=options.restarts,
        tol=options.tol,
        residual_summary=_summary(log),
    )


# ---------------------------------------------------------------------------
# Satellite construction
# ---------------------------------------------------------------------------


def sign_vector(pattern_perm: Perm, p: int) -> dict[int, int]:
    """Alternating signs along the strand cycle of the pattern permutation.

    The permutation restricted to 1..p must be a single p-cycle (the pattern
    closure is a knot).  Signs alternate along the cycle; for odd p the first
    two cycle entries share the sign so the alternation closes up.
    """
    xs = [1]
    for _ in range(p - 1):
        xs.append(pattern_perm(xs[-1]))
    if sorted(xs) != list(range(1, p + 1)) or (p > 0 and pattern_perm(xs[-1]) != 1):
        raise ValueError("pattern permutation is not a single cycle on 1..p")
    g = {xs[0]: 1}
    for l in range(1, p):
        if p % 2 == 1 and l == 1:
            g[xs[l]] = g[xs[l - 1]]
        else:
            g[xs[l]] = -g[xs[l - 1]]
    return g


def construct_satellite_aug(
    cert_alpha: Certificate,
    cert_gamma: Certificate,
    tol: float = ACCEPT_TOL,
) -> Certificate:
    """Build a maximal-rank certificate for the satellite from its two factors.

    The generator values are read off through the splitting homomorphism: the
    companion certificate feeds the block part, the pattern certificate (sign
    twisted when the companion writhe is odd) feeds the offset part.  The
    result is verified against the sign-matrix equations and must pass; a
    failure indicates an internal convention bug, not bad input.
    """
    alpha, gamma = cert_alpha.braid, cert_gamma.braid
    k, p = alpha.n, gamma.n
    for name, cert in (("companion", cert_alpha), ("pattern", cert_gamma)):
        if not cert.accepted:
            raise ValueError(f"{name} certificate is not accepted")
        if component_count(cert.braid) != 1:
            raise ValueError(f"{name} closure is not a knot")

    if writhe(alpha) % 2 == 0:
        g = {i: 1 for i in range(1, p + 1)}
    else:
        g = sign_vector(perm(gamma), p)

    def delta_val(i: int, j: int) -> complex:
        return g[i] * g[j] * cert_gamma.assignment.value(i, j)

    values: dict[Gen, complex] = {}
    for i, j in gen_order(k * p):
        qi, ri = divmod(i - 1, p)
        qj, rj = divmod(j - 1, p)
        qi, ri, qj, rj = qi + 1, ri + 1, qj + 1, rj + 1
        if qi == qj:
            values[(i, j)] = delta_val(ri, rj)
        elif ri == rj:
            values[(i, j)] = cert_alpha.assignment.value(qi, qj)
        elif (qi - qj) * (ri - rj) < 0:
            values[(i, j)] = 0j
        else:
            values[(i, j)] = cert_alpha.assignment.value(qi, qj) * delta_val(ri, rj)

    braid = satellite_braid(alpha, gamma)
    rng = np.random.default_rng(np.random.SeedSequence(0))
    cert = _certificate_from_values(braid, values, rng, seed=0, restarts=0, tol=tol)
    if not cert.accepted:
        raise ConstructionError(
            f"constructed satellite assignment failed verification: "
            f"residuals ({cert.residual_L:.3e}, {cert.residual_R:.3e})"
        )
    return cert


# ---------------------------------------------------------------------------
# Block structure and nonexistence evidence
# ---------------------------------------------------------------------------


def check_block_structure(n: int, p: int) -> CheckReport:
    """Exact block facts about the cabled ascending word and the pattern row.

    For tau = sigma_1..sigma_{n-1} the left matrix of its p-cable, cut into
    p x p blocks, has (a) identity across block-rows < n and block-columns > 1,
    (b) identity in the bottom-left block, (c) zero in the rest of the bottom
    block-row; and (d) the left matrix of sigma_1..sigma_{p-1} included in
    B_np has row p equal to the first standard basis vector.
    """
    if n < 2 or p < 1:
        raise ValueError("need n >= 2 and p >= 1")
    np_total = n * p
    diffs: list[dict] = []
    big = phi_left(cable(tau_word(1, n - 1, n), p))

    def expect(claim: str, i: int, j: int, got: NCPoly, want: NCPoly) -> None:
        if got != want:
            diffs.append({"claim": claim, "i": i, "j": j, "lhs": got.render(), "rhs": want.render()})

    one, zero = NCPoly.one(np_total), NCPoly.zero(np_total)
    for i in range(1, (n - 1) * p + 1):
        for j in range(p + 1, np_total + 1):
            expect("a", i, j, big.at(i, j), one if j - p == i else zero)
    for s in range(1, p + 1):
        for t in range(1, p + 1):
            expect("b", (n - 1) * p + s, t, big.at((n - 1) * p + s, t), one if s == t else zero)
    for s in range(1, p + 1):
        for j in range(p + 1, np_total + 1):
            expect("c", (n - 1) * p + s, j, big.at((n - 1) * p + s, j), zero)
    pattern = phi_left(include_bar(tau_word(1, p - 1, p), np_total))
    for j in range(1, np_total + 1):
        expect("d", p, j, pattern.at(p, j), one if j == 1 else zero)
    return CheckReport(
        claim="cabled ascending-word block structure and pattern row",
        parameters={"n": n, "p": p},
        diffs=diffs,
    )


@dataclass(frozen=True)
class EvidenceReport:
    """Outcome of a large-budget search, labeled as evidence (never proof)."""

    braid: BraidWord
    found: bool
    certificate: Certificate | None
    best_residual: float
    residual_summary: dict
    seed: int
    restarts: int
    tol: float

    def to_obj(self) -> dict:
        obj = {
            "label": "evidence-only",
            "braid": {"n": self.braid.n, "word": list(self.braid.letters)},
            "found": self.found,
            "best_residual": self.best_residual,
            "residual_summary": dict(self.residual_summary),
            "seed": self.seed,
            "restarts": self.restarts,
            "tol": self.tol,
        }
        if self.certificate is not None:
            obj["certificate"] = self.certificate.to_obj()
        return obj


def nonexistence_search(beta: BraidWord, options: SolveOptions = SolveOptions(restarts=4096)) -> EvidenceReport:
    """Exhaust a restart budget looking for a certificate; report what happened.

    A NotFound outcome is statistical evidence of nonexistence, nothing more;
    a found certificate refutes nonexistence outright.
    """
    out = solve_full_rank(beta, options)
    if isinstance(out, Certificate):
        return EvidenceReport(
            braid=beta,
            found=True,
            certificate=out,
            best_residual=max(out.residual_L, out.residual_R),
            residual_summary={},
            seed=options.seed,
            restarts=options.restarts,
            tol=options.tol,
        )
    return EvidenceReport(
        braid=beta,
        found=False,
        certificate=None,
        best_residual=out.best_residual,
        residual_summary=out.residual_summary,
        seed=options.seed,
        restarts=options.restarts,
        tol=options.tol,
    )
