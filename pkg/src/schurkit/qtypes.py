"""Classical and quantum method-of-types numerics: type-class bounds,
typical projector masses, spectrum estimation by sector sampling,
entanglement concentration, and universal compression rates.

All entropies and divergences are base 2.  Large-n quantities are evaluated
through Schur polynomials (exact rationals available), so no d^n-dimensional
object is ever needed on that path; small-n dense cross-checks live in
duality_checks.rho_blocks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .combinatorics import (
    dim_p,
    dim_q,
    enumerate_partitions,
    multinomial,
    normalize,
    schur_poly,
)
from .operators import DenseOperator
from .schur_transform import dense_cap, schur_unitary


def entropy(p) -> float:
    """Shannon entropy in bits; 0 log 0 = 0."""
    return float(-sum(x * math.log2(x) for x in p if x > 0))


def kl_divergence(p, q) -> float:
    """D(p || q) in bits; +inf when p is not absolutely continuous wrt q."""
    total = 0.0
    for a, b in zip(p, q):
        if a > 0:
            if b <= 0:
                return math.inf
            total += a * math.log2(a / b)
    return float(total)


def _as_prob_vector(r) -> tuple:
    r = tuple(float(x) for x in r)
    if any(x < 0 for x in r):
        raise ValueError("probabilities must be nonnegative")
    if abs(sum(r) - 1.0) > 1e-9:
        raise ValueError("probabilities must sum to 1")
    return r


def _sorted_spectrum(r) -> tuple:
    return tuple(sorted(_as_prob_vector(r), reverse=True))


def normalized_shape(lam, n: int, d: int) -> tuple:
    """lam / n padded to d entries: the empirical spectrum estimate."""
    lam = normalize(lam)
    return tuple((lam[i] if i < len(lam) else 0) / n for i in range(d))


def sector_distribution(r, n: int) -> dict:
    """lam -> dim_p(lam) * schur_poly(lam, r): the exact distribution of the
    partition label when measuring rho^{tensor n}, spec rho = r."""
    r = _sorted_spectrum(r)
    d = len(r)
    exact = all(isinstance(x, (int, Fraction)) for x in r)
    rr = r if exact else tuple(float(x) for x in r)
    return {
        lam: dim_p(lam) * float(schur_poly(lam, rr))
        for lam in enumerate_partitions(d, n)
    }


# ---------------------------------------------------------------------------
# classical types


@dataclass
class TypeBoundsRecord:
    t: tuple
    n: int
    count: int  # |T_t|
    mass: float  # P^n(T_t)
    entropy: float  # H(t/n)
    divergence: float  # D(t/n || P)
    count_lower: float  # (n+1)^-d 2^{nH}
    count_upper: float  # 2^{nH}
    mass_lower: float  # (n+1)^-d 2^{-nD}
    mass_upper: float  # 2^{-nD}

    @property
    def bounds_hold(self) -> bool:
        slack = 1e-9
        return (
            self.count_lower <= self.count * (1 + slack)
            and self.count <= self.count_upper * (1 + slack)
            and self.mass_lower <= self.mass * (1 + slack)
            and self.mass <= self.mass_upper * (1 + slack)
        )


def classical_type_bounds(t, p) -> TypeBoundsRecord:
    """Size and probability of the type class T_t under i.i.d. P, with the
    standard entropy/divergence sandwiches."""
    t = tuple(int(x) for x in t)
    p = _as_prob_vector(p)
    if len(t) != len(p):
        raise ValueError("type and distribution must have equal length")
    n = sum(t)
    d = len(t)
    count = multinomial(n, t)
    mass = count * math.prod(pi**ti for pi, ti in zip(p, t))
    tbar = tuple(ti / n for ti in t)
    h = entropy(tbar)
    dv = kl_divergence(tbar, p)
    return TypeBoundsRecord(
        t=t,
        n=n,
        count=count,
        mass=float(mass),
        entropy=h,
        divergence=dv,
        count_lower=(n + 1) ** (-d) * 2.0 ** (n * h),
        count_upper=2.0 ** (n * h),
        mass_lower=(n + 1) ** (-d) * 2.0 ** (-n * dv) if dv < math.inf else 0.0,
        mass_upper=2.0 ** (-n * dv) if dv < math.inf else 0.0,
    )


# ---------------------------------------------------------------------------
# quantum typicality


@dataclass
class TypicalMassRecord:
    n: int
    delta: float
    mass: float
    lower_bound: float  # 1 - (n+d)^{d(d+1)/2} 2^{-n delta^2 / 2}
    trivially_satisfied: bool  # lower bound <= 0

    @property
    def bound_holds(self) -> bool:
        return self.trivially_satisfied or self.mass >= self.lower_bound - 1e-12


def typical_mass(r, n: int, delta: float) -> TypicalMassRecord:
    """Mass of rho^{tensor n} on sectors whose normalized shape is within
    total-variation-style L1 distance delta of spec rho."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    r = _sorted_spectrum(r)
    d = len(r)
    mass = 0.0
    for lam, w in sector_distribution(r, n).items():
        lbar = normalized_shape(lam, n, d)
        if sum(abs(a - b) for a, b in zip(lbar, r)) <= delta:
            mass += w
    lower = 1.0 - (n + d) ** (d * (d + 1) / 2) * 2.0 ** (-n * delta**2 / 2)
    return TypicalMassRecord(
        n=n,
        delta=delta,
        mass=float(mass),
        lower_bound=lower,
        trivially_satisfied=lower <= 0,
    )


@dataclass
class TraceBoundRecord:
    lam: tuple
    value: float  # tr Pi_lam rho^{tensor n}
    divergence: float  # D(lam/n || r)
    lower: float  # (n+d)^{-d(d+1)/2} 2^{-nD}
    upper: float  # (n+d)^{d(d+1)/2} 2^{-nD}

    @property
    def bounds_hold(self) -> bool:
        return self.lower - 1e-15 <= self.value <= self.upper + 1e-15


def trace_bound_check(lam, r, n: int, d: int = None) -> TraceBoundRecord:
    """Sector mass dim_p * schur_poly against its divergence sandwich."""
    r = _sorted_spectrum(r)
    if d is None:
        d = len(r)
    lam = normalize(lam)
    if sum(lam) != n:
        raise ValueError("lam must partition n")
    value = dim_p(lam) * float(schur_poly(lam, r + (0.0,) * (d - len(r))))
    dv = kl_divergence(normalized_shape(lam, n, d), r + (0.0,) * (d - len(r)))
    poly = (n + d) ** (d * (d + 1) / 2)
    if dv == math.inf:
        lower, upper = 0.0, 0.0 if value == 0.0 else 1.0
    else:
        lower = 2.0 ** (-n * dv) / poly
        upper = poly * 2.0 ** (-n * dv)
    return TraceBoundRecord(lam=lam, value=value, divergence=dv, lower=lower, upper=upper)


# ---------------------------------------------------------------------------
# spectrum estimation


@dataclass
class SpectrumEstimateReport:
    r: tuple
    n: int
    trials: int
    seed: int
    distribution: dict  # lam -> exact probability
    counts: dict  # lam -> sampled count
    deltas: tuple
    failure_rates: dict  # delta -> empirical Pr[L1 error > delta]

    def l1_error(self, lam) -> float:
        rbar = normalized_shape(lam, self.n, len(self.r))
        return sum(abs(a - b) for a, b in zip(rbar, self.r))


def spectrum_estimate(
    r, n: int, trials: int, seed: int = 0, deltas=(0.1, 0.2, 0.3, 0.5)
) -> SpectrumEstimateReport:
    """Monte Carlo spectrum estimation: sample the partition label from its
    exact distribution and report L1-error failure rates on a delta grid."""
    r = _sorted_spectrum(r)
    dist = sector_distribution(r, n)
    lams = list(dist)
    probs = np.array([dist[lam] for lam in lams])
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    draws = rng.choice(len(lams), size=trials, p=probs)
    counts = {lam: 0 for lam in lams}
    for idx in draws:
        counts[lams[idx]] += 1
    errors = {
        lam: sum(abs(a - b) for a, b in zip(normalized_shape(lam, n, len(r)), r))
        for lam in lams
    }
    failure = {}
    for delta in deltas:
        bad = sum(counts[lam] for lam in lams if errors[lam] > delta)
        failure[delta] = bad / trials
    return SpectrumEstimateReport(
        r=r,
        n=n,
        trials=trials,
        seed=seed,
        distribution=dist,
        counts=counts,
        deltas=tuple(deltas),
        failure_rates=failure,
    )


# ---------------------------------------------------------------------------
# entanglement concentration


@dataclass
class ConcentrationReport:
    n: int
    outcome_weights: dict  # lam -> joint probability of both labels = lam
    off_diagonal_mass: float  # probability mass on unequal label pairs
    schmidt_values: dict  # lam -> singular values of the paired P register
    pair_states: dict = field(default_factory=dict)  # lam -> P x P pure state

    @property
    def distortion_free_residual(self) -> float:
        worst = 0.0
        for lam, sv in self.schmidt_values.items():
            k = dim_p(lam)
            if k == 0 or len(sv) == 0:
                continue
            worst = max(worst, float(np.abs(sv - 1 / math.sqrt(k)).max()))
        return worst


def concentrate(psi, n: int) -> ConcentrationReport:
    """Entanglement concentration on psi^{tensor n} for a bipartite pure
    state psi on C^d x C^d: both parties apply the Schur transform, measure
    their partition label, and keep the paired permutation registers.

    Outcomes always agree; the conditional paired state is maximally
    entangled across dim_p(lam) levels regardless of psi (distortion-free).
    """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    d = int(round(math.sqrt(psi.shape[0])))
    if d * d != psi.shape[0]:
        raise ValueError("psi must live on C^d x C^d")
    if abs(np.linalg.norm(psi) - 1.0) > 1e-8:
        raise ValueError("psi must be normalized")
    if d ** (2 * n) > dense_cap() ** 2:
        raise ValueError("instance too large for the dense path")
    su, codec = schur_unitary(d, n)
    # reorder psi^{tensor n} from (a1 b1 ... an bn) to (a1..an b1..bn)
    m = psi.reshape(d, d)
    state = np.array([1.0 + 0j])
    for _ in range(n):
        state = np.kron(state, m.reshape(-1))
    state = state.reshape((d, d) * n)
    order = list(range(0, 2 * n, 2)) + list(range(1, 2 * n, 2))
    state = np.transpose(state, order).reshape(d**n, d**n)
    both = su.matrix @ state @ su.matrix.T  # rows: Alice labels, cols: Bob labels
    report = ConcentrationReport(
        n=n, outcome_weights={}, off_diagonal_mass=0.0, schmidt_values={}
    )
    total = 0.0
    for lam in enumerate_partitions(d, n):
        sl = codec.block_slice(lam)
        nq, np_ = dim_q(lam, d), dim_p(lam)
        block = both[sl, sl]
        w = float((np.abs(block) ** 2).sum())
        report.outcome_weights[lam] = w
        total += w
        if w < 1e-300:
            report.schmidt_values[lam] = np.array([])
            continue
        # conditional pure state on (qA pA qB pB); trace out both q registers
        cond = block.reshape(nq, np_, nq, np_) / math.sqrt(w)
        pair = np.einsum("apbq->pabq", cond).reshape(np_, nq * nq * np_)
        sv = np.linalg.svd(pair, compute_uv=False)
        report.schmidt_values[lam] = sv
        rho_pair = np.einsum("apbq,arbs->pqrs", cond, cond.conj()).reshape(
            np_ * np_, np_ * np_
        )
        report.pair_states[lam] = DenseOperator(rho_pair)
    report.off_diagonal_mass = float(max(0.0, 1.0 - total))
    return report


# ---------------------------------------------------------------------------
# universal compression


@dataclass
class CompressRateRecord:
    r: tuple
    n: int
    rate: float
    effective_rate: float  # R - d(d+1)/2 * log2(n+d) / n
    kept: tuple  # partitions kept by the projector
    kept_mass: float
    error_mass: float
    kept_dimension: int  # sum of dim_q * dim_p over kept sectors
    dimension_ok: bool  # kept_dimension <= 2^{nR}
    error_exponent_bound: float  # poly * 2^{-n min D} over discarded shapes


def compress_rate(r, n: int, rate: float) -> CompressRateRecord:
    """Universal compression at rate R qubits per symbol: keep the sectors
    whose normalized shape has entropy at most the polynomially reduced rate
    and report the discarded mass and its divergence-exponent bound."""
    if rate <= 0:
        raise ValueError("rate must be positive")
    r = _sorted_spectrum(r)
    d = len(r)
    eff = rate - d * (d + 1) / 2 * math.log2(n + d) / n
    dist = sector_distribution(r, n)
    kept, kept_mass, kept_dim = [], 0.0, 0
    min_div = math.inf
    for lam, w in dist.items():
        lbar = normalized_shape(lam, n, d)
        if entropy(lbar) <= eff:
            kept.append(lam)
            kept_mass += w
            kept_dim += dim_q(lam, d) * dim_p(lam)
        else:
            min_div = min(min_div, kl_divergence(lbar, r))
    poly = (n + d) ** (d * (d + 1) / 2)
    bound = poly * 2.0 ** (-n * min_div) if min_div < math.inf else 0.0
    return CompressRateRecord(
        r=r,
        n=n,
        rate=rate,
        effective_rate=eff,
        kept=tuple(kept),
        kept_mass=float(kept_mass),
        error_mass=float(max(0.0, 1.0 - kept_mass)),
        kept_dimension=kept_dim,
        dimension_ok=kept_dim <= 2.0 ** (n * rate) * (1 + 1e-12),
        error_exponent_bound=bound,
    )
