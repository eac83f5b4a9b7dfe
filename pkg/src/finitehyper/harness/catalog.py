"""Registered identities and the loops that exercise them.

Every runner only samples parameters and calls the paired-side operations of
:mod:`finitehyper.hyperfun`, :mod:`finitehyper.polylog` and
:mod:`finitehyper.ozgen`; no formula is re-derived here.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .. import hyperfun as hf
from .. import ozgen as oz
from .. import polylog as pl
from ..errors import ConfigError, DegenerateArgument, Pole, PoleExhaustion, UnknownIdentity, DenominatorDivisibleByP
from .reports import VerificationReport, render_value
from .sampling import DEFAULT_DEN_BOUND, DEFAULT_NUM_BOUND, rng_stream, sample_nonzero, sample_rational

REJECTABLE = (Pole, DegenerateArgument, DenominatorDivisibleByP)
REJECTION_FACTOR = 10
THREEWAY_Z = (Fraction(1, 2), Fraction(1, 3), Fraction(2), Fraction(3, 4))
AK_PRIMES = (5, 7, 11, 13)


@dataclass(frozen=True)
class RunConfig:
    n_min: int | None = None
    n_max: int | None = None
    trials: int | None = None
    seed: int = 42
    degree: int | None = None
    weight_max: int | None = None
    num_bound: int = DEFAULT_NUM_BOUND
    den_bound: int = DEFAULT_DEN_BOUND


@dataclass(frozen=True)
class _Defaults:
    n_min: int
    n_max: int
    trials: int = 0
    degree: int = 6
    weight_max: int = 0


@dataclass(frozen=True)
class _Resolved:
    n_min: int
    n_max: int
    trials: int
    seed: int
    degree: int
    weight_max: int
    num_bound: int
    den_bound: int


def _resolve(cfg: RunConfig, d: _Defaults) -> _Resolved:
    def pick(v, default):
        return default if v is None else v

    r = _Resolved(pick(cfg.n_min, d.n_min), pick(cfg.n_max, d.n_max), pick(cfg.trials, d.trials),
                  cfg.seed, pick(cfg.degree, d.degree), pick(cfg.weight_max, d.weight_max),
                  cfg.num_bound, cfg.den_bound)
    if r.n_min < 0 or r.n_max < r.n_min:
        raise ConfigError(f"bad N range [{r.n_min}, {r.n_max}]")
    if r.trials < 0 or r.degree < 0 or r.weight_max < 0:
        raise ConfigError("trials, degree and weight bound must be nonnegative")
    if r.num_bound < 1 or r.den_bound < 1:
        raise ConfigError("sampling bounds must be at least 1")
    return r


# An instance is (params for the report, N, thunk returning (lhs, rhs, equal)).
Instance = tuple[dict, "int | None", Callable[[], tuple]]


def _pair(f):
    def run():
        lhs, rhs = f()
        return lhs, rhs, lhs == rhs
    return run


def _fmt(params: dict) -> dict[str, str]:
    out = {}
    for k, v in params.items():
        if isinstance(v, (list, tuple)):
            out[k] = ",".join(str(x) for x in v)
        else:
            out[k] = str(v)
    return out


def _collect(identity: str, r: _Resolved, instances: Iterator[Instance], wanted: int | None) -> list[VerificationReport]:
    """Evaluate instances, skipping rejected ones, until ``wanted`` accepted (or exhaustion)."""
    reports = []
    rejected = 0
    budget = REJECTION_FACTOR * max(wanted or 0, 1)
    for params, N, thunk in instances:
        t0 = time.perf_counter()
        try:
            lhs, rhs, equal = thunk()
        except REJECTABLE:
            rejected += 1
            if rejected > budget:
                raise PoleExhaustion(f"{identity}: {rejected} rejected instances (budget {budget})")
            continue
        ms = (time.perf_counter() - t0) * 1000.0
        reports.append(VerificationReport(identity, _fmt(params), N, render_value(lhs), render_value(rhs),
                                          bool(equal), r.seed, rejected, ms))
        if wanted is not None and len(reports) >= wanted:
            break
    return reports


def _sampled(identity: str, r: _Resolved, draw) -> list[VerificationReport]:
    """Random trials: ``draw(rng, trial)`` returns one instance."""
    rng = rng_stream(r.seed, identity)

    def gen():
        trial = 0
        while True:
            yield draw(rng, trial)
            trial += 1

    return _collect(identity, r, gen(), r.trials)


def _sampled_by(identity: str, r: _Resolved, shapes, draw) -> list[VerificationReport]:
    """``r.trials`` accepted trials for every shape, each shape on its own stream."""
    reports = []
    for shape in shapes:
        rng = rng_stream(r.seed, f"{identity}:{shape}")

        def gen(shape=shape, rng=rng):
            while True:
                yield draw(rng, shape)

        reports.extend(_collect(identity, r, gen(), r.trials))
    return reports


def _grid(identity: str, r: _Resolved, instances) -> list[VerificationReport]:
    return _collect(identity, r, iter(instances), None)


def _q(rng, r: _Resolved) -> Fraction:
    return sample_rational(rng, r.num_bound, r.den_bound)


def _qz(rng, r: _Resolved) -> Fraction:
    return sample_nonzero(rng, r.num_bound, r.den_bound)


def _N(rng, r: _Resolved, low: int | None = None) -> int:
    return rng.randint(max(r.n_min, low if low is not None else r.n_min), r.n_max)


# ---------------------------------------------------------------------------
# runners


def _run_msw(r: _Resolved):
    def gen():
        for w in range(1, r.weight_max + 1):
            for k in pl.all_indices(w):
                for N in range(max(r.n_min, 1), r.n_max + 1):
                    yield {"k": k}, N, _pair(lambda k=k, N=N: (pl.truncated_mzv(k, N), pl.msw_rhs(k, N)))
    return _grid("msw", r, gen())


def _run_hms(r: _Resolved):
    rng = rng_stream(r.seed, "hms")
    reports = []
    for w in range(1, r.weight_max + 1):
        for k in pl.all_indices(w):
            for N in range(max(r.n_min, 1), r.n_max + 1):
                def gen(k=k, N=N):
                    while True:
                        x = [_qz(rng, r) for _ in range(k.depth)]
                        yield ({"k": k, "x": x}, N,
                               _pair(lambda x=x: (pl.hms_lhs(k, x, N), pl.hms_rhs(k, x, N))))
                reports.extend(_collect("hms", r, gen(), r.trials))
    return reports


def _run_disc_beta(r: _Resolved):
    def draw(rng, trial):
        p = hf.BetaParams(_q(rng, r), _q(rng, r), _N(rng, r, 1))
        return {"a": p.a, "b": p.b}, p.N, _pair(lambda: (hf.truncated_beta(p), hf.disc_beta_sum(p)))
    return _sampled("disc-beta", r, draw)


def _run_multivar_beta(r: _Resolved):
    def draw(rng, d):
        a = [_q(rng, r) for _ in range(d)]
        N = _N(rng, r, 1)
        return {"d": d, "a": a}, N, _pair(lambda: hf.multivariate_disc_beta(a, N))
    return _sampled_by("multivar-beta", r, (2, 3, 4), draw)


def _run_t1f0(r: _Resolved):
    def draw(rng, trial):
        a, z, N = _q(rng, r), _qz(rng, r), _N(rng, r)
        return ({"a": a, "z": z}, N,
                _pair(lambda: (hf.trunc_pFq_bracket(hf.HyperParams((a,), (), z, N)), hf.t1F0_closed_form(a, z, N))))
    return _sampled("t1f0", r, draw)


GEN_SHAPES = ((0, 0), (1, 0), (1, 1), (2, 1))


def _run_gen_thg_int(r: _Resolved):
    def draw(rng, shape):
        p, q = shape
        a, b, z = _q(rng, r), _q(rng, r), _qz(rng, r)
        upper = [_q(rng, r) for _ in range(p)]
        lower = [_q(rng, r) for _ in range(q)]
        N = _N(rng, r)

        def sides():
            lhs = hf.trunc_pFq_bracket(hf.HyperParams((a, *upper), (b, *lower), z, N))
            return lhs, hf.gen_tHG_int_rhs(a, upper, lower, b, z, N)
        return {"p": p, "q": q, "a": a, "b": b, "upper": upper, "lower": lower, "z": z}, N, _pair(sides)
    return _sampled_by("gen-thg-int", r, GEN_SHAPES, draw)


def _run_thg_int(r: _Resolved):
    def draw(rng, trial):
        a, b, c, z, N = _q(rng, r), _q(rng, r), _q(rng, r), _qz(rng, r), _N(rng, r)
        return ({"a": a, "b": b, "c": c, "z": z}, N,
                _pair(lambda: (hf.trunc_pFq_bracket(hf.HyperParams((a, b), (c,), z, N)),
                               hf.tHG_int_rhs(a, b, c, z, N))))
    return _sampled("thg-int", r, draw)


def _run_chain_sum(r: _Resolved):
    def draw(rng, p):
        upper = [_q(rng, r) for _ in range(p)]
        lower = [_q(rng, r) for _ in range(p)]
        N = _N(rng, r)
        return ({"upper": upper, "lower": lower}, N,
                _pair(lambda: (hf.chain_sum_pFp(upper, lower, N), hf.terminating_pFq_at_1([*upper, -N], lower))))
    return _sampled_by("chain-sum", r, (1, 2, 3), draw)


def _run_3f2_transform(r: _Resolved):
    def draw(rng, trial):
        a, b, d, e, N = _q(rng, r), _q(rng, r), _q(rng, r), _q(rng, r), _N(rng, r)
        return {"a": a, "b": b, "d": d, "e": e}, N, _pair(lambda: hf.transform_3F2_sides(a, b, d, e, N))
    return _sampled("3f2-transform", r, draw)


def _run_finite_gauss(r: _Resolved):
    def draw(rng, trial):
        a, b, c, N = _q(rng, r), _q(rng, r), _q(rng, r), _N(rng, r, 1)
        return {"a": a, "b": b, "c": c}, N, _pair(lambda: hf.finite_gauss_sides(a, b, c, N))
    return _sampled("finite-gauss", r, draw)


def _run_finite_pfaff(r: _Resolved):
    def draw(rng, trial):
        a, b, c, z, N = _q(rng, r), _q(rng, r), _q(rng, r), _qz(rng, r), _N(rng, r, 1)
        return {"a": a, "b": b, "c": c, "z": z}, N, _pair(lambda: hf.finite_pfaff_sides(a, b, c, z, N))
    return _sampled("finite-pfaff", r, draw)


def _run_finite_euler(r: _Resolved):
    def draw(rng, trial):
        a, b, c, z, N = _q(rng, r), _q(rng, r), _q(rng, r), _qz(rng, r), _N(rng, r, 1)
        return {"a": a, "b": b, "c": c, "z": z}, N, _pair(lambda: hf.finite_euler_sides(a, b, c, z, N))
    return _sampled("finite-euler", r, draw)


def _run_toz_threeway(r: _Resolved):
    def gen():
        for N in range(max(r.n_min, 1), r.n_max + 1):
            for z in THREEWAY_Z:
                cfg = oz.GenFunConfig(N, z, r.degree)

                def sides(cfg=cfg):
                    direct = oz.phi0_direct(cfg)
                    product = oz.phi0_product_form(cfg)
                    closed = oz.phi0_closed_form(cfg)
                    divisible = oz.divisibility_check(cfg)
                    equal = direct == product == closed and divisible
                    return direct, (product, closed, divisible), equal
                yield {"z": z, "D": r.degree}, N, sides
    return _grid("toz-threeway", r, gen())


def _run_toz_special(r: _Resolved):
    def gen():
        for N in range(max(r.n_min, 2), r.n_max + 1):
            def sides(N=N):
                s1, s2, s3 = oz.tOZ_special_sides(N, r.degree)
                return s1, (s2, s3), s1 == s2 == s3
            yield {"z": "N/(N-Y)", "D": r.degree}, N, sides
    return _grid("toz-special", r, gen())


def _triples(kmax: int, kmin: int = 2):
    for k in range(kmin, kmax + 1):
        for h in range(1, k):
            for q in range(h, k - h + 1):
                yield k, q, h


def _run_prop54(r: _Resolved):
    def gen():
        for k, q, h in _triples(r.weight_max):
            for N in range(max(r.n_min, 1), r.n_max + 1):
                yield {"k": k, "q": q, "h": h}, N, _pair(lambda k=k, q=q, h=h, N=N: oz.prop54_sides(k, q, h, N))
    return _grid("prop54", r, gen())


def _run_symmetry(r: _Resolved):
    def gen():
        for k, q, h in _triples(r.weight_max):
            for N in range(max(r.n_min, 1), r.n_max + 1):
                yield ({"k": k, "q": q, "h": h, "mirror_q": k - q}, N,
                       _pair(lambda k=k, q=q, h=h, N=N: oz.symmetry_check(k, q, h, N)))
    return _grid("symmetry", r, gen())


def _run_reconstruct_p(r: _Resolved):
    samples = list(range(max(r.n_min, 1), r.n_max + 1))
    reports = []
    for k, q, h in _triples(r.weight_max):
        result = oz.reconstruct_P(k, q, h, samples)
        poly = result.polynomial.render()

        def gen(result=result, poly=poly, k=k, q=q, h=h):
            for N, (via_p, direct) in sorted(result.checks.items()):
                yield ({"k": k, "q": q, "h": h, "P": poly}, N,
                       lambda via_p=via_p, direct=direct: (via_p, direct,
                                                           via_p == direct and result.polynomial.is_homogeneous(k)))
        reports.extend(_grid("reconstruct-p", r, gen()))
    return reports


def _primes_between(lo: int, hi: int) -> list[int]:
    return [p for p in range(max(lo, 2), hi + 1) if all(p % d for d in range(2, int(p**0.5) + 1))]


def _run_ak_congruence(r: _Resolved):
    primes = list(AK_PRIMES) if (r.n_min, r.n_max) == (AK_PRIMES[0], AK_PRIMES[-1]) else _primes_between(r.n_min, r.n_max)
    lmax = max(r.trials, 1)

    def gen():
        for w in range(2, r.weight_max + 1):
            for k in pl.all_indices(w):
                if not k.admissible:
                    continue
                for l in range(1, lmax + 1):
                    for p in primes:
                        yield {"k": k, "l": l}, p, _pair(lambda k=k, l=l, p=p: pl.ak_congruence_sides(k, l, p))
    return _grid("ak-congruence", r, gen())


@dataclass(frozen=True)
class Identity:
    name: str
    runner: Callable[[_Resolved], list[VerificationReport]]
    defaults: _Defaults
    summary: str


CATALOG: dict[str, Identity] = {i.name: i for i in (
    Identity("msw", _run_msw, _Defaults(1, 12, weight_max=6),
             "truncated MZV = discretized iterated integral, exhaustive grid"),
    Identity("hms", _run_hms, _Defaults(1, 8, trials=20, weight_max=4),
             "truncated MPL with Pochhammer ratios = discretization, random x per (index, N)"),
    Identity("disc-beta", _run_disc_beta, _Defaults(1, 20, trials=100),
             "truncated beta = discretized beta sum"),
    Identity("multivar-beta", _run_multivar_beta, _Defaults(1, 8, trials=50),
             "d-variate truncated beta (d = 2, 3, 4)"),
    Identity("t1f0", _run_t1f0, _Defaults(0, 20, trials=50), "truncated 1F0 closed form"),
    Identity("gen-thg-int", _run_gen_thg_int, _Defaults(0, 10, trials=50),
             "discretized integral for (p+1)F(q+1), (p,q) in (0,0),(1,0),(1,1),(2,1)"),
    Identity("thg-int", _run_thg_int, _Defaults(0, 15, trials=50), "discretized Euler integral for 2F1"),
    Identity("chain-sum", _run_chain_sum, _Defaults(0, 10, trials=50), "chain-sum form of terminating (p+1)Fp(1)"),
    Identity("3f2-transform", _run_3f2_transform, _Defaults(0, 10, trials=50), "terminating 3F2(1) transformation"),
    Identity("finite-gauss", _run_finite_gauss, _Defaults(1, 10, trials=50), "finite Gauss / Pfaff-Saalschutz"),
    Identity("finite-pfaff", _run_finite_pfaff, _Defaults(1, 10, trials=50), "finite Pfaff transformation"),
    Identity("finite-euler", _run_finite_euler, _Defaults(1, 10, trials=50), "finite Euler transformation"),
    Identity("toz-threeway", _run_toz_threeway, _Defaults(2, 6, degree=6),
             "Phi_0^(N): direct = product = closed form, divisibility by Z - XY"),
    Identity("toz-special", _run_toz_special, _Defaults(2, 6, degree=6),
             "z = N/(N-Y): direct = Pochhammer quotient = exp form"),
    Identity("prop54", _run_prop54, _Defaults(1, 6, weight_max=7), "coefficients = tilde-zeta sums"),
    Identity("symmetry", _run_symmetry, _Defaults(1, 8, weight_max=7), "tilde-zeta sums symmetric under q <-> k-q"),
    Identity("reconstruct-p", _run_reconstruct_p, _Defaults(2, 8, weight_max=6),
             "P_{k,q,h} from the exp form reproduces the tilde-zeta sums"),
    Identity("ak-congruence", _run_ak_congruence, _Defaults(AK_PRIMES[0], AK_PRIMES[-1], trials=3, weight_max=4),
             "truncated Arakawa-Kaneko value mod p (trials = max l)"),
)}


def run_identity(identity_id: str, config: RunConfig | None = None) -> list[VerificationReport]:
    try:
        ident = CATALOG[identity_id]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {identity_id!r}; known: {', '.join(CATALOG)}") from None
    resolved = _resolve(config or RunConfig(), ident.defaults)
    return ident.runner(resolved)


def run_all(config: RunConfig | None = None) -> list[VerificationReport]:
    """Every identity with its own defaults; only the seed and sampling bounds carry over."""
    config = config or RunConfig()
    base = RunConfig(seed=config.seed, num_bound=config.num_bound, den_bound=config.den_bound)
    out = []
    for name in CATALOG:
        out.extend(run_identity(name, base))
    return out


__all__ = ["CATALOG", "RunConfig", "run_all", "run_identity"]
