"""Verification engine: identity catalog, sampling, limit checks, reports, CLI."""

from .catalog import CATALOG, RunConfig, run_all, run_identity
from .limits import default_limit_suite, limit_aar_beta, limit_disc_power, limit_t1F0
from .reports import LimitReport, VerificationReport, all_passed, emit_report
from .sampling import rng_stream, sample_rational

__all__ = [
    "CATALOG", "LimitReport", "RunConfig", "VerificationReport", "all_passed", "default_limit_suite",
    "emit_report", "limit_aar_beta", "limit_disc_power", "limit_t1F0", "rng_stream", "run_all",
    "run_identity", "sample_rational",
]
