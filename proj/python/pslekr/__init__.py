"""PSL(2,q) derangement matrices, character sums and intersecting families."""

import json

from ._pslekr import (
    SCHEMA_VERSION,
    Error,
    class_sizes,
    derangement_count,
    derangement_rank,
    dump_csv,
    f_norm2,
    group_orders,
    legendre_sum,
    max_intersecting,
    n_matrix,
    verify_json,
)

SUITES = ("table", "sums", "rank", "ekr")


def verify(q, suite, seed=0, approx_digits=12, allow_ekr_q9=False):
    """Run one suite at q and return the parsed report."""
    return json.loads(verify_json(q, suite, seed, approx_digits, allow_ekr_q9))


__all__ = [
    "SCHEMA_VERSION",
    "SUITES",
    "Error",
    "class_sizes",
    "derangement_count",
    "derangement_rank",
    "dump_csv",
    "f_norm2",
    "group_orders",
    "legendre_sum",
    "max_intersecting",
    "n_matrix",
    "verify",
    "verify_json",
]
