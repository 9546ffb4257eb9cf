"""Exact counts of feedback equivalence classes of linear systems over commutative rings."""

from ._fecount import (
    DomainError,
    GroupMismatch,
    IncompatibleSpec,
    NotPrime,
    ResourceError,
    count_det_solutions,
    count_partitions,
    fe,
    fe_dedekind_free,
    fe_dedekind_module,
    fe_dedekind_nonfree,
    fe_dedekind_rank,
    nu,
    nu_p,
    nu_prime_complement,
    nu_table,
    oracle_count_dedekind,
    oracle_count_product,
    oracle_count_rank,
    partitions,
    run_cli,
)

__all__ = [
    "DomainError",
    "GroupMismatch",
    "IncompatibleSpec",
    "NotPrime",
    "ResourceError",
    "count_det_solutions",
    "count_partitions",
    "fe",
    "fe_dedekind_free",
    "fe_dedekind_module",
    "fe_dedekind_nonfree",
    "fe_dedekind_rank",
    "nu",
    "nu_p",
    "nu_prime_complement",
    "nu_table",
    "oracle_count_dedekind",
    "oracle_count_product",
    "oracle_count_rank",
    "partitions",
    "run_cli",
]
