"""Bundled instance corpus for reproducible verification runs."""

from __future__ import annotations

import random

from .gadgets import MnaeInstance, make_instance

DEFAULT_SEED = 1729


def single_clause_instance() -> MnaeInstance:
    return make_instance(3, [(0, 1, 2)])


def pair_instance_a() -> MnaeInstance:
    """Two overlapping clauses on five variables; enough x vertices to make
    the four-variables-on-a-path check non-vacuous."""
    return make_instance(5, [(0, 1, 2), (2, 3, 4)])


def pair_instance_b() -> MnaeInstance:
    return make_instance(4, [(0, 1, 2), (1, 2, 3)])


def fano_instance() -> MnaeInstance:
    """The 7-point, 7-triple system; the canonical unsatisfiable instance
    (its triples cannot be 2-colored without a monochromatic triple)."""
    return make_instance(
        7,
        [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)],
    )


def random_instances(seed: int = DEFAULT_SEED, count: int = 20) -> list[MnaeInstance]:
    """Seeded random instances with 3..5 variables and 1..3 clauses."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        num_vars = rng.randint(3, 5)
        num_clauses = rng.randint(1, 3)
        clauses = [tuple(sorted(rng.sample(range(num_vars), 3))) for _ in range(num_clauses)]
        out.append(make_instance(num_vars, clauses))
    return out


def bundled_corpus(seed: int = DEFAULT_SEED) -> list[tuple[str, MnaeInstance]]:
    """The fixed corpus the verification pipeline runs end-to-end checks on."""
    named = [
        ("single-clause", single_clause_instance()),
        ("pair-a", pair_instance_a()),
        ("pair-b", pair_instance_b()),
        ("fano", fano_instance()),
    ]
    named.extend(
        (f"rand-{i:02d}", inst) for i, inst in enumerate(random_instances(seed))
    )
    return named
