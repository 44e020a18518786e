"""Counting identities between the number K of parameters fixing a state and the number N of
perfectly distinguishable outcomes: K = N^r, r = 1 classically and r = 2 for complex amplitudes.
"""
from dataclasses import dataclass
from typing import Literal

Field = Literal['real', 'complex']


@dataclass(frozen=True)
class HardyCounts:
    K: int
    monotone_ok: bool
    composite_ok: bool


@dataclass(frozen=True)
class CompositeCounts:
    K_joint: int
    K_product: int
    violates: bool


def _factor_pairs(n: int) -> list[tuple[int, int]]:
    return [(d, n // d) for d in range(2, n) if n % d == 0]


def hardy_counts(n: int, r: int) -> HardyCounts:
    if n < 1:
        raise ValueError(f"N must be at least 1, got {n}")
    if r not in (1, 2):
        raise ValueError(f"r must be 1 or 2, got {r}")
    K = lambda m: m**r
    return HardyCounts(
        K=K(n),
        monotone_ok=K(n + 1) > K(n),
        composite_ok=all(K(a * b) == K(a) * K(b) for a, b in _factor_pairs(n)),
    )


def parameter_count(n: int, field: Field) -> int:
    """Parameters of an unnormalized state: N(N+1)/2 over the reals, N^2 over the complex numbers."""
    if field == 'real':
        return n * (n + 1) // 2
    if field == 'complex':
        return n * n
    raise ValueError(f"unknown field {field!r}")


def composite_counts(n1: int, n2: int, field: Field = 'real') -> CompositeCounts:
    """Joint parameter count against the product of the local ones.

    violates is True when the joint state holds more parameters than local
    measurements can fix.
    """
    if n1 < 2 or n2 < 2:
        raise ValueError("both subsystems need N >= 2")
    joint = parameter_count(n1 * n2, field)
    product = parameter_count(n1, field) * parameter_count(n2, field)
    return CompositeCounts(joint, product, joint > product)


def real_space_violation(n1: int, n2: int) -> CompositeCounts:
    return composite_counts(n1, n2, 'real')


def wootters_g_identity(n1: int, n2: int, r: int, offset: int = 1) -> float:
    """|g(N1 N2) - g(N1) - g(N2) - g(N1) g(N2)| with g(N) = N^r - offset.

    Exactly zero for offset 1; other offsets serve as negative controls.
    """
    if n1 < 2 or n2 < 2:
        raise ValueError("both subsystems need N >= 2")
    g = lambda m: m**r - offset
    return float(abs(g(n1 * n2) - g(n1) - g(n2) - g(n1) * g(n2)))
