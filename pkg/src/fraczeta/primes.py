"""Prime generation, the fractal gauge relation and the varpi product.

The gauge relation 1/delta = (vc/p)^(1/d) ties a measurement gauge to a
covering count p; normalising its complex pair form p^(2i theta') yields
the residual condition 2 cos(2 theta' ln p) = 1 whose closed-form
solutions are theta' = (+-pi/3 + 2 pi k)/(2 ln p).  The same +-theta'
parameter drives the truncated prime product

    varpi(theta') = prod_p (1 - p^(-s+) + p^(-s-)),  s+- = (1 +- 2i theta')/2,

whose modulus is scanned on a grid for local minima.  The truncated
product is all that is computed here; nothing is claimed about its
infinite-cutoff limit, and the scan's stability is measured, not assumed
(rerunning with a doubled prime cutoff visibly moves the minima, see the
test suite).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import cpow_principal
from .errors import DomainError, LimitError

SIEVE_LIMIT_CAP = 100_000_000


@dataclass(frozen=True)
class PrimeSet:
    """All primes up to ``limit``, ascending."""

    limit: int
    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p > self.limit or p < 2 for p in self.primes):
            raise DomainError("primes must lie in [2, limit]")
        if any(b <= a for a, b in zip(self.primes, self.primes[1:])):
            raise DomainError("primes must be strictly ascending")

    def __len__(self) -> int:
        return len(self.primes)


@dataclass(frozen=True)
class ThetaPrimeSolution:
    """One closed-form branch theta' = (sign*pi/3 + 2 pi k)/(2 ln p)."""

    p: int
    k: int
    sign: int
    theta_prime: float

    def __post_init__(self) -> None:
        expected = (self.sign * math.pi / 3.0 + 2.0 * math.pi * self.k) / (
            2.0 * math.log(self.p)
        )
        if self.theta_prime != expected:
            raise DomainError("theta_prime does not match its branch formula")
        resid, _ = hausdorff_residual(self.p, 1.0, self.theta_prime)
        if abs(resid) > 1e-12:
            raise DomainError("branch value fails the residual check")


@dataclass(frozen=True)
class VarpiConfig:
    """Prime cutoff and sign convention for the varpi product.

    ``as_printed`` keeps the mixed-sign factor 1 - p^(-s+) + p^(-s-);
    ``both_minus`` flips the last sign, the reading under which factors
    can actually vanish.  Neither is endorsed; both are computable.
    """

    prime_limit: int
    sign_convention: Literal["as_printed", "both_minus"] = "as_printed"

    def __post_init__(self) -> None:
        if self.prime_limit < 2:
            raise DomainError("prime_limit must be >= 2")
        if self.sign_convention not in ("as_printed", "both_minus"):
            raise DomainError("sign_convention must be as_printed or both_minus")


def sieve(limit: int) -> PrimeSet:
    """Sieve of Eratosthenes up to ``limit`` inclusive (cap 1e8)."""
    if limit < 1:
        raise DomainError("limit must be >= 1")
    if limit > SIEVE_LIMIT_CAP:
        raise LimitError(f"sieve limit {limit} exceeds {SIEVE_LIMIT_CAP}")
    if limit < 2:
        return PrimeSet(limit=limit, primes=())
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return PrimeSet(limit=limit, primes=tuple(int(p) for p in np.nonzero(mask)[0]))


def mandelbrot_gauge(p: float, vc: float, d: float) -> float:
    """Gauge value 1/delta = (vc/p)^(1/d); equals 1 at the trivial p = vc."""
    if not (p > 0 and vc > 0):
        raise DomainError("p and vc must be > 0")
    if not d >= 1:
        raise DomainError("d must be ≥ 1")
    return (vc / p) ** (1.0 / d)


def hausdorff_residual(
    p: int, inv_delta: float, theta_prime: float
) -> tuple[float, float]:
    """Deviation of the normalised conjugate pair from (1, 0).

    Computes S = inv_delta * (p^(2i theta') + p^(-2i theta')) through the
    actual complex pair (not its real closed form) and returns
    (Re(S) - 1, Im(S)); the imaginary part vanishes to rounding because
    the pair is conjugate.
    """
    if p < 2:
        raise DomainError("p must be >= 2")
    if not inv_delta > 0:
        raise DomainError("inv_delta must be > 0")
    e = complex(0.0, 2.0 * theta_prime)
    s = inv_delta * (cpow_principal(p, e) + cpow_principal(p, -e))
    return (s.real - 1.0, s.imag)


def solve_theta_prime(p: int, branches: int) -> list[ThetaPrimeSolution]:
    """All branches theta' = (+-pi/3 + 2 pi k)/(2 ln p), k < branches.

    The k = 0 minus branch is negative and excluded; results are sorted
    ascending and each is verified against :func:`hausdorff_residual`
    (delta = 1) on construction.
    """
    if p < 2:
        raise DomainError("p must be >= 2")
    if branches < 1:
        raise DomainError("branches must be >= 1")
    log_p = math.log(p)
    out = []
    for k in range(branches):
        for sign in (-1, 1):
            if k == 0 and sign == -1:
                continue
            theta = (sign * math.pi / 3.0 + 2.0 * math.pi * k) / (2.0 * log_p)
            out.append(ThetaPrimeSolution(p=p, k=k, sign=sign, theta_prime=theta))
    out.sort(key=lambda sol: sol.theta_prime)
    return out


def _varpi_factors(theta_prime: float, primes: PrimeSet, cfg: VarpiConfig) -> np.ndarray:
    log_p = np.log(np.asarray(primes.primes, dtype=float))
    s_plus = complex(0.5, theta_prime)
    s_minus = complex(0.5, -theta_prime)
    a = np.exp(-s_plus * log_p)
    b = np.exp(-s_minus * log_p)
    if cfg.sign_convention == "as_printed":
        return 1.0 - a + b
    return 1.0 - a - b


def _guarded_product(factors: np.ndarray) -> complex:
    """Left-to-right product; rejects partial products outside 1e+-300."""
    with np.errstate(over="ignore", invalid="ignore", under="ignore"):
        partial = np.cumprod(factors)
        mods = np.abs(partial)
    if (
        not np.all(np.isfinite(mods))
        or mods.max() > 1e300
        or mods.min() < 1e-300
    ):
        raise OverflowError("varpi partial product left the range [1e-300, 1e300]")
    return complex(partial[-1])


def varpi(theta_prime: float, primes: PrimeSet, cfg: VarpiConfig) -> complex:
    """Truncated product prod_p (1 - p^(-s+) +- p^(-s-)) over the set.

    At theta' = 0 the two terms of every as_printed factor cancel exactly
    and the product is exactly 1.
    """
    if len(primes) == 0:
        raise DomainError("primes must be non-empty")
    return _guarded_product(_varpi_factors(theta_prime, primes, cfg))


def strict_local_minima(
    thetas: np.ndarray, mods: np.ndarray
) -> list[tuple[float, float]]:
    """Grid points strictly below both neighbours, as (theta, modulus)."""
    out = []
    for i in range(1, len(mods) - 1):
        if mods[i] < mods[i - 1] and mods[i] < mods[i + 1]:
            out.append((float(thetas[i]), float(mods[i])))
    return out


def varpi_scan(
    theta_lo: float,
    theta_hi: float,
    step: float,
    primes: PrimeSet,
    cfg: VarpiConfig,
) -> list[tuple[float, float]]:
    """Strict local minima of |varpi| on the grid theta_lo + k*step.

    The grid is anchored at theta_lo; chunking the list of grid points
    across workers cannot change it, so repeated scans are bitwise
    reproducible.  Spans shorter than one step yield no interior points
    and an empty list.
    """
    if not theta_lo < theta_hi:
        raise DomainError("theta_lo must be < theta_hi")
    if not step > 0:
        raise DomainError("step must be > 0")
    count = int(math.floor((theta_hi - theta_lo) / step + 1e-9)) + 1
    thetas = theta_lo + step * np.arange(count)
    mods = np.array([abs(varpi(t, primes, cfg)) for t in thetas])
    return strict_local_minima(thetas, mods)
