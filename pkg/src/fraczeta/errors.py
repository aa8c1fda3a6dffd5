"""Exception taxonomy shared by all fraczeta modules.

Validation problems (bad arguments, out-of-domain points, exceeded size
guards) derive from ValueError; numerical failures (an accelerated sum
that will not settle, a product that left the representable range) are
a separate family.  The CLI maps the first family to exit code 2 and
the second to exit code 3.
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole (e.g. zeta at s = 1)."""


class SingularFactorError(DomainError):
    """The eta-to-zeta conversion factor 1 - 2^(1-s) is numerically zero
    at a removable singularity (s = 1 + 2*pi*i*k/ln 2, k != 0)."""


class ConfigError(ValueError):
    """A configuration value violates its documented bounds."""


class LimitError(ValueError):
    """A size guard was exceeded (e.g. sieve limit above 10^8)."""


class ConvergenceError(ArithmeticError):
    """A numerical procedure could not reach the requested tolerance."""
