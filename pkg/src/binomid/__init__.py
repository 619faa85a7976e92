"""Exact evaluation and verification of a family of binomial-sum identities."""

__version__ = "0.1.0"

from binomid.exact import DomainError, binomial, factorial, multinomial

__all__ = ["DomainError", "__version__", "binomial", "factorial", "multinomial"]
