"""Exception types shared across the package."""

from __future__ import annotations


class CapExceeded(RuntimeError):
    """A configurable resource limit (matrix size, cycle length) was exceeded."""


class ExactnessError(ArithmeticError):
    """An exact-arithmetic postcondition failed (non-exact division or a
    non-integral result). Signals inconsistent input data, never rounding."""
