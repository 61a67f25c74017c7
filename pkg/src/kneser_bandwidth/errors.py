"""Exceptions shared across modules."""


class BudgetExceeded(RuntimeError):
    """A bounded exhaustive computation would exceed its work limit."""


class CertificateError(RuntimeError):
    """A right-blocker certificate or size identity did not verify."""
