"""Exception types raised by the library, mapped onto CLI exit codes."""

from __future__ import annotations


class StableContractsError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(StableContractsError):
    """An argument is outside an operation's domain (unknown agent, menu
    outside the ground set, malformed payload, ...)."""


class PreconditionError(DomainError):
    """A declared algorithm precondition does not hold, e.g. a start set
    that is not ample/modest, or a non-classical instance fed to
    deferred acceptance."""


class CapExceededError(DomainError):
    """An exhaustive scan was requested over a ground set larger than its
    cap.  Scans never fall back to sampling; they refuse instead."""


class ParseError(DomainError):
    """An instance document could not be loaded.

    ``code`` identifies the failure class: ``io``, ``malformed``,
    ``unknown-family``, ``dangling-reference`` or ``axiom-violation``.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class ChoiceValidationError(DomainError):
    """A choice function failed exhaustive axiom validation.

    Carries the offending agent id (when known) and the full
    ValidationReport so callers can render the witness.
    """

    def __init__(self, message: str, report, agent_id: str | None = None):
        super().__init__(message)
        self.report = report
        self.agent_id = agent_id


class InternalInconsistencyError(StableContractsError):
    """An algorithm produced output contradicting a theorem it relies on.

    This always signals an implementation bug, never bad user input.
    """
