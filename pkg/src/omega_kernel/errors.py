"""Exceptions surfaced by the engine and mapped to CLI exit codes."""

from .limits import ResourceCapExceeded


class ZeroModuleError(ValueError):
    """An invariant that is undefined on the zero module was requested."""


class InternalInconsistency(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


__all__ = ["ZeroModuleError", "InternalInconsistency", "ResourceCapExceeded"]
