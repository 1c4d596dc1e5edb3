"""Error types and brute-force guards shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


class HallqError(Exception):
    """Base class for all package errors."""


class InputError(HallqError):
    """Malformed input: bad quiver file, unknown label, shape mismatch."""


class GuardExceeded(HallqError):
    """A brute-force search would exceed its configured bound.

    Raised instead of silently approximating; carries a machine-readable
    reason in ``args[0]``.
    """


class ValidationFailure(HallqError):
    """An internal cross-check failed (interpolation mismatch, integrality,
    non-unique generic extension, ...)."""


@dataclass(frozen=True)
class Guards:
    """Explicit bounds on exhaustive searches.

    scan_limit      -- max number of points q**dim(E_d) for an orbit scan
    hom_limit       -- max q**dim Hom for enumerating a Hom space
    subspace_limit  -- max product of Gaussian binomials in one subspace walk
    """

    scan_limit: int = 2**24
    hom_limit: int = 2**20
    subspace_limit: int = 2**24

    def check_scan(self, count: int, what: str = "orbit scan") -> None:
        if count > self.scan_limit:
            raise GuardExceeded(f"{what}: {count} points exceeds scan_limit={self.scan_limit}")

    def check_hom(self, count: int, what: str = "hom enumeration") -> None:
        if count > self.hom_limit:
            raise GuardExceeded(f"{what}: {count} maps exceeds hom_limit={self.hom_limit}")

    def check_subspaces(self, count: int, what: str = "subspace walk") -> None:
        if count > self.subspace_limit:
            raise GuardExceeded(
                f"{what}: {count} subspaces exceeds subspace_limit={self.subspace_limit}"
            )


DEFAULT_GUARDS = Guards()
