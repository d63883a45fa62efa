"""Value types for the poly cut-plane and the selective-conjugation map.

A point of the cut-plane is an n-tuple of complex coordinates, each with
strictly nonzero imaginary part.  The cut-plane splits into 2^n connected
components indexed by the sign pattern of the imaginary parts; most of the
combinatorics downstream (symmetry sums, reconstruction, inversion) runs
over subsets of {1, ..., n} in bitmask order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidArgumentError, InvalidPointError

#: Hard ceiling on the dimension; subset sums scale as 2^n.
DEFAULT_MAX_DIMENSION = 8
_max_dimension = DEFAULT_MAX_DIMENSION

#: Coordinates closer to the real axis than this are rejected as on-the-cut.
MIN_IMAG = 1e-300


def set_max_dimension(n: int) -> None:
    """Raise or lower the dimension ceiling (default 8)."""
    global _max_dimension
    if n < 1:
        raise InvalidArgumentError("max dimension must be >= 1")
    _max_dimension = n


def max_dimension() -> int:
    return _max_dimension


IndexSet = frozenset
"""A subset of {1, ..., n}, 1-based."""


def validate_index_set(members: frozenset, n: int) -> frozenset:
    members = frozenset(members)
    for j in members:
        if not isinstance(j, int) or j < 1 or j > n:
            raise InvalidArgumentError(
                f"index set {sorted(members)} not contained in {{1..{n}}}"
            )
    return members


@dataclass(frozen=True)
class ComponentSignature:
    """Sign pattern of imaginary parts, identifying a connected component."""

    signs: tuple

    def __post_init__(self):
        if not self.signs or any(s not in (-1, 1) for s in self.signs):
            raise InvalidArgumentError("signature entries must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.signs)

    def lower_index_set(self) -> frozenset:
        """B' = indices whose coordinate lies in the lower half-plane."""
        return frozenset(j + 1 for j, s in enumerate(self.signs) if s == -1)

    def is_upper(self) -> bool:
        return all(s == 1 for s in self.signs)


@dataclass(frozen=True)
class CutPlanePoint:
    """A point of (C \\ R)^n."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(complex(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        n = len(coords)
        if n < 1:
            raise InvalidPointError("point must have dimension >= 1")
        if n > _max_dimension:
            raise InvalidArgumentError(
                f"dimension {n} exceeds the configured maximum {_max_dimension}"
            )
        for j, c in enumerate(coords):
            if abs(c.imag) < MIN_IMAG:
                raise InvalidPointError(
                    f"coordinate {j + 1} = {c} lies on the real axis"
                )

    @property
    def n(self) -> int:
        return len(self.coords)

    def signature(self) -> ComponentSignature:
        return ComponentSignature(tuple(1 if c.imag > 0 else -1 for c in self.coords))

    def is_upper(self) -> bool:
        return self.signature().is_upper()


def point(*coords) -> CutPlanePoint:
    """Convenience constructor: point(1j, 2+3j)."""
    return CutPlanePoint(tuple(coords))


def signature_of(p: CutPlanePoint) -> ComponentSignature:
    if not isinstance(p, CutPlanePoint):
        p = CutPlanePoint(tuple(p))
    return p.signature()


def psi_map(B: frozenset, z: Sequence[complex], w: Sequence[complex]) -> tuple:
    """Selective conjugation: keep z_j for j not in B, take conj(w_j) for j in B."""
    z = tuple(complex(c) for c in z)
    w = tuple(complex(c) for c in w)
    if len(z) != len(w):
        raise InvalidArgumentError(
            f"vector lengths differ: {len(z)} vs {len(w)}"
        )
    B = validate_index_set(B, len(z))
    return tuple(
        w[j].conjugate() if (j + 1) in B else z[j] for j in range(len(z))
    )


def psi_point(B: frozenset, z: CutPlanePoint, w: CutPlanePoint) -> CutPlanePoint:
    return CutPlanePoint(psi_map(B, z.coords, w.coords))


def _mask_to_set(mask: int, n: int) -> frozenset:
    return frozenset(j + 1 for j in range(n) if mask >> j & 1)


def enumerate_subsets(
    n: int, filter: str = "all", bprime: frozenset | None = None
) -> Iterator[frozenset]:
    """Enumerate subsets of {1..n} in bitmask-lexicographic order.

    Filters: "all", "nonempty", "subsets_of" (of bprime), "not_subsets_of".
    The fixed order keeps floating-point subset sums bit-for-bit reproducible.
    """
    if n < 1:
        raise InvalidArgumentError("dimension must be >= 1")
    if filter in ("subsets_of", "not_subsets_of"):
        if bprime is None:
            raise InvalidArgumentError(f"filter {filter!r} requires bprime")
        bprime = validate_index_set(bprime, n)
    elif filter not in ("all", "nonempty"):
        raise InvalidArgumentError(f"unknown subset filter {filter!r}")

    for mask in range(1 << n):
        s = _mask_to_set(mask, n)
        if filter == "nonempty" and not s:
            continue
        if filter == "subsets_of" and not s <= bprime:
            continue
        if filter == "not_subsets_of" and s <= bprime:
            continue
        yield s
