from __future__ import annotations

from dataclasses import dataclass

METHODS = ("fpt-cw", "fpt-nlc", "unit-interval", "split", "brute")


@dataclass(frozen=True)
class PreassignmentSolution:
    """A pre-assignment S together with the unique minimum cover it forces."""

    preassign: frozenset
    min_vc_size: int
    unique_cover: frozenset
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if not self.preassign <= self.unique_cover:
            raise ValueError("pre-assignment must lie inside the forced cover")
        if len(self.unique_cover) != self.min_vc_size:
            raise ValueError(
                f"forced cover has {len(self.unique_cover)} vertices, "
                f"minimum cover size is {self.min_vc_size}")

    @property
    def size(self) -> int:
        return len(self.preassign)


@dataclass(frozen=True)
class Rejection:
    """Negative recognition verdict (falsy).

    ``kind`` names the evidence found and ``witness`` lists the vertex names
    involved, e.g. the centre and leaves of an induced claw.
    """

    kind: str
    witness: tuple
    message: str

    def __bool__(self):
        return False
