from dataclasses import dataclass, field
from typing import Tuple

from App.models.matrix import Mat2
from App.models.ring import RingId


@dataclass(frozen=True)
class ClaimReport:
    """Outcome of the exhaustive norm-monotonicity search over one ring."""

    ring: RingId
    candidates_examined: int
    counterexamples: Tuple[Tuple[Mat2, Mat2], ...] = field(default_factory=tuple)
    elapsed_ms: float = 0.0

    @property
    def holds(self):
        return not self.counterexamples

    def get_json(self):
        return {
            "d": self.ring.d,
            "candidates": self.candidates_examined,
            "counterexamples": [
                {"M": m.get_json()["entries"], "M_next": m_next.get_json()["entries"]}
                for m, m_next in self.counterexamples
            ],
            "ms": round(self.elapsed_ms, 3),
        }
