from dataclasses import dataclass, field
from typing import Optional, Tuple

from App.models.ring import RingId

# largest L exponent needed per ring; rings without L only allow 0
EPSILON_RANGE = {1: 1, 3: 2}


@dataclass(frozen=True)
class Block:
    """One factor A T^p U^q of a word representation."""

    p: int
    q: int

    def get_json(self):
        return [str(self.p), str(self.q)]


@dataclass(frozen=True)
class WordRep:
    """sl_sign * (L^epsilon T^p0 U^q0) * A T^p_k U^q_k ... A T^p_1 U^q_1"""

    ring: RingId
    epsilon: int = 0
    p0: int = 0
    q0: int = 0
    blocks: Tuple[Block, ...] = field(default_factory=tuple)
    sl_sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        top = EPSILON_RANGE.get(self.ring.d, 0)
        if not 0 <= self.epsilon <= top:
            raise ValueError(f"epsilon must lie in 0..{top} for O_{self.ring.d}, got {self.epsilon}")
        if self.sl_sign not in (1, -1):
            raise ValueError(f"sl_sign must be +1 or -1, got {self.sl_sign}")

    @property
    def k(self):
        return len(self.blocks)

    def get_json(self):
        return {
            "d": self.ring.d,
            "epsilon": self.epsilon,
            "p0": str(self.p0),
            "q0": str(self.q0),
            "blocks": [block.get_json() for block in self.blocks],
            "sl_sign": self.sl_sign,
        }


@dataclass(frozen=True)
class BoundReport:
    norm: int
    k: int
    max_exponent_norm: int
    exponent_ok: bool
    iteration_ok: bool
    strict_iteration_ok: bool
    # only recorded for d = 1
    head_individual_ok: Optional[bool] = None

    @property
    def bounds_ok(self):
        return self.exponent_ok and self.iteration_ok

    def get_json(self):
        data = {
            "norm": str(self.norm),
            "k": self.k,
            "max_exponent_norm": str(self.max_exponent_norm),
            "exponent_ok": self.exponent_ok,
            "iteration_ok": self.iteration_ok,
            "strict_iteration_ok": self.strict_iteration_ok,
            "bounds_ok": self.bounds_ok,
        }
        if self.head_individual_ok is not None:
            data["head_individual_ok"] = self.head_individual_ok
        return data
