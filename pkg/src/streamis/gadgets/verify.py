from __future__ import annotations

from dataclasses import dataclass

from ..core.oracles import ALPHA_LIMIT, CHI_LIMIT, exact_alpha, exact_chi, exact_omega
from ..errors import GadgetError
from .output import GadgetOutput

QUANTITIES = ("alpha", "omega", "chi")


@dataclass(frozen=True)
class GapReport:
    quantity: str
    case: str
    value: int
    expected: int
    passed: bool
    exact_match: bool
    witness: tuple

    def as_dict(self) -> dict:
        return {
            "quantity": self.quantity, "case": self.case, "value": self.value,
            "expected": self.expected, "passed": self.passed,
            "exact_match": self.exact_match, "witness": list(self.witness),
        }


def verify_gap(g: GadgetOutput, quantity: str | None = None, case: str | None = None,
               limit: int | None = None) -> GapReport:
    """Compute the exact quantity and compare it with the gadget's claim.

    In the low case the claim is an upper bound (pass iff value <= expected_low);
    in the high case it is a lower bound (pass iff value >= expected_high).
    The witness is a maximum independent set, a maximum clique or an optimal
    colouring. ``limit`` overrides the oracle's default vertex limit; a
    gadget may carry its own ``oracle_limit`` when its structure keeps the
    search cheap beyond the default.
    """
    quantity = quantity or g.quantity
    case = case or g.case
    if quantity not in QUANTITIES:
        raise GadgetError(f"unknown quantity {quantity!r}; expected one of {QUANTITIES}")
    if case not in ("low", "high"):
        raise GadgetError(f"case must be 'low' or 'high', got {case!r}")
    expected = g.expected_low if case == "low" else g.expected_high
    if expected is None:
        raise GadgetError(f"gadget carries no expected value for the {case} case")
    graph = g.graph()
    if limit is None:
        limit = g.metadata.get("oracle_limit")
    if quantity == "alpha":
        value, witness = exact_alpha(graph, ALPHA_LIMIT if limit is None else limit)
    elif quantity == "omega":
        value, witness = exact_omega(graph, ALPHA_LIMIT if limit is None else limit)
    else:
        value, colouring = exact_chi(graph, CHI_LIMIT if limit is None else limit)
        witness = tuple(colouring)
    passed = value <= expected if case == "low" else value >= expected
    return GapReport(quantity, case, value, expected, passed, value == expected, tuple(witness))
