"""Symbolic space bounds checked against a run's peak item count.

Bounds are small arithmetic expressions over ``alpha``, ``eps``, ``n``,
``k``, ``output`` and ``W``, e.g. ``"12*alpha"`` or ``"6*ceil(48/eps**2)"``.
They are evaluated by walking the AST, never by ``eval``.
"""

from __future__ import annotations

import ast
import math
import operator
from dataclasses import dataclass

from ..algorithms.weighted import classes_kept
from ..errors import StreamisError
from .records import RunRecord

VARIABLES = ("alpha", "eps", "n", "k", "output", "W")

_BINOPS = {
    ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
    ast.Div: operator.truediv, ast.FloorDiv: operator.floordiv, ast.Pow: operator.pow,
    ast.Mod: operator.mod,
}
_FUNCS = {
    "ceil": math.ceil, "floor": math.floor, "log": math.log, "log2": math.log2,
    "sqrt": math.sqrt, "min": min, "max": max, "classes": classes_kept,
}

# default bounds per algorithm
DEFAULT_BOUNDS = {
    "greedy": "output + 1",
    "strip": "12*alpha",
    "estimator": "6*ceil(48/eps**2)",
    "weighted": "6*alpha*(2*classes(eps) + 1)",
}


class BoundError(StreamisError, ValueError):
    """Unparseable bound, or a bound that needs a value the record lacks."""


def evaluate_bound(expr: str, env: dict) -> float:
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise BoundError(f"cannot parse bound {expr!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in VARIABLES:
                raise BoundError(f"unknown variable {node.id!r} in bound")
            if env.get(node.id) is None:
                raise BoundError(f"bound {expr!r} needs {node.id}, which is not available")
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
                and node.func.id in _FUNCS and not node.keywords):
            return _FUNCS[node.func.id](*(ev(a) for a in node.args))
        raise BoundError(f"unsupported syntax in bound {expr!r}")

    return ev(tree)


@dataclass(frozen=True)
class SpaceCheck:
    bound: str
    limit: float
    peak_items: int
    passed: bool

    def as_dict(self) -> dict:
        return {"record": "space", "bound": self.bound, "limit": self.limit,
                "peak_items": self.peak_items, "passed": self.passed}


def enforce_space(record: RunRecord, bound: str, **env) -> SpaceCheck:
    """Evaluate ``bound`` (alpha defaults to the record's exact value) and compare with peak_items."""
    env.setdefault("alpha", record.exact)
    env.setdefault("output", record.output)
    limit = evaluate_bound(bound, env)
    return SpaceCheck(bound, limit, record.peak_items, record.peak_items <= limit)
