from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..core.graph import Graph
from ..core.streams import StreamData, StreamEvent


@dataclass(frozen=True)
class GadgetOutput:
    """A generated lower-bound instance.

    ``metadata`` is JSON-serialisable. Common keys: ``gadget``, ``params``,
    ``quantity`` (alpha, omega or chi), ``case`` (low or high), ``phases``
    (event offset at which each party starts) and ``landmarks`` (name ->
    vertex ids). ``expected_low`` / ``expected_high`` are the claimed values
    of ``quantity`` in the two promise cases. In the low case the claim is an
    upper bound; in the high case it is a lower bound.
    """

    stream: StreamData
    metadata: dict[str, Any] = field(default_factory=dict)
    expected_low: int | None = None
    expected_high: int | None = None

    @property
    def events(self) -> tuple[StreamEvent, ...]:
        return self.stream.events

    def graph(self) -> Graph:
        return self.stream.graph()

    @property
    def landmarks(self) -> dict[str, list[int]]:
        return self.metadata.get("landmarks", {})

    @property
    def phases(self) -> list[int]:
        return self.metadata.get("phases", [0])

    @property
    def case(self) -> str | None:
        return self.metadata.get("case")

    @property
    def quantity(self) -> str | None:
        return self.metadata.get("quantity")
