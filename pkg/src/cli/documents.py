"""GraphDocument: the JSON input of every command."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import orjson
from jsonschema import Draft7Validator

from src.errors import InvalidInput
from src.gains.graph import GainGraph, RootedGainGraph, Triple
from src.geometry.arrangement import Arrangement, arrangement_to_gain_graph

SCHEMA_PATH = Path(__file__).resolve().parents[1] / "assets" / "schema.graph.json"


@cache
def _validator() -> Draft7Validator:
    return Draft7Validator(orjson.loads(SCHEMA_PATH.read_bytes()))


@dataclass(frozen=True, slots=True)
class GraphDocument:
    n: int
    edges: Optional[Tuple[Triple, ...]] = None
    hyperplanes: Optional[Tuple[Triple, ...]] = None
    bounds: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "GraphDocument":
        errors = sorted(_validator().iter_errors(payload), key=lambda e: list(e.path))
        if errors:
            raise InvalidInput(
                "document does not match the graph schema",
                data={"errors": [_describe(e) for e in errors]},
            )

        def triples(key: str) -> Optional[Tuple[Triple, ...]]:
            if key not in payload:
                return None
            return tuple(tuple(entry) for entry in payload[key])

        bounds = payload.get("bounds")
        return cls(
            n=payload["n"],
            edges=triples("edges"),
            hyperplanes=triples("hyperplanes"),
            bounds=tuple(bounds) if bounds is not None else None,
        )

    def to_graph(self) -> GainGraph | RootedGainGraph:
        if self.hyperplanes is not None:
            graph = arrangement_to_gain_graph(Arrangement.build(self.n, self.hyperplanes))
        else:
            graph = GainGraph.build(self.n, self.edges or ())
        if self.bounds is None:
            return graph
        return RootedGainGraph.build(graph, self.bounds)


def _describe(error: Any) -> str:
    where = "/".join(str(p) for p in error.path) or "<root>"
    return f"{where}: {error.message}"


def parse_document(text: bytes | str) -> GraphDocument:
    try:
        payload = orjson.loads(text)
    except orjson.JSONDecodeError as exc:
        raise InvalidInput(f"document is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise InvalidInput("document must be a JSON object")
    return GraphDocument.from_dict(payload)


def parse(text: bytes | str) -> GainGraph | RootedGainGraph:
    """Document text to a canonical (rooted when ``bounds`` is present) gain graph."""
    return parse_document(text).to_graph()


def graph_payload(graph: GainGraph | RootedGainGraph) -> Dict[str, Any]:
    base = graph.graph if isinstance(graph, RootedGainGraph) else graph
    payload: Dict[str, Any] = {"n": base.n, "edges": [list(e.as_triple()) for e in base.edges]}
    if isinstance(graph, RootedGainGraph):
        payload["bounds"] = list(graph.bounds)
    return payload


__all__: List[str] = ["GraphDocument", "graph_payload", "parse", "parse_document"]
