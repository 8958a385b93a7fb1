from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..core.exceptions import TraceFormatError


class FlipKind(str, Enum):
    ONE_FOUR = "14"  # insert a vertex into a facet
    TWO_THREE = "23"  # replace two facets sharing a triangle by three
    THREE_TWO = "32"  # replace three facets around an edge by two
    FOUR_ONE = "41"  # remove a vertex of degree 4

    @property
    def site_arity(self) -> int:
        return SITE_ARITY[self]

    @property
    def order(self) -> int:
        return KIND_ORDER.index(self)

    @property
    def inverse(self) -> "FlipKind":
        return INVERSE_KIND[self]


KIND_ORDER = [FlipKind.ONE_FOUR, FlipKind.TWO_THREE, FlipKind.THREE_TWO, FlipKind.FOUR_ONE]

SITE_ARITY = {
    FlipKind.ONE_FOUR: 4,
    FlipKind.TWO_THREE: 3,
    FlipKind.THREE_TWO: 2,
    FlipKind.FOUR_ONE: 1,
}

INVERSE_KIND = {
    FlipKind.ONE_FOUR: FlipKind.FOUR_ONE,
    FlipKind.FOUR_ONE: FlipKind.ONE_FOUR,
    FlipKind.TWO_THREE: FlipKind.THREE_TWO,
    FlipKind.THREE_TWO: FlipKind.TWO_THREE,
}

VERTEX_PRESERVING = frozenset({FlipKind.TWO_THREE, FlipKind.THREE_TWO})
ALL_KINDS = frozenset(KIND_ORDER)


def parse_kinds(text: str) -> List[FlipKind]:
    """Parse `23,32` / `23 32` / `all` into flip kinds"""
    text = text.strip().lower()
    if text in ("all", "*"):
        return list(KIND_ORDER)
    tokens = [t for t in text.replace(",", " ").split() if t]
    try:
        kinds = {FlipKind(t.replace("-", "")) for t in tokens}
    except ValueError as e:
        raise TraceFormatError(f"unknown flip kind in '{text}'") from e
    return sorted(kinds, key=lambda k: k.order)


class FlipDelta(BaseModel):
    """Signed change of the f-vector caused by one move"""

    dv: int
    de: int
    df: int
    dt: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.dv, self.de, self.df, self.dt)


FLIP_DELTAS: Dict[FlipKind, FlipDelta] = {
    FlipKind.ONE_FOUR: FlipDelta(dv=1, de=4, df=6, dt=3),
    FlipKind.TWO_THREE: FlipDelta(dv=0, de=1, df=2, dt=1),
    FlipKind.THREE_TWO: FlipDelta(dv=0, de=-1, df=-2, dt=-1),
    FlipKind.FOUR_ONE: FlipDelta(dv=-1, de=-4, df=-6, dt=-3),
}


class FlipMove(BaseModel):
    """One bistellar move and the simplex it acts on"""

    model_config = ConfigDict(frozen=True)

    kind: FlipKind
    site: Tuple[int, ...]
    new_vertex: Optional[int] = None

    @field_validator("site", mode="before")
    @classmethod
    def _sort_site(cls, value) -> Tuple[int, ...]:
        return tuple(sorted(value))

    @model_validator(mode="after")
    def _check_site(self) -> "FlipMove":
        if len(self.site) != self.kind.site_arity:
            raise ValueError(
                f"{self.kind.value} move needs a site of {self.kind.site_arity} vertices, "
                f"got {self.site}"
            )
        if len(set(self.site)) != len(self.site):
            raise ValueError(f"site {self.site} repeats a vertex")
        if self.kind is FlipKind.ONE_FOUR:
            if self.new_vertex is None:
                raise ValueError("1-4 move needs a new vertex label")
            if self.new_vertex in self.site:
                raise ValueError("new vertex must not belong to the site")
        elif self.new_vertex is not None:
            raise ValueError("only 1-4 moves carry a new vertex label")
        return self

    @classmethod
    def one_four(cls, facet, new_vertex: int) -> "FlipMove":
        return cls(kind=FlipKind.ONE_FOUR, site=tuple(sorted(facet)), new_vertex=new_vertex)

    @classmethod
    def two_three(cls, triangle) -> "FlipMove":
        return cls(kind=FlipKind.TWO_THREE, site=tuple(sorted(triangle)))

    @classmethod
    def three_two(cls, edge) -> "FlipMove":
        return cls(kind=FlipKind.THREE_TWO, site=tuple(sorted(edge)))

    @classmethod
    def four_one(cls, vertex: int) -> "FlipMove":
        return cls(kind=FlipKind.FOUR_ONE, site=(vertex,))

    @property
    def sort_key(self) -> tuple:
        return (self.kind.order, self.site, self.new_vertex or 0)

    def relabel(self, mapping: Dict[int, int]) -> "FlipMove":
        return FlipMove(
            kind=self.kind,
            site=tuple(sorted(mapping[v] for v in self.site)),
            new_vertex=mapping[self.new_vertex] if self.new_vertex is not None else None,
        )

    def to_trace(self) -> str:
        """Render as a trace line, e.g. `23 1 2 3` or `14 1 2 3 4 -> 7`"""
        line = " ".join([self.kind.value] + [str(v) for v in self.site])
        if self.kind is FlipKind.ONE_FOUR:
            line += f" -> {self.new_vertex}"
        return line

    @classmethod
    def from_trace(cls, line: str) -> "FlipMove":
        text = line.strip()
        new_vertex = None
        if "->" in text:
            text, _, tail = text.partition("->")
            try:
                new_vertex = int(tail.strip())
            except ValueError as e:
                raise TraceFormatError(f"bad new vertex in trace line '{line}'") from e
        tokens = text.split()
        if not tokens:
            raise TraceFormatError("empty trace line")
        try:
            kind = FlipKind(tokens[0])
            site = tuple(int(t) for t in tokens[1:])
            return cls(kind=kind, site=site, new_vertex=new_vertex)
        except ValueError as e:
            raise TraceFormatError(f"bad trace line '{line}': {e}") from e

    def __str__(self) -> str:
        return self.to_trace()

