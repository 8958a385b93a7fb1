from pydantic import BaseModel, Field, field_validator
from typing import List, Tuple
from collections import Counter

import networkx as nx
import numpy as np


Edge = Tuple[int, int]
Triangle = Tuple[int, int, int]
Facet = Tuple[int, int, int, int]


class FVector(BaseModel):
    """Face counts (vertices, edges, triangles, tetrahedra)"""

    v: int = Field(ge=0)
    e: int = Field(ge=0)
    f: int = Field(ge=0)
    t: int = Field(ge=0)

    @property
    def euler_characteristic(self) -> int:
        return self.v - self.e + self.f - self.t

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.v, self.e, self.f, self.t)

    def to_line(self) -> str:
        return f"{self.v} {self.e} {self.f} {self.t}"


class EdgeStar(BaseModel):
    """Facets containing an edge"""

    edge: Edge
    incident: List[Facet] = Field(default_factory=list)

    @property
    def valence(self) -> int:
        return len(self.incident)


class VertexLink(BaseModel):
    """Boundary 2-complex around a vertex"""

    vertex: int
    link: List[Triangle] = Field(default_factory=list)

    @property
    def vertices(self) -> List[int]:
        return sorted({u for tri in self.link for u in tri})

    def edge_counts(self) -> Counter:
        counts: Counter = Counter()
        for a, b, c in self.link:
            counts[(a, b)] += 1
            counts[(a, c)] += 1
            counts[(b, c)] += 1
        return counts

    def is_closed_surface(self) -> bool:
        """Every link edge lies in exactly two link triangles"""
        counts = self.edge_counts()
        return bool(counts) and all(c == 2 for c in counts.values())

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edge_counts()) + len(self.link)

    def is_sphere(self) -> bool:
        """Closed, connected surface with Euler characteristic 2"""
        if not self.is_closed_surface():
            return False
        graph = nx.Graph()
        graph.add_edges_from(self.edge_counts().keys())
        return nx.is_connected(graph) and self.euler_characteristic() == 2


class IntegerMatrix(BaseModel):
    """Dense integer matrix with arbitrary-precision entries"""

    rows: int = Field(ge=0)
    cols: int = Field(ge=0)
    entries: List[List[int]] = Field(default_factory=list)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows=rows, cols=cols, entries=[[0] * cols for _ in range(rows)])

    @classmethod
    def from_rows(cls, entries: List[List[int]]) -> "IntegerMatrix":
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        return cls(rows=rows, cols=cols, entries=[list(r) for r in entries])

    def to_array(self) -> np.ndarray:
        """Object-dtype array so products stay exact"""
        array = np.empty((self.rows, self.cols), dtype=object)
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                array[i, j] = int(value)
        return array


class HomologyProfile(BaseModel):
    """Integer homology H_0..H_3 as Betti numbers plus torsion coefficients"""

    betti: List[int] = Field(default_factory=lambda: [0, 0, 0, 0])
    torsion: List[List[int]] = Field(default_factory=lambda: [[], [], [], []])

    @field_validator("torsion")
    @classmethod
    def _check_divisibility(cls, value: List[List[int]]) -> List[List[int]]:
        for coefficients in value:
            for a, b in zip(coefficients, coefficients[1:]):
                if a <= 1 or b % a != 0:
                    raise ValueError(f"torsion coefficients {coefficients} break d_i | d_i+1")
            if coefficients and coefficients[-1] <= 1:
                raise ValueError("torsion coefficients must exceed 1")
        return value

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    def is_sphere_profile(self) -> bool:
        return self.betti == [1, 0, 0, 1] and all(not t for t in self.torsion)

    def to_line(self) -> str:
        """Render as `H0=Z H1=0 H2=0 H3=Z`"""
        parts = []
        for k, (rank, torsion) in enumerate(zip(self.betti, self.torsion)):
            summands = []
            if rank == 1:
                summands.append("Z")
            elif rank > 1:
                summands.append(f"Z^{rank}")
            summands.extend(f"Z/{d}" for d in torsion)
            parts.append(f"H{k}=" + ("+".join(summands) if summands else "0"))
        return " ".join(parts)
