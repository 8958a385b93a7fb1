import sys
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from ..core.exceptions import FacetFormatError, TraceFormatError
from ..core.triangulation import Triangulation, from_facets
from ..models.flip_models import FlipMove


def read_text(path: str) -> str:
    """Read a file, `-` meaning standard input"""
    if path == "-":
        return sys.stdin.read()
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Input file not found: {path}")
    with open(file_path, "r", encoding="utf-8") as f:
        return f.read()


def write_text(content: str, path: str) -> None:
    """Write a file, `-` meaning standard output; LF line endings"""
    if path == "-":
        sys.stdout.write(content)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(content)


def _data_lines(text: str) -> Iterable[Tuple[int, str]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped


def parse_facets(text: str) -> List[Tuple[int, ...]]:
    """Facet tuples from the text format: four positive integers per line"""
    facets = []
    for number, line in _data_lines(text):
        tokens = line.split()
        if len(tokens) != 4:
            raise FacetFormatError(f"line {number}: expected 4 labels, got {len(tokens)}")
        try:
            facet = tuple(int(t) for t in tokens)
        except ValueError as e:
            raise FacetFormatError(f"line {number}: non-integer label in '{line}'") from e
        if any(v < 1 for v in facet):
            raise FacetFormatError(f"line {number}: labels must be positive")
        facets.append(facet)
    return facets


def load_triangulation(path: str, relabel: bool = False) -> Triangulation:
    return from_facets(parse_facets(read_text(path)), relabel=relabel)


def format_facets(triangulation: Triangulation, header: Optional[str] = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(" ".join(str(v) for v in facet) for facet in triangulation.facets)
    return "\n".join(lines) + "\n"


def write_triangulation(
    triangulation: Triangulation, path: str, header: Optional[str] = None
) -> None:
    write_text(format_facets(triangulation, header), path)


def parse_trace(text: str) -> List[FlipMove]:
    moves = []
    for number, line in _data_lines(text):
        try:
            moves.append(FlipMove.from_trace(line))
        except TraceFormatError as e:
            raise TraceFormatError(f"line {number}: {e}") from e
    return moves


def format_trace(moves: Iterable[FlipMove]) -> str:
    lines = [move.to_trace() for move in moves]
    return "\n".join(lines) + ("\n" if lines else "")


def load_trace(path: str) -> List[FlipMove]:
    return parse_trace(read_text(path))


def write_trace(moves: Iterable[FlipMove], path: str) -> None:
    write_text(format_trace(moves), path)
