"""Reading and writing the .3g text format

A .3g file starts with a header line "n m" followed by m lines of three
space-separated 0-based vertex ids. Lines starting with '#' are comments.
The canonical writer emits every triple ascending, lines in lexicographic
order, and a trailing newline.
"""

from pathlib import Path
from typing import List, Tuple, Union

from ..exceptions import FormatError
from .triple_system import TripleSystem


def _parse_ints(tokens: List[str], line: int) -> List[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", line=line)


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped))
    return lines


def read_system(text: str) -> TripleSystem:
    """Parse .3g text; every violation raises FormatError with its line number"""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("missing header line 'n m'", line=1)

    header_line, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2:
        raise FormatError(f"malformed header {header!r}, expected 'n m'", line=header_line)
    n, m = _parse_ints(tokens, header_line)
    if n < 0 or m < 0:
        raise FormatError(f"header values must be non-negative, got {n} {m}", line=header_line)

    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise FormatError(f"header announces {m} triples, found {len(body)}", line=last)

    seen = set()
    for lineno, content in body:
        tokens = content.split()
        if len(tokens) != 3:
            raise FormatError(f"expected 3 vertex ids, got {len(tokens)}", line=lineno)
        vertices = _parse_ints(tokens, lineno)
        for v in vertices:
            if not 0 <= v < n:
                raise FormatError(f"vertex {v} out of range [0, {n})", line=lineno)
        if len(set(vertices)) != 3:
            raise FormatError(f"non-distinct vertices in triple {content!r}", line=lineno)
        triple = tuple(sorted(vertices))
        if triple in seen:
            raise FormatError(f"duplicate triple {triple}", line=lineno)
        seen.add(triple)

    return TripleSystem(n=n, edges=tuple(sorted(seen)))


def write_system(g: TripleSystem) -> str:
    """Canonical .3g text"""
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{a} {b} {c}" for a, b, c in g.edges)
    return "\n".join(lines) + "\n"


def read_file(path: Union[str, Path]) -> TripleSystem:
    return read_system(Path(path).read_text())


def write_file(g: TripleSystem, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(write_system(g))
    return path
