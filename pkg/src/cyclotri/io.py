"""Text formats for difference-cycle and facet-list complexes.

Two line-oriented ASCII formats are supported:

``.dc``   difference cycles: a header ``n <N>`` followed by one cycle per
          line with colon-separated entries, e.g. ``1:6:1:6``.  Cycles are
          canonicalised on read; the writer emits the canonical form with
          the cycles sorted, so serialisation is deterministic.

``.tri``  facet lists: headers ``dim <d>`` and ``vertices <n>``, then one
          facet per line as space-separated ascending vertex ids (0-based).

Lines starting with ``#`` and blank lines are ignored by both readers.
"""

from __future__ import annotations

from .diffcycles import CyclicComplex, parse_cycle
from .simplicial import SimplicialComplex


class FormatError(ValueError):
    """Malformed input text for one of the complex formats."""


def _content_lines(text: str):
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def sniff_format(text: str) -> str:
    for line in _content_lines(text):
        if line.startswith("n "):
            return "dc"
        if line.startswith("dim "):
            return "tri"
        break
    raise FormatError("unrecognised input (expected an 'n' or 'dim' header)")


def read_dc(text: str) -> CyclicComplex:
    lines = list(_content_lines(text))
    if not lines or not lines[0].startswith("n "):
        raise FormatError("missing 'n <count>' header")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as err:
        raise FormatError(f"bad header {lines[0]!r}") from err
    cycles = []
    for line in lines[1:]:
        cycle = parse_cycle(line)
        if cycle.n != n:
            raise FormatError(f"cycle {line!r} sums to {cycle.n}, expected {n}")
        cycles.append(cycle)
    if not cycles:
        raise FormatError("no cycles listed")
    return CyclicComplex(n, tuple(cycles))


def write_dc(cc: CyclicComplex) -> str:
    lines = [f"n {cc.n}"]
    lines.extend(str(c) for c in sorted(cc.cycles))
    return "\n".join(lines) + "\n"


def read_tri(text: str) -> SimplicialComplex:
    lines = list(_content_lines(text))
    if len(lines) < 2 or not lines[0].startswith("dim ") or not lines[1].startswith("vertices "):
        raise FormatError("missing 'dim <d>' / 'vertices <n>' headers")
    try:
        dim = int(lines[0].split()[1])
        n = int(lines[1].split()[1])
    except (IndexError, ValueError) as err:
        raise FormatError("bad header values") from err
    facets = []
    for line in lines[2:]:
        try:
            facet = tuple(int(tok) for tok in line.split())
        except ValueError as err:
            raise FormatError(f"bad facet line {line!r}") from err
        facets.append(facet)
    if not facets:
        raise FormatError("no facets listed")
    try:
        complex_ = SimplicialComplex(facets, n=n)
    except ValueError as err:
        raise FormatError(str(err)) from err
    if complex_.dim != dim:
        raise FormatError(f"facets have dimension {complex_.dim}, header says {dim}")
    return complex_


def write_tri(complex_: SimplicialComplex) -> str:
    lines = [f"dim {complex_.dim}", f"vertices {complex_.n}"]
    lines.extend(" ".join(str(v) for v in f) for f in sorted(complex_.facets))
    return "\n".join(lines) + "\n"
