"""Graph file formats and result serialization.

Native format, one graph per block, blocks separated by blank lines:

    # comment lines start with '#'
    graph <name> <n_vertices>
    v <id> <label>
    e <u> <v> <label>

Vertex ids must be dense 0..n-1; labels are non-whitespace tokens.
Molecular connection tables (MOL V2000) are read with element symbols as
vertex labels and bond orders as edge labels.
"""

from __future__ import annotations

import json

from .graph_core import GraphError, LabeledGraph


class ParseError(ValueError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_native(text: str):
    """Parse every graph block in the text, in file order."""
    graphs = []
    name = None
    count = None
    labels = {}
    edges = []
    header_line = 0

    def flush(lineno):
        nonlocal name, count
        if count is None:
            return
        if len(labels) != count:
            raise ParseError(header_line,
                             f"graph {name!r} declares {count} vertices "
                             f"but defines {len(labels)}")
        vl = [labels[i] for i in range(count)]
        try:
            graphs.append(LabeledGraph(count, vl, edges, name=name))
        except GraphError as exc:
            raise ParseError(lineno, str(exc)) from None
        name = None
        count = None
        labels.clear()
        edges.clear()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            flush(lineno)
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "graph":
            flush(lineno)
            if len(parts) != 3:
                raise ParseError(lineno, "expected: graph <name> <n_vertices>")
            name = parts[1]
            try:
                count = int(parts[2])
            except ValueError:
                raise ParseError(lineno, f"bad vertex count {parts[2]!r}") from None
            header_line = lineno
        elif kind == "v":
            if count is None:
                raise ParseError(lineno, "vertex line before graph header")
            if len(parts) != 3:
                raise ParseError(lineno, "expected: v <id> <label>")
            try:
                vid = int(parts[1])
            except ValueError:
                raise ParseError(lineno, f"bad vertex id {parts[1]!r}") from None
            if not 0 <= vid < count:
                raise ParseError(lineno, f"vertex id {vid} out of range 0..{count - 1}")
            if vid in labels:
                raise ParseError(lineno, f"duplicate vertex id {vid}")
            labels[vid] = parts[2]
        elif kind == "e":
            if count is None:
                raise ParseError(lineno, "edge line before graph header")
            if len(parts) != 4:
                raise ParseError(lineno, "expected: e <u> <v> <label>")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "bad edge endpoint") from None
            if not (0 <= u < count and 0 <= v < count):
                raise ParseError(lineno, f"edge ({u},{v}) references unknown vertex id")
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if any(((a, b) if a < b else (b, a)) == key for a, b, _ in edges):
                raise ParseError(lineno, f"duplicate edge {key}")
            edges.append((u, v, parts[3]))
        else:
            raise ParseError(lineno, f"unknown record type {kind!r}")
    flush(len(text.splitlines()) + 1)
    return graphs


def serialize_native(graphs) -> str:
    """Write graphs in native format; stable output (sorted vertices and
    edges) so serialize(parse(serialize(g))) is byte-identical."""
    blocks = []
    for i, g in enumerate(graphs):
        name = g.name or f"g{i}"
        lines = [f"graph {name} {g.n}"]
        for v in range(g.n):
            lines.append(f"v {v} {g.vertex_labels[v]}")
        for (u, v) in g.edges():
            lines.append(f"e {u} {v} {g.edge_labels[(u, v)]}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _mol_int(line, lo, hi, lineno, what):
    field = line[lo:hi].strip()
    try:
        return int(field)
    except ValueError:
        raise ParseError(lineno, f"bad {what} field {field!r}") from None


def parse_mol(text: str, strip_hydrogens: bool = False) -> LabeledGraph:
    """Read a single V2000 connection table.

    Vertex labels are element symbols, edge labels the bond order digits.
    With strip_hydrogens, H atoms and their bonds are dropped and the
    remaining atoms renumbered.
    """
    lines = text.splitlines()
    if len(lines) < 4:
        raise ParseError(len(lines), "truncated molfile: no counts line")
    counts_line = 4
    n_atoms = _mol_int(lines[3], 0, 3, counts_line, "atom count")
    n_bonds = _mol_int(lines[3], 3, 6, counts_line, "bond count")
    if len(lines) < 4 + n_atoms + n_bonds:
        raise ParseError(len(lines), "truncated molfile: atom or bond block missing")
    name = lines[0].strip() or None

    symbols = []
    for i in range(n_atoms):
        lineno = 5 + i
        line = lines[3 + 1 + i]
        sym = line[31:34].strip()
        if not sym:
            parts = line.split()
            if len(parts) < 4:
                raise ParseError(lineno, "atom line too short")
            sym = parts[3]
        symbols.append(sym)

    bonds = []
    for i in range(n_bonds):
        lineno = 5 + n_atoms + i
        line = lines[4 + n_atoms + i]
        if len(line) >= 9:
            a = _mol_int(line, 0, 3, lineno, "bond atom")
            b = _mol_int(line, 3, 6, lineno, "bond atom")
            order = _mol_int(line, 6, 9, lineno, "bond order")
        else:
            parts = line.split()
            if len(parts) < 3:
                raise ParseError(lineno, "bond line too short")
            try:
                a, b, order = int(parts[0]), int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "bad bond line") from None
        if not (1 <= a <= n_atoms and 1 <= b <= n_atoms):
            raise ParseError(lineno,
                             f"bond references atom {max(a, b)} of {n_atoms}")
        bonds.append((a - 1, b - 1, str(order)))

    keep = [i for i, s in enumerate(symbols)
            if not (strip_hydrogens and s == "H")]
    remap = {old: new for new, old in enumerate(keep)}
    edges = [(remap[a], remap[b], order) for a, b, order in bonds
             if a in remap and b in remap]
    try:
        return LabeledGraph(len(keep), [symbols[i] for i in keep], edges,
                            name=name)
    except GraphError as exc:
        raise ParseError(4 + n_atoms + n_bonds, str(exc)) from None


def _encode_map(mapping, mode):
    if mode == "mecs":
        return {f"{a}-{b}": f"{x}-{y}"
                for (a, b), (x, y) in sorted(mapping.items())}
    return {str(v): mapping[v] for v in sorted(mapping)}


def emit_results(results, fmt: str = "json", *, mode: str, connected: bool,
                 labeled: bool) -> str:
    """Serialize solve() output; field order is fixed for golden files."""
    if fmt not in ("json", "text"):
        raise ValueError(f"format must be 'json' or 'text', got {fmt!r}")
    size = results[0].size if results else 0
    classes = []
    for r in results:
        classes.append({
            "subgraph": serialize_native([r.subgraph]),
            "witnesses": [_encode_map(m, mode) for m in r.per_input_maps],
        })
    if fmt == "json":
        doc = {
            "mode": mode,
            "connected": connected,
            "labeled": labeled,
            "size": size,
            "classes": classes,
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [
        f"mode: {mode}  connected: {connected}  labeled: {labeled}",
        f"maximum size: {size} ({'edges' if mode == 'mecs' else 'vertices'})",
        f"classes: {len(classes)}",
    ]
    for i, cls in enumerate(classes, start=1):
        lines.append("")
        lines.append(f"class {i}:")
        lines.extend("  " + l for l in cls["subgraph"].rstrip().splitlines())
        for k, wit in enumerate(cls["witnesses"]):
            pairs = " ".join(f"{a}->{b}" for a, b in wit.items())
            lines.append(f"  witness in input {k}: {pairs}")
    return "\n".join(lines) + "\n"
