"""
File formats: edge lists, distance matrices, heatmap triples and the binary
embedding cache.

Edge list
    One edge per line, ``i j`` or ``i j w`` (w defaults to 1.0). Blank lines
    and lines starting with ``#`` are skipped, except ``#n=<N>`` which sets
    the vertex count so trailing isolated vertices survive.

Embedding cache (``.elde``), little-endian::

    b"ELDE" | u16 version | u64 n | u64 k | k x f64 eigenvalues
    | n*k x f64 eigenvectors, column-major
"""

import csv
import io
import json
import os
import re
import struct
import tempfile

import numpy as np

from .eld import DistanceMatrix
from .errors import BadMagic, ParseError, TruncatedFile, VersionMismatch
from .graph_core import build_graph
from .spectral import SpectralEmbedding

MAGIC = b"ELDE"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sHQQ")
_N_DIRECTIVE = re.compile(r"#\s*n\s*=\s*(\d+)\s*$")


def parse_edge_list(text):
    """Parse edge-list text into a Graph. See the module docstring."""
    edges, lines = [], []
    declared_n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _N_DIRECTIVE.match(line)
            if m:
                declared_n = int(m.group(1))
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"expected 'i j [w]', got {raw!r}", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise ParseError(f"non-numeric field in {raw!r}", lineno) from None
        if i < 0 or j < 0:
            raise ParseError(f"negative vertex id in {raw!r}", lineno)
        edges.append((i, j, w))
        lines.append(lineno)
    max_id = max((max(i, j) for i, j, _ in edges), default=-1)
    n = max_id + 1 if declared_n is None else declared_n
    if n < 1:
        raise ParseError("edge list describes an empty graph; add edges or a '#n=<N>' line")
    return build_graph(n, edges, line_numbers=lines)


def read_edge_list(path):
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g):
    lines = [f"#n={g.n}"]
    lines += [f"{i} {j} {w!r}" for i, j, w in g.edges()]
    return "\n".join(lines) + "\n"


def write_edge_list(g, path):
    _atomic_write_text(path, format_edge_list(g))


# distance matrices


def format_value(x):
    """Shortest round-trip text for ``x``, capped at 12 significant digits."""
    short = repr(float(x))
    capped = f"{float(x):.12g}"
    return short if float(short) == float(capped) and len(short) <= len(capped) else capped


def format_distance_matrix(dm, fmt="csv"):
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["label", *dm.labels])
        for label, row in zip(dm.labels, dm.entries):
            w.writerow([label, *(format_value(x) for x in row)])
        return buf.getvalue()
    if fmt == "json":
        rows = [[float(x) for x in row] for row in dm.entries]
        return json.dumps({"labels": list(dm.labels), "rows": rows}, indent=1) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected 'csv' or 'json'")


def parse_distance_matrix(text, fmt="csv"):
    if fmt == "json":
        obj = json.loads(text)
        m = len(obj["labels"])
        return DistanceMatrix(list(obj["labels"]), np.array(obj["rows"], dtype=np.float64).reshape(m, m))
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    rows = list(csv.reader(io.StringIO(text)))
    labels = rows[0][1:]
    entries = np.array([[float(x) for x in r[1:]] for r in rows[1:]], dtype=np.float64)
    return DistanceMatrix(labels, entries.reshape(len(labels), len(labels)))


def write_distance_matrix(dm, fmt, path):
    """Write ``dm`` as CSV (label row and column) or JSON ``{labels, rows}``.

    Raises ``OSError`` if the path cannot be written.
    """
    _atomic_write_text(path, format_distance_matrix(dm, fmt))


def read_distance_matrix(path, fmt=None):
    fmt = fmt or ("json" if str(path).endswith(".json") else "csv")
    with open(path, encoding="utf-8") as fh:
        return parse_distance_matrix(fh.read(), fmt)


def format_heatmap(dm):
    """``row col value`` triples, a blank line after each row (gnuplot pm3d layout)."""
    out = [f"# {' '.join(map(str, dm.labels))}"]
    m = len(dm.labels)
    for i in range(m):
        out += [f"{i} {j} {format_value(dm.entries[i, j])}" for j in range(m)]
        out.append("")
    return "\n".join(out) + "\n"


def write_heatmap(dm, path):
    _atomic_write_text(path, format_heatmap(dm))


# embedding cache


def embedding_to_bytes(emb):
    head = _HEADER.pack(MAGIC, FORMAT_VERSION, emb.n, emb.k)
    vals = np.asarray(emb.eigenvalues, dtype="<f8").tobytes()
    vecs = np.asarray(emb.vectors, dtype="<f8").tobytes(order="F")
    return head + vals + vecs


def embedding_from_bytes(data):
    if len(data) < 4 or data[:4] != MAGIC:
        raise BadMagic("not an embedding file (bad magic bytes)")
    if len(data) < _HEADER.size:
        raise TruncatedFile("embedding header is truncated")
    _, version, n, k = _HEADER.unpack_from(data)
    if version != FORMAT_VERSION:
        raise VersionMismatch(f"embedding format version {version}, expected {FORMAT_VERSION}")
    need = _HEADER.size + 8 * (k + n * k)
    if len(data) < need:
        raise TruncatedFile(f"embedding file has {len(data)} bytes, expected {need}")
    off = _HEADER.size
    vals = np.frombuffer(data, dtype="<f8", count=k, offset=off).astype(np.float64)
    vecs = np.frombuffer(data, dtype="<f8", count=n * k, offset=off + 8 * k)
    vecs = np.ascontiguousarray(vecs.reshape((n, k), order="F"), dtype=np.float64)
    vals.setflags(write=False)
    vecs.setflags(write=False)
    return SpectralEmbedding(int(n), int(k), vals, vecs)


def write_embedding(emb, path):
    _atomic_write_bytes(path, embedding_to_bytes(emb))


def read_embedding(path):
    with open(path, "rb") as fh:
        return embedding_from_bytes(fh.read())


def embedding_cache_roundtrip(emb, path):
    """Write ``emb`` to ``path`` and read it back."""
    write_embedding(emb, path)
    return read_embedding(path)


def _atomic_write_bytes(path, data):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _atomic_write_text(path, text):
    _atomic_write_bytes(path, text.encode("utf-8"))
