"""
Graph families: cycles, wheels, rings of cliques, Erdos-Renyi and
Barabasi-Albert.

Random families draw from ``numpy.random.Generator(PCG64(seed))``. The stream
order is fixed so a seed reproduces the same graph on every platform:

* Erdos-Renyi: one uniform per vertex pair in row-major order
  ``(0,1), (0,2), ..., (1,2), ...``, then, for exponential weights, one
  uniform per included edge in the same order, mapped through the inverse
  CDF ``-scale * log(1 - u)``.
* Barabasi-Albert: target draws in arrival order.

A :class:`GeneratorSpec` has a canonical string form, e.g. ``cycle:50``,
``wheel:100``, ``roc:6,3``, ``er:100,0.8,seed=7,exp=20``, ``ba:500,3,seed=1``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BadParams, BadProbability, BadScale, ParseError, TooSmall
from .graph_core import _from_arrays


def _rng(seed):
    return np.random.Generator(np.random.PCG64(int(seed)))


def _unit(n, pairs):
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    lo, hi = pairs.min(axis=1), pairs.max(axis=1)
    return _from_arrays(n, lo, hi, np.ones(len(pairs)))


def cycle(n):
    """Cycle on ``n >= 3`` vertices with edges ``i -- i+1 mod n``."""
    if n < 3:
        raise TooSmall(f"cycle needs n >= 3, got {n}")
    i = np.arange(n)
    return _unit(n, np.column_stack([i, (i + 1) % n]))


def wheel(n):
    """Wheel with ``n`` vertices in total: hub 0 plus a rim cycle on ``1..n-1``."""
    if n < 4:
        raise TooSmall(f"wheel needs n >= 4, got {n}")
    rim = np.arange(1, n)
    spokes = np.column_stack([np.zeros(n - 1, dtype=np.int64), rim])
    ring = np.column_stack([rim, np.roll(rim, -1)])
    return _unit(n, np.vstack([spokes, ring]))


def ring_of_cliques(num_cliques, clique_size):
    """``num_cliques`` copies of ``K_{clique_size}`` joined in a ring.

    Clique ``q`` holds vertices ``q*s .. q*s+s-1``. A bridge runs from the
    last vertex of clique ``q`` to the first vertex of clique ``q+1 mod c``,
    so two cliques still get two distinct bridges.
    """
    c, s = num_cliques, clique_size
    if c < 2 or s < 2:
        raise TooSmall(f"ring of cliques needs >= 2 cliques of size >= 2, got ({c}, {s})")
    pairs = []
    for q in range(c):
        base = q * s
        pairs.extend((base + a, base + b) for a in range(s) for b in range(a + 1, s))
        pairs.append((base + s - 1, ((q + 1) % c) * s))
    return _unit(c * s, pairs)


def erdos_renyi(n, prob, seed=0, weight_dist="unit", scale=1.0):
    """G(n, p) with unit or exponential(mean=``scale``) edge weights."""
    if n < 1:
        raise BadParams(f"n must be >= 1, got {n}")
    if not 0.0 <= prob <= 1.0:
        raise BadProbability(f"edge probability must lie in [0, 1], got {prob!r}")
    if weight_dist not in ("unit", "exponential"):
        raise BadParams(f"unknown weight distribution {weight_dist!r}")
    if weight_dist == "exponential" and not scale > 0:
        raise BadScale(f"exponential scale must be > 0, got {scale!r}")
    rng = _rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.size) < prob
    rows, cols = rows[keep], cols[keep]
    if weight_dist == "exponential":
        weights = -scale * np.log1p(-rng.random(rows.size))
    else:
        weights = np.ones(rows.size)
    return _from_arrays(n, rows.astype(np.int64), cols.astype(np.int64), weights)


def barabasi_albert(n, m, seed=0):
    """Preferential attachment with ``m`` edges per arriving vertex.

    Starts from ``m`` isolated vertices; vertex ``m`` links to all of them.
    Later arrivals pick ``m`` distinct targets with probability proportional
    to degree. The result has ``(n - m) * m`` edges.
    """
    if not 1 <= m < n:
        raise BadParams(f"need 1 <= m < n, got m={m}, n={n}")
    rng = _rng(seed)
    # each vertex appears once per unit of degree
    endpoints = []
    pairs = []
    for v in range(m, n):
        if v == m:
            targets = list(range(m))
        else:
            chosen = set()
            targets = []
            while len(targets) < m:
                t = endpoints[int(rng.integers(len(endpoints)))]
                if t not in chosen:
                    chosen.add(t)
                    targets.append(t)
        for t in targets:
            pairs.append((t, v))
            endpoints.extend((t, v))
    return _unit(n, pairs)


# canonical string form

FAMILIES = {
    "cycle": "cycle",
    "wheel": "wheel",
    "roc": "ring_of_cliques",
    "ring_of_cliques": "ring_of_cliques",
    "er": "erdos_renyi",
    "erdos_renyi": "erdos_renyi",
    "ba": "barabasi_albert",
    "barabasi_albert": "barabasi_albert",
}

_SHORT = {
    "cycle": "cycle",
    "wheel": "wheel",
    "ring_of_cliques": "roc",
    "erdos_renyi": "er",
    "barabasi_albert": "ba",
}

_RANDOM = ("erdos_renyi", "barabasi_albert")


@dataclass(frozen=True)
class GeneratorSpec:
    """A graph family plus its parameters.

    ``params`` holds the positional size parameters: ``(n,)`` for cycle and
    wheel, ``(c, s)`` for rings of cliques, ``(n, prob)`` for ER and
    ``(n, m)`` for BA. ``scale`` is only meaningful with exponential weights.
    """

    family: str
    params: tuple
    seed: int = 0
    weight_dist: str = "unit"
    scale: float = 1.0

    def build(self):
        f = self.family
        if f == "cycle":
            return cycle(*self.params)
        if f == "wheel":
            return wheel(*self.params)
        if f == "ring_of_cliques":
            return ring_of_cliques(*self.params)
        if f == "erdos_renyi":
            n, prob = self.params
            return erdos_renyi(n, prob, self.seed, self.weight_dist, self.scale)
        if f == "barabasi_albert":
            return barabasi_albert(*self.params, seed=self.seed)
        raise BadParams(f"unknown family {f!r}")

    def __str__(self):
        head = _SHORT[self.family] + ":" + ",".join(_fmt(x) for x in self.params)
        if self.family in _RANDOM:
            head += f",seed={self.seed}"
        if self.weight_dist == "exponential":
            head += f",exp={_fmt(self.scale)}"
        return head


def _fmt(x):
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    return str(int(x)) if x.is_integer() and abs(x) < 1e15 else repr(x)


_ARITY = {"cycle": 1, "wheel": 1, "ring_of_cliques": 2, "erdos_renyi": 2, "barabasi_albert": 2}


def parse_spec(text, default_seed=0):
    """Parse ``family:arg,arg,key=value`` into a :class:`GeneratorSpec`.

    ``seed`` defaults to ``default_seed`` for random families.
    """
    head, sep, rest = text.strip().partition(":")
    family = FAMILIES.get(head.lower())
    if not sep or family is None:
        raise ParseError(f"not a generator spec: {text!r}")
    positional, keywords = [], {}
    for tok in filter(None, (t.strip() for t in rest.split(","))):
        if "=" in tok:
            key, _, val = tok.partition("=")
            keywords[key.strip().lower()] = val.strip()
        else:
            positional.append(tok)
    if len(positional) != _ARITY[family]:
        raise ParseError(f"{head} takes {_ARITY[family]} size parameter(s), got {text!r}")
    try:
        if family == "erdos_renyi":
            params = (int(positional[0]), float(positional[1]))
        else:
            params = tuple(int(x) for x in positional)
        seed = int(keywords.pop("seed", default_seed))
        weight_dist, scale = "unit", 1.0
        if "exp" in keywords:
            weight_dist, scale = "exponential", float(keywords.pop("exp"))
    except ValueError as exc:
        raise ParseError(f"bad number in {text!r}: {exc}") from None
    if keywords:
        raise ParseError(f"unknown option(s) {sorted(keywords)} in {text!r}")
    if family not in _RANDOM and (weight_dist != "unit" or "seed=" in text):
        raise ParseError(f"{head} is deterministic and takes no seed or weights")
    if weight_dist == "exponential" and family != "erdos_renyi":
        raise ParseError("exponential weights are only supported for er")
    return GeneratorSpec(family, params, seed if family in _RANDOM else 0, weight_dist, scale)
