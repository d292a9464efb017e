"""Graph families and certified neutral-graph factories.

Neutral trees come from 3-spiders with every leg of length >= 2. Neutral
non-trees come from a fixed recipe table (leaf-connected cycles, doubled
neutral trees, leaf-connected neutral trees) with a bounded search over
"hub skeletons" for the orders the table misses.

Hub skeletons rest on the identity

    N = 4 m A - B**2,   A = sum_e (d_u - 2)(d_v - 2),   B = sum_v d_v (d_v - 2)

Vertices of degree 2 contribute nothing to A or B, so a skeleton of a few
high-degree hubs joined by chains of degree-2 vertices is neutral exactly
when its edge count is m = B**2 / (4 A). The search picks the hub pattern;
the chain lengths then follow from that equation instead of being enumerated.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterator, Optional, Sequence

from . import constructions as ops
from .assortativity import pearson_rational, stats
from .errors import BadParams, NotFound, OrderTooSmall
from .graph import Graph, build, is_connected, is_regular
from .enumeration import prufer_decode

MIN_NEUTRAL_TREE = 7
MIN_NEUTRAL_NONTREE = 13
DEFAULT_SEARCH_BUDGET = 500_000

CERTIFIED = "CERTIFIED"
NOT_FOUND = "NOT_FOUND"
BELOW_THRESHOLD = "BELOW_THRESHOLD"


# -- families ----------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise BadParams("path needs n >= 1")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams(f"cycle needs n >= 3, got {n}")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the center at 0."""
    if leaves < 1:
        raise BadParams("star needs at least one leaf")
    return build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParams("complete graph needs n >= 1")
    return build(n, itertools.combinations(range(n), 2))


def circulant(n: int, offsets: Sequence[int]) -> Graph:
    """Vertex i joined to i +- o (mod n) for each offset o.

    Offsets must be distinct values in 1..n//2 generating Z_n, so the result
    is simple, connected and regular.
    """
    offs = sorted(set(offsets))
    if n < 3 or not offs or len(offs) != len(offsets):
        raise BadParams(f"bad circulant parameters n={n}, offsets={list(offsets)}")
    if offs[0] < 1 or offs[-1] > n // 2:
        raise BadParams(f"offsets must lie in 1..{n // 2}")
    g_all = 0
    for o in offs:
        g_all = gcd(g_all, o)
    if gcd(g_all, n) != 1:
        raise BadParams("offsets do not generate a connected circulant")
    edges = set()
    for i in range(n):
        for o in offs:
            j = (i + o) % n
            edges.add((min(i, j), max(i, j)))
    return build(n, edges)


def regular_circulant(n: int, k: int) -> Graph:
    """A connected k-regular circulant on n vertices (offsets 1..k//2, plus n/2 if k odd)."""
    if not 2 <= k < n or (k % 2 and n % 2):
        raise BadParams(f"no {k}-regular circulant on {n} vertices")
    offs = list(range(1, k // 2 + 1))
    if k % 2:
        offs.append(n // 2)
    return circulant(n, offs)


def spider(legs: Sequence[int]) -> Graph:
    """Center 0 with paths of the given lengths; leg vertices numbered outward."""
    if not legs or min(legs) < 1:
        raise BadParams(f"spider legs must be >= 1, got {list(legs)}")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build(nxt, edges)


FAMILY_NAMES = ("path", "cycle", "star", "complete", "circulant", "spider")


def family(name: str, *params: int) -> Graph:
    """Dispatch on a family name.

    path N | cycle N | star LEAVES | complete N | circulant N OFFSET... | spider LEG...
    """
    try:
        if name == "circulant":
            return circulant(params[0], params[1:])
        if name == "spider":
            return spider(params)
        if name in ("path", "cycle", "star", "complete"):
            (n,) = params
            return {"path": path, "cycle": cycle, "star": star, "complete": complete}[name](n)
    except (IndexError, ValueError, TypeError) as exc:
        if isinstance(exc, BadParams):
            raise
        raise BadParams(f"bad parameters for {name}: {list(params)}") from exc
    raise BadParams(f"unknown family {name!r}")


def random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return build(1, [])
    if n == 2:
        return build(2, [(0, 1)])
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)])


def random_connected(n: int, rng: random.Random, extra: Optional[int] = None) -> Graph:
    """Uniform random labeled tree plus ``extra`` random additional edges."""
    tree = random_tree(n, rng)
    free = [p for p in itertools.combinations(range(n), 2) if not tree.has_edge(*p)]
    if extra is None:
        extra = rng.randint(0, len(free))
    extra = min(extra, len(free))
    return build(n, list(tree.edges) + rng.sample(free, extra))


# -- certification -----------------------------------------------------------


def certify_neutral(g: Graph) -> bool:
    """Integer N = 0 with D > 0, confirmed by the fraction-based evaluator."""
    if not g.edges or not is_connected(g):
        return False
    st = stats(g)
    return st.N == 0 and st.D > 0 and pearson_rational(g) == 0


# -- neutral trees -----------------------------------------------------------


def neutral_tree(n: int) -> Graph:
    """Spider with legs (2, 2, n - 5): a neutral tree on n >= 7 vertices."""
    if n < MIN_NEUTRAL_TREE:
        raise OrderTooSmall(f"no neutral tree on {n} <= 6 vertices")
    g = spider((2, 2, n - 5))
    if not certify_neutral(g):  # pragma: no cover - guarded by tests
        raise AssertionError(f"spider(2,2,{n - 5}) failed certification")
    return g


# -- hub skeletons -----------------------------------------------------------


@dataclass(frozen=True)
class HubSkeleton:
    """A few hubs (degree >= 3) plus chains of degree-2 vertices.

    ``direct[i]`` and ``long[i]`` refer to the i-th hub pair in
    ``itertools.combinations`` order: whether the pair is adjacent, and how
    many chains of length >= 2 join it. Per hub, ``ears`` counts cycles
    through that hub alone, ``pendants`` counts hanging paths of length >= 2
    and ``leaves`` counts hanging single edges.
    """

    degrees: tuple[int, ...]
    direct: tuple[int, ...]
    long: tuple[int, ...]
    ears: tuple[int, ...]
    pendants: tuple[int, ...]
    leaves: tuple[int, ...]

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return list(itertools.combinations(range(len(self.degrees)), 2))

    def min_size(self) -> int:
        return sum(self.direct) + 2 * sum(self.long) + 3 * sum(self.ears) + 2 * sum(self.pendants) + sum(self.leaves)

    def stretchable(self) -> int:
        return sum(self.long) + sum(self.ears) + sum(self.pendants)

    def order_for(self, m: int) -> int:
        return len(self.degrees) + m - sum(self.direct) - sum(self.long) - sum(self.ears)

    def forced_size(self) -> Optional[int]:
        """Edge count making the skeleton neutral, or None if there is none."""
        return _forced_size(self.degrees, self.pairs, self.direct, self.ears, self.pendants, self.leaves)

    def realize(self, m: int) -> Graph:
        """Build the skeleton with m edges; spare length goes to the first stretchable chain."""
        extra = m - self.min_size()
        if extra < 0 or (extra and not self.stretchable()):
            raise BadParams(f"skeleton cannot have {m} edges")
        chains: list[list] = []  # [start, end or None, length]
        for (i, j), c in zip(self.pairs, self.long):
            chains += [[i, j, 2] for _ in range(c)]
        for h, c in enumerate(self.ears):
            chains += [[h, h, 3] for _ in range(c)]
        for h, c in enumerate(self.pendants):
            chains += [[h, None, 2] for _ in range(c)]
        if chains:
            chains[0][2] += extra
        for h, c in enumerate(self.leaves):
            chains += [[h, None, 1] for _ in range(c)]
        edges = [p for p, d in zip(self.pairs, self.direct) if d]
        nxt = len(self.degrees)
        for start, end, length in chains:
            inner = length - 1 if end is not None else length
            prev = start
            for _ in range(inner):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            if end is not None:
                edges.append((prev, end))
        return build(nxt, edges)

    def as_params(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "direct": list(self.direct),
            "long": list(self.long),
            "ears": list(self.ears),
            "pendants": list(self.pendants),
            "leaves": list(self.leaves),
        }


def _forced_size(degrees, pairs, direct, ears, pendants, leaves) -> Optional[int]:
    A = 0
    for (i, j), d in zip(pairs, direct):
        if d:
            A += (degrees[i] - 2) * (degrees[j] - 2)
    for h, q in enumerate(leaves):
        A -= q * (degrees[h] - 2)
    if A <= 0:
        return None
    B = sum(d * (d - 2) for d in degrees) - sum(pendants) - sum(leaves)
    B2 = B * B
    if B2 % (4 * A):
        return None
    return B2 // (4 * A)


def _hub_connected(h: int, pairs, direct, long) -> bool:
    if h == 1:
        return True
    linked = [(i, j) for (i, j), d, c in zip(pairs, direct, long) if d or c]
    if h == 2:
        return bool(linked)
    return len(linked) >= 2  # three hubs: any two pairs span all three


def _end_splits(r: int):
    for a in range(r // 2 + 1):
        for q in range(r - 2 * a + 1):
            yield a, r - 2 * a - q, q


def hub_skeletons(max_degree: int = 8, max_hubs: int = 3, max_long: int = 3) -> Iterator[HubSkeleton]:
    """Deterministic enumeration, grouped by largest hub degree, then hub count."""
    for top in range(3, max_degree + 1):
        for h in range(1, max_hubs + 1):
            pairs = list(itertools.combinations(range(h), 2))
            for degrees in itertools.product(range(3, top + 1), repeat=h):
                if max(degrees) != top:
                    continue
                for direct in itertools.product((0, 1), repeat=len(pairs)):
                    for long in itertools.product(range(max_long + 1), repeat=len(pairs)):
                        if not _hub_connected(h, pairs, direct, long):
                            continue
                        used = [0] * h
                        for (i, j), d, c in zip(pairs, direct, long):
                            used[i] += d + c
                            used[j] += d + c
                        rest = [degrees[i] - used[i] for i in range(h)]
                        if min(rest) < 0:
                            continue
                        for split in itertools.product(*(list(_end_splits(r)) for r in rest)):
                            yield HubSkeleton(
                                degrees,
                                direct,
                                long,
                                tuple(s[0] for s in split),
                                tuple(s[1] for s in split),
                                tuple(s[2] for s in split),
                            )


@dataclass(frozen=True)
class HubHit:
    skeleton: HubSkeleton
    size: int
    position: int  # 1-based index in the enumeration


def _feasible(sk: HubSkeleton) -> Optional[int]:
    m = sk.forced_size()
    if m is None:
        return None
    lo = sk.min_size()
    if m < lo or (m > lo and not sk.stretchable()):
        return None
    if m - sk.order_for(m) + 1 < 1:
        return None
    return m


def scan_hub_skeletons(budget: int) -> Iterator[HubHit]:
    """Every skeleton within the first ``budget`` that admits a neutral realization."""
    for pos, sk in enumerate(hub_skeletons(), start=1):
        if pos > budget:
            return
        m = _feasible(sk)
        if m is not None:
            yield HubHit(sk, m, pos)


@lru_cache(maxsize=8)
def hub_index(budget: int) -> dict[tuple[int, int], HubHit]:
    """First hit per (order, size) among the first ``budget`` skeletons."""
    index: dict[tuple[int, int], HubHit] = {}
    for hit in scan_hub_skeletons(budget):
        key = (hit.skeleton.order_for(hit.size), hit.size)
        index.setdefault(key, hit)
    return index


def hub_search(order: int, budget: int = DEFAULT_SEARCH_BUDGET, size: Optional[int] = None) -> tuple[Graph, HubHit]:
    """First certified neutral hub-skeleton graph with the given order (and size)."""
    for hit in scan_hub_skeletons(budget):
        if hit.skeleton.order_for(hit.size) != order or (size is not None and hit.size != size):
            continue
        g = hit.skeleton.realize(hit.size)
        if certify_neutral(g):
            return g, hit
    raise NotFound(
        f"no neutral hub skeleton on {order} vertices within {budget} candidates",
        order=order,
        residue=order % 6,
        routes=("hub_skeleton",),
    )


# -- recipe plans ------------------------------------------------------------

_OPERATIONS = {
    "subdivide": lambda g, s=1: ops.subdivide(g, s),
    "leaf_connect": lambda g: ops.leaf_connect(g),
    "ominus": lambda g: ops.ominus(g),
    "triangle_op": lambda g: ops.triangle_op(g),
}


@dataclass(frozen=True)
class RecipePlan:
    """Declarative route to a neutral graph of a target order."""

    target_order: int
    kind: str  # "tree" | "non-tree"
    route: tuple[tuple[str, dict], ...]
    provenance: tuple[str, ...] = field(default=())

    def execute(self) -> Graph:
        (start, params), *rest = self.route
        if start == "family":
            g = family(params["name"], *params["args"])
        elif start == "neutral_tree":
            g = neutral_tree(params["n"])
        elif start == "hub_skeleton":
            sk = HubSkeleton(**{k: tuple(v) for k, v in params["skeleton"].items()})
            g = sk.realize(params["size"])
        else:
            raise BadParams(f"unknown route start {start!r}")
        for name, kwargs in rest:
            g = _OPERATIONS[name](g, **kwargs)
        return g

    def describe(self) -> str:
        parts = []
        for name, params in self.route:
            if name == "family":
                parts.append(f"{params['name']}({','.join(map(str, params['args']))})")
            elif name == "neutral_tree":
                parts.append(f"neutral_tree({params['n']})")
            elif name == "hub_skeleton":
                parts.append(f"hub_skeleton#{params['position']}")
            else:
                parts.append(name)
        return " -> ".join(parts)

    def as_dict(self) -> dict:
        return {
            "target_order": self.target_order,
            "kind": self.kind,
            "route": [{"step": name, "params": params} for name, params in self.route],
            "provenance": list(self.provenance),
        }


def tree_plan(n: int) -> RecipePlan:
    if n < MIN_NEUTRAL_TREE:
        raise OrderTooSmall(f"no neutral tree on {n} <= 6 vertices")
    return RecipePlan(n, "tree", (("family", {"name": "spider", "args": [2, 2, n - 5]}),), ("T1", "C1", "T2"))


def nontree_plan(n: int, budget: int = DEFAULT_SEARCH_BUDGET) -> RecipePlan:
    """Route table by residue; hub-skeleton search for the rest.

    Raises OrderTooSmall below 13 and NotFound when the search budget runs out.
    """
    if n < MIN_NEUTRAL_NONTREE:
        raise OrderTooSmall(f"non-tree threshold is {MIN_NEUTRAL_NONTREE}, got {n}")
    if n % 3 == 0:
        return RecipePlan(n, "non-tree", (("family", {"name": "cycle", "args": [n // 3]}), ("leaf_connect", {})), ("L5",))
    if n % 2 == 0:
        return RecipePlan(n, "non-tree", (("neutral_tree", {"n": n // 2}), ("ominus", {})), ("T2", "A1"))
    if n % 6 in (1, 4) and n >= 19:
        return RecipePlan(n, "non-tree", (("neutral_tree", {"n": (n + 2) // 3}), ("leaf_connect", {})), ("T2", "L4"))
    _, hit = hub_search(n, budget)
    params = {"skeleton": hit.skeleton.as_params(), "size": hit.size, "position": hit.position}
    return RecipePlan(n, "non-tree", (("hub_skeleton", params),), ())


def realize(plan: RecipePlan) -> Graph:
    """Execute a plan and certify the result before releasing it."""
    g = plan.execute()
    shape_ok = g.order == plan.target_order and (g.size == g.order - 1 if plan.kind == "tree" else g.size >= g.order)
    if not (shape_ok and certify_neutral(g)):  # pragma: no cover - guarded by tests
        raise AssertionError(f"{plan.describe()} failed certification")
    return g


def neutral_nontree(n: int, budget: int = DEFAULT_SEARCH_BUDGET) -> Graph:
    return realize(nontree_plan(n, budget))


# -- coverage ----------------------------------------------------------------


@dataclass(frozen=True)
class CoverageRow:
    order: int
    tree_status: str
    tree_route: Optional[str]
    tree_graph: Optional[Graph]
    nontree_status: str
    nontree_route: Optional[str]
    nontree_graph: Optional[Graph]


def coverage_table(max_order: int, budget: int = DEFAULT_SEARCH_BUDGET, min_order: int = 1) -> list[CoverageRow]:
    rows = []
    for n in range(min_order, max_order + 1):
        if n < MIN_NEUTRAL_TREE:
            tree = (BELOW_THRESHOLD, None, None)
        else:
            plan = tree_plan(n)
            g = plan.execute()
            tree = (CERTIFIED, plan.describe(), g) if certify_neutral(g) else (NOT_FOUND, plan.describe(), None)
        if n < MIN_NEUTRAL_NONTREE:
            nontree = (BELOW_THRESHOLD, None, None)
        else:
            try:
                plan = nontree_plan(n, budget)
            except NotFound:
                nontree = (NOT_FOUND, None, None)
            else:
                g = plan.execute()
                ok = certify_neutral(g) and g.size >= g.order and g.order == n
                nontree = (CERTIFIED if ok else NOT_FOUND, plan.describe(), g if ok else None)
        rows.append(CoverageRow(n, *tree, *nontree))
    return rows
