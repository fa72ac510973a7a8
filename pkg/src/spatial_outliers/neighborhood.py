"""Neighbor discovery and per-pair spatial factors.

Three regimes define who neighbors whom: a distance buffer around each site,
direct graph connections, and shared polygon boundaries.  For each
center/neighbor pair the module also measures the three weighting factors:
separation distance, number of parallel direct connections, and cheapest
traversal cost (None when unreachable or over the cost limit).
"""

import heapq
import math
from dataclasses import dataclass

from .dataset import (
    PolygonSite,
    SiteId,
    SpatialDataset,
    WeightParams,
    site_distance,
    site_id_key,
)

# minimum shared-boundary length for polygon adjacency
BOUNDARY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class NeighborFactors:
    """Measured factors for one center/neighbor pair.

    min_cost is None when no path exists within the cost limit.
    """

    center: SiteId
    neighbor: SiteId
    distance: float
    connection_count: int
    min_cost: float | None


def buffer_neighbors(
    dataset: SpatialDataset, center: SiteId, radius: float
) -> set[SiteId]:
    """All other sites within `radius` of the center, edges ignored."""
    center_site = dataset.site(center)
    return {
        site.id
        for site in dataset.sites
        if site.id != center and site_distance(center_site, site) <= radius
    }


def graph_neighbors(dataset: SpatialDataset, center: SiteId) -> set[SiteId]:
    """All sites sharing at least one edge with the center (undirected)."""
    dataset.site(center)
    out = set()
    for edge in dataset.edges:
        if edge.source == center:
            out.add(edge.target)
        elif edge.target == center:
            out.add(edge.source)
    out.discard(center)
    return out


def _ring_segments(polygon: PolygonSite):
    for ring in (polygon.exterior, *polygon.holes):
        n = len(ring)
        for i in range(n):
            yield ring[i], ring[(i + 1) % n]


def _overlap_length(p1, p2, q1, q2) -> float:
    """Length of the collinear overlap of two segments, else 0."""
    ux, uy = p2[0] - p1[0], p2[1] - p1[1]
    length = math.hypot(ux, uy)
    if length <= BOUNDARY_TOLERANCE:
        return 0.0
    ux, uy = ux / length, uy / length
    off1 = abs((q1[0] - p1[0]) * uy - (q1[1] - p1[1]) * ux)
    off2 = abs((q2[0] - p1[0]) * uy - (q2[1] - p1[1]) * ux)
    if off1 > BOUNDARY_TOLERANCE or off2 > BOUNDARY_TOLERANCE:
        return 0.0
    t1 = (q1[0] - p1[0]) * ux + (q1[1] - p1[1]) * uy
    t2 = (q2[0] - p1[0]) * ux + (q2[1] - p1[1]) * uy
    lo = max(0.0, min(t1, t2))
    hi = min(length, max(t1, t2))
    return max(0.0, hi - lo)


def polygons_share_boundary(a: PolygonSite, b: PolygonSite) -> bool:
    """True when the two boundaries overlap along a positive length.

    Touching at isolated points (a shared corner) does not qualify.
    """
    for p1, p2 in _ring_segments(a):
        for q1, q2 in _ring_segments(b):
            if _overlap_length(p1, p2, q1, q2) > BOUNDARY_TOLERANCE:
                return True
    return False


def polygon_adjacent_neighbors(dataset: SpatialDataset, center: SiteId) -> set[SiteId]:
    """All polygons sharing a boundary line with the center polygon."""
    center_site = dataset.site(center)
    return {
        site.id
        for site in dataset.sites
        if site.id != center and polygons_share_boundary(center_site, site)
    }


def direct_connection_count(dataset: SpatialDataset, a: SiteId, b: SiteId) -> int:
    """Number of parallel edges joining a and b, either orientation."""
    dataset.site(a)
    dataset.site(b)
    return sum(
        1
        for edge in dataset.edges
        if {edge.source, edge.target} == {a, b}
    )


def _cost_adjacency(dataset: SpatialDataset) -> dict[SiteId, list[tuple[SiteId, float]]]:
    """Undirected adjacency keeping only the cheapest parallel edge."""
    best: dict[tuple, float] = {}
    for edge in dataset.edges:
        if edge.source == edge.target:
            continue
        key = tuple(sorted((edge.source, edge.target), key=site_id_key))
        if key not in best or edge.cost < best[key]:
            best[key] = edge.cost
    adjacency: dict[SiteId, list[tuple[SiteId, float]]] = {}
    for (u, v), cost in best.items():
        adjacency.setdefault(u, []).append((v, cost))
        adjacency.setdefault(v, []).append((u, cost))
    return adjacency


def _dijkstra(adjacency, source: SiteId) -> dict[SiteId, float]:
    """Cheapest traversal cost from source to every reachable site."""
    dist = {source: 0.0}
    done = set()
    frontier = [(0.0, 0, source)]
    counter = 1  # tie-break so heterogeneous ids never get compared
    while frontier:
        d, _, node = heapq.heappop(frontier)
        if node in done:
            continue
        done.add(node)
        for nbr, cost in adjacency.get(node, ()):
            nd = d + cost
            if nbr not in dist or nd < dist[nbr]:
                dist[nbr] = nd
                heapq.heappush(frontier, (nd, counter, nbr))
                counter += 1
    return dist


def min_cost(
    dataset: SpatialDataset,
    a: SiteId,
    b: SiteId,
    cost_limit: float | None = None,
) -> float | None:
    """Cheapest total edge cost between a and b.

    Returns None when no path exists or the cheapest one exceeds the limit.
    """
    dataset.site(a)
    dataset.site(b)
    dist = _dijkstra(_cost_adjacency(dataset), a)
    if b not in dist:
        return None
    cost = dist[b]
    if cost_limit is not None and cost > cost_limit:
        return None
    return cost


def collect_factors(
    dataset: SpatialDataset,
    center: SiteId,
    neighbors: set[SiteId],
    params: WeightParams,
) -> list[NeighborFactors]:
    """Assemble distance, connection count, and min cost per neighbor.

    Output is ordered by neighbor id so downstream weighting and reporting
    are deterministic.
    """
    center_site = dataset.site(center)
    ordered = sorted(neighbors, key=site_id_key)
    costs = _dijkstra(_cost_adjacency(dataset), center) if dataset.edges else {}
    out = []
    for neighbor in ordered:
        neighbor_site = dataset.site(neighbor)
        cost = costs.get(neighbor)
        if cost is not None and params.cost_limit is not None and cost > params.cost_limit:
            cost = None
        out.append(
            NeighborFactors(
                center=center,
                neighbor=neighbor,
                distance=site_distance(center_site, neighbor_site),
                connection_count=direct_connection_count(dataset, center, neighbor),
                min_cost=cost,
            )
        )
    return out
