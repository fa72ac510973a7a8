"""Core domain types, planar geometry primitives, and dataset validation.

A dataset is a homogeneous collection of point or polygon sites, an optional
edge list (points only), and a declared set of numeric attributes.  All types
are immutable after construction; invariant violations are reported as data
by :func:`validate_dataset`, not raised during construction.
"""

import math
from dataclasses import dataclass, field

from .errors import DegenerateDistanceError, GeometryError, SiteLookupError

SiteId = str | int

# rings with |shoelace area| below this are treated as degenerate
MIN_RING_AREA = 1e-12


def site_id_key(site_id: SiteId):
    """Deterministic sort key over possibly mixed int/str ids."""
    if isinstance(site_id, int):
        return (0, site_id, "")
    return (1, 0, str(site_id))


def _normalize_ring(vertices) -> tuple[tuple[float, float], ...]:
    """Coerce to float pairs and drop an explicit closing vertex."""
    ring = tuple((float(x), float(y)) for x, y in vertices)
    if len(ring) > 1 and ring[0] == ring[-1]:
        ring = ring[:-1]
    return ring


@dataclass(frozen=True)
class PointSite:
    """A located observation: planar coordinates plus numeric attributes."""

    id: SiteId
    x: float
    y: float
    attributes: dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class PolygonSite:
    """A polygonal zone: exterior ring, optional holes, numeric attributes.

    Rings are stored implicitly closed (no repeated first vertex); closed
    input rings are normalized on construction.
    """

    id: SiteId
    exterior: tuple[tuple[float, float], ...]
    holes: tuple[tuple[tuple[float, float], ...], ...] = ()
    attributes: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "exterior", _normalize_ring(self.exterior))
        object.__setattr__(
            self, "holes", tuple(_normalize_ring(r) for r in self.holes)
        )


@dataclass(frozen=True)
class Edge:
    """One direct connection between two sites.

    Edges are undirected for every traversal in this library; repeated
    records between the same pair are distinct parallel connections.
    """

    source: SiteId
    target: SiteId
    length: float
    cost: float


Site = PointSite | PolygonSite


@dataclass(frozen=True)
class SpatialDataset:
    """Immutable site collection with optional edges and declared attributes.

    ``attribute_names`` defaults to the first site's attribute keys.  The
    dataset kind ("point" or "polygon") follows the first site.
    """

    sites: tuple[Site, ...]
    edges: tuple[Edge, ...] = ()
    attribute_names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "sites", tuple(self.sites))
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.attribute_names is None:
            names = tuple(self.sites[0].attributes) if self.sites else ()
            object.__setattr__(self, "attribute_names", names)
        else:
            object.__setattr__(self, "attribute_names", tuple(self.attribute_names))
        index = {}
        for site in self.sites:
            index.setdefault(site.id, site)
        object.__setattr__(self, "_index", index)

    @property
    def kind(self) -> str:
        if self.sites and isinstance(self.sites[0], PolygonSite):
            return "polygon"
        return "point"

    def site(self, site_id: SiteId) -> Site:
        try:
            return self._index[site_id]
        except KeyError:
            raise SiteLookupError(f"unknown site id {site_id!r}") from None

    def __contains__(self, site_id: SiteId) -> bool:
        return site_id in self._index

    def site_ids(self) -> tuple[SiteId, ...]:
        return tuple(site.id for site in self.sites)

    def values(self, attribute: str) -> dict[SiteId, float]:
        """Attribute value per site id; raises on missing values."""
        out = {}
        for site in self.sites:
            try:
                out[site.id] = float(site.attributes[attribute])
            except KeyError:
                raise SiteLookupError(
                    f"site {site.id!r} has no attribute {attribute!r}"
                ) from None
        return out


@dataclass(frozen=True)
class WeightParams:
    """Coefficients and limits steering neighborhood weighting.

    alpha, beta, delta blend the distance, connection-count, and traversal
    cost shares and must sum to 1.  gamma mixes distance against area for
    polygon weighting.  radius bounds the distance buffer, cost_limit caps
    usable traversal cost (None = unbounded), theta is the |z| flag
    threshold (2 for a 95% confidence level).
    """

    alpha: float = 1.0
    beta: float = 0.0
    delta: float = 0.0
    gamma: float = 0.5
    radius: float | None = None
    cost_limit: float | None = None
    theta: float = 2.0

    def __post_init__(self):
        for name in ("alpha", "beta", "delta", "gamma"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")
        if abs(self.alpha + self.beta + self.delta - 1.0) > 1e-9:
            raise ValueError(
                "alpha + beta + delta must equal 1, got "
                f"{self.alpha + self.beta + self.delta}"
            )
        if self.radius is not None and not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        if self.cost_limit is not None and not self.cost_limit > 0:
            raise ValueError(f"cost_limit must be positive, got {self.cost_limit}")
        if not self.theta > 0:
            raise ValueError(f"theta must be positive, got {self.theta}")


def _ring_signed_area(ring) -> float:
    """Shoelace signed area of an implicitly closed ring."""
    total = 0.0
    n = len(ring)
    for i in range(n):
        x1, y1 = ring[i]
        x2, y2 = ring[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return 0.5 * total


def _ring_centroid(ring) -> tuple[float, float]:
    """Area-weighted centroid of an implicitly closed ring."""
    a2 = cx = cy = 0.0
    n = len(ring)
    for i in range(n):
        x1, y1 = ring[i]
        x2, y2 = ring[(i + 1) % n]
        det = x1 * y2 - x2 * y1
        a2 += det
        cx += (x1 + x2) * det
        cy += (y1 + y2) * det
    if abs(a2) < 2.0 * MIN_RING_AREA:
        raise GeometryError("degenerate ring: area is zero")
    return cx / (3.0 * a2), cy / (3.0 * a2)


def _checked_ring(polygon: PolygonSite, ring) -> None:
    if len(ring) < 3:
        raise GeometryError(
            f"polygon {polygon.id!r}: ring needs at least 3 distinct vertices"
        )
    if abs(_ring_signed_area(ring)) < MIN_RING_AREA:
        raise GeometryError(f"polygon {polygon.id!r}: degenerate ring (zero area)")


def polygon_area(polygon: PolygonSite) -> float:
    """Planar area of the exterior ring minus any hole areas."""
    _checked_ring(polygon, polygon.exterior)
    area = abs(_ring_signed_area(polygon.exterior))
    for hole in polygon.holes:
        _checked_ring(polygon, hole)
        area -= abs(_ring_signed_area(hole))
    if area < MIN_RING_AREA:
        raise GeometryError(f"polygon {polygon.id!r}: holes consume the exterior")
    return area


def polygon_centroid(polygon: PolygonSite) -> tuple[float, float]:
    """Area-weighted centroid with holes subtracted.

    The arithmetic mean of the vertices is deliberately not used: it drifts
    toward densely sampled stretches of the boundary.
    """
    _checked_ring(polygon, polygon.exterior)
    area = abs(_ring_signed_area(polygon.exterior))
    cx, cy = _ring_centroid(polygon.exterior)
    num_x, num_y, total = cx * area, cy * area, area
    for hole in polygon.holes:
        _checked_ring(polygon, hole)
        h_area = abs(_ring_signed_area(hole))
        hx, hy = _ring_centroid(hole)
        num_x -= hx * h_area
        num_y -= hy * h_area
        total -= h_area
    if total < MIN_RING_AREA:
        raise GeometryError(f"polygon {polygon.id!r}: holes consume the exterior")
    return num_x / total, num_y / total


def site_location(site: Site) -> tuple[float, float]:
    """Representative planar location: the point itself, or the centroid."""
    if isinstance(site, PolygonSite):
        return polygon_centroid(site)
    return site.x, site.y


def site_distance(a: Site, b: Site) -> float:
    """Euclidean distance between site locations; never zero."""
    ax, ay = site_location(a)
    bx, by = site_location(b)
    d = math.hypot(ax - bx, ay - by)
    if d == 0.0:
        raise DegenerateDistanceError(
            f"sites {a.id!r} and {b.id!r} coincide; inverse distance undefined"
        )
    return d


def _orient(p, q, r) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _segments_cross(p1, p2, q1, q2) -> bool:
    """Strict interior crossing; shared endpoints and touches do not count."""
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    return ((d1 > 0) != (d2 > 0) and d1 != 0 and d2 != 0
            and (d3 > 0) != (d4 > 0) and d3 != 0 and d4 != 0)


def _ring_self_intersects(ring) -> bool:
    n = len(ring)
    segments = [(ring[i], ring[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue  # adjacent through closure
            if _segments_cross(*segments[i], *segments[j]):
                return True
    return False


def validate_dataset(dataset: SpatialDataset) -> list[str]:
    """Collect every invariant violation; an empty list means valid.

    A clean report guarantees the preconditions of every downstream
    operation: no dangling or degenerate edges, no coincident locations,
    complete attribute coverage, well-formed rings.
    """
    violations = []
    sites = dataset.sites

    kinds = {type(site) for site in sites}
    if len(kinds) > 1:
        violations.append("dataset mixes point and polygon sites")

    seen: dict[SiteId, int] = {}
    for site in sites:
        if site.id in seen:
            violations.append(f"duplicate site id {site.id!r}")
        seen[site.id] = seen.get(site.id, 0) + 1

    locations: list[tuple[SiteId, tuple[float, float]]] = []
    for site in sites:
        if isinstance(site, PolygonSite):
            ring_problem = False
            for label, ring in [("exterior", site.exterior)] + [
                (f"hole {i}", h) for i, h in enumerate(site.holes)
            ]:
                if len(ring) < 3:
                    violations.append(
                        f"site {site.id!r}: {label} ring has fewer than 3 distinct vertices"
                    )
                    ring_problem = True
                    continue
                if any(not (math.isfinite(x) and math.isfinite(y)) for x, y in ring):
                    violations.append(f"site {site.id!r}: {label} ring has non-finite vertex")
                    ring_problem = True
                    continue
                if abs(_ring_signed_area(ring)) < MIN_RING_AREA:
                    violations.append(f"site {site.id!r}: degenerate {label} ring (zero area)")
                    ring_problem = True
                    continue
                if _ring_self_intersects(ring):
                    violations.append(f"site {site.id!r}: self-intersecting {label} ring")
                    ring_problem = True
            if not ring_problem:
                try:
                    locations.append((site.id, polygon_centroid(site)))
                except GeometryError as exc:
                    violations.append(f"site {site.id!r}: {exc}")
        else:
            if not (math.isfinite(site.x) and math.isfinite(site.y)):
                violations.append(f"site {site.id!r}: non-finite coordinates")
            else:
                locations.append((site.id, (site.x, site.y)))

    for i in range(len(locations)):
        for j in range(i + 1, len(locations)):
            id_i, loc_i = locations[i]
            id_j, loc_j = locations[j]
            if loc_i == loc_j:
                what = "coincident centroids" if dataset.kind == "polygon" else "coincident sites"
                violations.append(f"sites {id_i!r} and {id_j!r}: {what} at {loc_i}")

    for site in sites:
        for name in dataset.attribute_names:
            if name not in site.attributes:
                violations.append(f"site {site.id!r}: missing attribute {name!r}")
            else:
                value = site.attributes[name]
                if not math.isfinite(value):
                    violations.append(f"site {site.id!r}: non-finite attribute {name!r}")

    if dataset.edges and dataset.kind == "polygon":
        violations.append("edges are only valid for point datasets")
    for i, edge in enumerate(dataset.edges):
        ref = f"edge {i} ({edge.source!r}->{edge.target!r})"
        for endpoint in (edge.source, edge.target):
            if endpoint not in dataset:
                violations.append(f"{ref}: dangling endpoint {endpoint!r}")
        if edge.source == edge.target:
            violations.append(f"{ref}: self-loop")
        if not (math.isfinite(edge.length) and edge.length > 0):
            violations.append(f"{ref}: length must be positive, got {edge.length}")
        if not (math.isfinite(edge.cost) and edge.cost >= 0):
            violations.append(f"{ref}: cost must be non-negative, got {edge.cost}")

    return violations
