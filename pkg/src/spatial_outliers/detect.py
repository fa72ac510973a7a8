"""Expectation models, standardized difference scoring, and model comparison.

A site is flagged when its attribute value differs from its neighborhood
expectation by more than theta population standard deviations.  The classical
model expects the plain neighbor mean; the weighted model expects the
weight-of-effect average.  ``compare_models`` quantifies how much the
weighted expectation shrinks the squared difference error.
"""

import math
from dataclasses import dataclass

from .dataset import SiteId, SpatialDataset, WeightParams, site_id_key
from .errors import (
    DegenerateDistributionError,
    NoNeighborsError,
    SiteLookupError,
    UnknownAttributeError,
)
from .neighborhood import (
    buffer_neighbors,
    collect_factors,
    graph_neighbors,
    polygon_adjacent_neighbors,
)
from .weights import (
    WeightedNeighborhood,
    combined_weights,
    connection_weights,
    distance_weights,
    polygon_weights,
)

REGIMES = ("buffer", "graph", "polygon", "combined")
MODES = ("classical", "weighted")


@dataclass(frozen=True)
class SiteScore:
    site: SiteId
    actual: float
    expected: float
    diff: float
    z: float
    is_outlier: bool


@dataclass(frozen=True)
class DetectionResult:
    """Per-site scores plus the population statistics behind the z values.

    Sites with empty neighborhoods are listed in ``skipped`` and excluded
    from mu and sigma.  mu/sigma are NaN when nothing could be scored.
    """

    attribute: str
    scores: tuple[SiteScore, ...]
    mu: float
    sigma: float
    theta: float
    skipped: tuple[SiteId, ...] = ()

    def outlier_ids(self) -> set[SiteId]:
        return {s.site for s in self.scores if s.is_outlier}

    def score_for(self, site_id: SiteId) -> SiteScore:
        for score in self.scores:
            if score.site == site_id:
                return score
        raise SiteLookupError(f"no score for site {site_id!r}")


@dataclass(frozen=True)
class Significance:
    """z per site with the population mean/std of the differences."""

    mu: float
    sigma: float
    z: dict[SiteId, float]
    outliers: frozenset[SiteId]


@dataclass(frozen=True)
class SiteComparison:
    site: SiteId
    actual: float
    expected_classical: float
    expected_weighted: float
    sq_error_classical: float
    sq_error_weighted: float
    sq_error_delta: float
    improvement_pct: float | None


@dataclass(frozen=True)
class ComparisonReport:
    """Per-site squared-error deltas between classical and weighted runs."""

    attribute: str
    per_site: tuple[SiteComparison, ...]
    mean_improvement_pct: float | None
    mean_sq_error_reduction_pct: float | None


def expected_classical(neighbor_values: list[float]) -> float:
    """Plain neighbor mean, computed as a uniform weighted sum.

    Using the same product-and-exact-sum evaluation as
    :func:`expected_weighted` keeps uniform weighting bit-identical to the
    classical expectation.
    """
    if not neighbor_values:
        raise NoNeighborsError("expectation over an empty neighborhood")
    share = 1.0 / len(neighbor_values)
    return math.fsum(share * v for v in neighbor_values)


def expected_weighted(
    weights: WeightedNeighborhood, values: dict[SiteId, float]
) -> float:
    """Weight-of-effect average of the neighbor values."""
    products = []
    for neighbor, weight in weights.entries:
        if neighbor not in values:
            raise SiteLookupError(f"no value for weighted neighbor {neighbor!r}")
        products.append(weight * values[neighbor])
    return math.fsum(products)


def difference_scores(
    actuals: dict[SiteId, float], expecteds: dict[SiteId, float]
) -> dict[SiteId, float]:
    """Per-site difference: actual minus expected."""
    if set(actuals) != set(expecteds):
        raise SiteLookupError("actual and expected cover different sites")
    return {sid: actuals[sid] - expecteds[sid] for sid in actuals}


def significance_scores(diffs: dict[SiteId, float], theta: float) -> Significance:
    """Standardize the differences and flag |z| > theta.

    sigma is the population (divide-by-N) standard deviation; z keeps its
    sign even though the flag test is two-sided.
    """
    if not diffs:
        raise DegenerateDistributionError("no differences to standardize")
    ordered = sorted(diffs, key=site_id_key)
    n = len(ordered)
    mu = math.fsum(diffs[sid] for sid in ordered) / n
    sigma = math.sqrt(math.fsum((diffs[sid] - mu) ** 2 for sid in ordered) / n)
    if sigma == 0.0:
        raise DegenerateDistributionError("differences have zero spread")
    z = {sid: (diffs[sid] - mu) / sigma for sid in ordered}
    return Significance(
        mu=mu,
        sigma=sigma,
        z=z,
        outliers=frozenset(sid for sid in ordered if abs(z[sid]) > theta),
    )


def default_regime(dataset: SpatialDataset) -> str:
    if dataset.kind == "polygon":
        return "polygon"
    return "combined" if dataset.edges else "buffer"


def _neighbor_ids(dataset, center, regime, params) -> list[SiteId]:
    if regime == "graph":
        found = graph_neighbors(dataset, center)
    elif regime == "polygon":
        found = polygon_adjacent_neighbors(dataset, center)
    else:
        if params.radius is None:
            raise ValueError(f"regime {regime!r} requires a buffer radius")
        found = buffer_neighbors(dataset, center, params.radius)
    return sorted(found, key=site_id_key)


def neighborhood_weights(
    dataset: SpatialDataset,
    center: SiteId,
    params: WeightParams,
    regime: str,
) -> WeightedNeighborhood:
    """Weighted neighborhood for one site under the given regime.

    buffer weights by inverse distance, graph by connection count, combined
    blends distance, connections, and traversal cost over the buffer
    membership, polygon mixes centroid distance with area.
    """
    neighbor_ids = _neighbor_ids(dataset, center, regime, params)
    if not neighbor_ids:
        raise NoNeighborsError(f"site {center!r} has no {regime} neighbors")
    if regime == "polygon":
        return polygon_weights(
            dataset.site(center),
            [dataset.site(n) for n in neighbor_ids],
            params.gamma,
        )
    factors = collect_factors(dataset, center, set(neighbor_ids), params)
    if regime == "buffer":
        return distance_weights(factors)
    if regime == "graph":
        return connection_weights(factors)
    return combined_weights(factors, params)


def _check_regime(dataset: SpatialDataset, regime: str, mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if regime not in REGIMES:
        raise ValueError(f"regime must be one of {REGIMES}, got {regime!r}")
    if regime == "polygon" and dataset.kind != "polygon":
        raise ValueError("polygon regime requires a polygon dataset")
    if regime in ("graph", "combined") and dataset.kind == "polygon":
        raise ValueError(f"{regime} regime requires a point dataset")


def detect_outliers(
    dataset: SpatialDataset,
    attribute: str,
    params: WeightParams,
    mode: str = "weighted",
    regime: str | None = None,
) -> DetectionResult:
    """Run the full scoring pipeline over every site.

    Neighbors are discovered under the regime (defaulting by dataset kind),
    expectations use uniform weights in classical mode or the regime's
    weighting in weighted mode, and the standardized differences are
    flagged against params.theta.  Sites without neighbors are skipped.
    """
    if attribute not in dataset.attribute_names:
        raise UnknownAttributeError(f"attribute {attribute!r} not declared")
    regime = regime or default_regime(dataset)
    _check_regime(dataset, regime, mode)

    values = dataset.values(attribute)
    order = sorted(dataset.site_ids(), key=site_id_key)
    expecteds: dict[SiteId, float] = {}
    skipped: list[SiteId] = []
    for center in order:
        neighbor_ids = _neighbor_ids(dataset, center, regime, params)
        if not neighbor_ids:
            skipped.append(center)
            continue
        if mode == "classical":
            expecteds[center] = expected_classical(
                [values[n] for n in neighbor_ids]
            )
        else:
            weighting = neighborhood_weights(dataset, center, params, regime)
            expecteds[center] = expected_weighted(weighting, values)

    if not expecteds:
        return DetectionResult(
            attribute=attribute,
            scores=(),
            mu=math.nan,
            sigma=math.nan,
            theta=params.theta,
            skipped=tuple(skipped),
        )

    diffs = difference_scores(
        {sid: values[sid] for sid in expecteds}, expecteds
    )
    significance = significance_scores(diffs, params.theta)
    scores = tuple(
        SiteScore(
            site=sid,
            actual=values[sid],
            expected=expecteds[sid],
            diff=diffs[sid],
            z=significance.z[sid],
            is_outlier=sid in significance.outliers,
        )
        for sid in sorted(expecteds, key=site_id_key)
    )
    return DetectionResult(
        attribute=attribute,
        scores=scores,
        mu=significance.mu,
        sigma=significance.sigma,
        theta=params.theta,
        skipped=tuple(skipped),
    )


def compare_models(
    classical: DetectionResult, weighted: DetectionResult
) -> ComparisonReport:
    """Squared-error comparison of the two expectation models per site."""
    if classical.attribute != weighted.attribute:
        raise ValueError(
            "cannot compare results for different attributes "
            f"({classical.attribute!r} vs {weighted.attribute!r})"
        )
    c_by_site = {s.site: s for s in classical.scores}
    w_by_site = {s.site: s for s in weighted.scores}
    if set(c_by_site) != set(w_by_site):
        raise SiteLookupError("results cover different site sets")

    rows = []
    improvements = []
    for sid in sorted(c_by_site, key=site_id_key):
        sq_c = c_by_site[sid].diff ** 2
        sq_w = w_by_site[sid].diff ** 2
        delta = sq_c - sq_w
        if sq_c > 0.0:
            pct = delta / sq_c * 100.0
        elif sq_w == 0.0:
            pct = 0.0
        else:
            pct = None  # classical was already perfect; ratio undefined
        if pct is not None:
            improvements.append(pct)
        rows.append(
            SiteComparison(
                site=sid,
                actual=c_by_site[sid].actual,
                expected_classical=c_by_site[sid].expected,
                expected_weighted=w_by_site[sid].expected,
                sq_error_classical=sq_c,
                sq_error_weighted=sq_w,
                sq_error_delta=delta,
                improvement_pct=pct,
            )
        )

    total_c = math.fsum(r.sq_error_classical for r in rows)
    total_w = math.fsum(r.sq_error_weighted for r in rows)
    return ComparisonReport(
        attribute=classical.attribute,
        per_site=tuple(rows),
        mean_improvement_pct=(
            math.fsum(improvements) / len(improvements) if improvements else None
        ),
        mean_sq_error_reduction_pct=(
            (total_c - total_w) / total_c * 100.0 if total_c > 0.0 else None
        ),
    )
