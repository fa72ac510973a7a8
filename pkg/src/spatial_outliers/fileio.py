"""File formats: delimited site/edge tables, polygon documents, reports.

Sites and edges travel as headered CSV, polygons as a JSON list of records
with rings and attributes.  Detection and comparison reports render as CSV
(sorted, fixed 6-decimal numbers) or JSON.  All text I/O is UTF-8 with
newline line endings, and identical inputs always produce identical bytes.
"""

import csv
import json
import math

from .dataset import Edge, PointSite, PolygonSite, _ring_signed_area, site_id_key
from .detect import ComparisonReport, DetectionResult
from .errors import ParseError


def _parse_float(path, line_no, column, raw) -> float:
    try:
        if "_" in raw:  # float() tolerates 1_000; the file format does not
            raise ValueError
        value = float(raw)
    except ValueError:
        raise ParseError(path, line_no, f"column {column!r}: not a number: {raw!r}") from None
    if not math.isfinite(value):
        raise ParseError(path, line_no, f"column {column!r}: non-finite value {raw!r}")
    return value


def load_sites(path) -> tuple[PointSite, ...]:
    """Read point sites from CSV with columns id,x,y,<attr>,..."""
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None:
            raise ParseError(path, 1, "missing header")
        header = [h.strip() for h in header]
        if header[:3] != ["id", "x", "y"]:
            raise ParseError(path, 1, f"header must start with id,x,y, got {header[:3]}")
        attr_names = header[3:]
        sites = []
        seen = set()
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(
                    path, line_no, f"expected {len(header)} columns, got {len(row)}"
                )
            site_id = row[0].strip()
            if not site_id:
                raise ParseError(path, line_no, "empty site id")
            if site_id in seen:
                raise ParseError(path, line_no, f"duplicate site id {site_id!r}")
            seen.add(site_id)
            x = _parse_float(path, line_no, "x", row[1])
            y = _parse_float(path, line_no, "y", row[2])
            attributes = {
                name: _parse_float(path, line_no, name, raw)
                for name, raw in zip(attr_names, row[3:])
            }
            sites.append(PointSite(id=site_id, x=x, y=y, attributes=attributes))
    return tuple(sites)


def load_edges(path) -> tuple[Edge, ...]:
    """Read edges from CSV with columns from,to,length,cost.

    Repeated rows for the same pair are kept as parallel connections.
    """
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None:
            raise ParseError(path, 1, "missing header")
        header = [h.strip() for h in header]
        if header != ["from", "to", "length", "cost"]:
            raise ParseError(path, 1, f"header must be from,to,length,cost, got {header}")
        edges = []
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 4:
                raise ParseError(path, line_no, f"expected 4 columns, got {len(row)}")
            source, target = row[0].strip(), row[1].strip()
            if not source or not target:
                raise ParseError(path, line_no, "empty endpoint id")
            length = _parse_float(path, line_no, "length", row[2])
            cost = _parse_float(path, line_no, "cost", row[3])
            if length <= 0:
                raise ParseError(path, line_no, f"length must be positive, got {length}")
            if cost < 0:
                raise ParseError(path, line_no, f"cost must be non-negative, got {cost}")
            edges.append(Edge(source=source, target=target, length=length, cost=cost))
    return tuple(edges)


def _ring_from_json(path, where, raw):
    if not isinstance(raw, list) or any(
        not isinstance(v, list) or len(v) != 2 for v in raw
    ):
        raise ParseError(path, where, "ring must be a list of [x, y] pairs")
    ring = [(float(x), float(y)) for x, y in raw]
    if len(ring) > 1 and ring[0] == ring[-1]:
        ring = ring[:-1]
    if len(set(ring)) < 3:
        raise ParseError(path, where, "ring needs at least 3 distinct vertices")
    return tuple(ring)


def load_polygons(path) -> tuple[PolygonSite, ...]:
    """Read polygon sites from a JSON list of {id, rings, attributes}."""
    with open(path, encoding="utf-8") as handle:
        try:
            document = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ParseError(path, exc.lineno, exc.msg) from None
    if not isinstance(document, list):
        raise ParseError(path, 1, "document must be a list of polygon records")
    polygons = []
    seen = set()
    for index, record in enumerate(document):
        where = f"record {index}"
        if not isinstance(record, dict):
            raise ParseError(path, where, "polygon record must be an object")
        try:
            site_id = record["id"]
            rings = record["rings"]
        except KeyError as exc:
            raise ParseError(path, where, f"missing key {exc.args[0]!r}") from None
        if not isinstance(site_id, (str, int)) or site_id in (None, ""):
            raise ParseError(path, where, f"bad site id {site_id!r}")
        if site_id in seen:
            raise ParseError(path, where, f"duplicate site id {site_id!r}")
        seen.add(site_id)
        if not isinstance(rings, list) or not rings:
            raise ParseError(path, where, "rings must be a non-empty list")
        parsed = [_ring_from_json(path, where, ring) for ring in rings]
        polygon = PolygonSite(
            id=site_id,
            exterior=parsed[0],
            holes=tuple(parsed[1:]),
            attributes={
                str(k): float(v)
                for k, v in record.get("attributes", {}).items()
            },
        )
        for ring in (polygon.exterior, *polygon.holes):
            if abs(_ring_signed_area(ring)) < 1e-12:
                raise ParseError(path, where, "zero-area ring")
        polygons.append(polygon)
    return tuple(polygons)


def write_sites_csv(sites, path, attribute_names=None) -> None:
    """Emit sites as CSV; float repr keeps reload byte-exact."""
    if attribute_names is None:
        attribute_names = tuple(sites[0].attributes) if sites else ()
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["id", "x", "y", *attribute_names])
        for site in sites:
            writer.writerow(
                [site.id, repr(site.x), repr(site.y)]
                + [repr(float(site.attributes[name])) for name in attribute_names]
            )


def write_edges_csv(edges, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["from", "to", "length", "cost"])
        for edge in edges:
            writer.writerow([edge.source, edge.target, repr(edge.length), repr(edge.cost)])


def write_polygons_json(polygons, path) -> None:
    records = []
    for polygon in polygons:
        records.append(
            {
                "id": polygon.id,
                "rings": [
                    [[x, y] for x, y in ring]
                    for ring in (polygon.exterior, *polygon.holes)
                ],
                "attributes": dict(polygon.attributes),
            }
        )
    with open(path, "w", encoding="utf-8", newline="") as handle:
        json.dump(records, handle, indent=2)
        handle.write("\n")


def _fmt(value) -> str:
    if value is None:
        return ""
    return f"{value:.6f}"


def _score_rows(result: DetectionResult):
    return sorted(result.scores, key=lambda s: (s.z, site_id_key(s.site)))


def render_detection_csv(result: DetectionResult) -> str:
    lines = ["site_id,actual,expected,diff,z,outlier"]
    for score in _score_rows(result):
        lines.append(
            f"{score.site},{_fmt(score.actual)},{_fmt(score.expected)},"
            f"{_fmt(score.diff)},{_fmt(score.z)},{'true' if score.is_outlier else 'false'}"
        )
    lines.append(
        f"# mu={_fmt(result.mu)} sigma={_fmt(result.sigma)} theta={_fmt(result.theta)}"
    )
    if result.skipped:
        lines.append("# skipped: " + ",".join(str(s) for s in result.skipped))
    return "\n".join(lines) + "\n"


def render_comparison_csv(report: ComparisonReport) -> str:
    lines = [
        "site_id,actual,expected_classical,expected_weighted,"
        "sq_error_classical,sq_error_weighted,sq_error_delta,improvement_pct"
    ]
    for row in report.per_site:
        lines.append(
            f"{row.site},{_fmt(row.actual)},{_fmt(row.expected_classical)},"
            f"{_fmt(row.expected_weighted)},"
            f"{_fmt(row.sq_error_classical)},{_fmt(row.sq_error_weighted)},"
            f"{_fmt(row.sq_error_delta)},{_fmt(row.improvement_pct)}"
        )
    lines.append(f"# mean_improvement_pct={_fmt(report.mean_improvement_pct)}")
    lines.append(
        f"# mean_sq_error_reduction_pct={_fmt(report.mean_sq_error_reduction_pct)}"
    )
    return "\n".join(lines) + "\n"


def _json_safe(value):
    if value is None or (isinstance(value, float) and not math.isfinite(value)):
        return None
    return value


def render_detection_json(result: DetectionResult) -> str:
    payload = {
        "attribute": result.attribute,
        "theta": result.theta,
        "mu": _json_safe(result.mu),
        "sigma": _json_safe(result.sigma),
        "scores": [
            {
                "site_id": score.site,
                "actual": score.actual,
                "expected": score.expected,
                "diff": score.diff,
                "z": score.z,
                "outlier": score.is_outlier,
            }
            for score in _score_rows(result)
        ],
        "skipped": list(result.skipped),
    }
    return json.dumps(payload, indent=2) + "\n"


def render_comparison_json(report: ComparisonReport) -> str:
    payload = {
        "attribute": report.attribute,
        "per_site": [
            {
                "site_id": row.site,
                "actual": row.actual,
                "expected_classical": row.expected_classical,
                "expected_weighted": row.expected_weighted,
                "sq_error_classical": row.sq_error_classical,
                "sq_error_weighted": row.sq_error_weighted,
                "sq_error_delta": row.sq_error_delta,
                "improvement_pct": _json_safe(row.improvement_pct),
            }
            for row in report.per_site
        ],
        "mean_improvement_pct": _json_safe(report.mean_improvement_pct),
        "mean_sq_error_reduction_pct": _json_safe(report.mean_sq_error_reduction_pct),
    }
    return json.dumps(payload, indent=2) + "\n"


def render_report(result, fmt: str = "csv") -> str:
    """Render a detection or comparison result in the requested format."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be csv or json, got {fmt!r}")
    if isinstance(result, DetectionResult):
        return render_detection_csv(result) if fmt == "csv" else render_detection_json(result)
    if isinstance(result, ComparisonReport):
        return render_comparison_csv(result) if fmt == "csv" else render_comparison_json(result)
    raise TypeError(f"cannot render {type(result).__name__}")


def write_report(result, fmt: str, path) -> None:
    """Write a rendered report to path."""
    text = render_report(result, fmt)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
