import pytest

from spatial_outliers import Edge, PolygonSite, PointSite, SpatialDataset
from spatial_outliers.fixtures import (
    network_dataset,
    survey_dataset,
    village_dataset,
)


@pytest.fixture(scope="session")
def network():
    return network_dataset()


@pytest.fixture(scope="session")
def village():
    return village_dataset()


@pytest.fixture(scope="session")
def survey():
    return survey_dataset()


def unit_square(site_id, ox=0.0, oy=0.0, size=1.0, attributes=None):
    return PolygonSite(
        id=site_id,
        exterior=(
            (ox, oy),
            (ox + size, oy),
            (ox + size, oy + size),
            (ox, oy + size),
        ),
        attributes=attributes or {},
    )


def grid_polygons(n=3, attribute="v"):
    """n x n unit squares; cell (i, j) has id 'i-j'."""
    sites = []
    for i in range(n):
        for j in range(n):
            sites.append(
                unit_square(f"{i}-{j}", ox=float(i), oy=float(j),
                            attributes={attribute: float(10 + 3 * i + j)})
            )
    return SpatialDataset(sites=tuple(sites), attribute_names=(attribute,))


def grid_point_dataset(width, height, values, attribute="v"):
    """Lattice of points one unit apart, edges between orthogonal neighbors.

    Within every site's neighborhood the distance (1), connection count (1)
    and traversal cost (1) are identical, so any weighting is uniform; a
    buffer radius of 1.2 keeps diagonals out.
    """
    sites = []
    edges = []
    for i in range(width):
        for j in range(height):
            sites.append(
                PointSite(
                    id=f"{i},{j}",
                    x=float(i),
                    y=float(j),
                    attributes={attribute: float(values[i * height + j])},
                )
            )
            if i + 1 < width:
                edges.append(Edge(f"{i},{j}", f"{i + 1},{j}", 1.0, 1.0))
            if j + 1 < height:
                edges.append(Edge(f"{i},{j}", f"{i},{j + 1}", 1.0, 1.0))
    return SpatialDataset(
        sites=tuple(sites), edges=tuple(edges), attribute_names=(attribute,)
    )
