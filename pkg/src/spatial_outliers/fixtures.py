"""Bundled example datasets.

Three small datasets ship with the package so the pipeline can be exercised
without external data:

* network -- eleven named points with a road-style edge list.  Around site A
  the distance buffer (radius 2) and the direct connections select different
  neighbor sets, which makes it handy for comparing regimes.
* village -- one village and its seven neighbors.  The neighbor distances
  give the nearest village 41% of the total effect and the farthest 5%;
  the neighbor values average 45 while the inverse-distance expectation is
  28 against an actual value of 26.
* survey -- a reconstructed 103-site illiteracy survey organized as isolated
  clusters.  Its weighted and classical runs (buffer radius 6, theta 2)
  standardize to a fixed z table; see scripts/derive_fixtures.py for the
  construction.
"""

import os

from ._survey_data import SURVEY_SITES
from .dataset import Edge, PointSite, SpatialDataset
from .fileio import write_edges_csv, write_sites_csv

NETWORK_RADIUS = 2.0
NETWORK_ATTRIBUTE = "v"

# id, x, y, value
NETWORK_SITES = (
    ("A", 0.0, 0.0, 10.0),
    ("B", 1.0, 0.3, 12.0),
    ("C", 4.2, 2.0, 14.0),
    ("D", 3.5, 0.5, 11.0),
    ("E", 2.8, -1.8, 13.0),
    ("F", -3.0, 2.2, 20.0),
    ("G", 2.0, 4.0, 15.0),
    ("H", -0.6, -1.2, 9.0),
    ("J", 0.4, -1.5, 8.0),
    ("K", -1.2, 0.8, 7.0),
    ("L", -2.5, -2.6, 16.0),
)

# from, to, road length (stretched euclidean), traversal cost
NETWORK_EDGES = (
    ("A", "B", 1.15, 1.7),
    ("A", "D", 3.89, 5.7),
    ("A", "E", 3.66, 5.3),
    ("B", "C", 3.99, 5.8),
    ("C", "D", 1.82, 2.6),
    ("C", "G", 3.27, 4.8),
    ("E", "L", 5.9, 8.6),
    ("H", "J", 1.15, 1.7),
    ("J", "K", 3.08, 4.5),
    ("K", "F", 2.51, 3.6),
    ("F", "H", 4.58, 6.7),
    ("K", "B", 2.48, 3.6),
)

VILLAGE_RADIUS = 25.0
VILLAGE_ATTRIBUTE = "illit_f"

# the subject village plus seven neighbors; coordinates place the neighbors
# at inverse-distance weights (0.41, 0.15, 0.13, 0.11, 0.09, 0.06, 0.05)
VILLAGE_SITES = (
    ("27", 0.0, 0.0, 26.0),
    ("29", 2.4390243902439024, 0.0, 10.0),
    ("31", 4.285250731243596, 5.10696295412652, 15.0),
    ("33", -1.3357552128225407, 7.575444253940061, 20.0),
    ("35", -7.8729582162221705, 4.545454545454545, 37.5),
    ("38", -10.441029119843426, -3.8002238147296517, 60.0),
    ("40", -5.700335722094477, -15.661543679765142, 90.0),
    ("42", 12.855752193730785, -15.320888862379562, 82.5),
)

SURVEY_RADIUS = 6.0
SURVEY_ATTRIBUTE = "illit_f"


def _point_dataset(rows, attribute, edges=()) -> SpatialDataset:
    return SpatialDataset(
        sites=tuple(
            PointSite(id=sid, x=x, y=y, attributes={attribute: value})
            for sid, x, y, value in rows
        ),
        edges=tuple(Edge(*row) for row in edges),
        attribute_names=(attribute,),
    )


def network_dataset() -> SpatialDataset:
    return _point_dataset(NETWORK_SITES, NETWORK_ATTRIBUTE, NETWORK_EDGES)


def village_dataset() -> SpatialDataset:
    return _point_dataset(VILLAGE_SITES, VILLAGE_ATTRIBUTE)


def survey_dataset() -> SpatialDataset:
    return _point_dataset(SURVEY_SITES, SURVEY_ATTRIBUTE)


def write_fixture_files(directory) -> list[str]:
    """Write every bundled dataset to CSV files; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    written = []

    def _sites_path(name, dataset):
        path = os.path.join(directory, f"{name}_sites.csv")
        write_sites_csv(dataset.sites, path, dataset.attribute_names)
        written.append(path)
        return path

    network = network_dataset()
    _sites_path("network", network)
    edges_path = os.path.join(directory, "network_edges.csv")
    write_edges_csv(network.edges, edges_path)
    written.append(edges_path)
    _sites_path("village", village_dataset())
    _sites_path("survey", survey_dataset())
    return written
