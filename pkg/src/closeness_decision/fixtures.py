"""Reference graphs and published values used by `verify.fixture_check`.

The three small example graphs are rebuilt from their drawings:

* ``FIG1``: two triangles sharing vertex 1 (5 vertices, 6 edges).
* ``FIG2``: two triangles joined by the bridge ``(1, 2)``; isomorphic to
  ``cliques:3,3``.
* ``FIG3``: the same two triangles without the bridge.
"""

from .graph import Graph

FIG1 = Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)])
FIG2 = Graph.from_edges(6, [(1, 3), (1, 4), (3, 4), (1, 2), (2, 5), (2, 6), (5, 6)])
FIG3 = Graph.from_edges(6, [(1, 3), (1, 4), (3, 4), (2, 5), (2, 6), (5, 6)])

# (C, R, A, NR, NA); ratios are published rounded to hundredths of a percent.
FIGURE_VALUES = {
    "fig1": (FIG1, 8.0, 7.0, 8.5, 0.875, 1.0625),
    "fig2": (FIG2, 10.0, 6.0, 11.25, 0.60, 1.125),
    "fig3": (FIG3, 6.0, 5.5, 10.0, 0.9167, 1.6667),
}
RATIO_TOL = 1e-4

TABLE1_ROWS = [(1, 2), (2, 3), (3, 4)]
TABLE1_COLS = [(1, 3), (1, 4), (2, 4)]
TABLE1 = [
    [4.5, 4.25, 3.0],
    [4.25, 4.25, 4.25],
    [3.0, 4.25, 4.5],
]
TABLE1_SADDLE = ((2, 3), (1, 4), 4.25)

# C6: closeness, residual, additional.
C6_METRICS = (9.75, 8.0625, 10.75)
# (max, min, max + min, mean, spread) of the column for each chord type.
C6_OPPOSITE = ((1, 4), (9.75, 9.375, 19.125, 9.5, 0.375))
C6_SHORT = ((1, 3), (10.0, 9.0, 19.0, 9.45833, 1.0))
C6_MEAN_TOL = 1e-5
C6_OPPOSITE_CHORDS = [(1, 4), (2, 5), (3, 6)]
C6_SHORT_CHORDS = [(1, 3), (1, 5), (2, 4), (2, 6), (3, 5), (4, 6)]
