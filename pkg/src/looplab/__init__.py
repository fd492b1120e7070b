"""Exact mod-2 loop space homology, computed three independent ways.

The package has three layers that deliberately do not share code paths:
brute-force homology of a simplicial resolution (`algebra`, `simplicial`,
`homology`), closed-form answers with their multiplicative structure
(`closedform`, `ez`), and a stable-wedge model built from Thom space
data (`thom`, `steenrod`).  The `cli` module wires the cross-checks.
"""

__version__ = "0.1.0"
