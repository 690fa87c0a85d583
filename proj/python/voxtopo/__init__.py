# Copyright (c) 2026 voxtopo contributors
# SPDX-License-Identifier: Apache-2.0
"""Topological invariants of 3D binary voxel images.

Computes the genus of closed boundary surfaces and the homology groups
H0..H3 of voxel solids in linear time, plus an independent brute-force
oracle for cross-checking.
"""

from voxtopo._core import (
    Fixture,
    FormatError,
    IoError,
    ManifoldError,
    SurfaceError,
    Volume,
    __version__,
    analyze,
    bench,
    box,
    cell_counts,
    compare,
    hollow_box,
    mesh_genus,
    mesh_genus_off,
    oracle_betti,
    plate_with_holes,
    random_manifold,
    u_shape,
    validate,
)

__all__ = [
    "Fixture",
    "FormatError",
    "IoError",
    "ManifoldError",
    "SurfaceError",
    "Volume",
    "__version__",
    "analyze",
    "bench",
    "box",
    "cell_counts",
    "compare",
    "hollow_box",
    "mesh_genus",
    "mesh_genus_off",
    "oracle_betti",
    "plate_with_holes",
    "random_manifold",
    "u_shape",
    "validate",
]
