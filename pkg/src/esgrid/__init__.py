"""Extremal point configurations without large convex polygons, realized on
small integer grids with fully exact arithmetic."""

from .construct import (build_es_baseline, build_es_optimized, build_pr,
                        build_skl_baseline, build_skl_optimized,
                        level_geometry, optimized_x_extents)
from .geometry import Line, Point, QuadValue, orientation, point_side, \
    quad_ceil, quad_compare, slope_compare
from .pointset import ConstructionParams, GridBounds, Kind, PointSet, \
    bounding_box, normalize
from .verify import (VerificationReport, brute_force_max_convex,
                     check_general_position, convex_hull, full_report,
                     is_high_above, max_cap, max_convex_subset, max_cup,
                     max_empty_convex_subset)

__version__ = "0.1.0"
