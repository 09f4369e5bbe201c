"""
Two-segment (broken-line) power-law fitting.

The breakpoint is searched exhaustively over the observed samples: for every
candidate sample inside the search range, region I is fitted on
[sublayer_cutoff, candidate] and region II on [candidate, y+_max], both in
(ln y+, ln U+). The candidate with the smallest total SSE wins; near-equal
totals are ties and resolve to the smallest candidate.
"""

from __future__ import annotations

import logging

import numpy as np

from boundary_scaling.exceptions import NoValidBreakpointError
from boundary_scaling.profiles import SegmentedFit, VelocityProfile
from boundary_scaling.regression.laws import fit_power_law
from boundary_scaling.regression.linear import fit_line

logger = logging.getLogger(__name__)

DEFAULT_SUBLAYER_CUTOFF = 100.0
DEFAULT_SEARCH_LO = 150.0
# Upper search bound as a fraction of the outermost y+
DEFAULT_SEARCH_HI_FRACTION = 0.5

MIN_SEGMENT_POINTS = 3

# Totals closer than this are ties (round-off on noiseless data)
SSE_TIE_ABS = 1e-20
SSE_TIE_REL = 1e-12


def _improves(total: float, best: float | None) -> bool:
    if best is None:
        return True
    return total < best - max(SSE_TIE_ABS, SSE_TIE_REL * best)


def fit_broken_line(
    profile: VelocityProfile,
    search_lo: float | None = None,
    search_hi: float | None = None,
    sublayer_cutoff: float = DEFAULT_SUBLAYER_CUTOFF,
) -> SegmentedFit:
    """
    Fit two power laws meeting at a sample breakpoint.

    Args:
        profile: The profile to segment.
        search_lo: Smallest candidate y+ (default 150).
        search_hi: Largest candidate y+ (default half the outermost y+).
        sublayer_cutoff: Samples below this y+ are excluded (default 100).

    Returns:
        The SegmentedFit minimising the total log-log SSE; the breakpoint
        sample belongs to both regions.

    Raises:
        NoValidBreakpointError: If no candidate leaves at least 3 samples on
            each side.

    Example:
        >>> seg = fit_broken_line(profile, sublayer_cutoff=100)
        >>> seg.region1.exponent, seg.region2.exponent
    """
    y = profile.y_plus
    ln_y = np.log(y)
    ln_u = np.log(profile.u_plus)
    n = y.size
    y_max = float(y[-1])
    lo = DEFAULT_SEARCH_LO if search_lo is None else float(search_lo)
    hi = DEFAULT_SEARCH_HI_FRACTION * y_max if search_hi is None else float(search_hi)

    first = int(np.searchsorted(y, sublayer_cutoff, side="left"))
    best_index: int | None = None
    best_sse: float | None = None
    evaluated = 0
    for i in range(first, n):
        if not lo <= y[i] <= hi:
            continue
        if i - first + 1 < MIN_SEGMENT_POINTS or n - i < MIN_SEGMENT_POINTS:
            continue
        evaluated += 1
        total = fit_line(ln_y[first : i + 1], ln_u[first : i + 1]).sse + fit_line(ln_y[i:], ln_u[i:]).sse
        if _improves(total, best_sse):
            best_index, best_sse = i, total

    if best_index is None:
        raise NoValidBreakpointError(lo, hi, sublayer_cutoff)

    break_y = float(y[best_index])
    logger.debug(
        "%s: %d breakpoint candidates in y+ [%g, %g], best y+=%g (sse=%.3e)",
        profile.label, evaluated, lo, hi, break_y, best_sse,
    )
    region1 = fit_power_law(profile, (sublayer_cutoff, break_y))
    region2 = fit_power_law(profile, (break_y, y_max))
    return SegmentedFit(
        breakpoint_y_plus=break_y,
        region1=region1,
        region2=region2,
        total_sse=region1.sse + region2.sse,
    )
