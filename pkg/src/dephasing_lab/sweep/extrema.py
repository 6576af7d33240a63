"""
Local extrema of sampled curves and the concurrence/entropy extrema correspondence
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from ..handlers.error_handler import InvalidInputError
from ..utils.constants import DEFAULT_EXTREMA_WINDOW
from .engine import SweepRecord


def local_extrema(values: Sequence[float]) -> Tuple[List[int], List[int]]:
    """
    Interior strict local maxima and minima of a sampled curve.

    Runs of equal values count as one point located at the run's midpoint;
    runs that touch either end of the list are never extrema.
    """
    if len(values) < 3:
        raise InvalidInputError(f"need at least 3 samples for extrema, got {len(values)}")

    # collapse plateaus into (value, first index, last index)
    runs = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] != values[start]:
            runs.append((values[start], start, i - 1))
            start = i

    maxima, minima = [], []
    for k in range(1, len(runs) - 1):
        value, first, last = runs[k]
        before, after = runs[k - 1][0], runs[k + 1][0]
        midpoint = (first + last) // 2
        if value > before and value > after:
            maxima.append(midpoint)
        elif value < before and value < after:
            minima.append(midpoint)
    return maxima, minima


@dataclass(frozen=True)
class ExtremaReport:
    concurrence_maxima: Tuple[int, ...]
    entropy_minima: Tuple[int, ...]
    window: int
    unmatched: Tuple[Dict[str, Any], ...] = field(default_factory=tuple)
    # entropy minima with no concurrence maximum nearby; the converse is not required
    unpaired_entropy_minima: Tuple[Dict[str, Any], ...] = field(default_factory=tuple)

    @property
    def holds(self) -> bool:
        return not self.unmatched

    @property
    def matched(self) -> int:
        return len(self.concurrence_maxima) - len(self.unmatched)

    def as_dict(self) -> Dict[str, Any]:
        return {
            'holds': self.holds,
            'matched': self.matched,
            'total': len(self.concurrence_maxima),
            'window': self.window,
            'concurrence_maxima': list(self.concurrence_maxima),
            'entropy_minima': list(self.entropy_minima),
            'unmatched': list(self.unmatched),
            'unpaired_entropy_minima': len(self.unpaired_entropy_minima),
        }


def extrema_correspondence(
    records: Sequence[SweepRecord],
    window: int = DEFAULT_EXTREMA_WINDOW,
) -> ExtremaReport:
    """
    Check that every local concurrence maximum sits within +-window indices of an
    entropy minimum. Entropy minima without a concurrence maximum are reported
    separately and do not break the correspondence.
    """
    if window < 0:
        raise InvalidInputError(f"window must be >= 0, got {window!r}")
    if any(r.concurrence is None or r.entropy is None for r in records):
        raise InvalidInputError("extrema correspondence needs stationary-sweep records")
    if len(records) < 3:
        return ExtremaReport((), (), window)

    c_max, _ = local_extrema([r.concurrence for r in records])
    _, s_min = local_extrema([r.entropy for r in records])

    unmatched = []
    for index in c_max:
        if not any(abs(index - m) <= window for m in s_min):
            unmatched.append({'kind': 'concurrence max', 'index': index, 'gamma_t': records[index].gamma_t})
    unpaired = [
        {'kind': 'entropy min', 'index': index, 'gamma_t': records[index].gamma_t}
        for index in s_min
        if not any(abs(index - m) <= window for m in c_max)
    ]
    return ExtremaReport(tuple(c_max), tuple(s_min), window, tuple(unmatched), tuple(unpaired))
