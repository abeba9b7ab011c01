"""
Construction-agnostic checks of 4-cycle systems and their colourings.

Nothing here looks at how a system was built: every check recomputes edge
censuses and vertex incidences from the raw blocks, so the same functions
serve as the oracle for the constructions.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Dict, List, NamedTuple

import numpy as np

from .core import order_params
from .exceptions import ImproperlyConfigured

logger = logging.getLogger('fourcycle')

MAX_WITNESSES = 50


class Failure(NamedTuple):
    check: str
    witness: Dict[str, object]

    def __str__(self):
        return '%s: %s' % (self.check, ', '.join('%s=%s' % kv for kv in self.witness.items()))


@dataclass
class VerificationReport:
    failures: List[Failure] = field(default_factory=list)
    checks: List[str] = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def __bool__(self):
        return self.passed

    def fail(self, check, **witness):
        self.failures.append(Failure(check, witness))

    def extend(self, other):
        self.checks.extend(other.checks)
        self.failures.extend(other.failures)
        return self

    def failures_for(self, check):
        return [f for f in self.failures if f.check == check]

    def first_failure(self):
        return self.failures[0] if self.failures else None

    def summary(self):
        if self.passed:
            return 'PASS (%s)' % ', '.join(self.checks)
        return 'FAIL %s' % (self.first_failure(), )


def _finish(report, check, limit, unlisted=0):
    report.checks.append(check)
    failures = report.failures_for(check)
    total = len(failures) + unlisted
    if total:
        logger.warning('%s failed at %d places, first: %s', check, total, failures[0] if failures else 'not listed')
        if total > limit:
            report.failures = [f for f in report.failures if f.check != check] + failures[:limit]
            report.fail(check, truncated=total - limit)
    else:
        logger.debug('%s passed', check)
    return report


def _miscovered(covered, counts, v):
    """ Pairs ``x < y`` not covered exactly once, lexicographically, with their multiplicity. """
    position = 0
    for x in range(v):
        for y in range(x + 1, v):
            if position < len(covered) and covered[position] == x * v + y:
                if counts[position] != 1:
                    yield (x, y), int(counts[position])
                position += 1
            else:
                yield (x, y), 0


def verify_cycle_system(system, max_witnesses=MAX_WITNESSES):
    """
    Check that the blocks of ``system`` partition the edges of ``K_v``: there
    are ``v(v-1)/8`` blocks, each has four distinct labels in ``0..v-1``, and
    every pair of vertices is covered exactly once.

    The edge census is sparse, so its size follows the blocks rather than the
    order the system declares.
    """
    check = 'cycle_system'
    report = VerificationReport()
    v = system.order
    if len(system.blocks) != system.expected_block_count:
        report.fail(check, blocks=len(system.blocks), expected=system.expected_block_count)

    ids = []
    for index, block in enumerate(system.blocks):
        labels = tuple(block)
        if len(set(labels)) != 4:
            report.fail(check, block=index, labels=labels, problem='repeated label')
            continue
        if not all(0 <= x < v for x in labels):
            report.fail(check, block=index, labels=labels, problem='label out of range')
            continue
        for i in range(4):
            x, y = labels[i], labels[(i + 1) % 4]
            ids.append(min(x, y) * v + max(x, y))

    covered, counts = np.unique(np.array(ids, dtype=np.int64), return_counts=True)
    wrong = v * (v - 1) // 2 - len(covered) + int(np.count_nonzero(counts != 1))
    room = max(max_witnesses - len(report.failures), 0)
    listed = 0
    for pair, multiplicity in islice(_miscovered(covered, counts, v), min(room, wrong)):
        report.fail(check, edge=pair, multiplicity=multiplicity)
        listed += 1

    return _finish(report, check, max_witnesses, unlisted=wrong - listed)


def vertex_colour_counts(colsys):
    """ For every vertex, how many of its blocks carry each colour. """
    counts = [Counter() for _ in range(colsys.system.order)]
    for block, colour in zip(colsys.system.blocks, colsys.colouring.colours):
        for x in set(block):
            if 0 <= x < len(counts):
                counts[x][colour] += 1
    return counts


def verify_type(colsys, s, max_witnesses=MAX_WITNESSES):
    """ Every vertex sees exactly ``s`` distinct colours on its blocks. """
    check = 'type'
    report = VerificationReport()
    for x, counts in enumerate(vertex_colour_counts(colsys)):
        if len(counts) != s:
            report.fail(check, vertex=x, colours=sorted(counts), expected=s)
    return _finish(report, check, max_witnesses)


def verify_equitable(colsys, s, max_witnesses=MAX_WITNESSES):
    """
    With ``4k = qs + r``, the ``4k`` blocks at every vertex split into ``r``
    colour classes of size ``q+1`` and ``s-r`` classes of size ``q``.
    """
    check = 'equitable'
    report = VerificationReport()
    try:
        params = order_params(colsys.system.order, s)
    except ImproperlyConfigured as e:
        report.fail(check, order=colsys.system.order, problem=str(e))
        return _finish(report, check, max_witnesses)

    expected = sorted([params.q + 1] * params.r + [params.q] * (s - params.r))
    for x, counts in enumerate(vertex_colour_counts(colsys)):
        sizes = sorted(counts.values())
        if sizes != expected:
            report.fail(check, vertex=x, classes=dict(sorted(counts.items())), expected=expected)
    return _finish(report, check, max_witnesses)


def verify_colour_count(colsys, c, max_witnesses=MAX_WITNESSES):
    """ Exactly ``c`` colours are used, and they are ``1..c``. """
    check = 'colour_count'
    report = VerificationReport()
    used = set(colsys.colouring.colours)
    for colour in sorted(set(range(1, c + 1)) - used):
        report.fail(check, colour=colour, problem='empty colour class')
    for colour in sorted(used - set(range(1, c + 1))):
        report.fail(check, colour=colour, problem='colour outside 1..%d' % c)
    return _finish(report, check, max_witnesses)


def verify_colour_support(colsys, s, max_witnesses=MAX_WITNESSES):
    """
    Each colour class touches at least ``2q+1`` vertices: a vertex lying in
    ``q`` blocks of one colour has ``2q`` distinct neighbours through them.
    """
    check = 'colour_support'
    report = VerificationReport()
    try:
        params = order_params(colsys.system.order, s)
    except ImproperlyConfigured as e:
        report.fail(check, order=colsys.system.order, problem=str(e))
        return _finish(report, check, max_witnesses)

    support = {}
    for block, colour in zip(colsys.system.blocks, colsys.colouring.colours):
        support.setdefault(colour, set()).update(block)
    for colour, vertices in sorted(support.items()):
        if len(vertices) < 2 * params.q + 1:
            report.fail(check, colour=colour, vertices=len(vertices), expected_at_least=2 * params.q + 1)
    return _finish(report, check, max_witnesses)


def upper_bound(v, s):
    """ ``s^2 v / (v + s - 1)``, the largest ``c`` an equitable colouring of type ``s`` can reach. """
    if s < 1:
        raise ImproperlyConfigured('s must be positive, got %r' % (s, ))
    if v % 8 != 1:
        raise ImproperlyConfigured('v must be 1 modulo 8, got %r' % (v, ))
    return Fraction(s * s * v, v + s - 1)


def verify_bound(colsys, s, c):
    check = 'bound'
    report = VerificationReport()
    try:
        bound = upper_bound(colsys.system.order, s)
    except ImproperlyConfigured as e:
        report.fail(check, order=colsys.system.order, problem=str(e))
    else:
        if c > bound:
            report.fail(check, c=c, bound=str(bound))
    return _finish(report, check, MAX_WITNESSES)


def verify_all(colsys, s=None, c=None, max_witnesses=MAX_WITNESSES):
    """
    Run every check on ``colsys``. ``s`` and ``c`` default to the values the
    system was built for.

    When the number of blocks does not match the order, the per-vertex
    checks (``type``, ``equitable`` and ``colour_support``) are skipped: the
    ``cycle_system`` failure already rejects the system.
    """
    s = colsys.params.s if s is None else s
    c = colsys.colouring.c if c is None else c

    report = VerificationReport()
    report.extend(verify_cycle_system(colsys.system, max_witnesses))
    sized = len(colsys.system) == colsys.system.expected_block_count
    if sized:
        report.extend(verify_type(colsys, s, max_witnesses))
        report.extend(verify_equitable(colsys, s, max_witnesses))
    else:
        logger.info('skipping vertex checks: %d blocks for order %d', len(colsys.system), colsys.system.order)
    report.extend(verify_colour_count(colsys, c, max_witnesses))
    if sized:
        report.extend(verify_colour_support(colsys, s, max_witnesses))
    report.extend(verify_bound(colsys, s, c))
    logger.debug('verified v=%d s=%d c=%d: %s', colsys.system.order, s, c,
                 'pass' if report.passed else 'fail')
    return report
