import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Tuple

from .core import Cycle4, CycleSystem, Origin, canonicalize, derive_params
from .decomposer import one_factor
from .exceptions import CaseNotApplicable, ImproperlyConfigured, InvalidSubsystem, MalformedParts
from .verifier import verify_cycle_system

logger = logging.getLogger('fourcycle')

INFINITY = 0


@dataclass(frozen=True)
class PartLayout:
    """
    Labels of the parts ``A_1, A_2, ...`` of a composed system. ``parts[i-1]``
    is the contiguous range of ``A_i``; ``infinity`` is the shared point.
    """
    parts: Tuple[range, ...]
    infinity: int = INFINITY

    @classmethod
    def contiguous(cls, count, width):
        return cls(tuple(range(1 + i * width, 1 + (i + 1) * width) for i in range(count)))

    def part(self, index):
        return self.parts[index - 1]

    @property
    def order(self):
        return 1 + sum(len(p) for p in self.parts)


def starter_blocks(k):
    """
    The base blocks ``(0, i, 4k+1, k+i)``, ``1 <= i <= k``, over ``Z_{8k+1}``.
    Their edge differences are ``i``, ``k+i``, ``3k+1-i`` and ``4k+1-i``, so
    together they hit every difference ``1..4k`` once.
    """
    if k < 1:
        raise ImproperlyConfigured('k must be positive, got %r' % (k, ))
    return [Cycle4(0, i, 4 * k + 1, k + i) for i in range(1, k + 1)]


def cyclic_4cs(k):
    v = 8 * k + 1
    blocks, provenance = [], []
    for i, starter in enumerate(starter_blocks(k), 1):
        for shift in range(v):
            blocks.append(canonicalize(starter.translate(shift, v)))
            provenance.append(Origin('starter', i))
    logger.debug('cyclic 4CS(%d): %d starters, %d blocks', v, k, len(blocks))
    return CycleSystem(v, tuple(blocks), tuple(provenance))


def bipartite_family(A, B):
    """
    The family ``[A,B]`` of ``|A||B|/4`` cycles ``(a_i, b_j, a_{i+p}, b_{j+q})``
    covering each edge between ``A`` and ``B`` once, with ``p = |A|/2`` and
    ``q = |B|/2``.
    """
    A, B = list(A), list(B)
    if not A or not B or len(A) % 2 or len(B) % 2:
        raise MalformedParts('[A,B] needs non-empty even-sized sets, got %d and %d' % (len(A), len(B)))
    if len(set(A)) != len(A) or len(set(B)) != len(B):
        raise MalformedParts('[A,B] sets must not repeat labels')
    if set(A) & set(B):
        raise MalformedParts('[A,B] sets overlap in %r' % (sorted(set(A) & set(B)), ))
    p, q = len(A) // 2, len(B) // 2
    return [Cycle4(A[i], B[j], A[i + p], B[j + q]) for i in range(p) for j in range(q)]


def _subsystem(factory, h):
    system = factory(h)
    if system.order != 1 + 8 * h:
        raise InvalidSubsystem('subsystem', 'expected a 4CS(%d), got order %d' % (1 + 8 * h, system.order))
    report = verify_cycle_system(system)
    if not report.passed:
        raise InvalidSubsystem('subsystem', 'subsystem factory returned an invalid system', report)
    return system


def _embed(sub, labels, layout):
    # 0 is the subsystem's infinity, 1..8h map onto ``labels`` in order
    mapping = [layout.infinity] + list(labels)
    return [canonicalize(block.relabel(mapping)) for block in sub.blocks]


def compose_star(s, h, subsystem_factory=cyclic_4cs):
    """
    Compose ``s`` systems of order ``1+8h`` sharing one point with the
    families ``[A_p, A_q]``, ``p < q``, into a system of order ``1+8hs``.

    Returns the system (with block provenance) and its :class:`PartLayout`.
    """
    if s < 2:
        raise CaseNotApplicable('splus1', 'the star composition needs s >= 2, got %r' % (s, ))
    params = derive_params(s, h)
    layout = PartLayout.contiguous(s, 8 * h)
    sub = _subsystem(subsystem_factory, h)

    blocks, provenance = [], []
    for i in range(1, s + 1):
        embedded = _embed(sub, layout.part(i), layout)
        blocks.extend(embedded)
        provenance.extend([Origin('sub', i)] * len(embedded))
    for p, q in combinations(range(1, s + 1), 2):
        family = bipartite_family(layout.part(p), layout.part(q))
        blocks.extend(canonicalize(b) for b in family)
        provenance.extend([Origin('fam', (p, q))] * len(family))

    logger.debug('star composition s=%d h=%d: v=%d, %d blocks', s, h, params.v, len(blocks))
    return CycleSystem(params.v, tuple(blocks), tuple(provenance)), layout


def compose_half(s, h, subsystem_factory=cyclic_4cs):
    """
    Split each of ``s`` parts of size ``8h`` into two halves ``A_i, A_{i+1}``
    (``i`` odd) of size ``4h``. Each ``A_i ∪ A_{i+1} ∪ {∞}`` carries a system
    of order ``1+8h``; every other pair of halves is joined by ``[A_p, A_q]``.

    Returns the system, its :class:`PartLayout` and the list ``F`` of joined
    pairs.
    """
    if s < 3:
        raise CaseNotApplicable('high', 'the half-part composition needs s >= 3, got %r' % (s, ))
    params = derive_params(s, h)
    layout = PartLayout.contiguous(2 * s, 4 * h)
    sub = _subsystem(subsystem_factory, h)
    matched = set(one_factor(s))
    F = tuple(pair for pair in combinations(range(1, 2 * s + 1), 2) if pair not in matched)

    blocks, provenance = [], []
    for i in range(1, 2 * s, 2):
        embedded = _embed(sub, list(layout.part(i)) + list(layout.part(i + 1)), layout)
        blocks.extend(embedded)
        provenance.extend([Origin('sub', i)] * len(embedded))
    for p, q in F:
        family = bipartite_family(layout.part(p), layout.part(q))
        blocks.extend(canonicalize(b) for b in family)
        provenance.extend([Origin('fam', (p, q))] * len(family))

    logger.debug('half-part composition s=%d h=%d: v=%d, %d families, %d blocks',
                 s, h, params.v, len(F), len(blocks))
    return CycleSystem(params.v, tuple(blocks), tuple(provenance)), layout, F
