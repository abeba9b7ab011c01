from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from .exceptions import ImproperlyConfigured, MalformedBlock


def edge(x, y):
    return (x, y) if x < y else (y, x)


@dataclass(frozen=True)
class Cycle4:
    """
    The 4-cycle ``(a, b, c, d)`` with edges ``ab``, ``bc``, ``cd`` and ``da``.
    The diagonals ``ac`` and ``bd`` are not edges.
    """
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        labels = self.labels
        if any(not isinstance(x, int) or isinstance(x, bool) for x in labels):
            raise MalformedBlock('block labels must be integers: %r' % (labels, ))
        if min(labels) < 0:
            raise MalformedBlock('block labels must be non-negative: %r' % (labels, ))
        if len(set(labels)) != 4:
            raise MalformedBlock('block labels must be distinct: %r' % (labels, ))

    @classmethod
    def of(cls, labels):
        if isinstance(labels, cls):
            return labels
        labels = tuple(labels)
        if len(labels) != 4:
            raise MalformedBlock('a block has exactly 4 labels, got %r' % (labels, ))
        return cls(*labels)

    @property
    def labels(self):
        return (self.a, self.b, self.c, self.d)

    def edges(self):
        return (edge(self.a, self.b), edge(self.b, self.c),
                edge(self.c, self.d), edge(self.d, self.a))

    def relabel(self, mapping):
        return Cycle4(*(mapping[x] for x in self.labels))

    def translate(self, shift, modulus):
        return Cycle4(*((x + shift) % modulus for x in self.labels))

    def __iter__(self):
        return iter(self.labels)


def canonicalize(block):
    """
    Pick the representative of the dihedral orbit of ``block`` that starts at
    its smallest label and continues towards the smaller of that label's two
    cycle neighbours.
    """
    labels = Cycle4.of(block).labels
    start = labels.index(min(labels))
    after, before = labels[(start + 1) % 4], labels[(start - 1) % 4]
    step = 1 if after < before else -1
    return Cycle4(*(labels[(start + step * i) % 4] for i in range(4)))


@dataclass(frozen=True)
class Origin:
    """
    Where a block comes from: a starter orbit (``starter``, i), a subsystem
    (``sub``, i) or a bipartite family (``fam``, (p, q)).
    """
    kind: str
    key: object

    def __str__(self):
        if self.kind == 'fam':
            return 'fam:%d-%d' % self.key
        return '%s:%d' % (self.kind, self.key)

    @classmethod
    def parse(cls, tag):
        kind, _, key = tag.partition(':')
        if kind == 'fam':
            p, _, q = key.partition('-')
            return cls(kind, (int(p), int(q)))
        if kind in ('starter', 'sub'):
            return cls(kind, int(key))
        raise ValueError('unknown block origin %r' % tag)


@dataclass(frozen=True)
class CycleSystem:
    order: int
    blocks: Tuple[Cycle4, ...]
    provenance: Optional[Tuple[Origin, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, 'blocks', tuple(Cycle4.of(b) for b in self.blocks))
        if self.provenance is not None:
            object.__setattr__(self, 'provenance', tuple(self.provenance))
            if len(self.provenance) != len(self.blocks):
                raise ImproperlyConfigured('provenance must be parallel to blocks')

    @property
    def expected_block_count(self):
        return self.order * (self.order - 1) // 8

    def __len__(self):
        return len(self.blocks)


@dataclass(frozen=True)
class Colouring:
    colours: Tuple[int, ...]
    c: int

    def __post_init__(self):
        object.__setattr__(self, 'colours', tuple(self.colours))
        if self.c < 1:
            raise ImproperlyConfigured('a colouring uses at least one colour')
        for index, colour in enumerate(self.colours):
            if not 1 <= colour <= self.c:
                raise ImproperlyConfigured(
                    'block %d has colour %r outside 1..%d' % (index, colour, self.c))

    def __len__(self):
        return len(self.colours)


@dataclass(frozen=True)
class Params:
    s: int
    h: Optional[int]
    k: int
    v: int
    q: int
    r: int
    blocks_total: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'blocks_total', self.k * self.v)


def derive_params(s, h):
    if s < 1 or h < 1:
        raise ImproperlyConfigured('s and h must be positive, got s=%r h=%r' % (s, h))
    k = h * s
    return Params(s=s, h=h, k=k, v=1 + 8 * k, q=4 * h, r=0)


def order_params(v, s):
    """
    Parameters of an order-``v`` system seen with ``s`` colours per vertex,
    without assuming ``s | k``; ``h`` is ``None`` when ``s`` does not divide
    ``k``.
    """
    if s < 1:
        raise ImproperlyConfigured('s must be positive, got %r' % (s, ))
    if v < 9 or v % 8 != 1:
        raise ImproperlyConfigured('a 4-cycle system needs v = 1+8k with k >= 1, got %r' % (v, ))
    k = (v - 1) // 8
    q, r = divmod(4 * k, s)
    return Params(s=s, h=k // s if k % s == 0 else None, k=k, v=v, q=q, r=r)


class ConstructionCase(str, Enum):
    BASE = 'base'
    SPLUS1 = 'splus1'
    MID = 'mid'
    HIGH = 'high'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ColouredSystem:
    params: Params
    system: CycleSystem
    colouring: Colouring
    construction_case: ConstructionCase

    def __post_init__(self):
        if len(self.colouring) != len(self.system.blocks):
            raise ImproperlyConfigured(
                'colouring has %d entries for %d blocks' % (len(self.colouring), len(self.system.blocks)))
        object.__setattr__(self, 'construction_case', ConstructionCase(self.construction_case))

    @property
    def c(self):
        return self.colouring.c
