"""
Decompositions of ``K_{2s} - I`` into triangles and quadrilaterals, where
``I = {(1,2), (3,4), ..., (2s-1,2s)}``. Vertex ``2p-1`` and ``2p`` form part
``p``.

Up to ``DIRECT_MAX_S`` parts :func:`decompose` runs a backtracking search on
``K_{2s} - I`` itself. Beyond that it first covers the edges of ``K_s`` on the
part indices with cliques of 2 to 5 parts; every clique of ``m`` parts spans a
copy of ``K_{2m} - I``, decomposed by the direct search, and the copies
together decompose ``K_{2s} - I``.

:func:`enumerate_decompositions` is an independent exact cover enumeration
used to check :func:`decompose` on small instances.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Tuple

import networkx as nx

from .core import edge
from .exceptions import CaseNotApplicable, DecompositionInfeasible, OracleScaleExceeded

logger = logging.getLogger('fourcycle')

ORACLE_MAX_S = 4
DIRECT_MAX_S = 8
CLIQUE_SIZES = (4, 3, 5, 2)


def one_factor(s):
    return [(i, i + 1) for i in range(1, 2 * s, 2)]


def cycle_edges(cycle):
    return [edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def max_triangle_quadruples(s):
    return (s * s - s) // 6


@dataclass(frozen=True)
class Decomposition:
    s: int
    t: int
    triangles: Tuple[Tuple[int, int, int], ...]
    quads: Tuple[Tuple[int, int, int, int], ...]

    def cycles(self):
        """ ``(m, C_m)``: the triangles are ``C_1..C_4t``, the quadrilaterals follow. """
        return enumerate(self.triangles + self.quads, 1)

    def edges(self):
        return [e for _, cycle in self.cycles() for e in cycle_edges(cycle)]

    def key(self):
        return frozenset(frozenset(cycle_edges(c)) for _, c in self.cycles())


def triangle_quad_counts(s, t):
    """
    Split the ``2s^2 - 2s`` edges of ``K_{2s} - I`` into ``4t`` triangles and
    ``(s^2-s)/2 - 3t`` quadrilaterals.
    """
    if s < 3:
        raise CaseNotApplicable('high', 'triangle/quadrilateral split needs s >= 3, got %r' % (s, ))
    if not isinstance(t, int) or not 1 <= t <= max_triangle_quadruples(s):
        raise CaseNotApplicable('high', 't must be an integer in 1..(s^2-s)/6, got %r' % (t, ), {'s': s})
    n3, n4 = 4 * t, (s * s - s) // 2 - 3 * t
    assert 3 * n3 + 4 * n4 == 2 * s * s - 2 * s
    return n3, n4


def complement_graph(s):
    """ ``K_{2s}`` on ``1..2s`` with the edges of ``I`` removed. """
    graph = nx.complete_graph(range(1, 2 * s + 1))
    graph.remove_edges_from(one_factor(s))
    return graph


class _Search(object):
    def __init__(self, graph, n3, n4):
        self.graph = graph
        self.budget = [n3, n4]
        self.triangles = []
        self.quads = []
        self.dead = set()
        self.steps = 0

    def _state(self):
        return frozenset(edge(u, w) for u, w in self.graph.edges()), self.budget[0]

    def _candidates(self, u, v):
        graph = self.graph
        if self.budget[0]:
            for w in sorted(set(graph[u]) & set(graph[v])):
                yield (u, v, w)
        if self.budget[1]:
            for w in sorted(graph[v]):
                if w == u:
                    continue
                for x in sorted(graph[w]):
                    if x not in (u, v) and graph.has_edge(x, u):
                        yield (u, v, w, x)

    def run(self):
        if not self.graph.number_of_edges():
            return True
        state = self._state()
        if state in self.dead:
            return False

        u, v = min(edge(a, b) for a, b in self.graph.edges())
        for cycle in self._candidates(u, v):
            self.steps += 1
            edges = cycle_edges(cycle)
            slot = 0 if len(cycle) == 3 else 1
            chosen = self.triangles if slot == 0 else self.quads

            self.graph.remove_edges_from(edges)
            self.budget[slot] -= 1
            chosen.append(cycle)
            if self.run():
                return True
            chosen.pop()
            self.budget[slot] += 1
            self.graph.add_edges_from(edges)

        self.dead.add(state)
        return False


def _waste(size):
    # index pairs of a clique that cannot end up in triangles
    return size * (size - 1) // 2 - 3 * max_triangle_quadruples(size)


class _CliqueCover(object):
    """
    Cover the edges of ``K_s`` on ``1..s`` with cliques of ``CLIQUE_SIZES``
    vertices, wasting at most ``slack`` pairs.
    """
    def __init__(self, s, slack):
        self.graph = nx.complete_graph(range(1, s + 1))
        self.slack = slack
        self.cliques = []
        self.dead = set()
        self.steps = 0

    def _candidates(self, u, v):
        graph = self.graph
        common = sorted(set(graph[u]) & set(graph[v]))
        for size in CLIQUE_SIZES:
            if _waste(size) > self.slack:
                continue
            for rest in combinations(common, size - 2):
                if all(graph.has_edge(x, y) for x, y in combinations(rest, 2)):
                    yield tuple(sorted((u, v) + rest))

    def _branch(self):
        # the pair with the fewest cliques left, ties to the smallest pair
        best = None
        for pair in sorted(edge(a, b) for a, b in self.graph.edges()):
            options = list(self._candidates(*pair))
            if best is None or len(options) < len(best):
                best = options
                if not best:
                    break
        return best

    def run(self):
        graph = self.graph
        if not graph.number_of_edges():
            return True
        # cliques of 3 and 4 take 2 or 3 pairs at a vertex, never 1
        if not self.slack and any(degree == 1 for _, degree in graph.degree()):
            return False
        state = frozenset(edge(a, b) for a, b in graph.edges()), self.slack
        if state in self.dead:
            return False

        for clique in self._branch():
            self.steps += 1
            pairs = list(combinations(clique, 2))
            graph.remove_edges_from(pairs)
            self.slack -= _waste(len(clique))
            self.cliques.append(clique)
            if self.run():
                return True
            self.cliques.pop()
            self.slack += _waste(len(clique))
            graph.add_edges_from(pairs)

        self.dead.add(state)
        return False


def _all_quads(clique):
    # the four edges between parts p and q form the quadrilateral (2p-1, 2q-1, 2p, 2q)
    return [(2 * p - 1, 2 * q - 1, 2 * p, 2 * q) for p, q in combinations(clique, 2)]


def _lift(cycle, clique):
    # vertex 2a-1 / 2a of the local K_{2m} - I is vertex 2p-1 / 2p of part p = clique[a-1]
    return tuple(2 * clique[(x + 1) // 2 - 1] - x % 2 for x in cycle)


def _compose(s, t):
    search = _CliqueCover(s, s * (s - 1) // 2 - 3 * t)
    if not search.run():
        return None
    logger.debug('covered K_%d with cliques of sizes %s after %d steps',
                 s, sorted(len(c) for c in search.cliques), search.steps)

    triangles, quads = [], []
    remaining = t
    for clique in search.cliques:
        share = min(max_triangle_quadruples(len(clique)), remaining)
        remaining -= share
        if not share:
            quads.extend(_all_quads(clique))
            continue
        local = decompose(len(clique), share)
        triangles.extend(_lift(c, clique) for c in local.triangles)
        quads.extend(_lift(c, clique) for c in local.quads)
    return Decomposition(s, t, tuple(sorted(triangles)), tuple(sorted(quads)))


def _direct(s, t, n3, n4):
    search = _Search(complement_graph(s), n3, n4)
    if not search.run():
        raise DecompositionInfeasible(
            'high', 'no decomposition of K_%d - I into %d triangles and %d quadrilaterals' % (2 * s, n3, n4),
            {'s': s, 't': t, 'steps': search.steps})
    logger.debug('decomposed K_%d - I (t=%d) after %d steps', 2 * s, t, search.steps)
    return Decomposition(s, t, tuple(search.triangles), tuple(search.quads))


@lru_cache(maxsize=None)
def decompose(s, t):
    """
    Divide ``K_{2s} - I`` into ``4t`` triangles and ``(s^2-s)/2 - 3t``
    quadrilaterals.

    Both searches always extend the lexicographically smallest open choice
    and try candidates in a fixed order, so the result is the same on every
    run.

    :arg s: half the number of vertices, ``s >= 3``
    :arg t: number of triangle quadruples, ``1 <= t <= (s^2-s)/6``
    """
    n3, n4 = triangle_quad_counts(s, t)
    if s > DIRECT_MAX_S:
        decomposition = _compose(s, t)
        if decomposition is not None:
            return decomposition
        logger.debug('no clique cover of K_%d leaves room for %d triangle quadruples', s, t)
    return _direct(s, t, n3, n4)


def _candidate_cycles(s):
    graph = complement_graph(s)
    vertices = sorted(graph)
    for a, b, c in combinations(vertices, 3):
        cycle = (a, b, c)
        if all(graph.has_edge(*e) for e in cycle_edges(cycle)):
            yield cycle
    for a, b, c, d in combinations(vertices, 4):
        # the three distinct 4-cycles on {a, b, c, d}
        for x, y, z in permutations((b, c, d)):
            if x > z:
                continue
            cycle = (a, x, y, z)
            if all(graph.has_edge(*e) for e in cycle_edges(cycle)):
                yield cycle


class ExactCoverOracle(object):
    """
    Enumerate every way to cover the edges of ``K_{2s} - I`` exactly once
    with ``n3`` triangles and ``n4`` quadrilaterals.
    """
    def __init__(self, s, n3, n4):
        self.s = s
        self.n3, self.n4 = n3, n4
        self.universe = frozenset(edge(u, w) for u, w in complement_graph(s).edges())
        self.membership = defaultdict(list)
        for cycle in _candidate_cycles(s):
            chunk = frozenset(cycle_edges(cycle))
            for e in chunk:
                self.membership[e].append((cycle, chunk))

    def solutions(self):
        yield from self._solve(frozenset(), [], self.n3, self.n4)

    def _solve(self, covered, selected, n3, n4):
        if covered == self.universe:
            yield list(selected)
            return
        # branch on the uncovered edge with the fewest candidates
        target = min(self.universe - covered, key=lambda e: (len(self.membership[e]), e))
        for cycle, chunk in self.membership[target]:
            if not covered.isdisjoint(chunk):
                continue
            if len(cycle) == 3 and n3 == 0 or len(cycle) == 4 and n4 == 0:
                continue
            selected.append(cycle)
            yield from self._solve(covered | chunk, selected,
                                   n3 - (len(cycle) == 3), n4 - (len(cycle) == 4))
            selected.pop()


def enumerate_decompositions(s, t, limit=1):
    if s > ORACLE_MAX_S:
        raise OracleScaleExceeded('high', 'exhaustive enumeration is limited to s <= %d, got %r' % (ORACLE_MAX_S, s))
    if limit < 1:
        raise CaseNotApplicable('high', 'limit must be positive, got %r' % (limit, ))
    n3, n4 = triangle_quad_counts(s, t)

    found = []
    seen = set()
    for cycles in ExactCoverOracle(s, n3, n4).solutions():
        decomposition = Decomposition(
            s, t,
            tuple(sorted(c for c in cycles if len(c) == 3)),
            tuple(sorted(c for c in cycles if len(c) == 4)))
        if decomposition.key() in seen:
            continue
        seen.add(decomposition.key())
        found.append(decomposition)
        if len(found) >= limit:
            break
    return found


def is_valid_decomposition(decomposition):
    """ ``None`` when ``decomposition`` satisfies every invariant, otherwise why not. """
    s, t = decomposition.s, decomposition.t
    n3, n4 = triangle_quad_counts(s, t)
    if (len(decomposition.triangles), len(decomposition.quads)) != (n3, n4):
        return 'expected %d triangles and %d quadrilaterals' % (n3, n4)
    expected = sorted(edge(u, w) for u, w in complement_graph(s).edges())
    if sorted(decomposition.edges()) != expected:
        return 'edges do not partition K_%d - I' % (2 * s, )
    return None
