"""
Equitable ``c``-colourings of type ``s`` of 4-cycle systems of order
``v = 1 + 8hs``, one construction per range of ``c``:

* ``c = s``: cyclic system, one colour per ``h`` starter orbits
* ``c = s + 1``: star composition, families coloured by ``p + q mod s+1``
* ``s + 2 <= c <= (s^2+s)/2``: star composition with whole families recoloured
* ``(s^2+s)/2 < c <= (2s^2+s)/3``: half-part composition coloured along a
  triangle/quadrilateral decomposition of ``K_{2s} - I``
"""
import logging
from itertools import combinations

from .constructors import compose_half, compose_star, cyclic_4cs
from .core import Colouring, ColouredSystem, ConstructionCase, derive_params
from .decomposer import cycle_edges, decompose
from .exceptions import CaseNotApplicable, ConstructionInfeasible, ImproperlyConfigured, OutOfSpectrum
from .verifier import upper_bound

logger = logging.getLogger('fourcycle')


def spectrum_range(s, h):
    if s < 1 or h < 1:
        raise ImproperlyConfigured('s and h must be positive, got s=%r h=%r' % (s, h))
    return range(s, (2 * s * s + s) // 3 + 1)


def _mid_ceiling(s):
    return (s * s + s) // 2


def case_for(s, c):
    if c == s:
        return ConstructionCase.BASE
    if c == s + 1:
        return ConstructionCase.SPLUS1
    if s + 2 <= c <= _mid_ceiling(s):
        return ConstructionCase.MID
    if _mid_ceiling(s) < c <= (2 * s * s + s) // 3:
        return ConstructionCase.HIGH
    raise OutOfSpectrum('dispatch', 'c=%r is outside %d..%d' % (c, s, (2 * s * s + s) // 3), {'s': s})


def chromatic_bounds(s, h):
    """
    ``(lower, constructed, proved)``: the lower ``s``-chromatic index ``s``,
    the largest ``c`` the constructions reach and the floor of the proved
    upper bound on the upper ``s``-chromatic index.
    """
    params = derive_params(s, h)
    spectrum = spectrum_range(s, h)
    return spectrum[0], spectrum[-1], int(upper_bound(params.v, s))


def residue_colour(n, s):
    """ The representative of ``n`` modulo ``s+1`` in ``1..s+1``. """
    return (n - 1) % (s + 1) + 1


def _coloured(params, system, colours, c, case):
    colsys = ColouredSystem(params, system, Colouring(tuple(colours), c), case)
    logger.debug('%s colouring of 4CS(%d) with %d colours over %d blocks',
                 case, params.v, c, len(colours))
    return colsys


def colour_case_base(s, h):
    params = derive_params(s, h)
    system = cyclic_4cs(params.k)
    colours = [(origin.key + h - 1) // h for origin in system.provenance]
    return _coloured(params, system, colours, s, ConstructionCase.BASE)


def _splus1_colour(origin, s):
    if origin.kind == 'sub':
        return origin.key
    p, q = origin.key
    return residue_colour(p + q, s)


def colour_case_splus1(s, h):
    if s < 2:
        raise CaseNotApplicable('splus1', 'c = s+1 needs at least two parts, got s=%r' % (s, ))
    params = derive_params(s, h)
    system, _ = compose_star(s, h)
    colours = [_splus1_colour(origin, s) for origin in system.provenance]
    return _coloured(params, system, colours, s + 1, ConstructionCase.SPLUS1)


def mid_case_pairs(s, count):
    """
    The ``count`` families to recolour, in lexicographic order, keeping the
    last pair with ``p + q ≡ 0 (mod s+1)`` so that colour ``s+1`` survives.
    """
    pairs = list(combinations(range(1, s + 1), 2))
    keep = [pair for pair in pairs if sum(pair) % (s + 1) == 0][-1:]
    candidates = [pair for pair in pairs if pair not in keep]
    if count > len(candidates):
        raise ConstructionInfeasible(
            'mid', 'cannot recolour %d of %d families and keep colour %d' % (count, len(pairs), s + 1))
    return candidates[:count]


def colour_case_mid(s, h, c):
    if s < 3 or not s + 2 <= c <= _mid_ceiling(s):
        raise CaseNotApplicable('mid', 'c=%r is outside %d..%d' % (c, s + 2, _mid_ceiling(s)), {'s': s})
    start = colour_case_splus1(s, h)
    fresh = {pair: s + 1 + l for l, pair in enumerate(mid_case_pairs(s, c - s - 1), 1)}
    colours = [
        fresh.get(origin.key, colour) if origin.kind == 'fam' else colour
        for origin, colour in zip(start.system.provenance, start.colouring.colours)
    ]
    logger.debug('recoloured families %s', sorted(fresh))
    return _coloured(start.params, start.system, colours, c, ConstructionCase.MID)


def colour_case_high(s, h, c):
    t = c - _mid_ceiling(s)
    if s < 3 or t < 1 or c > (2 * s * s + s) // 3:
        raise CaseNotApplicable('high', 'c=%r is outside %d..%d' % (c, _mid_ceiling(s) + 1, (2 * s * s + s) // 3),
                                {'s': s})
    params = derive_params(s, h)
    system, _, F = compose_half(s, h)
    decomposition = decompose(s, t)

    family_colour = {}
    for m, cycle in decomposition.cycles():
        for pair in cycle_edges(cycle):
            family_colour[pair] = s + m
    missing = [pair for pair in F if pair not in family_colour]
    if missing:
        raise ConstructionInfeasible('high', 'families without a decomposition cycle', missing)

    colours = [
        (origin.key + 1) // 2 if origin.kind == 'sub' else family_colour[origin.key]
        for origin in system.provenance
    ]
    return _coloured(params, system, colours, c, ConstructionCase.HIGH)


def build(s, h, c):
    """
    Build an equitable ``c``-colouring of type ``s`` of a 4-cycle system of
    order ``1 + 8hs``.

    :arg s: colours at every vertex
    :arg h: multiplier, ``k = hs``
    :arg c: total colours, ``s <= c <= floor((2s^2+s)/3)``
    """
    if c not in spectrum_range(s, h):
        raise OutOfSpectrum('build', 'c=%r is outside %d..%d' % (c, s, (2 * s * s + s) // 3), {'s': s, 'h': h})

    case = case_for(s, c)
    if case is ConstructionCase.BASE:
        colsys = colour_case_base(s, h)
    elif case is ConstructionCase.SPLUS1:
        colsys = colour_case_splus1(s, h)
    elif case is ConstructionCase.MID:
        colsys = colour_case_mid(s, h, c)
    else:
        colsys = colour_case_high(s, h, c)

    logger.info('built %s colouring s=%d h=%d c=%d (v=%d, %d blocks)',
                case, s, h, c, colsys.params.v, len(colsys.system))
    return colsys
