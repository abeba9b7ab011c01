from collections import Counter

from pytest import mark, raises

from fourcycle import (
    build, case_for, chromatic_bounds, colour_case_base, colour_case_high,
    colour_case_mid, colour_case_splus1, derive_params, spectrum_range, verify_all,
)
from fourcycle.colouring import mid_case_pairs, residue_colour
from fourcycle.core import ConstructionCase, Origin
from fourcycle.exceptions import CaseNotApplicable, ImproperlyConfigured, OutOfSpectrum
from fourcycle.verifier import vertex_colour_counts


def acceptance_grid():
    for s in range(1, 6):
        for h in range(1, 4):
            for c in spectrum_range(s, h):
                yield s, h, c


def family_colours(colsys):
    colours = {}
    for origin, colour in zip(colsys.system.provenance, colsys.colouring.colours):
        colours.setdefault(str(origin), set()).add(colour)
    return colours


@mark.parametrize('s, h, expected', [(2, 1, [2, 3]), (3, 1, [3, 4, 5, 6, 7]), (1, 1, [1]), (5, 2, list(range(5, 19)))])
def test_spectrum_range(s, h, expected):
    assert expected == list(spectrum_range(s, h))


def test_spectrum_starts_at_s():
    # type s needs s colours at a vertex, so no c below s is possible
    for s in range(1, 13):
        assert s == spectrum_range(s, 1)[0]


def test_spectrum_range_rejects_zero():
    with raises(ImproperlyConfigured):
        spectrum_range(0, 1)


@mark.parametrize('c, case', [(3, 'base'), (4, 'splus1'), (5, 'mid'), (6, 'mid'), (7, 'high')])
def test_case_for_s_3(c, case):
    assert ConstructionCase(case) is case_for(3, c)


def test_s_2_has_no_mid_or_high_case():
    assert [ConstructionCase.BASE, ConstructionCase.SPLUS1] == [case_for(2, c) for c in spectrum_range(2, 1)]
    with raises(CaseNotApplicable):
        colour_case_mid(2, 1, 4)
    with raises(CaseNotApplicable):
        colour_case_high(2, 1, 4)


def test_residue_colour_keeps_colours_one_based():
    assert [3, 1, 2, 3] == [residue_colour(n, 2) for n in (3, 4, 5, 6)]


def test_base_case_single_colour():
    colsys = colour_case_base(1, 1)
    assert 9 == len(colsys.system)
    assert {1} == set(colsys.colouring.colours)


def test_base_case_colours_starter_orbits():
    colsys = colour_case_base(2, 1)
    colours = family_colours(colsys)
    assert {'starter:1': {1}, 'starter:2': {2}} == colours
    for counts in vertex_colour_counts(colsys):
        assert {1: 4, 2: 4} == dict(counts)


def test_base_case_groups_h_starters_per_colour():
    colours = family_colours(colour_case_base(2, 2))
    assert {1} == colours['starter:1'] == colours['starter:2']
    assert {2} == colours['starter:3'] == colours['starter:4']


def test_splus1_case_for_s_2():
    colours = family_colours(colour_case_splus1(2, 1))
    assert {'sub:1': {1}, 'sub:2': {2}, 'fam:1-2': {3}} == colours


def test_splus1_case_for_s_3():
    colours = family_colours(colour_case_splus1(3, 1))
    assert {3} == colours['fam:1-2']
    assert {4} == colours['fam:1-3']
    assert {1} == colours['fam:2-3']


def test_splus1_case_needs_two_parts():
    with raises(CaseNotApplicable):
        colour_case_splus1(1, 1)


@mark.parametrize('s, h', [(2, 1), (3, 1), (4, 2)])
def test_splus1_vertex_colours(s, h):
    colsys = colour_case_splus1(s, h)
    for counts in vertex_colour_counts(colsys):
        assert s == len(counts)
        assert {4 * h} == set(counts.values())


def test_mid_case_recolours_one_family():
    colsys = colour_case_mid(3, 1, 5)
    colours = family_colours(colsys)
    assert {5} == colours['fam:1-2']
    assert 5 == len(set(colsys.colouring.colours))


def test_mid_case_at_its_ceiling():
    colsys = colour_case_mid(3, 1, 6)
    assert 6 == len(set(colsys.colouring.colours))
    for counts in vertex_colour_counts(colsys):
        assert {4} == set(counts.values())
        assert 3 == len(counts)


@mark.parametrize('s', range(3, 9))
def test_mid_case_pairs_keep_colour_s_plus_1(s):
    count = (s * s + s) // 2 - s - 1
    pairs = mid_case_pairs(s, count)
    assert count == len(set(pairs))
    everything = {(p, q) for p in range(1, s + 1) for q in range(p + 1, s + 1)}
    untouched = everything - set(pairs)
    assert any((p + q) % (s + 1) == 0 for p, q in untouched)


def test_mid_case_pairs_are_lexicographic():
    assert [(1, 2), (1, 3), (1, 4)] == mid_case_pairs(5, 3)


@mark.parametrize('c', [4, 7])
def test_mid_case_range(c):
    with raises(CaseNotApplicable):
        colour_case_mid(3, 1, c)


def test_high_case_for_s_3():
    colsys = colour_case_high(3, 1, 7)
    colours = family_colours(colsys)
    assert {'sub:1': {1}, 'sub:3': {2}, 'sub:5': {3}} == {k: v for k, v in colours.items() if k.startswith('sub')}
    assert {4, 5, 6, 7} == set().union(*(v for k, v in colours.items() if k.startswith('fam')))
    # each triangle class holds three families
    assert {4: 3, 5: 3, 6: 3, 7: 3} == Counter(next(iter(v)) for k, v in colours.items() if k.startswith('fam'))


def test_high_case_for_s_4():
    colsys = colour_case_high(4, 1, 11)
    per_class = Counter(next(iter(v)) for k, v in family_colours(colsys).items() if k.startswith('fam'))
    assert [3] * 4 + [4] * 3 == [per_class[c] for c in range(5, 12)]


def test_high_case_vertex_classes():
    colsys = colour_case_high(3, 1, 7)
    for counts in vertex_colour_counts(colsys):
        assert 3 == len(counts)
        assert {4} == set(counts.values())


@mark.parametrize('c', [6, 8])
def test_high_case_range(c):
    with raises(CaseNotApplicable):
        colour_case_high(3, 1, c)


def test_build_dispatches_base_case():
    colsys = build(2, 1, 2)
    assert ConstructionCase.BASE is colsys.construction_case
    assert 17 == colsys.params.v


def test_build_high_case_with_h_2():
    colsys = build(3, 2, 7)
    assert ConstructionCase.HIGH is colsys.construction_case
    assert 49 == colsys.params.v
    assert verify_all(colsys).passed


@mark.parametrize('s, c', [(9, 52), (9, 57), (10, 56), (10, 70)])
def test_high_case_with_many_parts(s, c):
    colsys = build(s, 1, c)
    assert ConstructionCase.HIGH is colsys.construction_case
    assert verify_all(colsys).passed


@mark.parametrize('s, h, c', [(2, 1, 4), (2, 1, 1), (3, 1, 8)])
def test_build_rejects_c_outside_spectrum(s, h, c):
    with raises(OutOfSpectrum):
        build(s, h, c)


@mark.parametrize('s, h, c', list(acceptance_grid()))
def test_every_colour_count_in_spectrum_verifies(s, h, c):
    colsys = build(s, h, c)
    report = verify_all(colsys)
    assert report.passed, report.summary()
    assert c == len(set(colsys.colouring.colours))
    assert derive_params(s, h) == colsys.params


@mark.parametrize('s', range(1, 6))
@mark.parametrize('h', range(1, 4))
def test_lower_index_is_s(s, h):
    colsys = build(s, h, s)
    assert verify_all(colsys).passed
    assert s == chromatic_bounds(s, h)[0]


@mark.parametrize('s, h, expected', [(2, 1, (2, 3, 3)), (3, 1, (3, 7, 8)), (1, 1, (1, 1, 1))])
def test_chromatic_bounds(s, h, expected):
    assert expected == chromatic_bounds(s, h)


def test_build_logs_the_result(caplog):
    caplog.set_level('INFO', logger='fourcycle')
    build(2, 1, 3)
    assert any(
        logger == 'fourcycle' and message.startswith('built splus1 colouring s=2 h=1 c=3')
        for logger, _, message in caplog.record_tuples
    )


def test_provenance_origins_are_known():
    colsys = build(4, 1, 12)
    assert {'sub', 'fam'} == {origin.kind for origin in colsys.system.provenance}
    assert Origin('sub', 7) in colsys.system.provenance
