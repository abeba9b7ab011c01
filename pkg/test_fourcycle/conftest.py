import logging

from pytest import fixture

from fourcycle import Colouring, ColouredSystem, CycleSystem, build


def mutate(colsys, blocks=None, colours=None, c=None):
    """ Copy ``colsys`` with some of its blocks or colours replaced. """
    blocks = colsys.system.blocks if blocks is None else tuple(blocks)
    colours = colsys.colouring.colours if colours is None else tuple(colours)
    return ColouredSystem(
        colsys.params,
        CycleSystem(colsys.system.order, blocks),
        Colouring(colours, colsys.c if c is None else c),
        colsys.construction_case,
    )


def blocks_through(colsys, vertex):
    return [i for i, block in enumerate(colsys.system.blocks) if vertex in block.labels]


def swap_pair(colsys, vertex=0):
    """ Two blocks through ``vertex`` with different colours. """
    colours = colsys.colouring.colours
    through = blocks_through(colsys, vertex)
    first = through[0]
    second = next(i for i in through if colours[i] != colours[first])
    return first, second


@fixture
def bicoloured():
    return build(2, 1, 2)


@fixture
def high_case():
    return build(3, 1, 7)


@fixture(params=[(2, 1, 2), (3, 1, 7)], ids=['s2c2', 's3c7'])
def built(request):
    return build(*request.param)


@fixture
def debug_log(caplog):
    caplog.set_level(logging.DEBUG, logger='fourcycle')
    return caplog
