import numpy as np
import pytest

from mergedsub.commuting import bipartition_vector, common_eigenbasis, commutes, snap
from mergedsub.errors import NotCommutingError, OrderMismatchError, RegularityError
from mergedsub.graph import (
    circulant,
    complement,
    complete_bipartite,
    cycle,
    empty,
    kpp_matching,
    path,
    petersen,
    star,
)
from mergedsub.numeric import eigenvalues_of


def test_snap():
    assert snap(2.0000000000001) == 2 and isinstance(snap(3 - 1e-12), int)
    assert isinstance(snap(2.5), float)


def test_commutes():
    assert commutes(cycle(6), circulant(6, [2]))
    assert not commutes(path(4), cycle(4))
    with pytest.raises(OrderMismatchError):
        commutes(cycle(4), cycle(5))


@pytest.mark.parametrize(
    "g, h",
    [
        (petersen(), complement(petersen())),
        (cycle(6), circulant(6, [2, 3])),
        (complete_bipartite(3, 3), kpp_matching(3)),
        (cycle(5), empty(5)),
    ],
)
def test_pairing_invariants(g, h):
    ps = common_eigenbasis(g, h)
    assert ps.pairs[0] == (0, 0)
    assert np.allclose(sorted(ps.first), eigenvalues_of(g), atol=1e-9)
    assert np.allclose(sorted(ps.second), eigenvalues_of(h), atol=1e-9)
    assert np.allclose(ps.basis.T @ ps.basis, np.identity(g.order), atol=1e-10)


def test_anchor_comes_second():
    ps = common_eigenbasis(complete_bipartite(3, 3), kpp_matching(3), anchors=[bipartition_vector(3)])
    assert ps.pairs[1] == (6, 2)


def test_errors():
    with pytest.raises(NotCommutingError):
        common_eigenbasis(path(4), cycle(4))
    with pytest.raises(RegularityError):
        common_eigenbasis(star(3), star(3))
    # adjacency pairing works without regularity
    ps = common_eigenbasis(star(3), star(3), kind="adjacency")
    assert ps.first == ps.second
