import random

import pytest

from etw.bounds import bound_report, p_block, verify_structural_bounds
from etw.families import cycle, nonclosure_topminor_pair, path, theta, theta_bouquet
from etw.multigraph import Multigraph
from etw.widths import CostKind, width_exact
from helpers import mk, random_biconnected, random_connected_multigraph


def test_p_block_two_triangles():
    g = mk(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
    assert p_block(g) == 2


def test_p_block_theta5():
    # the single block has treewidth 1 but edge-degree 5
    assert width_exact(theta(5), CostKind.VC).value == 1
    assert p_block(theta(5)) == 5


def test_p_block_trees_and_empty():
    assert p_block(path(6)) == 1
    assert p_block(Multigraph(3)) == 0


def test_p_block_is_block_local():
    rng = random.Random(51)
    for _ in range(40):
        g = random_connected_multigraph(rng, rng.randint(1, 8), max_mult=3)
        from etw.blocks import block_decomposition

        dec = block_decomposition(g)
        per_block = [p_block(b.graph) for b in dec.blocks]
        assert p_block(g) == max(per_block, default=0)


def test_bound_report_width6_host():
    host, _ = nonclosure_topminor_pair()
    rep = bound_report(host)
    assert rep.etw == 6
    assert all(rep.verdicts.values()), rep.verdicts


def test_bound_report_doubled_pair():
    rep = bound_report(cycle(2))
    assert (rep.tw, rep.pw, rep.cw, rep.etw) == (1, 1, 2, 2)
    assert rep.p_block == 2 and rep.max_edeg == 2
    assert all(rep.verdicts.values())


def test_bound_report_edgeless():
    rep = bound_report(Multigraph(4))
    assert (rep.tw, rep.pw, rep.cw, rep.etw, rep.p_block, rep.max_edeg) == (0,) * 6
    assert all(rep.verdicts.values())


def test_bound_report_witnesses_revalidate():
    from etw.widths import cost_profile

    rng = random.Random(52)
    for _ in range(25):
        g = random_connected_multigraph(rng, rng.randint(1, 7), max_mult=3)
        rep = bound_report(g)
        for name, cert in rep.witnesses.items():
            assert max(cost_profile(g, cert.witness, cert.kind), default=0) == cert.value


def test_structural_bounds_cycle_and_theta():
    sv = verify_structural_bounds(cycle(4))
    assert sv.rooted_ok and sv.rooted_bound == 8
    assert sv.block_ok
    sv = verify_structural_bounds(theta(3))
    assert sv.rooted_ok and sv.rooted_bound == 15
    assert sv.block_ok


def test_structural_bounds_cactus_chain():
    # three triangles in a row: per-block width 2, bound 2^2 + 2*2
    g = mk(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6), (4, 6)])
    sv = verify_structural_bounds(g)
    assert sv.rooted_ok is None  # not biconnected
    assert sv.block_layout_bound == 8
    assert sv.block_layout_cost <= 8 and sv.block_ok


def test_structural_bounds_reject_disconnected():
    with pytest.raises(ValueError):
        verify_structural_bounds(mk(4, [(0, 1), (2, 3)]))


def test_structural_bounds_random_biconnected():
    rng = random.Random(53)
    for _ in range(10):
        g = random_biconnected(rng, rng.randint(3, 7))
        sv = verify_structural_bounds(g)
        assert sv.rooted_ok and sv.block_ok


def test_theta_bouquet_stays_flat():
    g = theta_bouquet(2)
    assert p_block(g) == 3
    rep = bound_report(g)
    assert all(rep.verdicts.values())
    assert rep.etw <= 3**4 + 2 * 3**2
