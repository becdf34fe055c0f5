from itertools import combinations

import pytest

from levelrank.abacus import ChargedMultipartition, big_upsilon, m_core
from levelrank.blocks import (BlockKey, UglovDatum, block_key, blocks_of, residues,
                              uglov_image, verify_uglov)
from levelrank.partition import Multipartition, Partition, enum_partitions

from oracles import content_residues


def cm(comps, charges):
    return ChargedMultipartition(Multipartition(comps), tuple(charges))


def test_residue_examples():
    assert residues(cm([(2, 1)], [0]), 3).counts == (1, 1, 1)
    assert residues(cm([(), ()], [4, 1]), 5).counts == (0,) * 5
    assert residues(cm([(3,)], [0]), 3) == residues(cm([(1, 1, 1)], [0]), 3)


def test_residues_match_content_oracle():
    for n in range(7):
        for p in enum_partitions(n):
            for q in enum_partitions(6 - n if n <= 6 else 0):
                for e in (1, 2, 3, 5):
                    x = cm([p, q], [1, -2])
                    r = residues(x, e)
                    assert list(r.counts) == content_residues([p, q], [1, -2], e)
                    assert r.total == x.size


def test_block_key_examples():
    assert block_key(cm([(3,)], [0]), 3) == block_key(cm([(2, 1)], [0]), 3)
    assert block_key(cm([(3,)], [0]), 3) != block_key(cm([(2,)], [0]), 3)
    a = cm([(1,), (), (), ()], [0, 1, 0, 1])
    b = cm([(), (), (1,), ()], [0, 1, 0, 1])
    assert block_key(a, 3) == block_key(b, 3)
    assert block_key(a, 3).residues.counts == (1, 0, 0)


def test_shifting_charge_by_e_keeps_key():
    x = cm([(2, 1), (3,)], [1, 2])
    for e in (2, 3, 4):
        assert block_key(x, e) == block_key(cm(x.components, [1 + e, 2 - 2 * e]), e)


def test_blocks_of_examples():
    (only,) = blocks_of(0, 3, 2, (0, 0, 0))
    assert only.members == (Multipartition.empty(3),)
    sizes = [len(b) for b in blocks_of(1, 4, 3, (0, 1, 0, 1))]
    assert sizes == [2, 2]
    first = blocks_of(1, 4, 3, (0, 1, 0, 1))[0].members
    assert first == (Multipartition([(1,), (), (), ()]), Multipartition([(), (), (1,), ()]))
    (one,) = blocks_of(2, 1, 2, (0,))
    assert set(one.members) == {Multipartition([(2,)]), Multipartition([(1, 1)])}


def test_nakayama_oracle_level_one():
    for n in range(13):
        ps = enum_partitions(n)
        for e in range(1, 6):
            cores = {p: m_core(p, e) for p in ps}
            for s in (-2, 0, 3):
                keys = {p: block_key(cm([p], [s]), e) for p in ps}
                for p, q in combinations(ps, 2):
                    assert (keys[p] == keys[q]) == (cores[p] == cores[q])


def test_blocks_refine_size_and_partition_everything():
    for N in range(5):
        for charge in ((0, 0), (0, 1), (2, 5)):
            blocks = blocks_of(N, 2, 3, charge)
            members = [mp for b in blocks for mp in b.members]
            assert len(members) == len(set(members))
            assert all(mp.size == N for mp in members)
            assert len({b.key for b in blocks}) == len(blocks)


def test_uglov_datum_validation():
    key = block_key(cm([(1,)], [2]), 3)
    UglovDatum(1, (2,), key)
    with pytest.raises(ValueError):
        UglovDatum(2, (2,), key)
    with pytest.raises(ValueError):
        UglovDatum(1, (1,), key)


def test_uglov_image_level_one():
    p = Partition((8, 6, 1))
    datum = UglovDatum(15, (2,), block_key(cm([p], [2]), 3))
    image = uglov_image(1, 3, datum)
    assert image.size == 2 and image.charge == (3, 0, -1)
    assert image.block == block_key(big_upsilon(3, p, 2), 1)


def test_uglov_image_empty():
    datum = UglovDatum(0, (1, 0), block_key(cm([(), ()], [1, 0]), 3))
    image = uglov_image(2, 3, datum)
    assert image.size == 0
    (block,) = blocks_of(0, 3, 2, image.charge)
    assert block.members == (Multipartition.empty(3),)


def test_uglov_image_round_trip_l3_m2():
    for block in blocks_of(2, 3, 2, (0, 0, 0)):
        datum = UglovDatum(2, (0, 0, 0), block.key)
        image = uglov_image(3, 2, datum)
        assert uglov_image(2, 3, image) == datum


def test_uglov_image_injective_on_blocks():
    for charge in ((0, 0), (1, 2), (0, 2)):
        for K in range(4):
            images = [uglov_image(2, 3, UglovDatum(K, charge, b.key))
                      for b in blocks_of(K, 2, 3, charge)]
            assert len(set(images)) == len(images)


@pytest.mark.parametrize("l, m, kmax, window", [(1, 2, 4, 1), (2, 3, 4, 3), (3, 3, 3, 3)])
def test_verify_uglov(l, m, kmax, window):
    records = verify_uglov(l, m, kmax, window)
    assert records and all(r["status"] == "PASS" for r in records)
    assert all(r["onto"] and r["round_trip"] for r in records)


def test_verify_uglov_level_one_is_core_classes():
    records = verify_uglov(1, 2, 4, 1)
    for K in range(5):
        ps = enum_partitions(K)
        n_blocks = sum(1 for r in records if r["K"] == K)
        assert n_blocks == len({m_core(p, 2) for p in ps})


def test_block_key_json_round_trip():
    key = block_key(cm([(2, 1), (1,)], [0, 2]), 3)
    assert BlockKey.from_json(key.to_json()) == key
