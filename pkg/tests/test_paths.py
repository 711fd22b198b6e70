import doctest
import math

import pytest

from qschroeder import paths
from qschroeder.paths import (
    InvalidCharacter,
    InvalidFamily,
    NotASquarePath,
    PathFamily,
    Step,
    depth_profile,
    endpoint,
    enumerate_family,
    is_bad,
    is_schroeder,
    parse_family,
    parse_word,
)

import oracles

Del, Sch, BDel = PathFamily.delannoy, PathFamily.schroeder, PathFamily.bad


def test_doctests():
    assert doctest.testmod(paths).failed == 0


def test_steps():
    assert [s.displacement for s in Step] == [(1, 0), (1, 1), (0, 1)]


@pytest.mark.parametrize("w, end", [("", (0, 0)), ("NENNEE", (3, 3)), ("NDE", (2, 2))])
def test_endpoint(w, end):
    assert endpoint(w) == end


@pytest.mark.parametrize(
    "w, prof",
    [
        ("NENNEE", [1, 0, 1, 2, 1, 0]),
        ("DDD", [0, 0, 0]),
        ("EENNNE", [-1, -2, -1, 0, 1, 0]),
    ],
)
def test_depth_profile(w, prof):
    assert depth_profile(w) == prof


def test_is_schroeder_and_is_bad():
    assert is_schroeder("EEENNN", 3)
    assert not is_schroeder("NENNEE", 3)
    assert is_schroeder("DDD", 3)
    assert not is_schroeder("EEENN", 3)
    assert is_bad("NENNEE", 3)
    assert not is_bad("EEENNN", 3)
    assert not is_bad("DDD", 3)
    with pytest.raises(NotASquarePath):
        is_bad("EEN", 2)


def test_parse_word():
    assert parse_word("NENNEE") == "NENNEE"
    assert parse_word("") == ""
    with pytest.raises(InvalidCharacter) as err:
        parse_word("NXE")
    assert err.value.position == 2


def test_enumerate_examples():
    assert list(enumerate_family(Del(1, 1, 2))) == ["EN", "NE"]
    assert list(enumerate_family(Del(1, 1, 1))) == ["D"]
    assert len(list(enumerate_family(Sch(3, 6)))) == oracles.catalan(3)
    bad = set(enumerate_family(BDel(3, 6)))
    assert {"NENNEE", "EENNNE"} <= bad


def test_degenerate_families():
    assert list(enumerate_family(Del(0, 0, 0))) == [""]
    assert list(enumerate_family(Sch(0, 0))) == [""]
    assert list(enumerate_family(BDel(0, 0))) == []
    assert list(enumerate_family(BDel(3, 3))) == []


@pytest.mark.parametrize("fam", [Del(1, 3, 1), Del(2, 2, 5), Sch(3, 2), Sch(3, 7), Del(-1, 0, 0)])
def test_invalid_family(fam):
    with pytest.raises(InvalidFamily):
        enumerate_family(fam)


def test_parse_family():
    assert parse_family("del:1,2,3") == Del(1, 2, 3)
    assert parse_family("sch:3,6") == Sch(3, 6)
    assert parse_family("bdel:2,4") == BDel(2, 4)
    assert str(parse_family("bdel:2,4")) == "bdel:2,4"
    for bad in ["del:1,2", "sch:1", "foo:1,2", "del:1,3,1", "sch:a,b", ""]:
        with pytest.raises(InvalidFamily):
            parse_family(bad)


@pytest.mark.parametrize("m", range(6))
def test_delannoy_counts(m):
    for n in range(6):
        for l in range(max(m, n), m + n + 1):
            words = list(enumerate_family(Del(m, n, l)))
            assert len(words) == oracles.multinomial(l - n, l - m, m + n - l)


@pytest.mark.parametrize("n", range(5))
def test_enumeration_matches_oracle_sets(n):
    for l in range(n, 2 * n + 1):
        assert list(enumerate_family(Sch(n, l))) == sorted(
            oracles.sch_words(n, l), key=paths.canonical_key
        )
        assert list(enumerate_family(BDel(n, l))) == sorted(
            oracles.bdel_words(n, l), key=paths.canonical_key
        )


def test_schroeder_counts():
    for n in range(7):
        assert len(list(enumerate_family(Sch(n, 2 * n)))) == oracles.catalan(n)
        total = sum(len(list(enumerate_family(Sch(n, l)))) for l in range(n, 2 * n + 1))
        assert total == oracles.large_schroeder(n)
    assert [oracles.large_schroeder(n) for n in range(5)] == [1, 2, 6, 22, 90]


@pytest.mark.parametrize("n", range(7))
def test_partition_and_order(n):
    for l in range(n, 2 * n + 1):
        dels = list(enumerate_family(Del(n, n, l)))
        sch = list(enumerate_family(Sch(n, l)))
        bad = list(enumerate_family(BDel(n, l)))
        assert len(set(dels)) == len(dels)
        assert sorted(sch + bad) == sorted(dels)
        assert not set(sch) & set(bad)
        assert dels == sorted(dels, key=paths.canonical_key)
        assert dels == list(enumerate_family(Del(n, n, l)))
        assert all(max(depth_profile(w), default=0) <= 0 for w in sch)
        assert all(max(depth_profile(w)) >= 1 for w in bad)


def test_enumeration_is_lazy():
    it = enumerate_family(Del(10, 10, 15))
    assert next(it) == "E" * 5 + "D" * 5 + "N" * 5
