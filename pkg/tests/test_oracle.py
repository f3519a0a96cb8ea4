import pytest

from hookmonoid import oracle
from hookmonoid.monoid import Hook1, durfee_square, product
from hookmonoid.partitions import Partition

P = Partition


def test_enumerate_five():
    assert [p.parts for p in oracle.enumerate_partitions(5)] == [
        (5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1),
    ]


def test_enumerate_zero():
    assert list(oracle.enumerate_partitions(0)) == [P(())]


def test_enumerate_thirteen():
    assert sum(1 for _ in oracle.enumerate_partitions(13)) == 101


def test_reverse_lexicographic_and_distinct():
    for n in range(1, 20):
        seq = [p.parts for p in oracle.enumerate_partitions(n)]
        assert seq == sorted(set(seq), reverse=True)
        assert all(sum(p) == n for p in seq)


def test_pentagonal_up_to_60():
    pent = oracle.pentagonal_counts(60)
    assert pent[:8] == [1, 1, 2, 3, 5, 7, 11, 15]
    for n in range(61):
        assert sum(oracle.tally(n, "durfee").values()) == pent[n]


@pytest.mark.parametrize(
    "n, filters, expected",
    [
        (6, {"durfee": 2}, 5),
        (13, {"hooktype": (7, 4, 2)}, 4),
        (13, {"parts_pm1_mod5": True}, 10),
        (13, {"diffset": (2, 2, 1)}, 4),  # (7,4,2) only
        (10, {"durfee": 3}, 2),
        (4, {"du_times_hook": True}, 5),
    ],
)
def test_count_where(n, filters, expected):
    assert oracle.count_where(n, **filters) == expected


def test_filters_match_partition_core():
    for n in range(1, 16):
        parts = list(oracle.enumerate_partitions(n))
        for r in range(0, 5):
            assert oracle.count_where(n, durfee=r) == sum(1 for p in parts if p.durfee == r)
        for k in range(1, n + 1):
            assert oracle.count_where(n, inner=k) == sum(1 for p in parts if p.inner_hook_size == k)
            assert oracle.count_where(n, outer=k) == sum(1 for p in parts if p.outer_hook_size == k)


def test_two_valued_scan_covers_du_times_hook():
    for n in range(1, 31):
        full = sum(1 for p in oracle._zs1(n) if oracle._is_square_times_hook(p))
        assert oracle.count_where(n, du_times_hook=True) == full
        two = list(oracle.enumerate_two_valued(n))
        assert len(two) == len(set(two))
        assert set(two) == {p for p in oracle._zs1(n) if len(set(p)) <= 2}


def test_du_times_hook_is_the_product_family():
    for n in range(1, 25):
        built = set()
        for s in range(0, n + 1):
            for k in range(1, n + 1):
                for t in range(k):
                    q = product(durfee_square(s), Hook1(k - 1 - t, t))
                    if q.weight == n:
                        built.add(q.parts)
        scanned = {p for p in oracle._zs1(n) if oracle._is_square_times_hook(p)}
        assert built == scanned


def test_unknown_filter():
    with pytest.raises(ValueError):
        oracle.count_where(5, colour="red")
    with pytest.raises(ValueError):
        oracle.tally(5, "colour")
