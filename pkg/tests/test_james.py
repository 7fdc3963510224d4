import math

import pytest

from extvanish.james import INF, NotTwoPart, hook_graph, james_array, james_irreducible, r_valuation
from extvanish.partitions import Partition, enumerate_partitions, standard_tableau_count

P = Partition.of


@pytest.mark.parametrize(
    "lam, hooks",
    [
        (P(3, 3), ((4, 3, 2), (3, 2, 1))),
        (P(3, 1), ((4, 2, 1), (1,))),
        (P(2, 2), ((3, 2), (2, 1))),
    ],
)
def test_hook_graph_examples(lam, hooks):
    assert hook_graph(lam).hooks == hooks


@pytest.mark.parametrize(
    "lam, r, l, symbols",
    [
        (P(3, 3), 13, 3, ((INF, 0, INF), (0, INF, INF))),
        (P(2, 2), 5, 4, ((INF, INF), (INF, INF))),
        (P(3, 1), 5, 4, ((0, INF, INF), (INF,))),
    ],
)
def test_james_array_examples(lam, r, l, symbols):
    arr = james_array(lam, r, l)
    assert arr.symbols == symbols


def test_zero_when_l_divides_but_r_does_not():
    # h = 3, r = 13, l = 3: divisible by l, not by r
    arr = james_array(P(3, 3), 13, 3)
    assert arr.symbols[0][1] == 0
    assert arr.rendered()[0] == ["inf", "0", "inf"]


def test_positive_valuations():
    # l = r = 3: hook 3 has valuation 1, hook 6 valuation 1, hook 9 valuation 2
    arr = james_array(P(5, 4), 3, 3)
    for row_h, row_s in zip(hook_graph(P(5, 4)).hooks, arr.symbols):
        for h, s in zip(row_h, row_s):
            assert s == (r_valuation(h, 3) if h % 3 == 0 else INF)
    assert r_valuation(18, 3) == 2 and r_valuation(7, 3) == 0


@pytest.mark.parametrize(
    "lam, r, l, expected",
    [
        (P(3, 3), 13, 3, False),
        (P(2, 2), 5, 4, True),
        (P(4, 2), 13, 3, True),
        (P(5, 1), 13, 3, False),
        (P(3, 1), 5, 4, False),
    ],
)
def test_james_irreducible_examples(lam, r, l, expected):
    assert james_irreducible(lam, r, l) is expected


def test_five_one_column_one():
    arr = james_array(P(5, 1), 13, 3)
    assert set(arr.columns()[0]) == {0, INF}


@pytest.mark.parametrize("lam", [P(4), P(2, 1, 1), P(1, 1, 1)])
def test_criterion_domain(lam):
    with pytest.raises(NotTwoPart, match="two-part partitions only"):
        james_irreducible(lam, 13, 3)


def test_hook_product_divides_factorial():
    for n in range(1, 8):
        for lam in enumerate_partitions(n):
            prod = math.prod(h for row in hook_graph(lam).hooks for h in row)
            assert math.factorial(n) % prod == 0
            assert math.factorial(n) // prod == standard_tableau_count(lam)
            assert min(h for row in hook_graph(lam).hooks for h in row) >= 1


def test_large_l_gives_only_inf():
    for n in range(2, 9):
        for r, l in [(13, 9), (17, n + 1), (29, n + 3)]:
            if l <= n:
                continue
            for lam in enumerate_partitions(n):
                assert all(s == INF for row in james_array(lam, r, l).symbols for s in row)
                if len(lam) == 2:
                    assert james_irreducible(lam, r, l)


def test_trailing_first_row_cells_do_not_change_columns():
    # (k,1): only column 1 has two cells; extra first-row cells only add singleton columns
    for r, l in [(13, 3), (5, 4)]:
        for k in range(1, 12):
            arr = james_array(P(k, 1), r, l)
            first = arr.columns()[0]
            assert all(len(c) == 1 for c in arr.columns()[1:])
            assert james_irreducible(P(k, 1), r, l) == (len(set(first)) == 1)
            # column 1 holds hooks k+1 and 1; constant iff l does not divide k+1
            assert james_irreducible(P(k, 1), r, l) == ((k + 1) % l != 0)
