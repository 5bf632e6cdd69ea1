import itertools
import random

import pytest

from klpoly.bruhat import (
    bruhat_leq,
    check_rank_monotonicity,
    coatom_count,
    covers_down,
    covers_up,
    down_set,
    format_interval,
    interval,
    rank_count,
    rank_difference,
    render_picture,
)
from klpoly.perm import (
    all_perms,
    compose,
    identity,
    length,
    longest_element,
)

# Reference implementations, written as directly from the definitions
# as possible so they share no code with the module under test.


def naive_rank(w, p, q):
    return sum(1 for i in range(p) if w[i] >= q)


def naive_leq(x, w):
    n = len(x)
    return all(
        naive_rank(x, p, q) <= naive_rank(w, p, q)
        for p in range(1, n + 1)
        for q in range(1, n + 1)
    )


def test_rank_count_examples():
    assert rank_count((6, 3, 4, 2, 5, 1), 3, 4) == 2
    w = (3, 1, 4, 2)
    for p in range(1, 5):
        assert rank_count(w, p, 1) == p
    for p in range(1, 5):
        for q in range(1, 5):
            assert rank_count(identity(4), p, q) == max(0, p - q + 1)


def test_rank_count_range_errors():
    with pytest.raises(ValueError):
        rank_count((2, 1), 0, 1)
    with pytest.raises(ValueError):
        rank_count((2, 1), 1, 3)


def test_rank_count_matches_naive_exhaustively():
    for w in all_perms(4):
        for p in range(1, 5):
            for q in range(1, 5):
                assert rank_count(w, p, q) == naive_rank(w, p, q)


def test_rank_difference_examples():
    w = (3, 1, 4, 2)
    assert rank_difference(w, w).values == ((0,) * 4,) * 4

    table = rank_difference(identity(2), (2, 1))
    assert table.entry(1, 2) == 1
    assert sum(v for row in table.values for v in row) == 1

    fig = rank_difference((3, 1, 5, 2, 4, 6), (6, 3, 4, 2, 5, 1))
    assert fig.is_nonnegative()
    assert fig.min_entry() == 0


def test_rank_difference_size_mismatch():
    with pytest.raises(ValueError):
        rank_difference((1, 2), (1, 2, 3))


def test_bruhat_leq_examples():
    for w in all_perms(4):
        assert bruhat_leq(identity(4), w)
    assert bruhat_leq((2, 1, 4, 3), (4, 2, 3, 1))
    assert not bruhat_leq((3, 4, 1, 2), (4, 2, 3, 1))


def test_bruhat_leq_matches_naive_exhaustively():
    for x in all_perms(4):
        for w in all_perms(4):
            assert bruhat_leq(x, w) == naive_leq(x, w)


def test_bruhat_is_partial_order_on_s3():
    elements = list(all_perms(3))
    for x in elements:
        assert bruhat_leq(x, x)
    for x in elements:
        for y in elements:
            if bruhat_leq(x, y) and bruhat_leq(y, x):
                assert x == y
    for x in elements:
        for y in elements:
            for z in elements:
                if bruhat_leq(x, y) and bruhat_leq(y, z):
                    assert bruhat_leq(x, z)


def test_length_monotone_under_order():
    for x in all_perms(4):
        for w in all_perms(4):
            if bruhat_leq(x, w):
                assert length(x) <= length(w)
                assert (length(x) == length(w)) == (x == w)


def test_order_reversal_under_longest_element():
    w0 = longest_element(4)
    for x in all_perms(4):
        for w in all_perms(4):
            assert bruhat_leq(x, w) == bruhat_leq(compose(w0, w), compose(w0, x))


def test_covers_down_matches_order_theoretic_covers():
    # z is covered by w exactly when z < w with nothing strictly between.
    elements = list(all_perms(4))
    for w in elements:
        expected = set()
        below = [z for z in elements if z != w and naive_leq(z, w)]
        for z in below:
            if not any(
                y != z and y != w and naive_leq(z, y) and naive_leq(y, w)
                for y in below
            ):
                expected.add(z)
        assert set(covers_down(w)) == expected


def test_covers_up_is_dual_to_covers_down():
    for w in all_perms(4):
        for z in covers_down(w):
            assert w in covers_up(z)
        for z in covers_up(w):
            assert w in covers_down(z)


def test_covers_change_length_by_one():
    for w in all_perms(4):
        for z in covers_down(w):
            assert length(z) == length(w) - 1


def test_down_set_counts():
    assert len(down_set(longest_element(4))) == 24
    assert down_set(identity(5)) == (identity(5),)
    for w in all_perms(4):
        assert set(down_set(w)) == {z for z in all_perms(4) if naive_leq(z, w)}


def test_interval_trivial_cases():
    w = (2, 4, 1, 3)
    assert interval(w, w).elements == frozenset({w})
    assert interval((1, 2), (2, 1)).elements == frozenset({(1, 2), (2, 1)})
    assert len(interval(identity(3), (3, 2, 1))) == 6


def test_interval_is_full_group_between_extremes():
    for n in (2, 3, 4):
        iv = interval(identity(n), longest_element(n))
        assert len(iv) == len(list(all_perms(n)))


def test_interval_matches_naive_filter():
    rng = random.Random(9)
    elements = list(all_perms(5))
    for _ in range(8):
        w = rng.choice(elements)
        x = rng.choice([z for z in elements if naive_leq(z, w)])
        got = interval(x, w).elements
        want = {z for z in elements if naive_leq(x, z) and naive_leq(z, w)}
        assert got == want


def test_interval_rejects_incomparable_pairs():
    with pytest.raises(ValueError):
        interval((2, 1, 3), (1, 2, 3))
    with pytest.raises(ValueError):
        interval((3, 4, 1, 2), (4, 2, 3, 1))


def test_interval_sorted_elements_ordering():
    iv = interval(identity(3), (3, 2, 1))
    ordered = iv.sorted_elements()
    assert ordered == sorted(ordered, key=lambda z: (length(z), z))
    assert ordered[0] == identity(3)
    assert ordered[-1] == (3, 2, 1)
    text = format_interval(iv)
    assert text.splitlines()[0] == "1,2,3"
    assert text.splitlines()[-1] == "3,2,1"


def test_coatom_count_small_cases():
    assert coatom_count(identity(3), (3, 2, 1)) == 2
    assert set(covers_down((3, 2, 1))) == {(2, 3, 1), (3, 1, 2)}
    assert coatom_count((1, 2), (2, 1)) == 1


def test_coatom_count_complemented_pair():
    # Computed by brute force below; the enumeration is the ground truth.
    u, v = (1, 3, 2, 4), (3, 4, 1, 2)
    expected = {
        z
        for z in all_perms(4)
        if length(z) == length(v) - 1 and naive_leq(z, v) and naive_leq(u, z)
    }
    assert expected == {(1, 4, 3, 2), (2, 4, 1, 3), (3, 1, 4, 2), (3, 2, 1, 4)}
    assert coatom_count(u, v) == 4


def test_coatom_count_positive_for_proper_intervals():
    for w in all_perms(4):
        for x in all_perms(4):
            if x != w and bruhat_leq(x, w):
                assert coatom_count(x, w) >= 1


def test_coatom_count_rejects_bad_input():
    with pytest.raises(ValueError):
        coatom_count((2, 1, 3), (1, 2, 3))
    with pytest.raises(ValueError):
        coatom_count((2, 1, 3), (2, 1, 3))


def test_rank_monotonicity_examples():
    assert check_rank_monotonicity((2, 1, 3), (2, 1, 3), (3, 2, 1))
    assert check_rank_monotonicity(identity(3), (2, 1, 3), (3, 2, 1))


def test_rank_monotonicity_on_random_chains():
    # Chains are built by walking covers upward so the precondition
    # holds by construction.
    rng = random.Random(17)
    for _ in range(60):
        x = list(range(1, 6))
        rng.shuffle(x)
        x = tuple(x)
        ups = covers_up(x)
        if not ups:
            continue
        y = rng.choice(ups)
        w = y
        for _ in range(rng.randint(0, 3)):
            ups = covers_up(w)
            if not ups:
                break
            w = rng.choice(ups)
        assert check_rank_monotonicity(x, y, w)


def test_rank_monotonicity_rejects_broken_chains():
    with pytest.raises(ValueError):
        check_rank_monotonicity((2, 1, 3), identity(3), (3, 2, 1))
    with pytest.raises(ValueError):
        check_rank_monotonicity(identity(3), (3, 2, 1), (2, 1, 3))


def test_render_picture_identity_pair():
    assert render_picture(identity(2), identity(2)) == "◉·\n·◉"


def test_render_picture_single_shaded_cell():
    grid = render_picture(identity(2), (2, 1))
    assert grid == "●▒\n○●"
    rows = grid.split("\n")
    assert rows[0][1] == "▒"
    assert sum(row.count("▒") for row in rows) == 1


def test_render_picture_larger_pair_has_shading():
    grid = render_picture((3, 1, 5, 2, 4, 6), (6, 3, 4, 2, 5, 1))
    rows = grid.split("\n")
    assert len(rows) == 6 and all(len(r) == 6 for r in rows)
    assert sum(row.count("▒") for row in rows) > 0


def test_render_picture_is_stable():
    a = render_picture((1, 3, 2), (3, 2, 1))
    b = render_picture((1, 3, 2), (3, 2, 1))
    assert a == b


def test_render_picture_size_mismatch():
    with pytest.raises(ValueError):
        render_picture((1, 2), (1, 2, 3))
