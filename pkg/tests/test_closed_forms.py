from collections import Counter

import pytest

import oracle
from closeness_decision import (
    Case,
    DomainError,
    case_multiplicity,
    closeness,
    cycle_closeness,
    cycle_maximin,
    cycle_one_tail_closeness,
    cycle_tail_min,
    cycle_tails_closeness,
    generate,
    join_closeness,
    linked_cliques_additional,
    linked_cliques_closeness,
    linked_cliques_decision,
    linked_cliques_delta,
    linked_cliques_regret_exact,
    lollipop_maximax,
    mutate_copy,
    path_closeness,
)
from closeness_decision.closed_forms import case_example


def brute(spec):
    g = generate(spec)
    return oracle.closeness(g.n, g.edges)


def test_path_examples():
    assert path_closeness(4) == 4.25
    assert path_closeness(1) == 0
    assert path_closeness(10) == brute("path:10") == 16.00390625
    with pytest.raises(DomainError):
        path_closeness(0)


def test_cycle_examples():
    assert cycle_closeness(6) == 9.75
    assert cycle_closeness(3) == 3
    assert cycle_closeness(7) == brute("cycle:7") == 12.25
    with pytest.raises(DomainError):
        cycle_closeness(2)


def test_join_examples():
    assert join_closeness(3, 3, 1, 1) == 10 == brute("cliques:3,3")
    assert join_closeness(1, 1, 0.5, 0.5) == 4.25 == path_closeness(4)
    c = closeness(generate("cycle:5"))
    assert join_closeness(c, 0, 2.0, 0) == c + 3.0


def test_linked_cliques_examples():
    assert linked_cliques_closeness(2, 2) == 4.25
    assert linked_cliques_closeness(3, 3) == brute("cliques:3,3") == 10
    assert linked_cliques_closeness(4, 3) == brute("cliques:4,3") == 14
    with pytest.raises(DomainError):
        linked_cliques_closeness(1, 3)


@pytest.mark.parametrize("k", range(3, 8))
@pytest.mark.parametrize("m", range(3, 8))
@pytest.mark.parametrize("case", list(Case))
def test_case_delta_matches_brute_force(case, k, m):
    if case is Case.B and k == m == 3:
        with pytest.raises(DomainError):
            linked_cliques_delta(case, k, m)
        return
    g = generate(f"cliques:{k},{m}")
    deleted, added = case_example(case, k, m)
    h = mutate_copy(g, delete=deleted, add=added)
    expected = oracle.closeness(h.n, h.edges) - oracle.closeness(g.n, g.edges)
    assert linked_cliques_delta(case, k, m) == pytest.approx(expected, abs=1e-9)


def test_case_delta_spot_values():
    assert linked_cliques_delta("A", 5, 4) == 0
    assert linked_cliques_delta("B", 4, 4) == 1.25
    assert linked_cliques_delta("F", 3, 3) == -0.125


@pytest.mark.parametrize("k, m", [(3, 3), (4, 3), (5, 5), (7, 4)])
def test_far_link_column_is_cases_a_to_d(k, m):
    g = generate(f"cliques:{k},{m}")
    column = oracle.columns(g.n, g.edges)[(k, k + 1)]
    c = linked_cliques_closeness(k, m)
    got = Counter(round(v - c, 9) for v in column)
    want = Counter()
    for case in "ABCD":
        if case_multiplicity(case, k, m):
            want[round(linked_cliques_delta(case, k, m), 9)] += case_multiplicity(case, k, m)
    assert got == want


@pytest.mark.parametrize("k, m", [(k, m) for k in range(3, 9) for m in range(3, 9)])
def test_case_multiplicities_cover_all_links(k, m):
    total = k * (k - 1) // 2 + m * (m - 1) // 2 + 1
    assert sum(case_multiplicity(c, k, m) for c in "ABCD") == total
    assert sum(case_multiplicity(c, k, m) for c in "AEF") == total


@pytest.mark.parametrize("k, m", [(k, m) for k in range(3, 11) for m in range(3, k + 1)])
def test_average_is_weighted_case_mean(k, m):
    c = linked_cliques_closeness(k, m)
    cases = [x for x in "ABCD" if case_multiplicity(x, k, m)]
    total = sum(case_multiplicity(x, k, m) for x in cases)
    mean = sum(case_multiplicity(x, k, m) * linked_cliques_delta(x, k, m) for x in cases) / total
    assert linked_cliques_decision(k, m).av == pytest.approx(c + mean, abs=1e-12)


@pytest.mark.parametrize("k, m", [(k, m) for k in range(3, 12) for m in range(3, 12)])
def test_case_e_beats_case_f(k, m):
    assert linked_cliques_delta("E", k, m) > linked_cliques_delta("F", k, m)


def test_decision_cliques_3_3_against_brute_force():
    g = generate("cliques:3,3")
    cols = oracle.columns(g.n, g.edges)
    crit = linked_cliques_decision(3, 3)
    assert crit.mx == max(max(v) for v in cols.values()) == 10.75
    assert crit.mn == max(min(v) for v in cols.values()) == 10
    assert crit.reg == min(max(v) - min(v) for v in cols.values()) == 0.625
    assert crit.mx_plus_mn == crit.mx + crit.mn
    assert crit.regret_strategy == "bridge-endpoint"


def test_decision_regret_branches():
    assert linked_cliques_decision(5, 3).reg == 1.25
    assert linked_cliques_decision(5, 3).regret_strategy == "far-far"
    assert linked_cliques_decision(5, 5).reg == 1
    assert linked_cliques_decision(3, 5) == linked_cliques_decision(5, 3)
    with pytest.raises(DomainError):
        linked_cliques_decision(2, 5)


@pytest.mark.parametrize("m", range(3, 20))
def test_regret_branch_boundary_agrees(m):
    k = 2 * m - 4
    if k < m:
        return
    assert (k - 1) / 4 == (3 * k + 2 - 2 * m) / 8
    assert linked_cliques_decision(k, m).reg == (k - 1) / 4


@pytest.mark.parametrize("k, m", [(k, m) for k in range(3, 8) for m in range(3, k + 1)] + [(9, 4)])
def test_exact_regret_matches_brute_force(k, m):
    g = generate(f"cliques:{k},{m}")
    cols = oracle.columns(g.n, g.edges)
    value, tag = linked_cliques_regret_exact(k, m)
    assert value == min(max(v) - min(v) for v in cols.values())
    assert value <= linked_cliques_decision(k, m).reg


def test_exact_regret_example():
    assert linked_cliques_regret_exact(5, 3) == (0.875, "small-bridge-endpoint")
    assert linked_cliques_regret_exact(5, 5)[0] == 1.0


def test_additional_cliques():
    assert linked_cliques_additional(3, 3) == 11.25
    assert linked_cliques_additional(4, 3) == 15.5
    for k in range(3, 9):
        for m in range(3, 9):
            assert linked_cliques_additional(k, m) - linked_cliques_decision(k, m).mx == 0.5


def test_lollipop_maximax_3_1():
    g = generate("lollipop:3,1")
    value, pair = lollipop_maximax(3, 1)
    cols = oracle.columns(g.n, g.edges)
    assert value == 5.0 == max(max(v) for v in cols.values())
    assert oracle.closeness(g.n, list(g.edges) + [pair]) == 5.5


def test_lollipop_maximax_4_2_matches_optimistic():
    g = generate("lollipop:4,2")
    cols = oracle.columns(g.n, g.edges)
    assert lollipop_maximax(4, 2)[0] == max(max(v) for v in cols.values())


@pytest.mark.parametrize("n, m", [(3, 1), (4, 4), (6, 2)])
def test_lollipop_maximax_below_additional(n, m):
    from closeness_decision import additional_closeness

    assert lollipop_maximax(n, m)[0] < additional_closeness(generate(f"lollipop:{n},{m}"))[0]


def test_cycle_tails_examples():
    for n in range(3, 9):
        assert cycle_tails_closeness(n, 0, 0) == cycle_closeness(n)
    assert cycle_tails_closeness(4, 1, 1) == brute("cycletails:4,1,1") == 9.75
    assert cycle_tails_closeness(5, 2, 0) == cycle_one_tail_closeness(5, 2) == brute("cycletails:5,2,0")


@pytest.mark.parametrize("n", range(3, 12))
@pytest.mark.parametrize("p", range(0, 7))
def test_one_tail_forms_agree(n, p):
    assert cycle_tails_closeness(n, p, 0) == pytest.approx(cycle_one_tail_closeness(n, p), abs=1e-12)
    assert cycle_tail_min(n, p) == pytest.approx(cycle_one_tail_closeness(n, p), abs=1e-12)


def test_tail_min_examples():
    assert cycle_tail_min(4, 1) == brute("cycletails:4,1,0") == 7.25
    assert cycle_tail_min(5, 1) == brute("cycletails:5,1,0") == 10.0
    for n in range(3, 10):
        assert cycle_tail_min(n, 0) == cycle_closeness(n)


@pytest.mark.parametrize("n", range(4, 9))
@pytest.mark.parametrize("total", range(2, 9))
def test_tail_split_minimized_by_single_tail(n, total):
    values = {p: cycle_tails_closeness(n, p, total - p) for p in range(total + 1)}
    assert min(values.values()) == values[total] == values[0]
    assert all(values[0] < v for p, v in values.items() if p not in (0, total))


@pytest.mark.parametrize("p", range(0, 5))
def test_tail_min_increases_with_cycle_size(p):
    even = [cycle_tail_min(2 * k, p) for k in range(2, 13)]
    odd = [cycle_tail_min(2 * k + 1, p) for k in range(2, 13)]
    assert all(a < b for a, b in zip(even, even[1:]))
    assert all(a < b for a, b in zip(odd, odd[1:]))


def test_cycle_maximin_examples():
    assert cycle_maximin(6) == (9.375, (1, 4))
    assert cycle_maximin(8) == (14.375, (1, 5))
    g = generate("cycle:9")
    cols = oracle.columns(g.n, g.edges)
    value, chord = cycle_maximin(9)
    assert value == max(min(v) for v in cols.values()) == 16.4375
    assert min(cols[chord]) == value
    with pytest.raises(DomainError):
        cycle_maximin(3)


@pytest.mark.parametrize("m", [4, 5, 7, 10, 11])
def test_cycle_maximin_chord_attains_value(m):
    g = generate(f"cycle:{m}")
    cols = oracle.columns(g.n, g.edges)
    value, chord = cycle_maximin(m)
    assert value == max(min(v) for v in cols.values())
    assert min(cols[chord]) == value


@pytest.mark.parametrize("q", range(2, 10))
def test_cycle_maximin_parity_choice(q):
    # m = 4q: odd cycle + tail beats even cycle + tail; m = 4q + 2: the reverse.
    odd, even = cycle_tail_min(2 * q + 1, 2 * q - 1), cycle_tail_min(2 * q, 2 * q)
    assert odd > even
    assert cycle_maximin(4 * q)[0] == odd
    even, odd = cycle_tail_min(2 * q + 2, 2 * q), cycle_tail_min(2 * q + 1, 2 * q + 1)
    assert even > odd
    assert cycle_maximin(4 * q + 2)[0] == even
