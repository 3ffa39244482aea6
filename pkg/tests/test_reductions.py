# -*- coding: utf-8 -*-

"""
Tests of the polynomial reductions and of the witness translations between
their source and target problems.
"""


import pytest

from gossipmon.errors import DimensionError, InvalidWitnessError, \
    MalformedInstanceError, OutOfRangeError, StructuralError
from gossipmon.monoid import CallSequence, factor_conference, random_word
from gossipmon.reductions._layout import BlockLayout
from gossipmon.reductions.domination import MgtpInstance, \
    maximal_columns, neighbourhood_matrix, reduce_ds_to_mgtp, \
    replace_non_maximal_columns, select_maximal_column, \
    witness_mgtp_from_domination
from gossipmon.reductions.membership import extract_mgtp_witness, \
    reduce_mgtp_to_gmp, strip_redundant, witness_gmp_from_mgtp
from gossipmon.reductions.nesting import extract_gjp_witness_block, \
    nest_in_gossip, reduce_gtp_to_gjp
from gossipmon.search import Status
from gossipmon.semiring import BoolMatrix, conference_matrix, mat_mul, \
    random_matrix
from gossipmon.solvers.domination import make_graph, solve_dominating_set
from gossipmon.solvers.j_order import solve_gjp
from gossipmon.solvers.membership import solve_gmp
from gossipmon.solvers.transformation import \
    check_maximal_column_condition, solve_gtp, solve_mgtp
from gossipmon.solvers.verification import verify_membership, \
    verify_transformation


# -- Helpers -----------------------------------------------------------------

def _m(*rows):
    return BoolMatrix.from_strings(rows)

def _maximal_matrices(all_matrices, n):
    return [a for a in all_matrices(n) if check_maximal_column_condition(a)]

def _commute(word, generator, steps):
    """
    Returns *word* after *steps* random swaps of adjacent calls on disjoint
    nodes;  such calls commute, so the product is unchanged.
    """
    calls = list(word)
    for _ in range(steps):
        position = generator.choice(range(len(calls) - 1))
        first, second = calls[position], calls[position + 1]
        if not set(first) & set(second):
            calls[position], calls[position + 1] = second, first
    return CallSequence(calls)

def _repeat_calls(word, generator, count):
    """
    Returns *word* with *count* calls repeated in place;  a call matrix is
    idempotent, so the product is unchanged.
    """
    calls = list(word)
    for _ in range(count):
        position = generator.choice(range(len(calls)))
        calls.insert(position, calls[position])
    return CallSequence(calls)

def _check_ds_reduction(graph, k):
    instance = reduce_ds_to_mgtp(graph, k)
    expected = solve_dominating_set(graph, k) is not None
    outcome = solve_mgtp(instance.a, instance.b)
    assert outcome.status is not Status.INCONCLUSIVE
    assert outcome.found == expected
    if outcome.found:
        assert verify_transformation(instance.a, instance.b, outcome.witness)


# -- Dominating set to restricted transformation -----------------------------

class TestDominationReduction:

    def test_neighbourhood_matrix(self):
        path = make_graph(3, [(1, 2), (2, 3)])
        assert neighbourhood_matrix(path) == _m('110', '111', '011')

    def test_maximal_columns(self):
        m = _m('110', '111', '011')
        assert maximal_columns(m) == [2]
        assert select_maximal_column(m) == 2
        assert replace_non_maximal_columns(m) == BoolMatrix.ones(3)

    def test_lexicographically_least_maximal_column(self):
        # columns 1 and 3 are maximal, 2 lies below 1
        m = _m('110', '100', '001')
        assert maximal_columns(m) == [1, 3]
        assert select_maximal_column(m) == 3
        assert replace_non_maximal_columns(m) == _m('100', '100', '011')

    def test_identity_is_kept(self):
        assert replace_non_maximal_columns(BoolMatrix.identity(3)) == \
            BoolMatrix.identity(3)

    def test_trivial_instance(self):
        instance = reduce_ds_to_mgtp(make_graph(3), 3)
        assert instance.a == instance.b == BoolMatrix.identity(9)
        assert witness_mgtp_from_domination(make_graph(3), 3,
                                            {1, 2, 3}) == ()

    def test_shape(self):
        graph = make_graph(3, [(1, 2), (2, 3)])
        instance = reduce_ds_to_mgtp(graph, 1)
        assert (instance.a.n, instance.source_n, instance.k) == (9, 3, 1)
        assert check_maximal_column_condition(instance.a)
        assert instance.a.to_strings() == [
            '111000000', '111000000', '111000000',
            '000111111', '000111111', '000111111',
            '000000000', '000000000', '000000000']
        assert instance.b.to_strings() == [
            '111111100', '111111100', '111111100',
            '111111111', '111111111', '111111111',
            '000000000', '000000000', '000000000']

    @pytest.mark.parametrize('edges, k, expected', [
        ([(1, 2), (1, 3), (2, 3)], 1, True),
        ([(1, 2), (2, 3)], 1, True),
        ([], 1, False),
        ([(1, 2)], 1, False),
        ([(1, 2)], 2, True)])
    def test_examples(self, edges, k, expected):
        graph = make_graph(3, edges)
        instance = reduce_ds_to_mgtp(graph, k)
        assert solve_mgtp(instance.a, instance.b).found is expected

    def test_edgeless_pair(self):
        instance = reduce_ds_to_mgtp(make_graph(2), 1)
        assert solve_mgtp(instance.a, instance.b).status is \
            Status.PROVEN_ABSENT

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_agrees_with_oracle(self, n, all_graphs):
        for edges in all_graphs(n):
            graph = make_graph(n, edges)
            for k in range(1, n + 1):
                _check_ds_reduction(graph, k)

    @pytest.mark.slow
    def test_agrees_with_oracle_on_four_vertices(self, all_graphs):
        for edges in all_graphs(4):
            graph = make_graph(4, edges)
            for k in range(1, 5):
                _check_ds_reduction(graph, k)

    @pytest.mark.parametrize('n', [2, 3, 4])
    def test_forward_witness(self, n, all_graphs):
        for edges in all_graphs(n):
            graph = make_graph(n, edges)
            for k in range(1, n + 1):
                dominating = solve_dominating_set(graph, k)
                if dominating is None:
                    continue
                instance = reduce_ds_to_mgtp(graph, k)
                word = witness_mgtp_from_domination(graph, k, dominating)
                assert verify_transformation(instance.a, instance.b, word)

    def test_forward_witness_rejects_non_dominating_sets(self):
        path = make_graph(3, [(1, 2), (2, 3)])
        with pytest.raises(InvalidWitnessError):
            witness_mgtp_from_domination(path, 1, {1})

    def test_k_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            reduce_ds_to_mgtp(make_graph(3), 0)
        with pytest.raises(OutOfRangeError):
            reduce_ds_to_mgtp(make_graph(3), 4)

    def test_instance_checks_its_initial_matrix(self):
        with pytest.raises(MalformedInstanceError):
            MgtpInstance(_m('11', '01'), BoolMatrix.ones(2))
        with pytest.raises(DimensionError):
            MgtpInstance(BoolMatrix.identity(2), BoolMatrix.ones(3))


# -- Nesting and the J-order reduction ---------------------------------------

class TestNesting:

    def test_identity(self):
        x, factorization = nest_in_gossip(BoolMatrix.identity(2))
        assert x.to_strings() == ['111110', '111101', '111111', '111111',
                                  '111111', '111111']
        assert verify_membership(x, factorization.expanded)

    def test_zero_matrix(self):
        x, factorization = nest_in_gossip(BoolMatrix.zeros(2))
        assert x.submatrix(1, 5, 2) == BoolMatrix.zeros(2)
        assert [sorted(s) for s in factorization.x3] == [[5], [6]]

    def test_ones(self):
        x, _ = nest_in_gossip(BoolMatrix.ones(2))
        assert x == BoolMatrix.ones(6)

    def test_conferences(self):
        _, factorization = nest_in_gossip(BoolMatrix.identity(2))
        conferences = factorization.conferences()
        assert len(conferences) == 1 + 2 + 2 + 1
        assert sorted(factorization.x1) == [3, 4, 5, 6]
        assert [sorted(s) for s in factorization.x2] == [[1, 3], [2, 4]]
        assert sorted(factorization.x4) == [1, 2, 3, 4]
        product = BoolMatrix.identity(6)
        for conference in conferences:
            product = mat_mul(product, conference_matrix(6, conference))
        assert product == nest_in_gossip(BoolMatrix.identity(2))[0]

    def test_random_matrices(self, generator):
        for _ in range(50):
            a = random_matrix(3, generator=generator)
            x, factorization = nest_in_gossip(a)
            assert x.n == 12
            assert x.submatrix(1, 10, 3) == a
            assert factorization.expanded.product(12) == x

    @pytest.mark.parametrize('n', [2, 4])
    def test_other_dimensions(self, n, generator):
        a = random_matrix(n, generator=generator)
        x, factorization = nest_in_gossip(a)
        assert factorization.expanded.product(n * (n + 1)) == x

    def test_dimension_one(self):
        with pytest.raises(OutOfRangeError):
            nest_in_gossip(BoolMatrix.identity(1))

    def test_membership_found_by_search(self):
        x, factorization = nest_in_gossip(BoolMatrix.identity(2))
        outcome = solve_gmp(x)
        assert outcome.status is Status.FOUND
        assert verify_membership(x, outcome.witness)
        assert len(outcome.witness) <= len(factorization.expanded)

    @pytest.mark.slow
    def test_membership_found_by_search_for_every_matrix(self,
                                                         all_matrices):
        for a in all_matrices(2):
            x, _ = nest_in_gossip(a)
            outcome = solve_gmp(x)
            assert outcome.status is Status.FOUND
            assert verify_membership(x, outcome.witness)


class TestJOrderReduction:

    def test_dimension_of_one_node(self):
        instance = reduce_gtp_to_gjp(BoolMatrix.identity(1),
                                     BoolMatrix.identity(1))
        assert instance.x.n == instance.y.n == 6
        assert instance.source_n == 1
        outcome = solve_gjp(instance.x, instance.y, members_certified=True)
        assert outcome.found

    def test_words_certify_membership(self):
        instance = reduce_gtp_to_gjp(BoolMatrix.identity(2),
                                     BoolMatrix.ones(2))
        assert instance.x.n == 20
        assert verify_membership(instance.upper, instance.upper_word)
        assert verify_membership(instance.lower, instance.lower_word)

    def test_yes_instance_yields_a_witness(self):
        a, b = BoolMatrix.identity(2), BoolMatrix.ones(2)
        instance = reduce_gtp_to_gjp(a, b)
        outcome = solve_gjp(instance.lower, instance.upper,
                            members_certified=True)
        assert outcome.found
        g = extract_gjp_witness_block(outcome.witness.right, 2)
        assert mat_mul(a, g) == b

    def test_no_instance(self):
        instance = reduce_gtp_to_gjp(BoolMatrix.ones(2),
                                     BoolMatrix.identity(2))
        outcome = solve_gjp(instance.lower, instance.upper,
                            members_certified=True)
        assert outcome.status is Status.PROVEN_ABSENT

    def test_agrees_with_transformation(self, all_matrices):
        matrices = list(all_matrices(2))
        for a in matrices:
            for b in matrices:
                expected = solve_gtp(a, b).found
                instance = reduce_gtp_to_gjp(a, b)
                outcome = solve_gjp(instance.lower, instance.upper,
                                    members_certified=True)
                assert outcome.status is not Status.INCONCLUSIVE
                assert outcome.found == expected
                if outcome.found:
                    g = extract_gjp_witness_block(outcome.witness.right, 2)
                    assert mat_mul(a, g) == b

    def test_witness_block(self):
        assert extract_gjp_witness_block(CallSequence(), 2) == \
            BoolMatrix.identity(2)
        assert extract_gjp_witness_block(CallSequence([(1, 2)]), 2) == \
            BoolMatrix.identity(2)
        assert extract_gjp_witness_block(CallSequence([(17, 18)]), 2) == \
            BoolMatrix.ones(2)

    def test_witness_block_must_be_diagonal(self):
        with pytest.raises(StructuralError) as error:
            extract_gjp_witness_block(CallSequence([(1, 17)]), 2)
        assert error.value.claim == 'block-diagonal'

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            reduce_gtp_to_gjp(BoolMatrix.identity(2), BoolMatrix.identity(3))


# -- Restricted transformation to membership ---------------------------------

class TestMembershipReduction:

    def test_layout(self):
        layout = BlockLayout(2)
        assert layout.size == 12
        assert layout.indices('a') == [1, 2, 3, 4]
        assert layout.indices('e') == [11, 12]
        assert [layout.block_of(index) for index in (4, 5, 8, 12)] == \
            [('a', 4), ('b', 1), ('c', 2), ('e', 2)]
        with pytest.raises(OutOfRangeError):
            layout.b(3)
        with pytest.raises(OutOfRangeError):
            layout.block_of(13)

    @pytest.mark.parametrize('b, expected', [(['1'], ['1']),
                                             (['0'], ['0'])])
    def test_one_node(self, b, expected):
        instance = reduce_mgtp_to_gmp(BoolMatrix.ones(1), _m(*b))
        assert instance.c == _m(*expected)
        assert instance.layout is None

    def test_blocks(self, generator):
        a = _m('110', '011', '101')
        b = random_matrix(3, generator=generator)
        instance = reduce_mgtp_to_gmp(a, b)
        c, layout = instance.c, instance.layout
        identity = BoolMatrix.identity(3)
        assert c.n == 21
        assert c.submatrix(1, layout.b(1), 3) == a
        assert c.submatrix(1, layout.c(1), 3) == a
        assert c.submatrix(1, layout.d(1), 3) == BoolMatrix.zeros(3)
        assert c.submatrix(1, layout.e(1), 3) == b
        assert c.submatrix(layout.c(1), layout.d(1), 3) == identity
        assert c.submatrix(layout.d(1), layout.b(1), 3) == identity
        assert c.submatrix(layout.e(1), layout.e(1), 3) == \
            BoolMatrix.ones(3)

    def test_malformed(self):
        with pytest.raises(MalformedInstanceError):
            reduce_mgtp_to_gmp(_m('11', '01'), BoolMatrix.ones(2))

    def test_forward_and_back(self, all_matrices):
        for a in _maximal_matrices(all_matrices, 2):
            for g_word in (CallSequence(), CallSequence([(1, 2)])):
                b = g_word.apply(a)
                instance = reduce_mgtp_to_gmp(a, b)
                c_word = witness_gmp_from_mgtp(a, b, g_word)
                assert verify_membership(instance.c, c_word)
                extracted = extract_mgtp_witness(a, b, c_word)
                assert verify_transformation(a, b, extracted)

    def test_forward_and_back_on_three_nodes(self, all_matrices, generator):
        candidates = _maximal_matrices(all_matrices, 3)
        for _ in range(10):
            a = generator.choice(candidates)
            g_word = random_word(3, generator.choice(range(5)),
                                 generator=generator)
            b = g_word.apply(a)
            c_word = witness_gmp_from_mgtp(a, b, g_word)
            assert verify_membership(reduce_mgtp_to_gmp(a, b).c, c_word)
            assert verify_transformation(a, b,
                                         extract_mgtp_witness(a, b, c_word))

    def test_extraction_from_reordered_words(self, all_matrices, generator):
        for a in _maximal_matrices(all_matrices, 2):
            for g_word in (CallSequence(), CallSequence([(1, 2)])):
                b = g_word.apply(a)
                c = reduce_mgtp_to_gmp(a, b).c
                c_word = witness_gmp_from_mgtp(a, b, g_word)
                for _ in range(5):
                    shuffled = _commute(c_word, generator, 100)
                    assert shuffled.product(c.n) == c
                    assert verify_transformation(
                        a, b, extract_mgtp_witness(a, b, shuffled))

    def test_extraction_from_reordered_words_on_three_nodes(
            self, all_matrices, generator):
        candidates = _maximal_matrices(all_matrices, 3)
        for _ in range(20):
            a = generator.choice(candidates)
            g_word = random_word(3, generator.choice(range(1, 5)),
                                 generator=generator)
            b = g_word.apply(a)
            c_word = witness_gmp_from_mgtp(a, b, g_word)
            shuffled = _commute(c_word, generator, 300)
            assert verify_transformation(
                a, b, extract_mgtp_witness(a, b, shuffled))

    def test_extraction_ignores_repeated_calls(self, all_matrices,
                                               generator):
        candidates = _maximal_matrices(all_matrices, 3)
        for _ in range(10):
            a = generator.choice(candidates)
            g_word = random_word(3, 3, generator=generator)
            b = g_word.apply(a)
            c_word = witness_gmp_from_mgtp(a, b, g_word)
            padded = _repeat_calls(_commute(c_word, generator, 100),
                                   generator, 6)
            assert len(padded) == len(c_word) + 6
            assert verify_transformation(
                a, b, extract_mgtp_witness(a, b, padded))

    def test_conference_of_three_nodes(self):
        a, b = BoolMatrix.identity(3), BoolMatrix.ones(3)
        g_word = factor_conference(3, {1, 2, 3})
        c_word = witness_gmp_from_mgtp(a, b, g_word)
        assert extract_mgtp_witness(a, b, c_word).apply(a) == b

    def test_forward_rejects_wrong_words(self):
        with pytest.raises(InvalidWitnessError):
            witness_gmp_from_mgtp(BoolMatrix.identity(2), BoolMatrix.ones(2),
                                  CallSequence())

    def test_extraction_rejects_wrong_words(self):
        with pytest.raises(InvalidWitnessError):
            extract_mgtp_witness(BoolMatrix.identity(2), BoolMatrix.ones(2),
                                 CallSequence([(1, 2)]))

    def test_strip_redundant(self, generator):
        for _ in range(30):
            word = random_word(5, 15, generator=generator)
            stripped = strip_redundant(5, word)
            assert stripped.product(5) == word.product(5)
            state = BoolMatrix.identity(5)
            for pair in stripped:
                following = CallSequence([pair]).apply(state)
                assert following != state
                state = following

    def test_no_instance_of_one_node(self):
        instance = reduce_mgtp_to_gmp(BoolMatrix.ones(1), BoolMatrix.zeros(1))
        assert solve_gmp(instance.c).status is Status.PROVEN_ABSENT
        assert extract_mgtp_witness(BoolMatrix.ones(1), BoolMatrix.ones(1),
                                    CallSequence()) == ()
