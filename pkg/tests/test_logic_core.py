"""
Tests for canonical vectors, logical and Boolean matrices, and the products on them
"""
import itertools
import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bcndata.algebra import (
    BooleanMatrix, CanonicalVector, LogicalMatrix, boolean_product, delta, hadamard, is_irreducible,
    khatri_rao, power_reducing_matrix, reachability_closure, stp, stp_chain, to_digraph
)
from bcndata.core.exceptions import DimensionMismatchError, ValidationError

from tests.builders import EXAMPLE1_L
from tests.settings import HEAVY_SETTINGS, LAW_SETTINGS, STANDARD_SETTINGS


@st.composite
def logical_matrices(draw, max_rows: int = 4, max_cols: int = 4, rows=None, cols=None):
    rows = rows if rows is not None else draw(st.integers(1, max_rows))
    cols = cols if cols is not None else draw(st.integers(1, max_cols))
    columns = draw(st.lists(st.integers(1, rows), min_size=cols, max_size=cols))
    return LogicalMatrix(rows, columns)


def reference_stp(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n, p = a.shape[1], b.shape[0]
    lcm = math.lcm(n, p)
    return np.kron(a, np.eye(lcm // n)) @ np.kron(b, np.eye(lcm // p))


def graph_of(entries: np.ndarray) -> nx.DiGraph:
    """Edge j -> l for every 1 at (l, j)"""
    graph = nx.DiGraph()
    k = entries.shape[0]
    graph.add_nodes_from(range(1, k + 1))
    for l, j in zip(*np.nonzero(entries)):
        graph.add_edge(int(j) + 1, int(l) + 1)
    return graph


class TestCanonicalVector:

    def test_array_form(self):
        assert delta(4, 3).to_array().ravel().tolist() == [0, 0, 1, 0]

    def test_round_trip_through_array(self):
        assert CanonicalVector.from_array(np.array([0, 1, 0])) == delta(3, 2)

    @pytest.mark.parametrize("dim,index", [(0, 1), (3, 0), (3, 4)])
    def test_rejects_out_of_range(self, dim, index):
        with pytest.raises(ValidationError):
            CanonicalVector(dim, index)

    def test_from_array_rejects_non_canonical(self):
        with pytest.raises(ValidationError):
            CanonicalVector.from_array(np.array([1, 1, 0]))


class TestLogicalMatrix:

    def test_columns_are_one_based(self):
        matrix = LogicalMatrix(3, [2, 3, 1])
        assert matrix.columns == (2, 3, 1)
        assert matrix[2] == 3
        assert matrix.column(3) == delta(3, 1)
        assert matrix.to_array().tolist() == [[0, 0, 1], [1, 0, 0], [0, 1, 0]]

    def test_rejects_index_outside_rows(self):
        with pytest.raises(ValidationError):
            LogicalMatrix(3, [1, 4])

    def test_from_array_rejects_two_ones_in_a_column(self):
        with pytest.raises(ValidationError):
            LogicalMatrix.from_array(np.array([[1, 0], [1, 1]]))

    def test_blocks_of_transition_matrix(self):
        matrix = LogicalMatrix(7, EXAMPLE1_L)
        assert matrix.block(2, 7).columns == (6, 1, 3, 2, 4, 5, 7)
        with pytest.raises(DimensionMismatchError):
            matrix.block(1, 5)

    def test_compose_is_matrix_product(self):
        a = LogicalMatrix(3, [3, 1, 2, 2])
        b = LogicalMatrix(4, [4, 1, 2])
        assert np.array_equal(a.compose(b).to_array(), a.to_array() @ b.to_array())

    def test_equality_and_hash(self):
        assert LogicalMatrix(2, [1, 2]) == LogicalMatrix.identity(2)
        assert hash(LogicalMatrix(2, [1, 2])) == hash(LogicalMatrix.identity(2))
        assert LogicalMatrix(2, [1, 2]) != LogicalMatrix(3, [1, 2])


class TestSemiTensorProduct:

    def test_canonical_law_exhaustive(self):
        for m, n in itertools.product(range(1, 9), repeat=2):
            for i, j in itertools.product(range(1, m + 1), range(1, n + 1)):
                assert stp(delta(m, i), delta(n, j)) == delta(m * n, (i - 1) * n + j)

    @LAW_SETTINGS
    @given(st.data())
    def test_canonical_law_on_large_dimensions(self, data):
        m, n = data.draw(st.integers(1, 256)), data.draw(st.integers(1, 256))
        i, j = data.draw(st.integers(1, m)), data.draw(st.integers(1, n))
        assert stp(delta(m, i), delta(n, j)) == delta(m * n, (i - 1) * n + j)

    def test_transition_matrix_times_input_and_state(self):
        transitions = LogicalMatrix(7, EXAMPLE1_L)
        assert stp_chain(transitions, delta(3, 2), delta(7, 6)) == delta(7, 5)

    def test_empty_operand_is_rejected(self):
        with pytest.raises(ValidationError):
            stp(LogicalMatrix(3, []), delta(2, 1))
        with pytest.raises(ValidationError):
            stp(np.zeros((2, 0)), np.ones((3, 1)))

    @HEAVY_SETTINGS
    @given(a=logical_matrices(), b=logical_matrices())
    def test_shape(self, a, b):
        m, n = a.shape
        p, q = b.shape
        lcm = math.lcm(n, p)
        assert stp(a, b).shape == (m * lcm // n, q * lcm // p)

    @HEAVY_SETTINGS
    @given(a=logical_matrices(), b=logical_matrices())
    def test_logical_path_matches_dense_definition(self, a, b):
        expected = reference_stp(a.to_array().astype(float), b.to_array().astype(float))
        assert np.array_equal(stp(a, b).to_array(), expected.astype(np.uint8))

    @LAW_SETTINGS
    @given(a=logical_matrices(), b=logical_matrices(), c=logical_matrices())
    def test_associative_on_logical_matrices(self, a, b, c):
        assert stp(stp(a, b), c) == stp(a, stp(b, c))

    @LAW_SETTINGS
    @given(st.data())
    def test_associative_on_real_matrices(self, data):
        dims = data.draw(st.lists(st.integers(1, 4), min_size=6, max_size=6))
        rng = np.random.default_rng(data.draw(st.integers(0, 2 ** 16)))
        a = rng.normal(size=(dims[0], dims[1]))
        b = rng.normal(size=(dims[2], dims[3]))
        c = rng.normal(size=(dims[4], dims[5]))
        assert np.allclose(stp(stp(a, b), c), stp(a, stp(b, c)))

    def test_ordinary_product_when_dimensions_agree(self):
        a = np.arange(6, dtype=float).reshape(2, 3)
        b = np.arange(12, dtype=float).reshape(3, 4)
        assert np.allclose(stp(a, b), a @ b)


class TestPowerReducingMatrix:

    def test_squares_every_canonical_vector(self):
        for n in range(1, 11):
            phi = power_reducing_matrix(n)
            assert phi.shape == (n * n, n)
            for j in range(1, n + 1):
                x = delta(n, j)
                assert stp(phi, x) == stp(x, x)

    @LAW_SETTINGS
    @given(st.data())
    def test_squares_random_canonical_vectors(self, data):
        n = data.draw(st.integers(1, 128))
        x = delta(n, data.draw(st.integers(1, n)))
        assert stp(power_reducing_matrix(n), x) == stp(x, x)

    def test_rejects_zero(self):
        with pytest.raises(ValidationError):
            power_reducing_matrix(0)


class TestKhatriRao:

    def test_logical_index_rule(self):
        c = LogicalMatrix(3, [3, 1, 2])
        d = LogicalMatrix(6, [6, 2, 1])
        assert khatri_rao(c, d).columns == (18, 2, 7)

    @STANDARD_SETTINGS
    @given(st.data())
    def test_columns_are_kronecker_products(self, data):
        cols = data.draw(st.integers(1, 5))
        c = data.draw(logical_matrices(cols=cols))
        d = data.draw(logical_matrices(cols=cols))
        product = khatri_rao(c, d)
        for k in range(1, cols + 1):
            assert product.column(k) == stp(c.column(k), d.column(k))
        assert khatri_rao(c.to_boolean(), d.to_boolean()) == product.to_boolean()

    def test_column_count_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            khatri_rao(LogicalMatrix(2, [1]), LogicalMatrix(2, [1, 2]))

    def test_empty_boolean_operands(self):
        assert khatri_rao(BooleanMatrix.zeros(2, 0), BooleanMatrix.zeros(3, 0)).shape == (6, 0)


class TestBooleanMatrix:

    @LAW_SETTINGS
    @given(st.data())
    def test_boolean_product_is_sign_of_integer_product(self, data):
        m, n, q = (data.draw(st.integers(1, 5)) for _ in range(3))
        a = np.array(data.draw(st.lists(st.booleans(), min_size=m * n, max_size=m * n))).reshape(m, n)
        b = np.array(data.draw(st.lists(st.booleans(), min_size=n * q, max_size=n * q))).reshape(n, q)
        expected = (a.astype(int) @ b.astype(int)) > 0
        assert np.array_equal(boolean_product(BooleanMatrix(a), BooleanMatrix(b)).to_array(), expected)

    def test_hadamard_and_or(self):
        a = BooleanMatrix([[1, 0], [1, 1]])
        b = BooleanMatrix([[1, 1], [0, 1]])
        assert hadamard(a, b) == BooleanMatrix([[1, 0], [0, 1]])
        assert (a | b) == BooleanMatrix.ones(2, 2)
        assert hadamard(a, b) <= a

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            hadamard(BooleanMatrix.zeros(2, 2), BooleanMatrix.zeros(2, 3))
        with pytest.raises(DimensionMismatchError):
            boolean_product(BooleanMatrix.zeros(2, 2), BooleanMatrix.zeros(3, 2))

    def test_rejects_non_binary_entries(self):
        with pytest.raises(ValidationError):
            BooleanMatrix([[0, 2]])

    def test_supports(self):
        matrix = BooleanMatrix([[1, 0, 0], [1, 0, 1], [0, 0, 0]])
        assert matrix.column_support(1) == {1, 2}
        assert matrix.row_support(2) == {1, 3}
        assert matrix.zero_rows() == {3}
        assert matrix.diagonal_support() == {1}

    def test_logical_round_trip(self):
        logical = LogicalMatrix(3, [2, 2, 1])
        assert logical.to_boolean().to_logical() == logical
        with pytest.raises(ValidationError):
            BooleanMatrix([[1, 1], [1, 0]]).to_logical()

    def test_digraph_edges_run_from_column_to_row(self):
        graph = to_digraph(BooleanMatrix([[0, 0], [1, 0]]))
        assert list(graph.edges) == [(1, 2)]

    def test_irreducibility_exhaustive_on_three_nodes(self):
        for bits in range(2 ** 9):
            entries = np.array([(bits >> s) & 1 for s in range(9)], dtype=bool).reshape(3, 3)
            graph = graph_of(entries)
            assert is_irreducible(BooleanMatrix(entries)) == nx.is_strongly_connected(graph)

    @HEAVY_SETTINGS
    @given(st.data())
    def test_closure_entries_are_paths(self, data):
        k = data.draw(st.integers(1, 6))
        entries = np.array(data.draw(st.lists(st.booleans(), min_size=k * k, max_size=k * k))).reshape(k, k)
        closure = reachability_closure(BooleanMatrix(entries))
        graph = graph_of(entries)
        for i, j in itertools.product(range(1, k + 1), repeat=2):
            assert closure.entry(i, j) == nx.has_path(graph, j, i)
