import pytest

from hypothesis import given, strategies as st

from common.lib.exceptions import InputException
from common.lib.finsets import (FinSet, FinFun, all_functions, all_surjections, bang, check_coequalizer_universal,
								check_pullback_universal, coequalizer, compose, coproduct, equalizer, pair_index, product,
								pullback, terminal, unpair_index)

from .strategies import finsets, functions


def fun(dom, cod, table):
	return FinFun(FinSet(dom), FinSet(cod), tuple(table))


class TestFinSet:
	def test_elements_are_indices(self):
		assert list(FinSet(3)) == [0, 1, 2]
		assert 2 in FinSet(3)
		assert 3 not in FinSet(3)
		assert True not in FinSet(3)

	def test_labels_do_not_affect_equality(self):
		assert FinSet(2, ("x", "y")) == FinSet(2)
		assert FinSet(2, ("x", "y")).label(1) == "y"

	def test_negative_size(self):
		with pytest.raises(InputException):
			FinSet(-1)

	def test_duplicate_labels(self):
		with pytest.raises(InputException) as error:
			FinSet(2, ("x", "x"))

		assert error.value.path == "$.labels"


class TestFinFun:
	def test_out_of_range_entry(self):
		with pytest.raises(InputException) as error:
			fun(2, 2, (0, 2))

		assert error.value.path == "$.table[1]"

	def test_wrong_length(self):
		with pytest.raises(InputException):
			fun(2, 2, (0,))

	def test_functions_out_of_the_empty_set(self):
		assert fun(0, 3, ()).table == ()
		assert len(list(all_functions(FinSet(0), FinSet(3)))) == 1
		assert list(all_functions(FinSet(2), FinSet(0))) == []

	def test_compose_right_to_left(self):
		f = fun(2, 3, (0, 2))
		g = fun(3, 2, (1, 1, 0))
		h = fun(2, 2, (1, 0))
		assert compose(h, g, f) == h.after(g.after(f))
		assert compose(h, g, f).table == (0, 1)
		assert f.then(g) == g.after(f)

	def test_compose_mismatch(self):
		with pytest.raises(InputException):
			fun(2, 2, (0, 1)).after(fun(3, 3, (0, 1, 2)))

	def test_inverse(self):
		f = fun(3, 3, (2, 0, 1))
		assert f.is_bijective()
		assert f.inverse().after(f) == FinFun.identity(FinSet(3))

	def test_no_inverse(self):
		with pytest.raises(InputException):
			fun(2, 2, (0, 0)).inverse()

	def test_all_functions_order_and_count(self):
		tables = [function.table for function in all_functions(FinSet(2), FinSet(2))]
		assert tables == [(0, 0), (0, 1), (1, 0), (1, 1)]
		assert len(list(all_functions(FinSet(3), FinSet(3)))) == 27

	def test_surjections(self):
		assert len(list(all_surjections(FinSet(3), FinSet(2)))) == 6
		assert all(function.is_surjective() for function in all_surjections(FinSet(3), FinSet(2)))

	@given(functions())
	def test_identity_is_neutral(self, f):
		assert f.after(FinFun.identity(f.dom)) == f
		assert FinFun.identity(f.cod).after(f) == f


class TestProducts:
	@given(st.integers(0, 5), st.integers(1, 5), st.data())
	def test_pair_index_round_trip(self, first_size, second_size, data):
		first = data.draw(st.integers(0, max(first_size - 1, 0)))
		second = data.draw(st.integers(0, second_size - 1))
		assert unpair_index(pair_index(first, second, second_size), second_size) == (first, second)

	def test_product_projections(self):
		carrier, first, second = product(FinSet(2), FinSet(3))
		assert carrier.size == 6
		assert first.table == (0, 0, 0, 1, 1, 1)
		assert second.table == (0, 1, 2, 0, 1, 2)

	def test_coproduct_left_first(self):
		carrier, left, right = coproduct(FinSet(2), FinSet(1))
		assert carrier.size == 3
		assert left.table == (0, 1)
		assert right.table == (2,)

	def test_terminal(self):
		assert terminal() == FinSet.singleton()
		assert bang(FinSet(3)).table == (0, 0, 0)

	def test_equalizer(self):
		carrier, inclusion = equalizer(fun(3, 2, (0, 1, 1)), fun(3, 2, (0, 0, 1)))
		assert carrier.size == 2
		assert inclusion.table == (0, 2)


class TestPullback:
	def test_over_a_singleton_is_the_product(self):
		carrier, first, second, pairs = pullback(fun(2, 1, (0, 0)), fun(1, 1, (0,)))
		assert carrier.size == 2
		assert pairs == ((0, 0), (1, 0))

	def test_kernel_pair_of_identity(self):
		identity = FinFun.identity(FinSet(2))
		carrier, first, second, pairs = pullback(identity, identity)
		assert pairs == ((0, 0), (1, 1))

	def test_single_pair(self):
		carrier, first, second, pairs = pullback(fun(3, 2, (0, 0, 1)), fun(1, 2, (1,)))
		assert carrier.size == 1
		assert pairs == ((2, 0),)

	def test_mismatched_codomains(self):
		with pytest.raises(InputException):
			pullback(fun(2, 2, (0, 1)), fun(2, 3, (0, 1)))

	@given(finsets(0, 3), finsets(1, 3), st.data())
	def test_square_commutes_and_pairs_are_ordered(self, dom, cod, data):
		f = data.draw(functions(dom, cod))
		g = data.draw(functions(data.draw(finsets(0, 3)), cod))
		carrier, first, second, pairs = pullback(f, g)
		assert f.after(first) == g.after(second)
		assert list(pairs) == sorted(pairs)
		assert all(f(x) == g(y) for x, y in pairs)

	@given(finsets(0, 2), finsets(1, 2), st.data())
	def test_universal_property(self, dom, cod, data):
		f = data.draw(functions(dom, cod))
		g = data.draw(functions(data.draw(finsets(0, 2)), cod))
		assert check_pullback_universal(f, g, max_size=2)


class TestCoequalizer:
	def test_equal_functions(self):
		f = fun(2, 3, (0, 2))
		carrier, quotient, classes = coequalizer(f, f)
		assert carrier.size == 3
		assert quotient == FinFun.identity(FinSet(3))

	def test_two_points_glued(self):
		carrier, quotient, classes = coequalizer(fun(1, 2, (0,)), fun(1, 2, (1,)))
		assert carrier.size == 1

	def test_chain_collapses(self):
		carrier, quotient, classes = coequalizer(fun(2, 3, (0, 1)), fun(2, 3, (1, 2)))
		assert carrier.size == 1
		assert classes == ((0, 1, 2),)

	def test_classes_ordered_by_least_element(self):
		carrier, quotient, classes = coequalizer(fun(1, 4, (3,)), fun(1, 4, (1,)))
		assert classes == ((0,), (1, 3), (2,))
		assert quotient.table == (0, 1, 2, 1)

	def test_mismatched_boundaries(self):
		with pytest.raises(InputException):
			coequalizer(fun(1, 2, (0,)), fun(2, 2, (0, 1)))

	@given(finsets(0, 2), finsets(1, 4), st.data())
	def test_universal_property(self, dom, cod, data):
		f = data.draw(functions(dom, cod))
		g = data.draw(functions(dom, cod))
		carrier, quotient, classes = coequalizer(f, g)
		assert quotient.is_surjective()
		assert quotient.after(f) == quotient.after(g)
		assert check_coequalizer_universal(f, g, max_size=3)
