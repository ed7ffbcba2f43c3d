#include "doctest.h"

#include "fschar/monomial.hpp"

using namespace fschar;

namespace {

const AlgebraSpec kD4 = AlgebraSpec::type_d(4);
const AlgebraSpec kA3 = AlgebraSpec::type_a(3, 2);

} /* namespace */

TEST_CASE("construction sorts factors and computes invariants")
{
	Monomial x = Monomial::make(
		kD4, {Factor{Color::barred(2), 3}, Factor{Color::unbarred(2), 1}});
	CHECK(x.size() == 2);
	CHECK(x.degree() == 4);
	/* storage is ascending in the exponent */
	CHECK(x.factors()[0].r == 1);
	CHECK(x.factors()[1].r == 3);
	/* weight = sum of color weights: u2 + b2 */
	CHECK(x.weight() == Weight{2, 2, 1, 1});

	Monomial empty(kD4);
	CHECK(empty.empty());
	CHECK(empty.degree() == 0);
	CHECK(empty.weight() == Weight{0, 0, 0, 0});
}

TEST_CASE("from_sorted insists on canonical order")
{
	std::vector<Factor> good = {Factor{Color::unbarred(2), 1},
								Factor{Color::barred(2), 1}};
	CHECK_NOTHROW(Monomial::from_sorted(kD4, good));
	/* same exponent but the descending positions out of order */
	std::vector<Factor> swapped = {Factor{Color::barred(2), 1},
								   Factor{Color::unbarred(2), 1}};
	CHECK_THROWS_AS(Monomial::from_sorted(kD4, swapped),
					std::invalid_argument);
	/* duplicate factors are rejected even when otherwise sorted */
	std::vector<Factor> dup = {Factor{Color::barred(2), 1},
							   Factor{Color::barred(2), 1}};
	CHECK_THROWS_AS(Monomial::from_sorted(kD4, dup), std::invalid_argument);
}

TEST_CASE("difference conditions between adjacent factors")
{
	/* u2 then b2 at the same exponent: the fused pair, gap 0 required */
	CHECK(satisfies_dc(Monomial::make(kD4, {Factor{Color::unbarred(2), 1},
											Factor{Color::barred(2), 1}})));
	/* the rank-indexed pair tolerates gap 1 in either order */
	CHECK(satisfies_dc(Monomial::make(kD4, {Factor{Color::barred(4), 2},
											Factor{Color::unbarred(4), 3}})));
	CHECK(satisfies_dc(Monomial::make(kD4, {Factor{Color::unbarred(4), 2},
											Factor{Color::barred(4), 3}})));
	/* u3 then b3 works at gap 1, but b3 then u3 needs gap 2 */
	CHECK(satisfies_dc(Monomial::make(kD4, {Factor{Color::unbarred(3), 2},
											Factor{Color::barred(3), 3}})));
	CHECK(!satisfies_dc(Monomial::make(kD4, {Factor{Color::barred(3), 2},
											 Factor{Color::unbarred(3), 3}})));
	/* same color twice always needs gap 2 */
	CHECK(!satisfies_dc(Monomial::make(kD4, {Factor{Color::barred(3), 2},
											 Factor{Color::barred(3), 3}})));
	CHECK(satisfies_dc(Monomial::make(kD4, {Factor{Color::barred(3), 1},
											Factor{Color::barred(3), 3}})));
	/* type A: (2,2) nests inside (1,3) at the same exponent, but the
	 * overlapping pair (1,2) cannot share an exponent with (1,3) */
	CHECK(satisfies_dc(Monomial::make(kA3, {Factor{Color::pair(1, 3), 2},
											Factor{Color::pair(2, 2), 2}})));
	CHECK(!satisfies_dc(Monomial::make(kA3, {Factor{Color::pair(1, 2), 2},
											 Factor{Color::pair(1, 3), 2}})));
}

TEST_CASE("initial conditions gate the first factor")
{
	Monomial at1 = Monomial::make(kD4, {Factor{Color::barred(3), 1}});
	Monomial at2 = Monomial::make(kD4, {Factor{Color::barred(3), 2}});
	Monomial empty(kD4);

	CHECK(satisfies_ic(at1, InitialCondition::all()));
	CHECK(satisfies_ic(at2, InitialCondition::never()));
	CHECK(!satisfies_ic(at1, InitialCondition::never()));
	CHECK(satisfies_ic(empty, InitialCondition::never()));

	/* an explicit first-color list */
	InitialCondition first =
		InitialCondition::first_set({Color::barred(2), Color::barred(3)});
	CHECK(satisfies_ic(at1, first));
	CHECK(!satisfies_ic(
		Monomial::make(kD4, {Factor{Color::barred(4), 1}}), first));
	CHECK(satisfies_ic(
		Monomial::make(kD4, {Factor{Color::barred(4), 2}}), first));

	/* type A level condition on the first color (i1,j1): vacuum allows
	 * everything; k on the left side needs i1 > k; k on the right side
	 * needs j1 < k; k at the peak allows nothing at exponent 1 */
	Monomial a1 = Monomial::make(kA3, {Factor{Color::pair(1, 2), 1}});
	CHECK(satisfies_ic(a1, InitialCondition::lambda(0)));
	CHECK(!satisfies_ic(a1, InitialCondition::lambda(1))); /* i1 = 1 */
	CHECK(!satisfies_ic(a1, InitialCondition::lambda(2))); /* peak */
	CHECK(satisfies_ic(a1, InitialCondition::lambda(3)));  /* j1 = 2 < 3 */
	Monomial a2 = Monomial::make(kA3, {Factor{Color::pair(2, 3), 1}});
	CHECK(satisfies_ic(a2, InitialCondition::lambda(1)));  /* i1 = 2 > 1 */
	CHECK(!satisfies_ic(a2, InitialCondition::lambda(3))); /* j1 = 3 */
	/* the window condition bounds the first pair */
	CHECK(satisfies_ic(a1, InitialCondition::pair_window(1, 2)));
	CHECK(!satisfies_ic(a1, InitialCondition::pair_window(2, 3)));
	CHECK(satisfies_ic(a2, InitialCondition::pair_window(2, 3)));

	/* family D level conditions */
	Monomial d1 = Monomial::make(kD4, {Factor{Color::barred(3), 1}});
	Monomial d2 = Monomial::make(kD4, {Factor{Color::unbarred(4), 1}});
	Monomial d3 = Monomial::make(kD4, {Factor{Color::unbarred(2), 1}});
	CHECK(satisfies_ic(d1, InitialCondition::lambda(0)));
	CHECK(!satisfies_ic(d1, InitialCondition::lambda(1)));
	CHECK(satisfies_ic(d1, InitialCondition::lambda(3))); /* b2..b3, u4 */
	CHECK(satisfies_ic(d2, InitialCondition::lambda(3)));
	CHECK(!satisfies_ic(d3, InitialCondition::lambda(3)));
	CHECK(satisfies_ic(d1, InitialCondition::lambda(4))); /* barred only */
	CHECK(!satisfies_ic(d2, InitialCondition::lambda(4)));
}

TEST_CASE("admissible = difference conditions + initial condition")
{
	Monomial x = Monomial::make(kD4, {Factor{Color::unbarred(2), 1},
									  Factor{Color::barred(2), 1}});
	CHECK(admissible(x, InitialCondition::all()));
	CHECK(!admissible(x, InitialCondition::never()));
}

TEST_CASE("staircase transforms and partition addition")
{
	std::vector<Factor> f = {Factor{Color::unbarred(3), 1},
							 Factor{Color::barred(4), 3},
							 Factor{Color::barred(2), 4}};
	auto up = staircase_up(f); /* subtract 0,1,2,... */
	CHECK(up[0].r == 1);
	CHECK(up[1].r == 2);
	CHECK(up[2].r == 2);
	auto down = staircase_down(up);
	CHECK(down[0].r == f[0].r);
	CHECK(down[1].r == f[1].r);
	CHECK(down[2].r == f[2].r);

	auto shifted = shift_exponents(f, 2);
	CHECK(shifted[0].r == 3);
	CHECK(shifted[1].r == 5);
	CHECK(shifted[2].r == 6);

	auto padded = apply_partition(f, {0, 1, 3});
	CHECK(padded[0].r == 1);
	CHECK(padded[1].r == 4);
	CHECK(padded[2].r == 7);

	/* a shorter partition pads with zeros on the low side, so its parts
	 * land on the factors with the largest exponents */
	auto tail = apply_partition(f, {1});
	CHECK(tail[0].r == 1);
	CHECK(tail[1].r == 3);
	CHECK(tail[2].r == 5);

	CHECK_THROWS_AS(apply_partition(f, {1, 0, 0}), std::invalid_argument);
	CHECK_THROWS_AS(apply_partition(f, {0, 1, 2, 3}), std::invalid_argument);
	CHECK_THROWS_AS(apply_partition(f, {-1, 0, 0}), std::invalid_argument);
}

TEST_CASE("text form round trips, largest exponent first")
{
	Monomial x = Monomial::make(kD4, {Factor{Color::unbarred(2), 1},
									  Factor{Color::barred(2), 1},
									  Factor{Color::unbarred(3), 3}});
	CHECK(monomial_to_text(x) == "u3(-3) b2(-1) u2(-1)");
	CHECK(monomial_from_text(kD4, "u3(-3) b2(-1) u2(-1)") == x);
	CHECK(monomial_to_text(Monomial(kD4)) == "1");
	CHECK(monomial_from_text(kD4, "1") == Monomial(kD4));
	CHECK_THROWS_AS(monomial_from_text(kD4, "q7(-1)"),
					std::invalid_argument);

	Monomial a = Monomial::make(kA3, {Factor{Color::pair(1, 3), 2},
									  Factor{Color::pair(2, 2), 2}});
	CHECK(monomial_to_text(a) == "(2,2)(-2) (1,3)(-2)");
	CHECK(monomial_from_text(kA3, "(2,2)(-2) (1,3)(-2)") == a);
}

TEST_CASE("monomial_less is a strict total order on small sets")
{
	std::vector<Monomial> xs = {
		Monomial(kD4),
		Monomial::make(kD4, {Factor{Color::unbarred(2), 1}}),
		Monomial::make(kD4, {Factor{Color::barred(2), 1}}),
		Monomial::make(kD4, {Factor{Color::unbarred(2), 2}}),
		Monomial::make(kD4, {Factor{Color::unbarred(2), 1},
							 Factor{Color::barred(2), 1}}),
	};
	for (std::size_t i = 0; i < xs.size(); ++i)
		for (std::size_t j = 0; j < xs.size(); ++j) {
			if (i == j)
				CHECK(!monomial_less(xs[i], xs[j]));
			else
				CHECK(monomial_less(xs[i], xs[j]) !=
					  monomial_less(xs[j], xs[i]));
		}
	/* fewer factors sort first; ties break on exponent then color */
	CHECK(monomial_less(xs[0], xs[1]));
	CHECK(monomial_less(xs[1], xs[2])); /* u2 above b2 in the order */
	CHECK(monomial_less(xs[2], xs[3])); /* exponent 1 before exponent 2 */
	CHECK(monomial_less(xs[3], xs[4])); /* one factor before two */
}

TEST_CASE("minimal monomial of a path follows the energy staircase")
{
	/* unit start: first exponent 1, then climb by the energies */
	Monomial m1 = minimal_monomial(
		kA3, {Color::pair(1, 3), Color::pair(2, 2)}, StartRule::unit());
	CHECK(monomial_to_text(m1) == "(2,2)(-1) (1,3)(-1)");
	Monomial m2 = minimal_monomial(
		kA3, {Color::pair(2, 2), Color::pair(1, 3)}, StartRule::unit());
	CHECK(monomial_to_text(m2) == "(1,3)(-3) (2,2)(-1)");
	CHECK(path_of(m2) ==
		  std::vector<Color>{Color::pair(2, 2), Color::pair(1, 3)});
}
