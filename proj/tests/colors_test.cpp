#include "doctest.h"

#include <set>

#include "fschar/colors.hpp"

using namespace fschar;

TEST_CASE("type A alphabet: pairs around the peak")
{
	AlgebraSpec s = AlgebraSpec::type_a(3, 2);
	auto colors = all_colors(s);
	REQUIRE(colors.size() == 4);
	/* listed from the top of the descending order downwards */
	CHECK(colors[0] == Color::pair(1, 3));
	CHECK(colors[1] == Color::pair(1, 2));
	CHECK(colors[2] == Color::pair(2, 3));
	CHECK(colors[3] == Color::pair(2, 2));
	for (int t = 0; t < 4; ++t)
		CHECK(color_desc_index(s, colors[static_cast<std::size_t>(t)]) == t);

	/* the peak column must contain the peak: rank*(peak count) pairs */
	CHECK(all_colors(AlgebraSpec::type_a(4, 1)).size() == 4);
	CHECK(all_colors(AlgebraSpec::type_a(4, 2)).size() == 6);
}

TEST_CASE("type A color weights cover the nodes between the endpoints")
{
	AlgebraSpec s = AlgebraSpec::type_a(3, 2);
	CHECK(color_weight(s, Color::pair(1, 3)) == Weight{1, 1, 1});
	CHECK(color_weight(s, Color::pair(1, 2)) == Weight{1, 1, 0});
	CHECK(color_weight(s, Color::pair(2, 3)) == Weight{0, 1, 1});
	CHECK(color_weight(s, Color::pair(2, 2)) == Weight{0, 1, 0});
}

TEST_CASE("type A energy table at rank 3, peak 2")
{
	AlgebraSpec s = AlgebraSpec::type_a(3, 2);
	auto colors = all_colors(s);
	/* rows: later color; columns: earlier color */
	int expect[4][4] = {
		{2, 2, 2, 2}, /* (1,3) after anything needs a gap of 2 */
		{1, 2, 1, 2},
		{1, 1, 2, 2},
		{0, 1, 1, 2}, /* (2,2) nests inside (1,3) at the same exponent */
	};
	for (int x = 0; x < 4; ++x)
		for (int y = 0; y < 4; ++y)
			CHECK(energy(s, colors[static_cast<std::size_t>(x)],
						 colors[static_cast<std::size_t>(y)]) ==
				  expect[x][y]);
}

TEST_CASE("type D alphabet, order, and weights at rank 4")
{
	AlgebraSpec s = AlgebraSpec::type_d(4);
	auto colors = all_colors(s);
	REQUIRE(colors.size() == 6);
	CHECK(colors[0] == Color::unbarred(2));
	CHECK(colors[1] == Color::unbarred(3));
	CHECK(colors[2] == Color::unbarred(4));
	CHECK(colors[3] == Color::barred(4));
	CHECK(colors[4] == Color::barred(3));
	CHECK(colors[5] == Color::barred(2));

	/* positions in the descending order (the transient index 0 is
	 * reserved for the fused color t2) */
	int desc[] = {1, 2, 3, 5, 6, 7};
	for (std::size_t t = 0; t < colors.size(); ++t)
		CHECK(color_desc_index(s, colors[t]) == desc[t]);

	/* color_less runs opposite to the descending list */
	CHECK(color_less(s, Color::barred(2), Color::unbarred(2)));
	CHECK(color_less(s, Color::barred(3), Color::barred(4)));
	CHECK(!color_less(s, Color::unbarred(2), Color::barred(2)));

	CHECK(color_weight(s, Color::barred(2)) == Weight{1, 0, 0, 0});
	CHECK(color_weight(s, Color::barred(3)) == Weight{1, 1, 0, 0});
	CHECK(color_weight(s, Color::barred(4)) == Weight{1, 1, 1, 0});
	CHECK(color_weight(s, Color::unbarred(4)) == Weight{1, 1, 0, 1});
	CHECK(color_weight(s, Color::unbarred(3)) == Weight{1, 1, 1, 1});
	CHECK(color_weight(s, Color::unbarred(2)) == Weight{1, 2, 1, 1});
}

TEST_CASE("type D energy table at rank 4")
{
	AlgebraSpec s = AlgebraSpec::type_d(4);
	auto colors = all_colors(s);
	/* rows: later color; columns: earlier color.  Two exceptional pairs:
	 * b2 after u2 fuses (gap 0), u4 after b4 interleaves (gap 1). */
	int expect[6][6] = {
		{2, 2, 2, 2, 2, 2}, /* u2 */
		{1, 2, 2, 2, 2, 2}, /* u3 */
		{1, 1, 2, 1, 2, 2}, /* u4 */
		{1, 1, 1, 2, 2, 2}, /* b4 */
		{1, 1, 1, 1, 2, 2}, /* b3 */
		{0, 1, 1, 1, 1, 2}, /* b2 */
	};
	for (int x = 0; x < 6; ++x)
		for (int y = 0; y < 6; ++y)
			CHECK(energy(s, colors[static_cast<std::size_t>(x)],
						 colors[static_cast<std::size_t>(y)]) ==
				  expect[x][y]);
}

TEST_CASE("realizability: type A needs a chain through the peak")
{
	AlgebraSpec s = AlgebraSpec::type_a(3, 2);
	CHECK(realizable(s, {1, 2, 1}));
	CHECK(realizable(s, {2, 2, 2}));
	CHECK(realizable(s, {0, 0, 0}));
	CHECK(!realizable(s, {2, 1, 0})); /* rises after the peak side */
	CHECK(!realizable(s, {0, 1, 2})); /* falls into the peak */

	AlgebraSpec e = AlgebraSpec::type_a(3, 1);
	CHECK(realizable(e, {3, 2, 2}));
	CHECK(!realizable(e, {1, 2, 2}));
}

TEST_CASE("realizability and coordinates for type D")
{
	AlgebraSpec s = AlgebraSpec::type_d(4);
	CHECK(realizable(s, {0, 0, 0, 0}));
	CHECK(realizable(s, {1, 1, 1, 1}));
	CHECK(realizable(s, {1, 2, 1, 1}));
	CHECK(realizable(s, {3, 3, 2, 1}));
	CHECK(!realizable(s, {0, 1, 0, 0})); /* nothing supplies the middle */
	CHECK(!realizable(s, {0, 0, 1, 1}));

	DCoords d = weight_to_mcoords(s, {1, 2, 1, 1});
	CHECK(d.mbar[2] == -1);
	CHECK(d.mbar[3] == 0);
	CHECK(d.mbar[4] == 0);
	CHECK(d.m0 == 1);
	CHECK(d.mgroup[2] == 1);
	CHECK(d.mgroup[3] == 0);
	CHECK(d.mtotal == 1);
	CHECK(d.mprime() == 1);
	CHECK(d.msecond() == 0);
}

TEST_CASE("splitting a type D weight between the two color groups")
{
	AlgebraSpec s = AlgebraSpec::type_d(4);

	Weight n = {2, 2, 1, 1};
	auto [a0, b0] = alpha_split(s, n, 0);
	CHECK(a0 == Weight{0, 0, 0, 0});
	CHECK(b0 == Weight{2, 2, 1, 1});
	auto [a1, b1] = alpha_split(s, n, 1);
	CHECK(a1 == Weight{2, 2, 1, 1});
	CHECK(b1 == Weight{0, 0, 0, 0});

	Weight m = {3, 3, 2, 1};
	auto [c0, d0] = alpha_split(s, m, 0);
	CHECK(c0 == Weight{1, 1, 1, 0});
	CHECK(d0 == Weight{2, 2, 1, 1});
	auto [c1, d1] = alpha_split(s, m, 1);
	CHECK(c1 == Weight{3, 3, 2, 1});
	CHECK(d1 == Weight{0, 0, 0, 0});

	/* the two halves always recombine to the original weight */
	for (long long i = 0; i <= 1; ++i) {
		auto [x, y] = alpha_split(s, m, i);
		CHECK(add_weights(x, y) == m);
	}
}

TEST_CASE("text forms round trip")
{
	CHECK(color_to_text(Color::pair(1, 3)) == "(1,3)");
	CHECK(color_to_text(Color::barred(2)) == "b2");
	CHECK(color_to_text(Color::unbarred(4)) == "u4");
	CHECK(color_to_text(Color::tilde(2)) == "t2");
	CHECK(color_from_text("(1,3)") == Color::pair(1, 3));
	CHECK(color_from_text("b2") == Color::barred(2));
	CHECK(color_from_text("u4") == Color::unbarred(4));
	CHECK(color_from_text("t2") == Color::tilde(2));
	CHECK(!color_from_text("x7").has_value());
	CHECK(!color_from_text("(1;3)").has_value());
	CHECK(weight_to_text({1, 2, 0}) == "1,2,0");
}

TEST_CASE("algebra validation rejects bad parameters")
{
	CHECK_THROWS_AS(AlgebraSpec::type_a(0, 1).validate(),
					std::invalid_argument);
	CHECK_THROWS_AS(AlgebraSpec::type_a(3, 4).validate(),
					std::invalid_argument);
	CHECK_THROWS_AS(AlgebraSpec::type_d(3).validate(),
					std::invalid_argument);
	CHECK_NOTHROW(AlgebraSpec::type_a(1, 1).validate());
	CHECK_NOTHROW(AlgebraSpec::type_d(4).validate());
	CHECK_NOTHROW(AlgebraSpec::type_d(6).validate());
}
