#pragma once

/*
 * Color alphabets for the two supported families of monomial bases.
 *
 * A "color" indexes one generator x_gamma(-r) of a monomial.  For family A
 * of rank l with distinguished node m, the colors are the pairs (i,j) with
 * 1 <= i <= m <= j <= l; the color (i,j) carries the weight e_i + ... + e_j
 * (one unit on each simple-root coordinate between i and j).  For family D
 * of rank l (node 1 distinguished), the colors come in a barred series
 * b2..bl and an unbarred series ul..u2; their weights follow the fixed
 * table encoded in color_weight below.  Two transient "tilde" colors t2 and
 * tl exist only inside the pairing transforms of the D4 merge/split routines
 * and never appear in user-facing monomials.
 *
 * The linear order on colors and the two-argument energy function E(a, b)
 * drive every admissibility check downstream: adjacent factors of a monomial
 * must satisfy r_{t+1} - r_t >= E(color_{t+1}, color_t).
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fschar {

enum class Family { TypeA, TypeD };

using Weight = std::vector<long long>;

/* theta(n) = 0 for n < 0 and 1 for n >= 0: the step function used by the
 * energy tables and by the initial-condition bookkeeping. */
inline int theta(long long n) { return n >= 0 ? 1 : 0; }

struct AlgebraSpec {
	Family family = Family::TypeA;
	int rank = 1;    /* l */
	int m = 1;       /* distinguished node; always 1 for family D */

	static AlgebraSpec type_a(int rank, int m)
	{
		AlgebraSpec s{Family::TypeA, rank, m};
		s.validate();
		return s;
	}

	static AlgebraSpec type_d(int rank)
	{
		AlgebraSpec s{Family::TypeD, rank, 1};
		s.validate();
		return s;
	}

	void validate() const
	{
		if (family == Family::TypeA) {
			if (rank < 1)
				throw std::invalid_argument("family A requires rank >= 1");
			if (m < 1 || m > rank)
				throw std::invalid_argument(
					"family A node must lie in 1..rank");
		} else {
			if (rank < 4)
				throw std::invalid_argument("family D requires rank >= 4");
			if (m != 1)
				throw std::invalid_argument("family D supports node 1 only");
		}
	}

	friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b)
	{
		return a.family == b.family && a.rank == b.rank && a.m == b.m;
	}
};

struct Color {
	enum class Kind { Pair, Barred, Unbarred, Tilde };

	Kind kind = Kind::Pair;
	int i = 0;
	int j = 0;   /* used by Pair only */

	static Color pair(int i, int j) { return Color{Kind::Pair, i, j}; }
	static Color barred(int i) { return Color{Kind::Barred, i, 0}; }
	static Color unbarred(int i) { return Color{Kind::Unbarred, i, 0}; }
	static Color tilde(int i) { return Color{Kind::Tilde, i, 0}; }

	bool is_tilde() const { return kind == Kind::Tilde; }

	friend bool operator==(const Color& a, const Color& b)
	{
		return a.kind == b.kind && a.i == b.i && a.j == b.j;
	}
	friend bool operator!=(const Color& a, const Color& b)
	{
		return !(a == b);
	}
};

inline void check_color(const AlgebraSpec& spec, const Color& c,
						bool allow_tilde = false)
{
	switch (c.kind) {
	case Color::Kind::Pair:
		if (spec.family != Family::TypeA)
			throw std::invalid_argument("pair color outside family A");
		if (c.i < 1 || c.i > spec.m || c.j < spec.m || c.j > spec.rank)
			throw std::invalid_argument("pair color indices out of range");
		return;
	case Color::Kind::Barred:
	case Color::Kind::Unbarred:
		if (spec.family != Family::TypeD)
			throw std::invalid_argument("barred/unbarred color outside family D");
		if (c.i < 2 || c.i > spec.rank)
			throw std::invalid_argument("color index must lie in 2..rank");
		return;
	case Color::Kind::Tilde:
		if (!allow_tilde)
			throw std::invalid_argument(
				"tilde colors are transient and not allowed here");
		if (spec.family != Family::TypeD ||
			(c.i != 2 && c.i != spec.rank))
			throw std::invalid_argument("tilde color index must be 2 or rank");
		return;
	}
	throw std::logic_error("check_color: unreachable");
}

/* Position of a color in the descending linear order (0 = greatest color).
 * Family A descends as (1,l), (1,l-1), ..., (1,m), (2,l), ..., (m,m):
 * smaller row index first, larger column index first within a row.
 * Family D descends as  t2 > u2 > u3 > ... > ul > tl > bl > ... > b2;
 * without the transient tilde entries this is u2 > ... > ul > bl > ... > b2. */
inline int color_desc_index(const AlgebraSpec& spec, const Color& c)
{
	check_color(spec, c, /*allow_tilde=*/true);
	if (spec.family == Family::TypeA)
		return (c.i - 1) * (spec.rank - spec.m + 1) + (spec.rank - c.j);
	int l = spec.rank;
	switch (c.kind) {
	case Color::Kind::Tilde:
		return c.i == 2 ? 0 : l;
	case Color::Kind::Unbarred:
		return c.i - 1;              /* u2 -> 1, ..., ul -> l-1 */
	case Color::Kind::Barred:
		return 2 * l + 1 - c.i;      /* bl -> l+1, ..., b2 -> 2l-1 */
	default:
		throw std::logic_error("color_desc_index: unreachable");
	}
}

inline bool color_less(const AlgebraSpec& spec, const Color& a, const Color& b)
{
	return color_desc_index(spec, a) > color_desc_index(spec, b);
}

inline bool color_less_eq(const AlgebraSpec& spec, const Color& a,
						  const Color& b)
{
	return color_desc_index(spec, a) >= color_desc_index(spec, b);
}

/* All colors of the alphabet in descending order (no tilde entries). */
inline std::vector<Color> all_colors(const AlgebraSpec& spec)
{
	std::vector<Color> out;
	if (spec.family == Family::TypeA) {
		for (int i = 1; i <= spec.m; ++i)
			for (int j = spec.rank; j >= spec.m; --j)
				out.push_back(Color::pair(i, j));
	} else {
		for (int i = 2; i <= spec.rank; ++i)
			out.push_back(Color::unbarred(i));
		for (int i = spec.rank; i >= 2; --i)
			out.push_back(Color::barred(i));
	}
	return out;
}

/* Weight of a color on the simple-root coordinates (length = rank). */
inline Weight color_weight(const AlgebraSpec& spec, const Color& c)
{
	check_color(spec, c);
	int l = spec.rank;
	Weight w(static_cast<std::size_t>(l), 0);
	if (spec.family == Family::TypeA) {
		for (int t = c.i; t <= c.j; ++t)
			w[t - 1] = 1;
		return w;
	}
	if (c.kind == Color::Kind::Barred) {
		/* bi carries one unit on coordinates 1..i-1. */
		for (int t = 1; t <= c.i - 1; ++t)
			w[t - 1] = 1;
		return w;
	}
	/* Unbarred ui: one unit on 1..i-1, two units on i..l-2, one unit on
	 * each of the two fork nodes l-1 and l -- except that ul skips node
	 * l-1 entirely (it runs through the fork node l instead). */
	for (int t = 1; t <= c.i - 1; ++t)
		w[t - 1] = 1;
	for (int t = c.i; t <= l - 2; ++t)
		w[t - 1] = 2;
	w[l - 2] = (c.i == l) ? 0 : 1;
	w[l - 1] = 1;
	return w;
}

/* Energy E(a, b) between the left neighbor a = color_{t+1} and the right
 * neighbor b = color_t of adjacent factors. */
inline int energy(const AlgebraSpec& spec, const Color& a, const Color& b)
{
	check_color(spec, a);
	check_color(spec, b);
	if (spec.family == Family::TypeA)
		return theta(b.i - a.i) + theta(a.j - b.j);

	int l = spec.rank;
	bool a_less = color_less(spec, a, b);
	if (a == Color::barred(2) && b == Color::unbarred(2))
		return 0;
	if (a == Color::unbarred(l) && b == Color::barred(l))
		return 1;
	return a_less ? 1 : 2;
}

/* Composite weight carried by one barred/unbarred pair of the same index:
 * u_i + b_i is independent of i; on the root coordinates it reads
 * (2, ..., 2, 1, 1). */
inline Weight composite_pair_weight(const AlgebraSpec& spec)
{
	if (spec.family != Family::TypeD)
		throw std::invalid_argument("composite_pair_weight: family D only");
	Weight w(static_cast<std::size_t>(spec.rank), 2);
	w[spec.rank - 2] = 1;
	w[spec.rank - 1] = 1;
	return w;
}

/* Family-D coordinates of a weight on the barred colors plus the composite
 * pair: alpha = sum_i mbar[i] * b_i + m0 * (u2 + b2).  Also carries the
 * per-group deficiencies mgroup[j] (j = 2..rank-1) that measure how many
 * composite pairs each color group is forced to absorb, and their total. */
struct DCoords {
	std::vector<long long> mbar;    /* indexed 2..rank (slots 0,1 unused) */
	long long m0 = 0;
	std::vector<long long> mgroup;  /* indexed 2..rank-1 */
	long long mtotal = 0;

	long long mprime() const { return mgroup[2]; }          /* group 2 */
	long long msecond() const                                /* the rest */
	{
		long long s = 0;
		for (std::size_t j = 3; j < mgroup.size(); ++j)
			s += mgroup[j];
		return s;
	}
};

inline DCoords weight_to_mcoords(const AlgebraSpec& spec, const Weight& n)
{
	if (spec.family != Family::TypeD)
		throw std::invalid_argument("weight_to_mcoords: family D only");
	int l = spec.rank;
	if (n.size() != static_cast<std::size_t>(l))
		throw std::invalid_argument("weight_to_mcoords: bad weight length");
	DCoords d;
	d.mbar.assign(static_cast<std::size_t>(l) + 1, 0);
	for (int i = 2; i <= l - 2; ++i)
		d.mbar[i] = n[i - 2] - n[i - 1];
	d.mbar[l - 1] = n[l - 3] - n[l - 2] - n[l - 1];
	d.mbar[l] = n[l - 2] - n[l - 1];
	d.m0 = n[l - 1];
	d.mgroup.assign(static_cast<std::size_t>(l), 0);
	d.mgroup[2] = std::max(0LL, -d.mbar[2]) + std::max(0LL, -d.mbar[l]);
	for (int j = 3; j <= l - 1; ++j)
		d.mgroup[j] = std::max(0LL, -d.mbar[j]);
	d.mtotal = 0;
	for (int j = 2; j <= l - 1; ++j)
		d.mtotal += d.mgroup[j];
	return d;
}

/* True iff the weight is a nonnegative integer combination of colors.
 * Family A: the chain condition 0 <= n_1 <= ... <= n_m >= ... >= n_l >= 0.
 * Family D: all coordinates nonnegative and the composite-pair budget n_l
 * covers the forced per-group deficiencies. */
inline bool realizable(const AlgebraSpec& spec, const Weight& n)
{
	if (n.size() != static_cast<std::size_t>(spec.rank))
		throw std::invalid_argument("realizable: bad weight length");
	for (long long v : n)
		if (v < 0)
			return false;
	if (spec.family == Family::TypeA) {
		for (int t = 1; t < spec.m; ++t)
			if (n[t - 1] > n[t])
				return false;
		for (int t = spec.m; t < spec.rank; ++t)
			if (n[t - 1] < n[t])
				return false;
		return true;
	}
	DCoords d = weight_to_mcoords(spec, n);
	return d.m0 >= d.mtotal;
}

/* Split a family-D (rank 4) weight into the part carried by the color group
 * {b2, b4, u4, u2} and the complementary part carried by {b3, u3}, with the
 * group-2 side absorbing exactly i + mprime composite pairs:
 *     alpha' = mbar2 * w(b2) + mbar4 * w(b4) + (i + mprime) * w(u2 + b2),
 *     alpha'' = alpha - alpha'.
 * Valid for 0 <= i <= n_4 - mprime - msecond. */
inline std::pair<Weight, Weight> alpha_split(const AlgebraSpec& spec,
											 const Weight& n, long long i)
{
	if (spec.family != Family::TypeD || spec.rank != 4)
		throw std::invalid_argument("alpha_split: family D rank 4 only");
	DCoords d = weight_to_mcoords(spec, n);
	if (i < 0 || i > d.m0 - d.mprime() - d.msecond())
		throw std::invalid_argument("alpha_split: index outside range");
	long long c = i + d.mprime();
	Weight b2 = color_weight(spec, Color::barred(2));
	Weight b4 = color_weight(spec, Color::barred(4));
	Weight pair = composite_pair_weight(spec);
	Weight a1(4, 0), a2(4, 0);
	for (int t = 0; t < 4; ++t) {
		a1[t] = d.mbar[2] * b2[t] + d.mbar[4] * b4[t] + c * pair[t];
		a2[t] = n[t] - a1[t];
	}
	return {a1, a2};
}

/* Text forms: family A "(i,j)"; family D "b3" / "u3" (and transient "t2"). */
inline std::string color_to_text(const Color& c)
{
	switch (c.kind) {
	case Color::Kind::Pair:
		return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
	case Color::Kind::Barred:
		return "b" + std::to_string(c.i);
	case Color::Kind::Unbarred:
		return "u" + std::to_string(c.i);
	case Color::Kind::Tilde:
		return "t" + std::to_string(c.i);
	}
	return "?";
}

inline std::optional<Color> color_from_text(const std::string& s)
{
	auto parse_index = [](const std::string& t) -> std::optional<int> {
		if (t.empty())
			return std::nullopt;
		for (char ch : t)
			if (ch < '0' || ch > '9')
				return std::nullopt;
		try {
			return std::stoi(t);
		} catch (const std::exception&) {
			return std::nullopt;
		}
	};
	if (s.size() >= 2 && (s[0] == 'b' || s[0] == 'u' || s[0] == 't')) {
		auto idx = parse_index(s.substr(1));
		if (!idx)
			return std::nullopt;
		if (s[0] == 'b')
			return Color::barred(*idx);
		if (s[0] == 'u')
			return Color::unbarred(*idx);
		return Color::tilde(*idx);
	}
	if (s.size() >= 5 && s.front() == '(' && s.back() == ')') {
		std::string body = s.substr(1, s.size() - 2);
		auto comma = body.find(',');
		if (comma == std::string::npos)
			return std::nullopt;
		auto i = parse_index(body.substr(0, comma));
		auto j = parse_index(body.substr(comma + 1));
		if (!i || !j)
			return std::nullopt;
		return Color::pair(*i, *j);
	}
	return std::nullopt;
}

inline Weight add_weights(const Weight& a, const Weight& b)
{
	if (a.size() != b.size())
		throw std::invalid_argument("add_weights: length mismatch");
	Weight w(a.size());
	for (std::size_t t = 0; t < a.size(); ++t)
		w[t] = a[t] + b[t];
	return w;
}

inline Weight sub_weights(const Weight& a, const Weight& b)
{
	if (a.size() != b.size())
		throw std::invalid_argument("sub_weights: length mismatch");
	Weight w(a.size());
	for (std::size_t t = 0; t < a.size(); ++t)
		w[t] = a[t] - b[t];
	return w;
}

inline bool is_zero_weight(const Weight& w)
{
	for (long long v : w)
		if (v != 0)
			return false;
	return true;
}

inline std::string weight_to_text(const Weight& w)
{
	std::string s;
	for (std::size_t t = 0; t < w.size(); ++t) {
		if (t)
			s += ",";
		s += std::to_string(w[t]);
	}
	return s;
}

} /* namespace fschar */
