#pragma once

/*
 * Colored exponent monomials x_{c_n}(-r_n) ... x_{c_1}(-r_1) with r_1 the
 * smallest exponent.  Storage is positional: factor index t-1 holds the
 * t-th factor from the right, so exponents ascend along the vector.
 *
 * Canonical arrangement: exponents weakly ascend, and factors sharing an
 * exponent are ordered by strictly descending color as the position grows.
 * Every admissible monomial (one passing the adjacent-difference check) is
 * automatically canonical, because a zero energy gap only ever occurs when
 * the left neighbor's color is strictly below the right neighbor's.
 *
 * The admissibility predicates live here as well:
 *   - satisfies_dc: r_{t+1} - r_t >= E(c_{t+1}, c_t) for all adjacent pairs;
 *   - satisfies_ic: constrains which colors may carry the exponent 1 in the
 *     first (rightmost) slot, parameterized by an InitialCondition value.
 *
 * Transforms used by the combinatorial maps (staircase shifts, uniform
 * shifts, adding a partition to the exponents) operate on raw factor
 * vectors, because their intermediate stages may break canonicity or even
 * positivity of the exponents.
 */

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "colors.hpp"

namespace fschar {

struct Factor {
	Color color;
	long long r = 1;   /* the factor is x_color(-r) */

	friend bool operator==(const Factor& a, const Factor& b)
	{
		return a.color == b.color && a.r == b.r;
	}
};

/* Canonical storage order: ascending exponent; at equal exponents the
 * greater color comes first (descending color as position grows). */
inline bool factor_storage_less(const AlgebraSpec& spec, const Factor& a,
								const Factor& b)
{
	if (a.r != b.r)
		return a.r < b.r;
	return color_desc_index(spec, a.color) < color_desc_index(spec, b.color);
}

class Monomial {
public:
	/* The empty monomial (the identity). */
	explicit Monomial(const AlgebraSpec& spec) : spec_(spec)
	{
		spec_.validate();
	}

	/* Build from factors in any order; sorts into canonical storage.
	 * Requires every exponent >= 1 and no transient colors. */
	static Monomial make(const AlgebraSpec& spec, std::vector<Factor> factors)
	{
		std::sort(factors.begin(), factors.end(),
				  [&spec](const Factor& a, const Factor& b) {
					  return factor_storage_less(spec, a, b);
				  });
		return from_sorted(spec, std::move(factors));
	}

	/* Build from factors already in canonical storage order (ascending
	 * exponent, descending color at ties); throws if they are not.
	 * allow_transient admits tilde colors and nonpositive exponents for
	 * the intermediate stages of the pairing transforms. */
	static Monomial from_sorted(const AlgebraSpec& spec,
								std::vector<Factor> factors,
								bool allow_transient = false)
	{
		Monomial m(spec);
		for (const Factor& f : factors) {
			check_color(spec, f.color, /*allow_tilde=*/allow_transient);
			if (!allow_transient && f.r < 1)
				throw std::invalid_argument(
					"monomial exponents must be >= 1");
		}
		for (std::size_t t = 0; t + 1 < factors.size(); ++t)
			if (!factor_storage_less(spec, factors[t], factors[t + 1]))
				throw std::invalid_argument(
					"factors are not in canonical storage order");
		m.factors_ = std::move(factors);
		return m;
	}

	const AlgebraSpec& spec() const { return spec_; }
	const std::vector<Factor>& factors() const { return factors_; }
	std::size_t size() const { return factors_.size(); }
	bool empty() const { return factors_.empty(); }

	/* Total weight on the simple-root coordinates. */
	Weight weight() const
	{
		Weight w(static_cast<std::size_t>(spec_.rank), 0);
		for (const Factor& f : factors_)
			w = add_weights(w, color_weight(spec_, f.color));
		return w;
	}

	/* Total degree: the sum of the exponents. */
	long long degree() const
	{
		long long d = 0;
		for (const Factor& f : factors_)
			d += f.r;
		return d;
	}

	friend bool operator==(const Monomial& a, const Monomial& b)
	{
		return a.spec_ == b.spec_ && a.factors_ == b.factors_;
	}
	friend bool operator!=(const Monomial& a, const Monomial& b)
	{
		return !(a == b);
	}

private:
	AlgebraSpec spec_;
	std::vector<Factor> factors_;
};

/* Deterministic total order on monomials over one alphabet: by factor
 * count, then lexicographically on (exponent, descending-color position). */
inline bool monomial_less(const Monomial& a, const Monomial& b)
{
	if (a.size() != b.size())
		return a.size() < b.size();
	const AlgebraSpec& spec = a.spec();
	for (std::size_t t = 0; t < a.size(); ++t) {
		const Factor& fa = a.factors()[t];
		const Factor& fb = b.factors()[t];
		if (fa.r != fb.r)
			return fa.r < fb.r;
		int da = color_desc_index(spec, fa.color);
		int db = color_desc_index(spec, fb.color);
		if (da != db)
			return da < db;
	}
	return false;
}

/* Adjacent-difference admissibility. */
inline bool satisfies_dc(const Monomial& m)
{
	const auto& f = m.factors();
	for (std::size_t t = 0; t + 1 < f.size(); ++t)
		if (f[t + 1].r - f[t].r <
			energy(m.spec(), f[t + 1].color, f[t].color))
			return false;
	return true;
}

/*
 * Initial conditions restrict which colors may appear in the first slot
 * with exponent exactly 1; a first exponent >= 2 always passes.
 *
 *   AllColors          no restriction.
 *   Lambda(k)          family A: with distinguished node m, color (i1,j1)
 *                      passes iff (1 <= k <= m and i1 > k) or
 *                      (m <= k <= rank and j1 < k); k = 0 allows all.
 *                      family D: k = 0 allows all; k = 1 allows none;
 *                      k = rank-1 allows b2..b(rank-1) and u(rank);
 *                      k = rank allows every barred color.
 *   PairWindow(i,j)    family A: (i1,j1) passes iff i1 >= i and j1 <= j.
 *   Never              no color passes (exponent 1 is simply forbidden).
 *   FirstSet(S)        exactly the listed colors pass.
 */
struct InitialCondition {
	enum class Kind { AllColors, Lambda, PairWindow, Never, FirstSet };

	Kind kind = Kind::AllColors;
	int k = 0;
	int i = 0, j = 0;
	std::vector<Color> first;

	static InitialCondition all()
	{
		return InitialCondition{};
	}
	static InitialCondition lambda(int k)
	{
		InitialCondition ic;
		ic.kind = Kind::Lambda;
		ic.k = k;
		return ic;
	}
	static InitialCondition pair_window(int i, int j)
	{
		InitialCondition ic;
		ic.kind = Kind::PairWindow;
		ic.i = i;
		ic.j = j;
		return ic;
	}
	static InitialCondition never()
	{
		InitialCondition ic;
		ic.kind = Kind::Never;
		return ic;
	}
	static InitialCondition first_set(std::vector<Color> colors)
	{
		InitialCondition ic;
		ic.kind = Kind::FirstSet;
		ic.first = std::move(colors);
		return ic;
	}
};

inline bool first_color_allowed(const AlgebraSpec& spec,
								const InitialCondition& ic, const Color& c)
{
	switch (ic.kind) {
	case InitialCondition::Kind::AllColors:
		return true;
	case InitialCondition::Kind::Lambda:
		if (ic.k == 0)
			return true;
		if (spec.family == Family::TypeA) {
			if (ic.k < 0 || ic.k > spec.rank)
				throw std::invalid_argument("Lambda index out of range");
			return (ic.k <= spec.m && c.i > ic.k) ||
				   (ic.k >= spec.m && c.j < ic.k);
		}
		if (ic.k == 1)
			return false;
		if (ic.k == spec.rank - 1)
			return (c.kind == Color::Kind::Barred && c.i <= spec.rank - 1) ||
				   (c.kind == Color::Kind::Unbarred && c.i == spec.rank);
		if (ic.k == spec.rank)
			return c.kind == Color::Kind::Barred;
		throw std::invalid_argument(
			"Lambda index must be 0, 1, rank-1, or rank for family D");
	case InitialCondition::Kind::PairWindow:
		if (spec.family != Family::TypeA)
			throw std::invalid_argument("PairWindow applies to family A only");
		return c.i >= ic.i && c.j <= ic.j;
	case InitialCondition::Kind::Never:
		return false;
	case InitialCondition::Kind::FirstSet:
		for (const Color& s : ic.first)
			if (s == c)
				return true;
		return false;
	}
	throw std::logic_error("first_color_allowed: unreachable");
}

inline bool satisfies_ic(const Monomial& m, const InitialCondition& ic)
{
	if (m.empty())
		return true;
	const Factor& f1 = m.factors().front();
	if (f1.r >= 2)
		return true;
	return first_color_allowed(m.spec(), ic, f1.color);
}

inline bool admissible(const Monomial& m, const InitialCondition& ic)
{
	return satisfies_dc(m) && satisfies_ic(m, ic);
}

/* ---- positional transforms ------------------------------------------- */

/* Subtract the staircase: position t (1-based) loses t-1 from its
 * exponent.  Inverse of staircase_down. */
inline std::vector<Factor> staircase_up(std::vector<Factor> f)
{
	for (std::size_t t = 0; t < f.size(); ++t)
		f[t].r -= static_cast<long long>(t);
	return f;
}

/* Add the staircase: position t (1-based) gains t-1. */
inline std::vector<Factor> staircase_down(std::vector<Factor> f)
{
	for (std::size_t t = 0; t < f.size(); ++t)
		f[t].r += static_cast<long long>(t);
	return f;
}

/* Shift every exponent by the same amount (may be negative). */
inline std::vector<Factor> shift_exponents(std::vector<Factor> f,
										   long long k)
{
	for (Factor& x : f)
		x.r += k;
	return f;
}

/* Add a weakly increasing sequence of parts to the exponents, smallest
 * part on the smallest exponent.  Fewer parts than factors are admitted by
 * padding with zeros on the low side. */
inline std::vector<Factor> apply_partition(std::vector<Factor> f,
										   const std::vector<long long>& parts)
{
	if (parts.size() > f.size())
		throw std::invalid_argument("apply_partition: too many parts");
	for (std::size_t t = 0; t + 1 < parts.size(); ++t)
		if (parts[t] > parts[t + 1])
			throw std::invalid_argument(
				"apply_partition: parts must be weakly increasing");
	for (const long long p : parts)
		if (p < 0)
			throw std::invalid_argument("apply_partition: negative part");
	std::size_t pad = f.size() - parts.size();
	for (std::size_t t = 0; t < parts.size(); ++t)
		f[pad + t].r += parts[t];
	return f;
}

/* ---- minimal monomials of a color sequence --------------------------- */

/*
 * A color sequence c_1, ..., c_n (first slot first) determines a family of
 * admissible monomials; the minimal one takes the smallest legal first
 * exponent and then the tightest difference at every step:
 *     r_1 = start, r_t = r_{t-1} + E(c_t, c_{t-1}).
 * The start value depends on the variant of initial condition being
 * modeled; the rules below cover the cases the character identities need.
 */
struct StartRule {
	enum class Kind { Unit, ThetaRow, ThetaCol, MaxPair };

	Kind kind = Kind::Unit;
	int k = 0;
	int i = 0, j = 0;

	static StartRule unit() { return StartRule{}; }
	static StartRule theta_row(int k)
	{
		StartRule s;
		s.kind = Kind::ThetaRow;
		s.k = k;
		return s;
	}
	static StartRule theta_col(int k)
	{
		StartRule s;
		s.kind = Kind::ThetaCol;
		s.k = k;
		return s;
	}
	static StartRule max_pair(int i, int j)
	{
		StartRule s;
		s.kind = Kind::MaxPair;
		s.i = i;
		s.j = j;
		return s;
	}
};

inline long long start_exponent(const StartRule& rule, const Color& c1)
{
	switch (rule.kind) {
	case StartRule::Kind::Unit:
		return 1;
	case StartRule::Kind::ThetaRow:
		return 1 + theta(rule.k - c1.i);
	case StartRule::Kind::ThetaCol:
		return 1 + theta(c1.j - rule.k);
	case StartRule::Kind::MaxPair:
		return 1 + std::max(theta(rule.i - 1 - c1.i),
							theta(c1.j - rule.j - 1));
	}
	throw std::logic_error("start_exponent: unreachable");
}

inline Monomial minimal_monomial(const AlgebraSpec& spec,
								 const std::vector<Color>& colors,
								 const StartRule& rule = StartRule::unit())
{
	if (colors.empty())
		return Monomial(spec);
	std::vector<Factor> f;
	f.reserve(colors.size());
	f.push_back(Factor{colors[0], start_exponent(rule, colors[0])});
	for (std::size_t t = 1; t < colors.size(); ++t) {
		long long r = f.back().r + energy(spec, colors[t], colors[t - 1]);
		f.push_back(Factor{colors[t], r});
	}
	return Monomial::from_sorted(spec, std::move(f));
}

/* Color sequence of a monomial, first slot first. */
inline std::vector<Color> path_of(const Monomial& m)
{
	std::vector<Color> c;
	c.reserve(m.size());
	for (const Factor& f : m.factors())
		c.push_back(f.color);
	return c;
}

/* ---- text form -------------------------------------------------------- */

/* Written form, largest exponent on the left: "u2(-3) b2(-1)".  The empty
 * monomial prints as "1". */
inline std::string monomial_to_text(const Monomial& m)
{
	if (m.empty())
		return "1";
	std::string s;
	const auto& f = m.factors();
	for (std::size_t t = f.size(); t-- > 0;) {
		if (!s.empty())
			s += " ";
		s += color_to_text(f[t].color) + "(-" + std::to_string(f[t].r) + ")";
	}
	return s;
}

inline Monomial monomial_from_text(const AlgebraSpec& spec,
								   const std::string& text)
{
	std::vector<Factor> factors;
	std::istringstream in(text);
	std::string token;
	while (in >> token) {
		if (token == "1" && factors.empty())
			continue;
		auto open = token.rfind("(-");
		if (open == std::string::npos || token.back() != ')')
			throw std::invalid_argument(
				"bad factor token '" + token + "' (want color(-r))");
		auto color = color_from_text(token.substr(0, open));
		if (!color)
			throw std::invalid_argument(
				"bad color in token '" + token + "'");
		std::string num = token.substr(open + 2,
									   token.size() - open - 3);
		if (num.empty() ||
			num.find_first_not_of("0123456789") != std::string::npos)
			throw std::invalid_argument(
				"bad exponent in token '" + token + "'");
		factors.push_back(Factor{*color, std::stoll(num)});
	}
	return Monomial::make(spec, std::move(factors));
}

} /* namespace fschar */
