#pragma once

/*
 * Family-D characters at rank 4 (with the multi-sum generalization for
 * ranks up to 6), built from a factorization of the six-color alphabet
 * into two subalphabets:
 *
 *   - the "main" group {b2, b_l, u_l, u2} (four colors), and
 *   - the "pair" group {b_j, u_j} for each middle index 3 <= j <= l-1
 *     (at rank 4 there is a single pair group, {b3, u3}).
 *
 * A full admissible monomial decomposes uniquely into a main part and a
 * pair part through a staircase interleaving that temporarily fuses the
 * two zero-energy / low-energy color pairs (u2,b2) and (b_l,u_l) into
 * transient "tilde" colors.  The decomposition multiplies characters up
 * to an explicit cross-term q^{n1' n1''}, which yields closed forms for
 * the full vacuum character and for every first-color restricted family.
 */

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "colors.hpp"
#include "enumerate.hpp"
#include "monomial.hpp"
#include "qseries.hpp"

namespace fschar {

namespace detail {

inline void require_d(const AlgebraSpec& spec, int rank = 0)
{
	if (spec.family != Family::TypeD)
		throw std::invalid_argument("family D required");
	if (rank != 0 && spec.rank != rank)
		throw std::invalid_argument("unsupported rank for this formula");
}

inline void require_weight_size(const AlgebraSpec& spec, const Weight& n)
{
	if (n.size() != static_cast<std::size_t>(spec.rank))
		throw std::invalid_argument("weight length does not match rank");
}

} /* namespace detail */

/* Color subalphabets of the family-D alphabet, indexed like the
 * m-coordinate groups of weight_to_mcoords: group 2 holds the four
 * colors {b2, b_l, u_l, u2}; group j for 3 <= j <= l-1 holds {b_j, u_j}.
 * Listed in descending color order. */
inline std::vector<Color> d_group_colors(const AlgebraSpec& spec, int group)
{
	detail::require_d(spec);
	if (group == 2)
		return {Color::unbarred(2), Color::unbarred(spec.rank),
				Color::barred(spec.rank), Color::barred(2)};
	if (group >= 3 && group <= spec.rank - 1)
		return {Color::unbarred(group), Color::barred(group)};
	throw std::invalid_argument("d_group_colors: group out of range");
}

/* True iff a rank-4 weight is a nonnegative combination of the main
 * group {b2, b4, u4, u2}.  Writing the multiplicities as
 *     m_b2*w(b2) + m_b4*w(b4) + m_u4*w(u4) + m_u2*w(u2) = n,
 * the system is solvable with m >= 0 iff
 *     n2 = n3 + n4,  n1 >= n3,  n1 >= n4,  n3, n4 >= 0. */
inline bool d4_main_expressible(const Weight& n)
{
	if (n.size() != 4)
		throw std::invalid_argument("d4_main_expressible: rank-4 weight");
	for (long long v : n)
		if (v < 0)
			return false;
	return n[1] == n[2] + n[3] && n[0] >= n[2] && n[0] >= n[3];
}

/* True iff a rank-4 weight is a nonnegative combination of the pair
 * group {b3, u3}: n1 = n2, n3 = n4 and 0 <= n4 <= n1. */
inline bool d4_pair_expressible(const Weight& n)
{
	if (n.size() != 4)
		throw std::invalid_argument("d4_pair_expressible: rank-4 weight");
	for (long long v : n)
		if (v < 0)
			return false;
	return n[0] == n[1] && n[2] == n[3] && n[3] <= n[0];
}

namespace detail {

/* Kernel shared by every main-group character:
 *     (q)_{n1} / [ (q)_{n3} (q)_{n1-n3} (q)_{n1-n4} (q)_{n4} ],
 * the generating function of the admissible main-group monomials of
 * weight n up to the quadratic degree shift. */
inline QSeries d4_main_kernel(const Weight& n, int qmax)
{
	long long n1 = n[0], n3 = n[2], n4 = n[3];
	QSeries s = pochhammer(static_cast<int>(n1), qmax);
	s = s * inv_pochhammer(static_cast<int>(n3), qmax);
	s = s * inv_pochhammer(static_cast<int>(n1 - n3), qmax);
	s = s * inv_pochhammer(static_cast<int>(n1 - n4), qmax);
	s = s * inv_pochhammer(static_cast<int>(n4), qmax);
	return s;
}

/* Minimal degree of an admissible main-group monomial of weight n. */
inline long long d4_main_quadratic(const Weight& n)
{
	long long n1 = n[0], n3 = n[2], n4 = n[3];
	return n4 * n4 + n1 * n1 + n3 * n3 - n4 * n1 - n1 * n3;
}

/* Minimal degree of an admissible pair-group monomial of weight n. */
inline long long d4_pair_quadratic(const Weight& n)
{
	long long n1 = n[0], n4 = n[3];
	return n1 * n1 + n4 * n4 - n1 * n4;
}

inline QSeries d4_pair_kernel(const Weight& n, int qmax)
{
	long long n1 = n[0], n4 = n[3];
	QSeries s = inv_pochhammer(static_cast<int>(n4), qmax);
	s = s * inv_pochhammer(static_cast<int>(n1 - n4), qmax);
	return s;
}

} /* namespace detail */

/* Character of the admissible monomials over the main group {b2,b4,u4,u2}
 * with all exponents >= 1 (no first-color restriction):
 *     q^{n4^2+n1^2+n3^2-n4 n1-n1 n3} (q)_{n1}
 *       / [ (q)_{n3} (q)_{n1-n3} (q)_{n1-n4} (q)_{n4} ].
 * Inexpressible weights give the zero series. */
inline QSeries char_gamma_prime(const AlgebraSpec& spec, const Weight& n,
								int qmax)
{
	detail::require_d(spec, 4);
	detail::require_weight_size(spec, n);
	if (!d4_main_expressible(n))
		return QSeries::zero(qmax);
	return monomial_shift(detail::d4_main_kernel(n, qmax),
						  static_cast<int>(std::min<long long>(
							  detail::d4_main_quadratic(n), qmax + 1)));
}

/* Character of the admissible monomials over the pair group {b3,u3}:
 *     q^{n1^2+n4^2-n1 n4} / [ (q)_{n4} (q)_{n1-n4} ]. */
inline QSeries char_gamma_second(const AlgebraSpec& spec, const Weight& n,
								 int qmax)
{
	detail::require_d(spec, 4);
	detail::require_weight_size(spec, n);
	if (!d4_pair_expressible(n))
		return QSeries::zero(qmax);
	return monomial_shift(detail::d4_pair_kernel(n, qmax),
						  static_cast<int>(std::min<long long>(
							  detail::d4_pair_quadratic(n), qmax + 1)));
}

/* First-factor restrictions of the two subalphabet families.  "Zero"
 * variants require every exponent >= 2; the other variants constrain
 * which colors may carry the exponent 1 on the first (rightmost)
 * factor. */
enum class DSubRestriction {
	MainZero,     /* main group, first exponent >= 2 */
	MainB2,       /* first color b2 */
	MainU4B2,     /* first color in {u4, b2} */
	MainB4B2,     /* first color in {b4, b2} */
	MainU4B4B2,   /* first color in {u4, b4, b2} */
	PairZero,     /* pair group, first exponent >= 2 */
	PairB3,       /* first color b3 */
};

/* The subalphabet a restriction applies to. */
inline std::vector<Color> d_sub_restriction_colors(const AlgebraSpec& spec,
												   DSubRestriction v)
{
	detail::require_d(spec, 4);
	switch (v) {
	case DSubRestriction::MainZero:
	case DSubRestriction::MainB2:
	case DSubRestriction::MainU4B2:
	case DSubRestriction::MainB4B2:
	case DSubRestriction::MainU4B4B2:
		return d_group_colors(spec, 2);
	case DSubRestriction::PairZero:
	case DSubRestriction::PairB3:
		return d_group_colors(spec, 3);
	}
	throw std::logic_error("d_sub_restriction_colors: bad variant");
}

/* The first-factor condition a restriction imposes. */
inline InitialCondition d_sub_restriction_ic(DSubRestriction v)
{
	switch (v) {
	case DSubRestriction::MainZero:
	case DSubRestriction::PairZero:
		return InitialCondition::never();
	case DSubRestriction::MainB2:
		return InitialCondition::first_set({Color::barred(2)});
	case DSubRestriction::MainU4B2:
		return InitialCondition::first_set(
			{Color::unbarred(4), Color::barred(2)});
	case DSubRestriction::MainB4B2:
		return InitialCondition::first_set(
			{Color::barred(4), Color::barred(2)});
	case DSubRestriction::MainU4B4B2:
		return InitialCondition::first_set(
			{Color::unbarred(4), Color::barred(4), Color::barred(2)});
	case DSubRestriction::PairB3:
		return InitialCondition::first_set({Color::barred(3)});
	}
	throw std::logic_error("d_sub_restriction_ic: bad variant");
}

/* Closed form for each restricted subalphabet family.  The main-group
 * variants multiply the shared kernel by a first-factor weight:
 *
 *     MainZero    q^{n1}
 *     MainU4B2    q^{n3}
 *     MainB4B2    q^{n4}
 *     MainB2      q^{n4+n3} + q^{n1} (1-q^{n4})(1-q^{n3}) / (1-q^{n1})
 *     MainU4B4B2  1 - (1-q^{n4})(1-q^{n3}) / (1-q^{n1})
 *
 * (the last two agree with the inclusion-exclusion identity
 * MainU4B4B2 = MainU4B2 + MainB4B2 - MainB2), and the pair-group
 * variants shift by q^{n1} (PairZero) or q^{n4} (PairB3).  The rational
 * brackets only arise for n1 >= 1; a zero expressible weight means the
 * empty monomial alone, so every variant returns 1 for it. */
inline QSeries restricted_char(const AlgebraSpec& spec, DSubRestriction v,
							   const Weight& n, int qmax)
{
	detail::require_d(spec, 4);
	detail::require_weight_size(spec, n);
	const bool main_side = (v != DSubRestriction::PairZero &&
							v != DSubRestriction::PairB3);
	if (main_side ? !d4_main_expressible(n) : !d4_pair_expressible(n))
		return QSeries::zero(qmax);
	if (is_zero_weight(n))
		return QSeries::one(qmax);
	long long n1 = n[0], n3 = n[2], n4 = n[3];
	auto mono = [qmax](long long e) {
		return QSeries::monomial(
			static_cast<int>(std::min<long long>(e, qmax + 1)), qmax);
	};
	if (!main_side) {
		QSeries s = detail::d4_pair_kernel(n, qmax) *
					mono(v == DSubRestriction::PairZero ? n1 : n4);
		return monomial_shift(s, static_cast<int>(std::min<long long>(
									 detail::d4_pair_quadratic(n), qmax + 1)));
	}
	QSeries bracket = QSeries::one(qmax);
	switch (v) {
	case DSubRestriction::MainZero:
		bracket = mono(n1);
		break;
	case DSubRestriction::MainU4B2:
		bracket = mono(n3);
		break;
	case DSubRestriction::MainB4B2:
		bracket = mono(n4);
		break;
	case DSubRestriction::MainB2: {
		/* n1 >= 1 here since the weight is nonzero and expressible. */
		QSeries ratio = divide_unit(
			one_minus_qpow(static_cast<int>(std::min<long long>(n4, qmax + 1)),
						   qmax) *
				one_minus_qpow(
					static_cast<int>(std::min<long long>(n3, qmax + 1)), qmax),
			one_minus_qpow(static_cast<int>(std::min<long long>(n1, qmax + 1)),
						   qmax));
		bracket = mono(n4 + n3) + mono(n1) * ratio;
		break;
	}
	case DSubRestriction::MainU4B4B2: {
		QSeries ratio = divide_unit(
			one_minus_qpow(static_cast<int>(std::min<long long>(n4, qmax + 1)),
						   qmax) *
				one_minus_qpow(
					static_cast<int>(std::min<long long>(n3, qmax + 1)), qmax),
			one_minus_qpow(static_cast<int>(std::min<long long>(n1, qmax + 1)),
						   qmax));
		bracket = QSeries::one(qmax) - ratio;
		break;
	}
	default:
		throw std::logic_error("restricted_char: bad variant");
	}
	QSeries s = detail::d4_main_kernel(n, qmax) * bracket;
	return monomial_shift(s, static_cast<int>(std::min<long long>(
								 detail::d4_main_quadratic(n), qmax + 1)));
}

/* ------------------------------------------------------------------ */
/* Tilde interleaving: merging and splitting rank-4 monomials.         */
/* ------------------------------------------------------------------ */

namespace detail {

/* Rewrite, greedily left to right in storage order, every adjacent
 *     (u2 at r, b2 at r)      as (t2 at r, t2 at r+1)   and every
 *     (b4 at r, u4 at r+1)    as (t4 at r, t4 at r+1).
 * In an admissible monomial these are the only adjacencies that can sit
 * at the minimal gaps 0 and 1 with no room for another factor between
 * the members of the pair, so the rewriting is well defined. */
inline std::vector<Factor> d4_tilde_encode(std::vector<Factor> f)
{
	std::vector<Factor> out;
	out.reserve(f.size());
	for (std::size_t t = 0; t < f.size(); ++t) {
		if (t + 1 < f.size()) {
			const Factor& a = f[t];
			const Factor& b = f[t + 1];
			if (a.color == Color::unbarred(2) &&
				b.color == Color::barred(2) && a.r == b.r) {
				out.push_back(Factor{Color::tilde(2), a.r});
				out.push_back(Factor{Color::tilde(2), a.r + 1});
				++t;
				continue;
			}
			if (a.color == Color::barred(4) &&
				b.color == Color::unbarred(4) && b.r == a.r + 1) {
				out.push_back(Factor{Color::tilde(4), a.r});
				out.push_back(Factor{Color::tilde(4), a.r + 1});
				++t;
				continue;
			}
		}
		out.push_back(f[t]);
	}
	return out;
}

/* Inverse of d4_tilde_encode.  Every tilde factor must be immediately
 * followed by its partner (same tilde color, exponent one higher); a
 * stray or separated tilde factor is a structural failure and throws. */
inline std::vector<Factor> d4_tilde_decode(std::vector<Factor> f)
{
	std::vector<Factor> out;
	out.reserve(f.size());
	for (std::size_t t = 0; t < f.size(); ++t) {
		if (!f[t].color.is_tilde()) {
			out.push_back(f[t]);
			continue;
		}
		if (t + 1 >= f.size() || !(f[t + 1].color == f[t].color) ||
			f[t + 1].r != f[t].r + 1)
			throw std::logic_error(
				"d4_tilde_decode: tilde factors must form adjacent pairs "
				"with exponent gap 1");
		if (f[t].color == Color::tilde(2)) {
			out.push_back(Factor{Color::unbarred(2), f[t].r});
			out.push_back(Factor{Color::barred(2), f[t].r});
		} else {
			out.push_back(Factor{Color::barred(4), f[t].r});
			out.push_back(Factor{Color::unbarred(4), f[t].r + 1});
		}
		++t;
	}
	return out;
}

inline void require_colors_within(const Monomial& m,
								  const std::vector<Color>& allowed,
								  const char* what)
{
	for (const Factor& f : m.factors()) {
		bool ok = false;
		for (const Color& c : allowed)
			if (f.color == c)
				ok = true;
		if (!ok)
			throw std::invalid_argument(std::string(what) +
										": factor color outside subalphabet");
	}
}

} /* namespace detail */

/* Interleave a main-group monomial x1 and a pair-group monomial x2 into
 * one admissible monomial over the full rank-4 alphabet: fuse the low
 * energy pairs of x1 into tilde factors, straighten both parts with the
 * staircase transform, merge-sort them, re-apply the staircase, and
 * unfuse.  The result x satisfies the difference conditions, and
 *     d(x) = d(x1) + d(x2) + n1' * n1''
 * where n1', n1'' are the factor counts (first weight coordinates) of
 * the two parts. */
inline Monomial merge_monomials(const Monomial& x1, const Monomial& x2)
{
	const AlgebraSpec& spec = x1.spec();
	detail::require_d(spec, 4);
	if (!(x2.spec() == spec))
		throw std::invalid_argument("merge_monomials: mismatched algebras");
	detail::require_colors_within(x1, d_group_colors(spec, 2),
								  "merge_monomials main part");
	detail::require_colors_within(x2, d_group_colors(spec, 3),
								  "merge_monomials pair part");
	if (!satisfies_dc(x1) || !satisfies_dc(x2))
		throw std::invalid_argument(
			"merge_monomials: parts must satisfy difference conditions");
	std::vector<Factor> ya = staircase_up(detail::d4_tilde_encode(x1.factors()));
	std::vector<Factor> yb = staircase_up(x2.factors());
	std::vector<Factor> y;
	y.reserve(ya.size() + yb.size());
	std::merge(ya.begin(), ya.end(), yb.begin(), yb.end(),
			   std::back_inserter(y),
			   [&spec](const Factor& a, const Factor& b) {
				   return factor_storage_less(spec, a, b);
			   });
	Monomial x = Monomial::from_sorted(
		spec, detail::d4_tilde_decode(staircase_down(std::move(y))));
	if (!satisfies_dc(x))
		throw std::logic_error(
			"merge_monomials: interleaving broke the difference conditions");
	return x;
}

/* Inverse of merge_monomials: fuse the low-energy pairs of x, straighten,
 * separate the factors by subalphabet, re-apply the staircase to each
 * part, and unfuse the main part.  Returns (main part, pair part); both
 * satisfy the difference conditions of their subalphabets. */
inline std::pair<Monomial, Monomial> split_monomial(const Monomial& x)
{
	const AlgebraSpec& spec = x.spec();
	detail::require_d(spec, 4);
	if (!satisfies_dc(x))
		throw std::invalid_argument(
			"split_monomial: input must satisfy difference conditions");
	std::vector<Factor> y = staircase_up(detail::d4_tilde_encode(x.factors()));
	std::vector<Factor> ya, yb;
	for (const Factor& f : y) {
		bool pair_side = f.color == Color::barred(3) ||
						 f.color == Color::unbarred(3);
		(pair_side ? yb : ya).push_back(f);
	}
	Monomial x1 = Monomial::from_sorted(
		spec, detail::d4_tilde_decode(staircase_down(std::move(ya))));
	Monomial x2 = Monomial::from_sorted(spec, staircase_down(std::move(yb)));
	if (!satisfies_dc(x1) || !satisfies_dc(x2))
		throw std::logic_error(
			"split_monomial: parts violate the difference conditions");
	return {x1, x2};
}

/* ------------------------------------------------------------------ */
/* Full-alphabet restricted families and their closed forms.           */
/* ------------------------------------------------------------------ */

/* A restricted family over the full rank-4 alphabet: the level-one
 * highest-weight families (k in {0, 1, rank-1, rank}), the families
 * capped by a first color gamma, or the family with every exponent
 * >= 2. */
struct DCharTarget {
	enum class Kind { Lambda, FirstColor, ExponentTwo };

	Kind kind = Kind::Lambda;
	int k = 0;
	Color gamma;

	static DCharTarget lambda(int k)
	{
		DCharTarget t;
		t.kind = Kind::Lambda;
		t.k = k;
		return t;
	}
	static DCharTarget first_color(Color g)
	{
		DCharTarget t;
		t.kind = Kind::FirstColor;
		t.gamma = g;
		return t;
	}
	static DCharTarget exponent_two()
	{
		DCharTarget t;
		t.kind = Kind::ExponentTwo;
		return t;
	}
};

/* Colors allowed to carry exponent 1 on the first factor of the family
 * capped by gamma.  For gamma = u4 the allowed set is {b2, b3, u4}
 * (b4 is excluded even though it is a smaller color); every other cap
 * allows exactly the colors <= gamma. */
inline std::vector<Color> d4_gamma_first_colors(const AlgebraSpec& spec,
												const Color& g)
{
	detail::require_d(spec, 4);
	check_color(spec, g);
	if (g == Color::unbarred(4))
		return {Color::unbarred(4), Color::barred(3), Color::barred(2)};
	std::vector<Color> out;
	for (const Color& c : all_colors(spec))
		if (color_less_eq(spec, c, g))
			out.push_back(c);
	return out;
}

/* The first-factor condition of a full-alphabet target. */
inline InitialCondition d4_target_ic(const AlgebraSpec& spec,
									 const DCharTarget& t)
{
	detail::require_d(spec, 4);
	switch (t.kind) {
	case DCharTarget::Kind::Lambda:
		return InitialCondition::lambda(t.k);
	case DCharTarget::Kind::FirstColor:
		return InitialCondition::first_set(d4_gamma_first_colors(spec, t.gamma));
	case DCharTarget::Kind::ExponentTwo:
		return InitialCondition::never();
	}
	throw std::logic_error("d4_target_ic: bad target");
}

namespace detail {

/* Reduce a Lambda target to its serving family: k = 0 is the full
 * family (cap u2), k = 1 is the exponent >= 2 family, k = rank-1 is
 * the cap u4 family and k = rank the cap b4 family. */
inline DCharTarget d4_reduce_target(const AlgebraSpec& spec,
									const DCharTarget& t)
{
	if (t.kind != DCharTarget::Kind::Lambda)
		return t;
	if (t.k == 0)
		return DCharTarget::first_color(Color::unbarred(2));
	if (t.k == 1)
		return DCharTarget::exponent_two();
	if (t.k == spec.rank - 1)
		return DCharTarget::first_color(Color::unbarred(spec.rank));
	if (t.k == spec.rank)
		return DCharTarget::first_color(Color::barred(spec.rank));
	throw std::invalid_argument(
		"d4 characters: level-one weights have k in {0, 1, rank-1, rank}");
}

/* One summand of the rank-4 closed form, at summation coordinate
 * c = i + mprime:
 *     kernel_c = (q)_{p1} / [ (q)_{n3-n4+c} (q)_{n1-n2+c} (q)_c
 *                             (q)_{n1-n2+n3-n4+c} (q)_{n4-c}
 *                             (q)_{n2-n3-c} ],
 *     p1 = n1-n2+n3-n4+2c,
 * and the degree shift
 *     f_c = sum n_t^2 - n1 n2 - n2 n3 - n3 n4 - c(n2-n3+n4-c).
 * Every index is nonnegative over the admissible range of c. */
struct D4Summand {
	long long c = 0, a = 0, b = 0, p1 = 0, f = 0;
	QSeries kernel = QSeries::zero(0);
};

inline std::vector<D4Summand> d4_summands(const AlgebraSpec& spec,
										  const Weight& n, int qmax)
{
	DCoords d = weight_to_mcoords(spec, n);
	long long n1 = n[0], n2 = n[1], n3 = n[2], n4 = n[3];
	long long base = n1 * n1 + n2 * n2 + n3 * n3 + n4 * n4 - n1 * n2 -
					 n2 * n3 - n3 * n4;
	std::vector<D4Summand> out;
	for (long long i = 0; i + d.mprime() + d.msecond() <= d.m0; ++i) {
		D4Summand s;
		s.c = i + d.mprime();
		s.a = n3 - n4 + s.c;
		s.b = s.c;
		s.p1 = n1 - n2 + n3 - n4 + 2 * s.c;
		s.f = base - s.c * (n2 - n3 + n4 - s.c);
		const long long idx[6] = {s.a,        n1 - n2 + s.c, s.b,
								  s.p1 - s.c, n4 - s.c,      n2 - n3 - s.c};
		for (long long v : idx)
			if (v < 0)
				throw std::logic_error(
					"d4_summands: negative kernel index for a realizable "
					"weight");
		if (s.f < 0 || s.f > qmax) {
			if (s.f < 0)
				throw std::logic_error("d4_summands: negative degree shift");
			continue;
		}
		QSeries k = pochhammer(static_cast<int>(s.p1), qmax);
		for (long long v : idx)
			k = k * inv_pochhammer(static_cast<int>(v), qmax);
		s.kernel = std::move(k);
		out.push_back(std::move(s));
	}
	return out;
}

/* The ratio (1-q^a)(1-q^b)/(1-q^{p1}) attached to a summand, taken as 0
 * when either exponent in the numerator is 0 (in range, p1 = 0 can only
 * happen together with a = b = 0, and a, b >= 1 forces p1 >= a >= 1, so
 * the division below never meets a unit constant term of the wrong
 * shape). */
inline QSeries d4_summand_ratio(const D4Summand& s, int qmax)
{
	if (s.a == 0 || s.b == 0)
		return QSeries::zero(qmax);
	QSeries num =
		one_minus_qpow(static_cast<int>(std::min<long long>(s.a, qmax + 1)),
					   qmax) *
		one_minus_qpow(static_cast<int>(std::min<long long>(s.b, qmax + 1)),
					   qmax);
	return divide_unit(
		num, one_minus_qpow(
				 static_cast<int>(std::min<long long>(s.p1, qmax + 1)), qmax));
}

/* First-factor weight of one summand for each full-alphabet family:
 *
 *     u2    1
 *     u3    1 - R
 *     u4    q^{n3}
 *     b4    q^{n4}
 *     b3    q^{n3+c} + q^{n1-n2+n3+c} R
 *     b2    q^{n2}   + q^{n1} R
 *     >=2   q^{n1}
 *
 * with R = d4_summand_ratio. */
inline QSeries d4_first_factor_weight(const AlgebraSpec& spec,
									  const DCharTarget& t, const Weight& n,
									  const D4Summand& s, int qmax)
{
	auto mono = [qmax](long long e) {
		return QSeries::monomial(
			static_cast<int>(std::min<long long>(e, qmax + 1)), qmax);
	};
	long long n1 = n[0], n2 = n[1], n3 = n[2];
	if (t.kind == DCharTarget::Kind::ExponentTwo)
		return mono(n1);
	const Color& g = t.gamma;
	if (g == Color::unbarred(2))
		return QSeries::one(qmax);
	if (g == Color::unbarred(3))
		return QSeries::one(qmax) - d4_summand_ratio(s, qmax);
	if (g == Color::unbarred(4))
		return mono(n3);
	if (g == Color::barred(4))
		return mono(n[3]);
	if (g == Color::barred(3))
		return mono(n3 + s.c) +
			   mono(n1 - n2 + n3 + s.c) * d4_summand_ratio(s, qmax);
	if (g == Color::barred(2))
		return mono(n2) + mono(n1) * d4_summand_ratio(s, qmax);
	throw std::invalid_argument("d4_first_factor_weight: bad color");
}

} /* namespace detail */

/* Closed form for the full rank-4 vacuum family (every color allowed on
 * the first factor): the sum of the kernels q^{f_c} kernel_c over the
 * admissible summation range.  Unrealizable weights give zero. */
inline QSeries char_d4_lambda0(const AlgebraSpec& spec, const Weight& n,
							   int qmax)
{
	detail::require_d(spec, 4);
	detail::require_weight_size(spec, n);
	if (!realizable(spec, n))
		return QSeries::zero(qmax);
	QSeries sum = QSeries::zero(qmax);
	for (const detail::D4Summand& s : detail::d4_summands(spec, n, qmax))
		sum = sum + monomial_shift(s.kernel, static_cast<int>(s.f));
	return sum;
}

/* Closed form for any full-alphabet restricted family: the same sum
 * with the first-factor weight of the target inserted into each
 * summand.  Lambda targets reduce to their serving family first. */
inline QSeries char_d4_gamma(const AlgebraSpec& spec, const DCharTarget& t,
							 const Weight& n, int qmax)
{
	detail::require_d(spec, 4);
	detail::require_weight_size(spec, n);
	if (!realizable(spec, n))
		return QSeries::zero(qmax);
	DCharTarget target = detail::d4_reduce_target(spec, t);
	QSeries sum = QSeries::zero(qmax);
	for (const detail::D4Summand& s : detail::d4_summands(spec, n, qmax)) {
		QSeries term =
			s.kernel *
			detail::d4_first_factor_weight(spec, target, n, s, qmax);
		sum = sum + monomial_shift(term, static_cast<int>(s.f));
	}
	return sum;
}

/* Multi-sum closed form for the vacuum family at ranks 4..6: sum over
 * the compositions i_2 + ... + i_{l-1} = n_l - m of products of group
 * kernels, with e_j = i_j + mgroup_j:
 *
 *   group 2:      (q)_{n1-n2+n_{l-1}-n_l+2 e2}
 *                   / [ (q)_{n_{l-1}-n_l+e2} (q)_{n1-n2+e2} (q)_{e2}
 *                       (q)_{n1-n2+n_{l-1}-n_l+e2} ]
 *   3 <= j <= l-2:  1 / [ (q)_{e_j} (q)_{n_{j-1}-n_j+e_j} ]
 *   j = l-1:        1 / [ (q)_{e_{l-1}} (q)_{n_{l-2}-n_{l-1}-n_l+e_{l-1}} ]
 *
 * and the degree shift
 *
 *   f = sum n_t^2 - n1 n2 - ... - n_{l-3} n_{l-2} - n_{l-2} n_{l-1}
 *       - n_{l-2} n_l + sum_{j=3}^{l-2} e_j (n_{j-1}-n_j+e_j)
 *       + e_{l-1} (n_{l-2}-n_{l-1}-n_l+e_{l-1}).
 *
 * At rank 4 this agrees with char_d4_lambda0 term by term.  Ranks above
 * 6 are rejected: the verification grids behind this formula grow too
 * fast to be exercised there. */
inline QSeries char_dl_lambda0(const AlgebraSpec& spec, const Weight& n,
							   int qmax)
{
	detail::require_d(spec);
	if (spec.rank < 4 || spec.rank > 6)
		throw std::invalid_argument("char_dl_lambda0: supported ranks 4..6");
	detail::require_weight_size(spec, n);
	if (!realizable(spec, n))
		return QSeries::zero(qmax);
	const int l = spec.rank;
	DCoords d = weight_to_mcoords(spec, n);
	const long long total = d.m0 - d.mtotal;
	long long base = 0;
	for (int t = 1; t <= l; ++t)
		base += n[t - 1] * n[t - 1];
	for (int t = 1; t <= l - 3; ++t)
		base -= n[t - 1] * n[t];
	base -= n[l - 3] * n[l - 2];
	base -= n[l - 3] * n[l - 1];
	QSeries sum = QSeries::zero(qmax);
	/* parts[j] = i_j for groups j = 2..l-1; enumerate the free tail
	 * j = 3..l-1 and let i_2 absorb the remainder. */
	std::vector<long long> e(static_cast<std::size_t>(l), 0);
	auto add_term = [&]() {
		long long f = base;
		for (int j = 3; j <= l - 2; ++j)
			f += e[j] * (n[j - 2] - n[j - 1] + e[j]);
		f += e[l - 1] * (n[l - 3] - n[l - 2] - n[l - 1] + e[l - 1]);
		const long long p = n[0] - n[1] + n[l - 2] - n[l - 1] + 2 * e[2];
		std::vector<long long> idx = {n[l - 2] - n[l - 1] + e[2],
									  n[0] - n[1] + e[2], e[2],
									  n[0] - n[1] + n[l - 2] - n[l - 1] + e[2]};
		for (int j = 3; j <= l - 2; ++j) {
			idx.push_back(e[j]);
			idx.push_back(n[j - 2] - n[j - 1] + e[j]);
		}
		idx.push_back(e[l - 1]);
		idx.push_back(n[l - 3] - n[l - 2] - n[l - 1] + e[l - 1]);
		for (long long v : idx)
			if (v < 0)
				throw std::logic_error(
					"char_dl_lambda0: negative kernel index for a "
					"realizable weight");
		if (f < 0)
			throw std::logic_error("char_dl_lambda0: negative degree shift");
		if (f > qmax)
			return;
		QSeries term = pochhammer(static_cast<int>(p), qmax);
		for (long long v : idx)
			term = term * inv_pochhammer(static_cast<int>(v), qmax);
		sum = sum + monomial_shift(term, static_cast<int>(f));
	};
	std::function<void(int, long long)> walk = [&](int j, long long left) {
		if (j == 2) {
			e[2] = left + d.mgroup[2];
			add_term();
			return;
		}
		for (long long i = 0; i <= left; ++i) {
			e[j] = i + d.mgroup[j];
			walk(j - 1, left - i);
		}
	};
	walk(l - 1, total);
	return sum;
}

/* ------------------------------------------------------------------ */
/* First-factor peeling relations and the part decomposition table.    */
/* ------------------------------------------------------------------ */

/* A rank-4 character provider: evaluates any full-alphabet target at one
 * weight.  Backed either by brute-force enumeration or by the closed
 * forms, so the relation system below can be checked against each
 * independently. */
using DChi = std::function<QSeries(const DCharTarget&, const Weight&, int)>;

inline DChi d_chi_oracle(const AlgebraSpec& spec)
{
	return [spec](const DCharTarget& t, const Weight& n, int qmax) {
		EnumRequest req{spec, n, d4_target_ic(spec, t), {}};
		return enumerate_character(req, qmax);
	};
}

inline DChi d_chi_formula(const AlgebraSpec& spec)
{
	return [spec](const DCharTarget& t, const Weight& n, int qmax) {
		return char_d4_gamma(spec, t, n, qmax);
	};
}

/* Residual of the peeling relation attached to one target: peeling the
 * forced first factor off the monomials that are in the target family
 * but not in the next smaller one relates the families at weight n to
 * families at n minus a color weight, with degree prefactor q^{n1}
 * (or q^{2 n1 - 2} for the two-factor peel inside the u2 relation):
 *
 *   >=2 :  X0 = q^{n1} X_{u2}
 *   u2  :  X_{u2} = X_{u3} + q^{n1} X_{u3}^{-w(u2)}
 *                         + q^{2n1-2} X_{u2}^{-w(u2)-w(b2)}
 *   u3  :  X_{u3} = X_{u4} + X_{b4} - X_{b3}
 *                 + q^{n1} (X_{u4} + X_{b4} - X_{b3})^{-w(u3)}
 *   u4  :  X_{u4} = X_{b3} + q^{n1} X_{b4}^{-w(u4)}
 *   b4  :  X_{b4} = X_{b3} + q^{n1} X_{u4}^{-w(b4)}
 *   b3  :  X_{b3} = X_{b2} + q^{n1} X_{b2}^{-w(b3)}
 *   b2  :  X_{b2} = X0    + q^{n1} X0^{-w(b2)}
 *
 * Superscripts shift the weight; unrealizable shifted weights contribute
 * zero.  Returns LHS - RHS (zero when the relation holds). */
inline QSeries d4_peel_residual(const AlgebraSpec& spec, const DCharTarget& t,
								const Weight& n, int qmax, const DChi& chi)
{
	detail::require_d(spec, 4);
	detail::require_weight_size(spec, n);
	if (!realizable(spec, n))
		return QSeries::zero(qmax);
	const long long n1 = n[0];
	auto shifted = [&](const DCharTarget& tt, const Weight& w,
					   long long e) -> QSeries {
		for (long long v : w)
			if (v < 0)
				return QSeries::zero(qmax);
		if (!realizable(spec, w))
			return QSeries::zero(qmax);
		if (e < 0)
			throw std::logic_error("d4_peel_residual: negative prefactor "
								   "exponent at a realizable shift");
		if (e > qmax)
			return QSeries::zero(qmax);
		return monomial_shift(chi(tt, w, qmax), static_cast<int>(e));
	};
	auto full = [&](const Color& g) {
		return chi(DCharTarget::first_color(g), n, qmax);
	};
	const DCharTarget target = detail::d4_reduce_target(spec, t);
	const Color u2 = Color::unbarred(2), u3 = Color::unbarred(3),
				u4 = Color::unbarred(4), b4 = Color::barred(4),
				b3 = Color::barred(3), b2 = Color::barred(2);
	if (target.kind == DCharTarget::Kind::ExponentTwo)
		return chi(DCharTarget::exponent_two(), n, qmax) -
			   shifted(DCharTarget::first_color(u2), n, n1);
	const Color g = target.gamma;
	if (g == u2) {
		Weight s1 = sub_weights(n, color_weight(spec, u2));
		Weight s2 = sub_weights(s1, color_weight(spec, b2));
		return full(u2) - full(u3) -
			   shifted(DCharTarget::first_color(u3), s1, n1) -
			   shifted(DCharTarget::first_color(u2), s2, 2 * n1 - 2);
	}
	if (g == u3) {
		Weight s = sub_weights(n, color_weight(spec, u3));
		QSeries rhs = full(u4) + full(b4) - full(b3) +
					  shifted(DCharTarget::first_color(u4), s, n1) +
					  shifted(DCharTarget::first_color(b4), s, n1) -
					  shifted(DCharTarget::first_color(b3), s, n1);
		return full(u3) - rhs;
	}
	if (g == u4) {
		Weight s = sub_weights(n, color_weight(spec, u4));
		return full(u4) - full(b3) -
			   shifted(DCharTarget::first_color(b4), s, n1);
	}
	if (g == b4) {
		Weight s = sub_weights(n, color_weight(spec, b4));
		return full(b4) - full(b3) -
			   shifted(DCharTarget::first_color(u4), s, n1);
	}
	if (g == b3) {
		Weight s = sub_weights(n, color_weight(spec, b3));
		return full(b3) - full(b2) -
			   shifted(DCharTarget::first_color(b2), s, n1);
	}
	if (g == b2) {
		Weight s = sub_weights(n, color_weight(spec, b2));
		return full(b2) - chi(DCharTarget::exponent_two(), n, qmax) -
			   shifted(DCharTarget::exponent_two(), s, n1);
	}
	throw std::invalid_argument("d4_peel_residual: bad target");
}

/* The part-membership table: x belongs to a full-alphabet family iff its
 * split parts belong to the stated restricted subalphabet families.
 * The first-factor condition on each side is recorded as an
 * InitialCondition usable with satisfies_ic. */
struct D4DecompositionRow {
	DCharTarget target;
	InitialCondition full_ic;
	InitialCondition main_ic;
	InitialCondition pair_ic;
};

inline std::vector<D4DecompositionRow> d4_decomposition_rows(
	const AlgebraSpec& spec)
{
	detail::require_d(spec, 4);
	auto first = [](std::initializer_list<Color> cs) {
		return InitialCondition::first_set(std::vector<Color>(cs));
	};
	const Color u2 = Color::unbarred(2), u3 = Color::unbarred(3),
				u4 = Color::unbarred(4), b4 = Color::barred(4),
				b3 = Color::barred(3), b2 = Color::barred(2);
	std::vector<D4DecompositionRow> rows;
	auto add = [&](DCharTarget t, InitialCondition main_ic,
				   InitialCondition pair_ic) {
		rows.push_back(D4DecompositionRow{t, d4_target_ic(spec, t),
										  std::move(main_ic),
										  std::move(pair_ic)});
	};
	add(DCharTarget::first_color(u2), InitialCondition::all(),
		InitialCondition::all());
	add(DCharTarget::first_color(u3), first({u4, b4, b2}),
		InitialCondition::all());
	add(DCharTarget::first_color(u4), first({u4, b2}), first({b3}));
	add(DCharTarget::first_color(b4), first({b4, b2}), first({b3}));
	add(DCharTarget::first_color(b3), first({b2}), first({b3}));
	add(DCharTarget::first_color(b2), first({b2}),
		InitialCondition::never());
	add(DCharTarget::exponent_two(), InitialCondition::never(),
		InitialCondition::never());
	return rows;
}

} /* namespace fschar */
