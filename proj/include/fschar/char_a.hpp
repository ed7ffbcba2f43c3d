#pragma once

/*
 * Family-A characters in closed form, the block/partition bijection, path
 * decomposition, and residual evaluators for the recurrence system.
 *
 * Throughout, a weight n = (n_1, ..., n_l) is a chain when
 *     0 <= n_1 <= ... <= n_m >= ... >= n_l >= 0;
 * non-chain weights carry no admissible monomials and every character
 * function returns the zero series for them.  The quadratic exponent
 *     N(n) = sum_t n_t^2 - sum_t n_t n_{t+1}
 * is the degree of the minimal admissible monomial of weight n, and the
 * denominators are products of (q)_e over the consecutive differences of
 * the chain on both sides of the peak m.
 */

#include <functional>

#include "enumerate.hpp"
#include "monomial.hpp"
#include "qseries.hpp"

namespace fschar {

/* N(n) = sum n_t^2 - sum n_t n_{t+1}. */
inline long long a_quadratic_exponent(const Weight& n)
{
	long long N = 0;
	for (std::size_t t = 0; t < n.size(); ++t)
		N += n[t] * n[t];
	for (std::size_t t = 0; t + 1 < n.size(); ++t)
		N -= n[t] * n[t + 1];
	return N;
}

namespace detail {

/* Product over both chain slopes of 1/(q)_{difference}, times (q)_{n_m}. */
inline QSeries a_chain_kernel(const AlgebraSpec& spec, const Weight& n,
							  int qmax)
{
	int l = spec.rank, m = spec.m;
	long long nm = n[m - 1];
	QSeries out = pochhammer(static_cast<int>(nm), qmax);
	for (int s = 1; s <= m; ++s) {
		long long prev = s >= 2 ? n[s - 2] : 0;
		out *= inv_pochhammer(static_cast<int>(n[s - 1] - prev), qmax);
	}
	for (int s = m; s <= l; ++s) {
		long long next = s + 1 <= l ? n[s] : 0;
		out *= inv_pochhammer(static_cast<int>(n[s - 1] - next), qmax);
	}
	return out;
}

} /* namespace detail */

/*
 * Character of the weight-n slice of the module labeled k (0 <= k <= rank):
 *     q^{N(n) + n_k} * (q)_{n_m} / prod (q)_{differences},
 * with n_0 := 0 so that k = 0 contributes no extra exponent.  Valid for
 * every peak position m, since the extra numerator (q)_{n_m} cancels the
 * matching denominator factor when m sits at an end of the diagram.
 */
inline QSeries char_a_lambda(const AlgebraSpec& spec, int k, const Weight& n,
							 int qmax)
{
	spec.validate();
	if (spec.family != Family::TypeA)
		throw std::invalid_argument("char_a_lambda: family A only");
	if (k < 0 || k > spec.rank)
		throw std::invalid_argument("char_a_lambda: k out of range");
	if (n.size() != static_cast<std::size_t>(spec.rank))
		throw std::invalid_argument("char_a_lambda: bad weight length");
	if (!realizable(spec, n))
		return QSeries::zero(qmax);
	long long shift = a_quadratic_exponent(n) + (k == 0 ? 0 : n[k - 1]);
	if (shift > qmax)
		return QSeries::zero(qmax);
	return monomial_shift(detail::a_chain_kernel(spec, n, qmax),
						  static_cast<int>(shift));
}

/* Edge specialization: the peak is the first or the last node. */
enum class Edge { FirstNode, LastNode };

inline QSeries char_a_edge(int rank, Edge edge, int k, const Weight& n,
						   int qmax)
{
	auto spec = AlgebraSpec::type_a(
		rank, edge == Edge::FirstNode ? 1 : rank);
	return char_a_lambda(spec, k, n, qmax);
}

/* Interior specialization, kept under its own name for symmetry; the peak
 * must be strictly inside the diagram. */
inline QSeries char_a_middle(int rank, int m, int k, const Weight& n,
							 int qmax)
{
	if (m <= 1 || m >= rank)
		throw std::invalid_argument("char_a_middle: need 1 < m < rank");
	return char_a_lambda(AlgebraSpec::type_a(rank, m), k, n, qmax);
}

/*
 * Character of the window family (i, j), 1 <= i <= m <= j <= rank: the
 * monomials whose first factor, when it carries exponent 1, has color
 * (i1, j1) with i1 >= i and j1 <= j.  Closed form:
 *
 *     q^{N(n)} * [ q^{n_{i-1} + n_{j+1}}
 *                  + q^{n_m} (1 - q^{n_{i-1}}) (1 - q^{n_{j+1}})
 *                            / (1 - q^{n_m}) ]
 *              * (q)_{n_m} / prod (q)_{differences},
 *
 * with n_0 = n_{rank+1} = 0.  When n_m = 0 the chain forces n = 0 and the
 * character is 1 (the empty monomial); the rational bracket never sees a
 * vanishing denominator.
 */
inline QSeries char_a_window(const AlgebraSpec& spec, int i, int j,
							 const Weight& n, int qmax)
{
	spec.validate();
	if (spec.family != Family::TypeA)
		throw std::invalid_argument("char_a_window: family A only");
	if (i < 1 || i > spec.m || j < spec.m || j > spec.rank)
		throw std::invalid_argument("char_a_window: bad window indices");
	if (n.size() != static_cast<std::size_t>(spec.rank))
		throw std::invalid_argument("char_a_window: bad weight length");
	if (!realizable(spec, n))
		return QSeries::zero(qmax);
	long long nm = n[spec.m - 1];
	if (nm == 0)
		return QSeries::one(qmax);
	long long ni1 = i >= 2 ? n[i - 2] : 0;          /* n_{i-1} */
	long long nj1 = j + 1 <= spec.rank ? n[j] : 0;  /* n_{j+1} */
	long long N = a_quadratic_exponent(n);
	if (N > qmax)
		return QSeries::zero(qmax);
	QSeries bracket = QSeries::monomial(
		ni1 + nj1 > qmax ? qmax + 1 : static_cast<int>(ni1 + nj1), qmax);
	QSeries corner = one_minus_qpow(static_cast<int>(ni1), qmax) *
					 one_minus_qpow(static_cast<int>(nj1), qmax);
	if (!corner.is_zero()) {
		corner = divide_unit(corner,
							 one_minus_qpow(static_cast<int>(nm), qmax));
		if (nm <= qmax)
			bracket += monomial_shift(corner, static_cast<int>(nm));
	}
	return monomial_shift(bracket * detail::a_chain_kernel(spec, n, qmax),
						  static_cast<int>(N));
}

/* Character of the family with first exponent >= 2: a uniform shift of the
 * unrestricted family by one, so the series is q^{n_m} times the full
 * window (1, rank). */
inline QSeries char_a_zero(const AlgebraSpec& spec, const Weight& n,
						   int qmax)
{
	if (!realizable(spec, n))
		return QSeries::zero(qmax);
	long long nm = n[spec.m - 1];
	if (nm > qmax)
		return QSeries::zero(qmax);
	return monomial_shift(char_a_window(spec, 1, spec.rank, n, qmax),
						  static_cast<int>(nm));
}

/* ---- recurrence system ------------------------------------------------ */

/*
 * A character provider: evaluates either the window family (i, j) or, when
 * zero_family is set, the first-exponent >= 2 family, at one weight.  Two
 * implementations are supplied: one backed by brute-force enumeration and
 * one backed by the closed forms, so the recurrence system can be checked
 * against each independently.
 */
using AChi =
	std::function<QSeries(bool zero_family, int i, int j, const Weight& n,
						  int qmax)>;

inline AChi a_chi_oracle(const AlgebraSpec& spec)
{
	return [spec](bool zero_family, int i, int j, const Weight& n,
				  int qmax) {
		EnumRequest req{spec, n,
						zero_family ? InitialCondition::never()
									: InitialCondition::pair_window(i, j),
						{}};
		return enumerate_character(req, qmax);
	};
}

inline AChi a_chi_formula(const AlgebraSpec& spec)
{
	return [spec](bool zero_family, int i, int j, const Weight& n,
				  int qmax) {
		return zero_family ? char_a_zero(spec, n, qmax)
						   : char_a_window(spec, i, j, n, qmax);
	};
}

/* Residual of the shift relation: the first-exponent >= 2 family equals
 * q^{n_m} times the full window.  Zero when the relation holds. */
inline QSeries a_residual_zero_family(const AlgebraSpec& spec,
									  const Weight& n, int qmax,
									  const AChi& chi)
{
	if (!realizable(spec, n))
		return QSeries::zero(qmax);
	long long nm = n[spec.m - 1];
	QSeries lhs = chi(true, 0, 0, n, qmax);
	QSeries rhs =
		nm > qmax ? QSeries::zero(qmax)
				  : monomial_shift(chi(false, 1, spec.rank, n, qmax),
								   static_cast<int>(nm));
	return lhs - rhs;
}

/*
 * Residual of the window recurrence at (i, j).  The relation peels the
 * first factor off the family:
 *
 *   i = j = m:    X_mm = X_0 + q^{n_m} X_0'
 *   i < m = j:    X_im = X_{i+1,m} + q^{n_m} X_{i+1,rank}'
 *   i = m < j:    X_mj = X_{m,j-1} + q^{n_m} X_{1,j-1}'
 *   i < m < j:    X_ij = X_{i+1,j} + X_{i,j-1} - X_{i+1,j-1}
 *                        + q X_{i+1,j-1}' - q^{n_m} X_{1,rank}'
 *                        + q^{n_m} (X_{1,j-1}' + X_{i+1,rank}'
 *                                   - X_{i+1,j-1}'),
 *
 * where a prime marks evaluation at n minus the weight of color (i, j)
 * and n_m is read off the unshifted weight.  Unrealizable shifted weights
 * contribute zero.  Returns left side minus right side.
 *
 * The one-sided rows follow from peeling the forced first factor
 * x_{(i,m)}(-1) resp. x_{(m,j)}(-1): the tail's exponents all exceed the
 * peeled factor's by at least 1 + theta on one side only, so dropping the
 * uniform shift of 1 leaves a family whose exponent-1 colors are free on
 * the side the peeled color saturated - the window widens to rank resp. 1,
 * and the degree bookkeeping contributes q^{1 + (n_m - 1)}.
 */
inline QSeries a_residual_window(const AlgebraSpec& spec, int i, int j,
								 const Weight& n, int qmax, const AChi& chi)
{
	int m = spec.m;
	if (i < 1 || i > m || j < m || j > spec.rank)
		throw std::invalid_argument("a_residual_window: bad window");
	if (!realizable(spec, n))
		return QSeries::zero(qmax);
	long long nm = n[m - 1];
	Weight shifted = sub_weights(n, color_weight(spec, Color::pair(i, j)));
	auto shift_pow = [&](const QSeries& s, long long e) {
		return e > qmax ? QSeries::zero(qmax)
						: monomial_shift(s, static_cast<int>(e));
	};
	QSeries lhs = chi(false, i, j, n, qmax);
	if (i == m && j == m) {
		QSeries rhs = chi(true, 0, 0, n, qmax) +
					  shift_pow(chi(true, 0, 0, shifted, qmax), nm);
		return lhs - rhs;
	}
	if (j == m) {
		QSeries rhs = chi(false, i + 1, m, n, qmax) +
					  shift_pow(chi(false, i + 1, spec.rank, shifted, qmax),
								nm);
		return lhs - rhs;
	}
	if (i == m) {
		QSeries rhs = chi(false, m, j - 1, n, qmax) +
					  shift_pow(chi(false, 1, j - 1, shifted, qmax), nm);
		return lhs - rhs;
	}
	int l = spec.rank;
	QSeries rhs = chi(false, i + 1, j, n, qmax) +
				  chi(false, i, j - 1, n, qmax) -
				  chi(false, i + 1, j - 1, n, qmax);
	rhs += shift_pow(chi(false, i + 1, j - 1, shifted, qmax), 1);
	rhs -= shift_pow(chi(false, 1, l, shifted, qmax), nm);
	QSeries tail = chi(false, 1, j - 1, shifted, qmax) +
				   chi(false, i + 1, l, shifted, qmax) -
				   chi(false, i + 1, j - 1, shifted, qmax);
	rhs += shift_pow(tail, nm);
	return lhs - rhs;
}

/* ---- block/partition bijection ---------------------------------------- */

/*
 * For an edge peak (m = 1 or m = rank) the basis of the module labeled k
 * is parameterized by tuples of padded partitions, one per color:
 *
 *   last-node edge:  block b = color (b, rank), b = 1..rank, holding
 *                    n_b - n_{b-1} factors, exponent offset theta(k - b);
 *   first-node edge: block b = color (1, b), b = 1..rank, holding
 *                    n_b - n_{b+1} factors, exponent offset 0 when k = 0
 *                    and theta(b - k) otherwise.
 *
 * Block b with parts p_1 <= ... <= p_c (zeros allowed, the count is
 * meaningful) contributes factors with exponents t + offset + p_t; the
 * blocks are merged into canonical order and the staircase 0,1,2,... is
 * added across the merged positions.  The degree of the image is
 * |parts| + N(n) + n_k.
 */
using PartitionList = std::vector<std::vector<long long>>;

inline bool a_edge_is_last(const AlgebraSpec& spec)
{
	if (spec.family != Family::TypeA || (spec.m != 1 && spec.m != spec.rank))
		throw std::invalid_argument(
			"block bijection needs family A with the peak at an end");
	return spec.m == spec.rank;   /* rank 1: both ends coincide */
}

inline Color a_block_color(const AlgebraSpec& spec, int b)
{
	return a_edge_is_last(spec) ? Color::pair(b, spec.rank)
								: Color::pair(1, b);
}

inline int a_block_offset(const AlgebraSpec& spec, int k, int b)
{
	if (a_edge_is_last(spec))
		return theta(k - b);
	return k == 0 ? 0 : theta(b - k);
}

/* Chain weight determined by the block sizes alone. */
inline Weight a_bijection_chain(const AlgebraSpec& spec,
								const PartitionList& parts)
{
	if (parts.size() != static_cast<std::size_t>(spec.rank))
		throw std::invalid_argument("need one partition per block");
	Weight n(parts.size(), 0);
	bool last = a_edge_is_last(spec);
	long long acc = 0;
	if (last)
		for (std::size_t b = 0; b < parts.size(); ++b) {
			acc += static_cast<long long>(parts[b].size());
			n[b] = acc;
		}
	else
		for (std::size_t b = parts.size(); b-- > 0;) {
			acc += static_cast<long long>(parts[b].size());
			n[b] = acc;
		}
	return n;
}

inline Monomial a_bijection_forward(const AlgebraSpec& spec, int k,
									const PartitionList& parts)
{
	if (k < 0 || k > spec.rank)
		throw std::invalid_argument("a_bijection_forward: k out of range");
	if (parts.size() != static_cast<std::size_t>(spec.rank))
		throw std::invalid_argument("need one partition per block");
	std::vector<Factor> merged;
	for (int b = 1; b <= spec.rank; ++b) {
		const auto& p = parts[b - 1];
		int offset = a_block_offset(spec, k, b);
		for (std::size_t t = 0; t < p.size(); ++t) {
			if (p[t] < 0 || (t + 1 < p.size() && p[t] > p[t + 1]))
				throw std::invalid_argument(
					"block parts must be weakly increasing and nonnegative");
			merged.push_back(Factor{
				a_block_color(spec, b),
				static_cast<long long>(t + 1) + offset + p[t]});
		}
	}
	std::sort(merged.begin(), merged.end(),
			  [&spec](const Factor& x, const Factor& y) {
				  return factor_storage_less(spec, x, y);
			  });
	return Monomial::from_sorted(spec, staircase_down(std::move(merged)));
}

inline PartitionList a_bijection_backward(const AlgebraSpec& spec, int k,
										  const Monomial& x)
{
	if (k < 0 || k > spec.rank)
		throw std::invalid_argument("a_bijection_backward: k out of range");
	std::vector<Factor> flat = staircase_up(x.factors());
	PartitionList parts(static_cast<std::size_t>(spec.rank));
	std::vector<long long> seen(static_cast<std::size_t>(spec.rank), 0);
	for (const Factor& f : flat) {
		int b = a_edge_is_last(spec) ? f.color.i : f.color.j;
		long long t = ++seen[b - 1];
		long long part = f.r - t - a_block_offset(spec, k, b);
		auto& dst = parts[b - 1];
		if (part < 0 || (!dst.empty() && dst.back() > part))
			throw std::invalid_argument(
				"monomial is not in the image of the block bijection");
		dst.push_back(part);
	}
	return parts;
}

/* Minimal degree of the module slice: N(n) + n_k (n_0 := 0). */
inline long long a_min_degree(const AlgebraSpec& spec, int k,
							  const Weight& n)
{
	(void)spec;
	return a_quadratic_exponent(n) + (k == 0 ? 0 : n[k - 1]);
}

/* ---- path decomposition ------------------------------------------------ */

/* Split each color (i_t, j_t) of a path into its row half (i_t, m) and its
 * column half (m, j_t).  Both halves are valid colors of the same
 * alphabet, and both have the same length as the path. */
struct PathSplit {
	std::vector<Color> rows, cols;
};

inline PathSplit path_decompose(const AlgebraSpec& spec,
								const std::vector<Color>& p)
{
	PathSplit out;
	out.rows.reserve(p.size());
	out.cols.reserve(p.size());
	for (const Color& c : p) {
		check_color(spec, c);
		out.rows.push_back(Color::pair(c.i, spec.m));
		out.cols.push_back(Color::pair(spec.m, c.j));
	}
	return out;
}

/*
 * Degrees of the minimal monomials of a path and of its two halves, and
 * the residual  d(rows) + d(cols) - len^2 - d(path)  ("predicted minus
 * actual").  With unit starts the residual is identically zero; with the
 * window starts MaxPair(i,j) / ThetaRow(i-1) / ThetaCol(j+1) it equals the
 * path length exactly when the first color lies strictly outside the
 * window on both sides (i_1 < i and j_1 > j), because the combined start
 * is then one lower than the two offsets predict and the deficit
 * propagates to every position.
 */
struct MinimalDegrees {
	long long path = 0, rows = 0, cols = 0, residual = 0;
};

inline MinimalDegrees minimal_degree_identity(
	const AlgebraSpec& spec, const std::vector<Color>& p,
	const StartRule& path_rule = StartRule::unit(),
	const StartRule& row_rule = StartRule::unit(),
	const StartRule& col_rule = StartRule::unit())
{
	PathSplit split = path_decompose(spec, p);
	MinimalDegrees d;
	d.path = minimal_monomial(spec, p, path_rule).degree();
	d.rows = minimal_monomial(spec, split.rows, row_rule).degree();
	d.cols = minimal_monomial(spec, split.cols, col_rule).degree();
	long long len = static_cast<long long>(p.size());
	d.residual = d.rows + d.cols - len * len - d.path;
	return d;
}

} /* namespace fschar */
