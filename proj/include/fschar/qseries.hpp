#pragma once

/*
 * Truncated formal power series in the variable q with exact integer
 * coefficients.
 *
 * A QSeries of order O stores the coefficients of q^0, ..., q^O and nothing
 * beyond; every operation states explicitly which order its result carries.
 * Binary operations truncate to the minimum of the two operand orders, so a
 * result never pretends to know more coefficients than its inputs supplied.
 * Coefficients are arbitrary-precision integers: every reported value is
 * exact, there is no floating point and no fixed-width fallback anywhere.
 */

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace fschar {

using Int = boost::multiprecision::cpp_int;

class QSeries {
public:
	/* The zero series of the given truncation order (coefficients of
	 * q^0..q^order are stored, all initially zero). */
	explicit QSeries(int order) : order_(order)
	{
		if (order < 0)
			throw std::invalid_argument("QSeries: order must be nonnegative");
		coeffs_.resize(static_cast<std::size_t>(order) + 1);
	}

	static QSeries zero(int order) { return QSeries(order); }

	static QSeries one(int order)
	{
		QSeries s(order);
		s.coeffs_[0] = 1;
		return s;
	}

	/* q^k truncated to the given order; k beyond the order yields zero. */
	static QSeries monomial(int k, int order)
	{
		if (k < 0)
			throw std::invalid_argument("QSeries::monomial: negative exponent");
		QSeries s(order);
		if (k <= order)
			s.coeffs_[static_cast<std::size_t>(k)] = 1;
		return s;
	}

	int order() const { return order_; }

	const Int& coeff(int d) const
	{
		check_degree(d);
		return coeffs_[static_cast<std::size_t>(d)];
	}

	void set_coeff(int d, Int v)
	{
		check_degree(d);
		coeffs_[static_cast<std::size_t>(d)] = std::move(v);
	}

	void add_to_coeff(int d, const Int& v)
	{
		check_degree(d);
		coeffs_[static_cast<std::size_t>(d)] += v;
	}

	bool is_zero() const
	{
		return std::all_of(coeffs_.begin(), coeffs_.end(),
						   [](const Int& c) { return c == 0; });
	}

	/* Strict equality: same order and identical coefficients. */
	friend bool operator==(const QSeries& a, const QSeries& b)
	{
		return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
	}
	friend bool operator!=(const QSeries& a, const QSeries& b)
	{
		return !(a == b);
	}

	/* Coefficientwise agreement up to min(order, other's order). */
	bool agrees_with(const QSeries& other) const
	{
		int o = std::min(order_, other.order_);
		for (int d = 0; d <= o; ++d)
			if (coeff(d) != other.coeff(d))
				return false;
		return true;
	}

	/* Copy truncated to a lower (or equal) order. */
	QSeries truncated(int new_order) const
	{
		if (new_order > order_)
			throw std::invalid_argument(
				"QSeries::truncated: cannot extend a truncated series");
		QSeries s(new_order);
		std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1,
				  s.coeffs_.begin());
		return s;
	}

	friend QSeries operator+(const QSeries& a, const QSeries& b)
	{
		QSeries s(std::min(a.order_, b.order_));
		for (int d = 0; d <= s.order_; ++d)
			s.coeffs_[d] = a.coeffs_[d] + b.coeffs_[d];
		return s;
	}

	friend QSeries operator-(const QSeries& a, const QSeries& b)
	{
		QSeries s(std::min(a.order_, b.order_));
		for (int d = 0; d <= s.order_; ++d)
			s.coeffs_[d] = a.coeffs_[d] - b.coeffs_[d];
		return s;
	}

	friend QSeries operator-(const QSeries& a)
	{
		QSeries s(a.order_);
		for (int d = 0; d <= s.order_; ++d)
			s.coeffs_[d] = -a.coeffs_[d];
		return s;
	}

	/* Cauchy product, truncated to the minimum operand order. */
	friend QSeries operator*(const QSeries& a, const QSeries& b)
	{
		QSeries s(std::min(a.order_, b.order_));
		for (int i = 0; i <= s.order_; ++i) {
			if (a.coeffs_[i] == 0)
				continue;
			for (int j = 0; i + j <= s.order_; ++j) {
				if (b.coeffs_[j] == 0)
					continue;
				s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
			}
		}
		return s;
	}

	QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
	QSeries& operator-=(const QSeries& b) { return *this = *this - b; }
	QSeries& operator*=(const QSeries& b) { return *this = *this * b; }

	const std::vector<Int>& coefficients() const { return coeffs_; }

private:
	void check_degree(int d) const
	{
		if (d < 0 || d > order_)
			throw std::out_of_range("QSeries: degree outside truncation order");
	}

	int order_;
	std::vector<Int> coeffs_;
};

inline QSeries add(const QSeries& a, const QSeries& b) { return a + b; }
inline QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }

/* s * q^k for k >= 0; coefficients shifted past the order are dropped. */
inline QSeries monomial_shift(const QSeries& s, int k)
{
	if (k < 0)
		throw std::invalid_argument("monomial_shift: negative shift");
	QSeries out(s.order());
	for (int d = 0; d + k <= s.order(); ++d)
		out.set_coeff(d + k, s.coeff(d));
	return out;
}

/* 1 - q^e truncated to the given order (e = 0 gives the zero series). */
inline QSeries one_minus_qpow(int e, int order)
{
	if (e < 0)
		throw std::invalid_argument("one_minus_qpow: negative exponent");
	QSeries s = QSeries::one(order);
	if (e == 0)
		return QSeries::zero(order);
	if (e <= order)
		s.set_coeff(e, -1);
	return s;
}

/* Finite Pochhammer symbol (q)_n = (1-q)(1-q^2)...(1-q^n), with (q)_0 = 1. */
inline QSeries pochhammer(int n, int order)
{
	if (n < 0)
		throw std::invalid_argument("pochhammer: negative index");
	QSeries s = QSeries::one(order);
	for (int k = 1; k <= n; ++k) {
		if (k > order)
			break;          /* further factors are 1 + O(q^{order+1}) */
		s *= one_minus_qpow(k, order);
	}
	return s;
}

/* 1/(q)_n: the coefficient of q^d counts the partitions of d into parts of
 * size at most n.  Computed by the standard one-part-size-at-a-time dynamic
 * program, which realizes that counting interpretation directly. */
inline QSeries inv_pochhammer(int n, int order)
{
	if (n < 0)
		throw std::invalid_argument("inv_pochhammer: negative index");
	std::vector<Int> c(static_cast<std::size_t>(order) + 1);
	c[0] = 1;
	for (int k = 1; k <= n && k <= order; ++k)
		for (int d = k; d <= order; ++d)
			c[d] += c[d - k];
	QSeries s(order);
	for (int d = 0; d <= order; ++d)
		s.set_coeff(d, c[d]);
	return s;
}

/* Exact division a/b where b has unit constant coefficient (+1 or -1).
 * Solves b*c = a coefficient by coefficient; result order = min of inputs. */
inline QSeries divide_unit(const QSeries& a, const QSeries& b)
{
	const Int& b0 = b.coeff(0);
	if (b0 != 1 && b0 != -1)
		throw std::domain_error(
			"divide_unit: divisor constant coefficient must be +1 or -1");
	int order = std::min(a.order(), b.order());
	QSeries c(order);
	for (int d = 0; d <= order; ++d) {
		Int acc = a.coeff(d);
		for (int j = 1; j <= d; ++j) {
			if (b.coeff(j) == 0)
				continue;
			acc -= b.coeff(j) * c.coeff(d - j);
		}
		/* b0 is +-1, so the division below is exact. */
		c.set_coeff(d, b0 == 1 ? acc : -acc);
	}
	return c;
}

/* JSON form: {"order": O, "coeffs": ["c0", "c1", ...]} with decimal-string
 * coefficients, so arbitrary-precision values survive any JSON reader. */
inline nlohmann::json to_json(const QSeries& s)
{
	nlohmann::json j;
	j["order"] = s.order();
	nlohmann::json arr = nlohmann::json::array();
	for (int d = 0; d <= s.order(); ++d)
		arr.push_back(s.coeff(d).str());
	j["coeffs"] = std::move(arr);
	return j;
}

inline QSeries qseries_from_json(const nlohmann::json& j)
{
	if (!j.contains("order") || !j.contains("coeffs"))
		throw std::invalid_argument("qseries_from_json: missing field");
	int order = j.at("order").get<int>();
	const auto& arr = j.at("coeffs");
	if (!arr.is_array() ||
		arr.size() != static_cast<std::size_t>(order) + 1)
		throw std::invalid_argument("qseries_from_json: coefficient count "
									"does not match order");
	QSeries s(order);
	for (int d = 0; d <= order; ++d)
		s.set_coeff(d, Int(arr.at(static_cast<std::size_t>(d))
							   .get<std::string>()));
	return s;
}

inline std::string to_string(const QSeries& s)
{
	std::string out;
	bool first = true;
	for (int d = 0; d <= s.order(); ++d) {
		if (s.coeff(d) == 0)
			continue;
		if (!first)
			out += " + ";
		out += s.coeff(d).str();
		if (d > 0) {
			out += "*q^";
			out += std::to_string(d);
		}
		first = false;
	}
	if (first)
		out = "0";
	out += " + O(q^" + std::to_string(s.order() + 1) + ")";
	return out;
}

} /* namespace fschar */
