#pragma once

/*
 * Brute-force enumeration of admissible monomials.  This is the reference
 * oracle everything else is checked against: it walks factor sequences in
 * canonical storage order directly from the definitions (adjacent
 * difference bound plus initial condition), with no closed-form shortcuts.
 *
 * Because every color carries exactly one unit on the distinguished
 * coordinate (node m for family A, node 1 for family D), the factor count
 * of a monomial of weight n is forced: it equals that coordinate of n.
 * The search therefore fixes the factor count up front and fills slots
 * t = 1..count, pruning on remaining weight per coordinate and on the
 * smallest possible final degree.
 *
 * A zero-energy gap only occurs when the left color is strictly below the
 * right color, so every sequence the search emits is automatically in
 * canonical storage order and each admissible monomial is produced exactly
 * once.
 */

#include <algorithm>
#include <optional>
#include <vector>

#include "monomial.hpp"
#include "qseries.hpp"

namespace fschar {

struct EnumRequest {
	AlgebraSpec spec;
	Weight weight;
	InitialCondition ic = InitialCondition::all();
	std::vector<Color> colors;   /* empty means the full alphabet */
};

namespace detail {

struct EnumAlphabet {
	std::vector<Color> colors;
	std::vector<Weight> weights;
	Weight min_w, max_w;   /* per-coordinate extremes over the alphabet */

	EnumAlphabet(const AlgebraSpec& spec, const std::vector<Color>& subset)
	{
		colors = subset.empty() ? all_colors(spec) : subset;
		std::size_t l = static_cast<std::size_t>(spec.rank);
		min_w.assign(l, 0);
		max_w.assign(l, 0);
		for (std::size_t c = 0; c < colors.size(); ++c) {
			check_color(spec, colors[c]);
			weights.push_back(color_weight(spec, colors[c]));
			for (std::size_t t = 0; t < l; ++t) {
				if (c == 0 || weights[c][t] < min_w[t])
					min_w[t] = weights[c][t];
				if (c == 0 || weights[c][t] > max_w[t])
					max_w[t] = weights[c][t];
			}
		}
	}
};

} /* namespace detail */

/* All admissible monomials of the given weight with degree <= dmax, in
 * the deterministic order of monomial_less. */
inline std::vector<Monomial> enumerate_basis(const EnumRequest& req,
											 long long dmax)
{
	req.spec.validate();
	std::size_t l = static_cast<std::size_t>(req.spec.rank);
	if (req.weight.size() != l)
		throw std::invalid_argument("enumerate_basis: bad weight length");

	std::vector<Monomial> out;
	bool zero_weight = is_zero_weight(req.weight);
	int pivot = req.spec.family == Family::TypeA ? req.spec.m : 1;
	long long count = zero_weight ? 0 : req.weight[pivot - 1];
	if (zero_weight) {
		if (dmax >= 0)
			out.push_back(Monomial(req.spec));
		return out;
	}
	if (count <= 0)
		return out;   /* nonzero weight needs factors on the pivot node */

	detail::EnumAlphabet ab(req.spec, req.colors);
	std::vector<Factor> chosen;
	Weight rem = req.weight;

	/* Feasibility of the remaining weight with k more factors. */
	auto feasible = [&](long long k) {
		for (std::size_t t = 0; t < l; ++t) {
			if (rem[t] < k * ab.min_w[t])
				return false;
			if (rem[t] > k * ab.max_w[t])
				return false;
		}
		return true;
	};

	auto dfs = [&](auto&& self, long long t, long long degree) -> void {
		if (t > count) {
			out.push_back(Monomial::from_sorted(req.spec, chosen));
			return;
		}
		long long slots_left = count - t + 1;
		for (std::size_t c = 0; c < ab.colors.size(); ++c) {
			const Color& color = ab.colors[c];
			bool fits = true;
			for (std::size_t w = 0; w < l; ++w)
				if (ab.weights[c][w] > rem[w]) {
					fits = false;
					break;
				}
			if (!fits)
				continue;
			long long rlo;
			if (t == 1)
				rlo = first_color_allowed(req.spec, req.ic, color) ? 1 : 2;
			else
				rlo = chosen.back().r +
					  energy(req.spec, color, chosen.back().color);
			if (rlo < 1)
				rlo = 1;
			/* every remaining slot needs an exponent >= r */
			long long rhi = (dmax - degree) / slots_left;
			if (rhi < rlo)
				continue;
			for (std::size_t w = 0; w < l; ++w)
				rem[w] -= ab.weights[c][w];
			bool ok = feasible(slots_left - 1);
			if (ok)
				for (long long r = rlo; r <= rhi; ++r) {
					chosen.push_back(Factor{color, r});
					self(self, t + 1, degree + r);
					chosen.pop_back();
				}
			for (std::size_t w = 0; w < l; ++w)
				rem[w] += ab.weights[c][w];
		}
	};
	dfs(dfs, 1, 0);
	std::sort(out.begin(), out.end(), monomial_less);
	return out;
}

/* Degree generating series of the admissible monomials of one weight,
 * truncated at q^qmax: coefficient of q^d counts monomials of degree d. */
inline QSeries enumerate_character(const EnumRequest& req, int qmax)
{
	QSeries chi(qmax);
	for (const Monomial& m : enumerate_basis(req, qmax))
		chi.add_to_coeff(static_cast<int>(m.degree()), 1);
	return chi;
}

/* All admissible monomials of every weight with degree <= dmax (the factor
 * count is unconstrained), in the order of monomial_less. */
inline std::vector<Monomial> enumerate_by_degree(
	const AlgebraSpec& spec, const InitialCondition& ic, long long dmax,
	const std::vector<Color>& subset = {})
{
	spec.validate();
	detail::EnumAlphabet ab(spec, subset);
	std::vector<Monomial> out;
	std::vector<Factor> chosen;

	auto dfs = [&](auto&& self, long long degree) -> void {
		out.push_back(Monomial::from_sorted(spec, chosen));
		for (std::size_t c = 0; c < ab.colors.size(); ++c) {
			const Color& color = ab.colors[c];
			long long rlo;
			if (chosen.empty())
				rlo = first_color_allowed(spec, ic, color) ? 1 : 2;
			else
				rlo = chosen.back().r +
					  energy(spec, color, chosen.back().color);
			if (rlo < 1)
				rlo = 1;
			for (long long r = rlo; degree + r <= dmax; ++r) {
				chosen.push_back(Factor{color, r});
				self(self, degree + r);
				chosen.pop_back();
			}
		}
	};
	if (dmax >= 0)
		dfs(dfs, 0);
	std::sort(out.begin(), out.end(), monomial_less);
	return out;
}

} /* namespace fschar */
