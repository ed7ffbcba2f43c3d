#pragma once

/*
 * Verification suites: every closed form, relation system, and bijection
 * in the library is replayed against the brute-force enumerator (or
 * against an independently computed partner) over exhaustive small
 * grids, and the outcomes are collected into a machine-readable report.
 *
 * All checks are exact: a suite passes only when every compared pair of
 * series is coefficientwise identical and every structural property
 * holds on every enumerated object.  Grids fan out to a worker pool;
 * partial reports are merged in work-item order, so the report is
 * byte-stable for any parallelism degree.
 */

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "char_a.hpp"
#include "char_d.hpp"
#include "enumerate.hpp"
#include "qseries.hpp"

namespace fschar {

struct VerifyCase {
	std::string weight;
	std::string detail;
	Int discrepancy = 0;
};

struct VerifyReport {
	std::string suite;
	long long cases = 0;
	std::vector<VerifyCase> failures;
	Int max_discrepancy = 0;

	bool ok() const { return failures.empty(); }

	void record(const std::string& weight, const std::string& detail,
				Int discrepancy)
	{
		if (discrepancy > max_discrepancy)
			max_discrepancy = discrepancy;
		failures.push_back(
			VerifyCase{weight, detail, std::move(discrepancy)});
	}

	/* One exact series identity: residual must vanish. */
	void check_zero(const QSeries& residual, const std::string& weight,
					const std::string& detail)
	{
		++cases;
		if (residual.is_zero())
			return;
		Int worst = 0;
		for (int d = 0; d <= residual.order(); ++d) {
			Int a = boost::multiprecision::abs(residual.coeff(d));
			if (a > worst)
				worst = a;
		}
		record(weight, detail, worst);
	}

	void check_equal(const QSeries& got, const QSeries& want,
					 const std::string& weight, const std::string& detail)
	{
		check_zero(got - want, weight, detail);
	}

	/* One structural property; a failure counts as discrepancy 1. */
	void check_true(bool ok_flag, const std::string& weight,
					const std::string& detail)
	{
		++cases;
		if (!ok_flag)
			record(weight, detail, 1);
	}

	void absorb(VerifyReport&& other)
	{
		cases += other.cases;
		if (other.max_discrepancy > max_discrepancy)
			max_discrepancy = other.max_discrepancy;
		for (VerifyCase& c : other.failures)
			failures.push_back(std::move(c));
	}
};

struct VerifyOptions {
	int qmax = 25;              /* truncation order for series identities */
	long long entry_bound = 3;  /* per-coordinate weight bound for grids */
	int dmax = 15;              /* degree bound for the split/merge sweep */
	long long partition_bound = 8; /* total partition size for bijections */
	int jobs = 0;               /* worker threads; 0 = auto */
	bool corrupt = false;       /* self-test: inject a known-bad residual */
};

namespace detail {

inline int verify_jobs(int requested)
{
	/* The environment variable takes precedence over the flag. */
	if (const char* env = std::getenv("FSCHAR_JOBS")) {
		int j = std::atoi(env);
		if (j >= 1)
			return j;
	}
	if (requested >= 1)
		return requested;
	unsigned hc = std::thread::hardware_concurrency();
	return hc ? static_cast<int>(hc) : 1;
}

/* Run every item on a small pool and merge the partial reports in item
 * order, independent of scheduling. */
inline VerifyReport run_items(
	const std::string& suite,
	std::vector<std::function<VerifyReport()>> items, int jobs)
{
	std::vector<VerifyReport> parts(items.size());
	std::atomic<std::size_t> next{0};
	auto worker = [&]() {
		for (;;) {
			std::size_t i = next.fetch_add(1);
			if (i >= items.size())
				return;
			parts[i] = items[i]();
		}
	};
	int pool_size = std::min<std::size_t>(
		static_cast<std::size_t>(verify_jobs(jobs)),
		std::max<std::size_t>(items.size(), 1));
	std::vector<std::thread> pool;
	for (int t = 0; t < pool_size; ++t)
		pool.emplace_back(worker);
	for (std::thread& th : pool)
		th.join();
	VerifyReport all;
	all.suite = suite;
	for (VerifyReport& p : parts)
		all.absorb(std::move(p));
	return all;
}

/* All realizable weights in the box [0, bound]^rank, in lexicographic
 * order. */
inline std::vector<Weight> realizable_box(const AlgebraSpec& spec,
										  long long bound)
{
	std::vector<Weight> out;
	Weight n(static_cast<std::size_t>(spec.rank), 0);
	std::function<void(int)> walk = [&](int pos) {
		if (pos == spec.rank) {
			if (realizable(spec, n))
				out.push_back(n);
			return;
		}
		for (long long v = 0; v <= bound; ++v) {
			n[static_cast<std::size_t>(pos)] = v;
			walk(pos + 1);
		}
	};
	walk(0);
	return out;
}

} /* namespace detail */

/* ------------------------------------------------------------------ */
/* Family A                                                            */
/* ------------------------------------------------------------------ */

/* Closed forms vs the enumerator: the level family for every
 * k on ranks 1..4 (all peak positions), and the exponent-1 window
 * families on ranks 3 and 4. */
inline VerifyReport verify_a_formula(const VerifyOptions& opt)
{
	std::vector<std::function<VerifyReport()>> items;
	for (int rank = 1; rank <= 4; ++rank)
		for (int m = 1; m <= rank; ++m)
			items.push_back([rank, m, opt]() {
				VerifyReport r;
				AlgebraSpec spec = AlgebraSpec::type_a(rank, m);
				for (const Weight& n :
					 detail::realizable_box(spec, opt.entry_bound)) {
					for (int k = 0; k <= rank; ++k) {
						QSeries oracle = enumerate_character(
							EnumRequest{spec, n,
										InitialCondition::lambda(k),
										{}},
							opt.qmax);
						r.check_equal(
							char_a_lambda(spec, k, n, opt.qmax), oracle,
							weight_to_text(n),
							"rank " + std::to_string(rank) + " m " +
								std::to_string(m) + " k " +
								std::to_string(k));
					}
					if (rank < 3)
						continue;
					for (int i = 1; i <= m; ++i)
						for (int j = m; j <= rank; ++j) {
							QSeries oracle = enumerate_character(
								EnumRequest{
									spec, n,
									InitialCondition::pair_window(i, j),
									{}},
								opt.qmax);
							r.check_equal(
								char_a_window(spec, i, j, n, opt.qmax),
								oracle, weight_to_text(n),
								"rank " + std::to_string(rank) + " m " +
									std::to_string(m) + " window (" +
									std::to_string(i) + "," +
									std::to_string(j) + ")");
						}
				}
				return r;
			});
	return detail::run_items("a-formula", std::move(items), opt.jobs);
}

/* The window relation system, evaluated once with enumerated characters
 * and once with the closed forms; every residual must vanish. */
inline VerifyReport verify_a_recurrence(const VerifyOptions& opt)
{
	std::vector<std::function<VerifyReport()>> items;
	for (int rank = 3; rank <= 4; ++rank)
		for (int m = 1; m <= rank; ++m)
			items.push_back([rank, m, opt]() {
				VerifyReport r;
				AlgebraSpec spec = AlgebraSpec::type_a(rank, m);
				AChi oracle = a_chi_oracle(spec);
				AChi formula = a_chi_formula(spec);
				const QSeries corruption =
					QSeries::monomial(1, opt.qmax);
				auto check = [&](const QSeries& residual, const Weight& n,
								 const std::string& what) {
					r.check_zero(opt.corrupt ? residual + corruption
											 : residual,
								 weight_to_text(n), what);
				};
				for (const Weight& n :
					 detail::realizable_box(spec, opt.entry_bound)) {
					std::string base = "rank " + std::to_string(rank) +
									   " m " + std::to_string(m) + " ";
					check(a_residual_zero_family(spec, n, opt.qmax,
												 oracle),
						  n, base + "shift relation (oracle)");
					check(a_residual_zero_family(spec, n, opt.qmax,
												 formula),
						  n, base + "shift relation (closed)");
					for (int i = 1; i <= m; ++i)
						for (int j = m; j <= rank; ++j) {
							std::string what =
								base + "window (" + std::to_string(i) +
								"," + std::to_string(j) + ")";
							check(a_residual_window(spec, i, j, n,
													opt.qmax, oracle),
								  n, what + " (oracle)");
							check(a_residual_window(spec, i, j, n,
													opt.qmax, formula),
								  n, what + " (closed)");
						}
				}
				return r;
			});
	return detail::run_items("a-recurrence", std::move(items), opt.jobs);
}

namespace detail {

/* Enumerate tuples of weakly increasing nonnegative partitions, one per
 * block with the given lengths, with total size <= budget. */
inline void walk_partition_lists(
	const std::vector<long long>& lengths, long long budget,
	const std::function<void(const PartitionList&)>& fn)
{
	PartitionList parts(lengths.size());
	std::function<void(std::size_t, long long)> walk_block;
	std::function<void(std::size_t, std::size_t, long long, long long)>
		walk_parts;
	walk_parts = [&](std::size_t b, std::size_t pos, long long minv,
					 long long left) {
		if (pos == static_cast<std::size_t>(lengths[b])) {
			walk_block(b + 1, left);
			return;
		}
		for (long long v = minv; v <= left; ++v) {
			parts[b].push_back(v);
			walk_parts(b, pos + 1, v, left - v);
			parts[b].pop_back();
		}
	};
	walk_block = [&](std::size_t b, long long left) {
		if (b == lengths.size()) {
			fn(parts);
			return;
		}
		parts[b].clear();
		walk_parts(b, 0, 0, left);
	};
	walk_block(0, budget);
}

} /* namespace detail */

/* The block/partition parametrization at the two edge peak positions:
 * forward lands in the admissible set, is injective, inverts exactly,
 * satisfies the degree identity, and its degree histogram reproduces
 * the closed form coefficientwise on the range the partition budget
 * covers. */
inline VerifyReport verify_a_bijection(const VerifyOptions& opt)
{
	std::vector<std::function<VerifyReport()>> items;
	for (int rank = 1; rank <= 3; ++rank) {
		std::vector<int> peaks = rank == 1 ? std::vector<int>{1}
										   : std::vector<int>{rank, 1};
		for (int m : peaks) {
			items.push_back([rank, m, opt]() {
				VerifyReport r;
				AlgebraSpec spec = AlgebraSpec::type_a(rank, m);
				for (const Weight& n :
					 detail::realizable_box(spec, opt.entry_bound)) {
					/* block lengths: consecutive chain differences */
					std::vector<long long> lengths(
						static_cast<std::size_t>(rank), 0);
					for (int b = 1; b <= rank; ++b) {
						long long hi = n[static_cast<std::size_t>(b - 1)];
						long long lo;
						if (a_edge_is_last(spec))
							lo = b == 1 ? 0
										: n[static_cast<std::size_t>(b - 2)];
						else
							lo = b == rank
									 ? 0
									 : n[static_cast<std::size_t>(b)];
						lengths[static_cast<std::size_t>(b - 1)] = hi - lo;
					}
					for (int k = 0; k <= rank; ++k) {
						long long minimal = a_min_degree(spec, k, n);
						int hist_top = static_cast<int>(
							minimal + opt.partition_bound);
						QSeries formula =
							char_a_lambda(spec, k, n, hist_top);
						std::map<long long, long long> histogram;
						std::set<std::string> seen;
						bool all_ok = true;
						std::string first_bad;
						detail::walk_partition_lists(
							lengths, opt.partition_bound,
							[&](const PartitionList& parts) {
								Monomial x = a_bijection_forward(spec, k,
																 parts);
								long long size = 0;
								for (const auto& block : parts)
									for (long long v : block)
										size += v;
								bool member = admissible(
									x, InitialCondition::lambda(k));
								bool weight_ok = x.weight() == n;
								bool degree_ok =
									x.degree() == size + minimal;
								bool fresh =
									seen.insert(monomial_to_text(x))
										.second;
								bool invert =
									a_bijection_backward(spec, k, x) ==
									parts;
								if (!(member && weight_ok && degree_ok &&
									  fresh && invert) &&
									all_ok) {
									all_ok = false;
									first_bad =
										monomial_to_text(x) +
										(member ? "" : " not admissible") +
										(weight_ok ? "" : " wrong weight") +
										(degree_ok ? "" : " wrong degree") +
										(fresh ? "" : " duplicate image") +
										(invert ? "" : " bad inverse");
								}
								++histogram[x.degree()];
							});
						std::string what = "rank " + std::to_string(rank) +
										   " m " + std::to_string(m) +
										   " k " + std::to_string(k);
						r.check_true(all_ok, weight_to_text(n),
									 what + ": " + first_bad);
						QSeries image = QSeries::zero(hist_top);
						for (const auto& [deg, count] : histogram)
							if (deg <= hist_top)
								image.set_coeff(static_cast<int>(deg),
												count);
						r.check_equal(image, formula, weight_to_text(n),
									  what + ": image histogram vs closed "
											 "form");
					}
				}
				return r;
			});
		}
	}
	return detail::run_items("a-bijection", std::move(items), opt.jobs);
}

/* ------------------------------------------------------------------ */
/* Rank-4 family D                                                     */
/* ------------------------------------------------------------------ */

/* Closed forms vs the enumerator for every full-alphabet target. */
inline VerifyReport verify_d4_formula(const VerifyOptions& opt)
{
	AlgebraSpec spec = AlgebraSpec::type_d(4);
	std::vector<Weight> grid = detail::realizable_box(spec, opt.entry_bound);
	std::vector<std::function<VerifyReport()>> items;
	for (const Weight& n : grid)
		items.push_back([spec, n, opt]() {
			VerifyReport r;
			DChi oracle = d_chi_oracle(spec);
			DChi formula = d_chi_formula(spec);
			r.check_equal(char_d4_lambda0(spec, n, opt.qmax),
						  oracle(DCharTarget::lambda(0), n, opt.qmax),
						  weight_to_text(n), "vacuum sum vs oracle");
			std::vector<DCharTarget> targets;
			for (Color g : all_colors(spec))
				targets.push_back(DCharTarget::first_color(g));
			targets.push_back(DCharTarget::exponent_two());
			for (int k : {0, 1, 3, 4})
				targets.push_back(DCharTarget::lambda(k));
			for (const DCharTarget& t : targets) {
				std::string tn =
					t.kind == DCharTarget::Kind::Lambda
						? "level k=" + std::to_string(t.k)
					: t.kind == DCharTarget::Kind::ExponentTwo
						? "exponent >= 2"
						: "cap " + color_to_text(t.gamma);
				r.check_equal(formula(t, n, opt.qmax),
							  oracle(t, n, opt.qmax), weight_to_text(n),
							  tn + " vs oracle");
			}
			return r;
		});
	return detail::run_items("d4-formula", std::move(items), opt.jobs);
}

/* The seven peeling relations, with enumerated and closed-form
 * characters independently. */
inline VerifyReport verify_recurrences_d4(const VerifyOptions& opt)
{
	AlgebraSpec spec = AlgebraSpec::type_d(4);
	std::vector<Weight> grid = detail::realizable_box(spec, opt.entry_bound);
	std::vector<std::function<VerifyReport()>> items;
	for (const Weight& n : grid)
		items.push_back([spec, n, opt]() {
			VerifyReport r;
			DChi oracle = d_chi_oracle(spec);
			DChi formula = d_chi_formula(spec);
			std::vector<DCharTarget> targets;
			for (Color g : all_colors(spec))
				targets.push_back(DCharTarget::first_color(g));
			targets.push_back(DCharTarget::exponent_two());
			for (const DCharTarget& t : targets) {
				std::string tn =
					t.kind == DCharTarget::Kind::ExponentTwo
						? "exponent >= 2"
						: "cap " + color_to_text(t.gamma);
				r.check_zero(
					d4_peel_residual(spec, t, n, opt.qmax, oracle),
					weight_to_text(n), tn + " relation (oracle)");
				r.check_zero(
					d4_peel_residual(spec, t, n, opt.qmax, formula),
					weight_to_text(n), tn + " relation (closed)");
			}
			return r;
		});
	return detail::run_items("d4-recurrence", std::move(items), opt.jobs);
}

/* Split/merge as mutually inverse maps with the membership table and
 * the degree identity, exhaustively by degree. */
inline VerifyReport verify_decomposition_d4(const VerifyOptions& opt)
{
	AlgebraSpec spec = AlgebraSpec::type_d(4);
	std::vector<std::function<VerifyReport()>> items;
	items.push_back([spec, opt]() {
		VerifyReport r;
		auto rows = d4_decomposition_rows(spec);
		for (const Monomial& x : enumerate_by_degree(
				 spec, InitialCondition::all(), opt.dmax, {})) {
			auto [x1, x2] = split_monomial(x);
			long long c1 = static_cast<long long>(x1.size());
			long long c2 = static_cast<long long>(x2.size());
			r.check_true(x.degree() ==
							 x1.degree() + x2.degree() + c1 * c2,
						 weight_to_text(x.weight()),
						 "degree identity on split of " +
							 monomial_to_text(x));
			r.check_true(merge_monomials(x1, x2) == x,
						 weight_to_text(x.weight()),
						 "merge(split) identity on " + monomial_to_text(x));
			for (const D4DecompositionRow& row : rows) {
				bool full_side = satisfies_ic(x, row.full_ic);
				bool part_side = satisfies_ic(x1, row.main_ic) &&
								 satisfies_ic(x2, row.pair_ic);
				std::string tn =
					row.target.kind == DCharTarget::Kind::ExponentTwo
						? "exponent >= 2"
						: "cap " + color_to_text(row.target.gamma);
				r.check_true(full_side == part_side,
							 weight_to_text(x.weight()),
							 "membership row " + tn + " on " +
								 monomial_to_text(x));
			}
		}
		return r;
	});
	items.push_back([spec, opt]() {
		VerifyReport r;
		auto mains = enumerate_by_degree(spec, InitialCondition::all(),
										 opt.dmax, d_group_colors(spec, 2));
		auto pairs = enumerate_by_degree(spec, InitialCondition::all(),
										 opt.dmax, d_group_colors(spec, 3));
		for (const Monomial& x1 : mains)
			for (const Monomial& x2 : pairs) {
				long long c1 = static_cast<long long>(x1.size());
				long long c2 = static_cast<long long>(x2.size());
				if (x1.degree() + x2.degree() + c1 * c2 > opt.dmax)
					continue;
				Monomial x = merge_monomials(x1, x2);
				auto [y1, y2] = split_monomial(x);
				r.check_true(y1 == x1 && y2 == x2,
							 weight_to_text(x.weight()),
							 "split(merge) identity on " +
								 monomial_to_text(x1) + " | " +
								 monomial_to_text(x2));
			}
		return r;
	});
	return detail::run_items("d4-split", std::move(items), opt.jobs);
}

/* The multi-sum vacuum form: termwise agreement with the rank-4 single
 * sum, and oracle agreement at rank 5 on a reduced grid (qmax capped at
 * 15 there to keep the enumeration bounded). */
inline VerifyReport verify_dl_remark(const VerifyOptions& opt)
{
	std::vector<std::function<VerifyReport()>> items;
	AlgebraSpec d4 = AlgebraSpec::type_d(4);
	for (const Weight& n : detail::realizable_box(d4, opt.entry_bound))
		items.push_back([d4, n, opt]() {
			VerifyReport r;
			r.check_equal(char_dl_lambda0(d4, n, opt.qmax),
						  char_d4_lambda0(d4, n, opt.qmax),
						  weight_to_text(n),
						  "rank-4 multi-sum vs single sum");
			return r;
		});
	AlgebraSpec d5 = AlgebraSpec::type_d(5);
	const int qmax5 = std::min(opt.qmax, 15);
	const long long bound5 = std::min<long long>(opt.entry_bound, 2);
	for (const Weight& n : detail::realizable_box(d5, bound5))
		items.push_back([d5, n, qmax5]() {
			VerifyReport r;
			QSeries oracle = enumerate_character(
				EnumRequest{d5, n, InitialCondition::all(), {}}, qmax5);
			r.check_equal(char_dl_lambda0(d5, n, qmax5), oracle,
						  weight_to_text(n), "rank-5 multi-sum vs oracle");
			return r;
		});
	return detail::run_items("dl-remark", std::move(items), opt.jobs);
}

/* Dispatch by suite name (the names the command line accepts). */
inline VerifyReport run_suite(const std::string& name,
							  const VerifyOptions& opt)
{
	if (name == "a-formula")
		return verify_a_formula(opt);
	if (name == "a-recurrence")
		return verify_a_recurrence(opt);
	if (name == "a-bijection")
		return verify_a_bijection(opt);
	if (name == "d4-formula")
		return verify_d4_formula(opt);
	if (name == "d4-recurrence")
		return verify_recurrences_d4(opt);
	if (name == "d4-split")
		return verify_decomposition_d4(opt);
	if (name == "dl-remark")
		return verify_dl_remark(opt);
	throw std::invalid_argument("unknown suite: " + name);
}

inline std::vector<std::string> suite_names()
{
	return {"a-formula",  "a-recurrence",  "a-bijection", "d4-formula",
			"d4-recurrence", "d4-split", "dl-remark"};
}

} /* namespace fschar */
