/*
 * fschar — compute characters of principal-subspace-style monomial
 * bases, enumerate the bases themselves, and run the exact
 * verification suites.
 *
 *   fschar char   --family A --rank 3 --m 2 --k 0 --weight 1,1,1 --qmax 8
 *   fschar enum   --family D --rank 4 --weight 1,1,1,1 --dmax 6
 *   fschar verify --suite d4-formula
 *
 * Exit codes: 0 success, 1 verification failures, 2 usage errors.
 */

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fschar/verify.hpp"

using nlohmann::ordered_json;
using namespace fschar;

namespace {

/* ---------------- target selection ---------------- */

struct TargetSpec {
	enum class Kind { LambdaK, Window, ZeroFamily, CapColor, ExponentTwo };
	Kind kind = Kind::LambdaK;
	int k = 0;
	int i = 0, j = 0; /* window bounds */
	Color gamma = Color::unbarred(2);
};

std::optional<TargetSpec> parse_target(const std::string& text)
{
	TargetSpec t;
	if (text.rfind("lambda:", 0) == 0) {
		try {
			t.k = std::stoi(text.substr(7));
		} catch (const std::exception&) {
			return std::nullopt;
		}
		t.kind = TargetSpec::Kind::LambdaK;
		return t;
	}
	if (text.rfind("window:", 0) == 0) {
		std::string body = text.substr(7);
		auto comma = body.find(',');
		if (comma == std::string::npos)
			return std::nullopt;
		try {
			t.i = std::stoi(body.substr(0, comma));
			t.j = std::stoi(body.substr(comma + 1));
		} catch (const std::exception&) {
			return std::nullopt;
		}
		t.kind = TargetSpec::Kind::Window;
		return t;
	}
	if (text == "zero") {
		t.kind = TargetSpec::Kind::ZeroFamily;
		return t;
	}
	if (text == "exp2") {
		t.kind = TargetSpec::Kind::ExponentTwo;
		return t;
	}
	if (text.rfind("gamma:", 0) == 0) {
		auto c = color_from_text(text.substr(6));
		if (!c)
			return std::nullopt;
		t.kind = TargetSpec::Kind::CapColor;
		t.gamma = *c;
		return t;
	}
	return std::nullopt;
}

int usage_error(const std::string& message)
{
	std::cerr << "fschar: " << message << "\n";
	return 2;
}

/* ---------------- series rendering ---------------- */

std::vector<std::string> coeff_strings(const QSeries& s)
{
	std::vector<std::string> out;
	out.reserve(static_cast<std::size_t>(s.order()) + 1);
	for (int d = 0; d <= s.order(); ++d)
		out.push_back(s.coeff(d).str());
	return out;
}

std::string series_pretty(const QSeries& s)
{
	std::string out;
	for (int d = 0; d <= s.order(); ++d) {
		const Int& c = s.coeff(d);
		if (c == 0)
			continue;
		if (!out.empty())
			out += " + ";
		std::string coeff = c.str();
		if (d == 0) {
			out += coeff;
			continue;
		}
		if (coeff != "1")
			out += coeff + "*";
		out += "q";
		if (d != 1)
			out += "^" + std::to_string(d);
	}
	if (out.empty())
		out = "0";
	out += " + O(q^" + std::to_string(s.order() + 1) + ")";
	return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep)
{
	std::string out;
	for (std::size_t t = 0; t < parts.size(); ++t) {
		if (t)
			out += sep;
		out += parts[t];
	}
	return out;
}

std::vector<std::string> weight_strings(const Weight& w)
{
	std::vector<std::string> out;
	for (long long v : w)
		out.push_back(std::to_string(v));
	return out;
}

/* ---------------- shared config ---------------- */

struct Config {
	std::string family;
	int rank = 0;
	int m = 0; /* 0 = not given */
	int k = -1; /* -1 = not given */
	std::string target_text;
	std::string weight_text;
	std::string grid_text;
	int qmax = 10;
	long long dmax = 10;
	std::string format = "text";
	int jobs = 0;
	bool character = false;
};

std::optional<std::vector<long long>> parse_numbers(const std::string& text)
{
	std::vector<long long> out;
	std::string cur;
	for (char ch : text + ",") {
		if (ch == ',') {
			if (cur.empty())
				return std::nullopt;
			try {
				out.push_back(std::stoll(cur));
			} catch (const std::exception&) {
				return std::nullopt;
			}
			cur.clear();
		} else if (ch != ' ') {
			cur += ch;
		}
	}
	return out;
}

/* Resolved request: algebra, target, and the matching formula/oracle. */
struct Resolved {
	AlgebraSpec spec = AlgebraSpec::type_a(1, 1);
	TargetSpec target;
	InitialCondition ic = InitialCondition::all();
};

/* Validate the family/rank/m/target combination; usage errors throw. */
Resolved resolve(const Config& cfg)
{
	struct Bad {
		std::string why;
	};
	auto fail = [](const std::string& why) -> Resolved { throw Bad{why}; };
	try {
		Resolved r;
		if (cfg.k >= 0 && !cfg.target_text.empty())
			return fail("give either --k or --target, not both");
		if (!cfg.target_text.empty()) {
			auto t = parse_target(cfg.target_text);
			if (!t)
				return fail("cannot parse --target '" + cfg.target_text +
							"' (forms: lambda:K, window:I,J, zero, "
							"gamma:COLOR, exp2)");
			r.target = *t;
		} else {
			r.target.kind = TargetSpec::Kind::LambdaK;
			r.target.k = cfg.k >= 0 ? cfg.k : 0;
		}
		if (cfg.family == "A") {
			if (cfg.rank < 1)
				return fail("family A needs --rank >= 1");
			if (cfg.m < 1 || cfg.m > cfg.rank)
				return fail("family A needs --m in 1..rank");
			r.spec = AlgebraSpec::type_a(cfg.rank, cfg.m);
			switch (r.target.kind) {
			case TargetSpec::Kind::LambdaK:
				if (r.target.k < 0 || r.target.k > cfg.rank)
					return fail("--k must lie in 0..rank");
				r.ic = InitialCondition::lambda(r.target.k);
				break;
			case TargetSpec::Kind::Window:
				if (!(1 <= r.target.i && r.target.i <= cfg.m &&
					  cfg.m <= r.target.j && r.target.j <= cfg.rank))
					return fail("window needs 1 <= i <= m <= j <= rank");
				r.ic = InitialCondition::pair_window(r.target.i,
													 r.target.j);
				break;
			case TargetSpec::Kind::ZeroFamily:
				r.ic = InitialCondition::never();
				break;
			default:
				return fail("family A targets: lambda:K, window:I,J, zero");
			}
			return r;
		}
		if (cfg.family == "D") {
			if (cfg.m != 0)
				return fail("family D takes no --m");
			if (cfg.rank < 4 || cfg.rank > 6)
				return fail("family D supports --rank 4..6");
			r.spec = AlgebraSpec::type_d(cfg.rank);
			if (cfg.rank > 4) {
				if (r.target.kind != TargetSpec::Kind::LambdaK ||
					r.target.k != 0)
					return fail("family D with rank > 4 supports only "
								"the vacuum target lambda:0");
				r.ic = InitialCondition::all();
				return r;
			}
			switch (r.target.kind) {
			case TargetSpec::Kind::LambdaK: {
				int k = r.target.k;
				if (!(k == 0 || k == 1 || k == cfg.rank - 1 ||
					  k == cfg.rank))
					return fail("family D level targets: k in {0, 1, "
								"rank-1, rank}");
				r.ic = d4_target_ic(r.spec, DCharTarget::lambda(k));
				break;
			}
			case TargetSpec::Kind::CapColor: {
				auto colors = all_colors(r.spec);
				if (std::find(colors.begin(), colors.end(),
							  r.target.gamma) == colors.end())
					return fail("gamma target must name a color of the "
								"chosen algebra");
				r.ic = d4_target_ic(
					r.spec, DCharTarget::first_color(r.target.gamma));
				break;
			}
			case TargetSpec::Kind::ExponentTwo:
				r.ic = d4_target_ic(r.spec, DCharTarget::exponent_two());
				break;
			default:
				return fail("family D targets: lambda:K, gamma:COLOR, "
							"exp2");
			}
			return r;
		}
		return fail("--family must be A or D");
	} catch (const Bad& b) {
		throw std::invalid_argument(b.why);
	}
}

QSeries formula_series(const Resolved& r, const Weight& n, int qmax)
{
	if (!realizable(r.spec, n))
		return QSeries::zero(qmax);
	if (r.spec.family == Family::TypeA) {
		switch (r.target.kind) {
		case TargetSpec::Kind::LambdaK:
			return char_a_lambda(r.spec, r.target.k, n, qmax);
		case TargetSpec::Kind::Window:
			return char_a_window(r.spec, r.target.i, r.target.j, n, qmax);
		default:
			return char_a_zero(r.spec, n, qmax);
		}
	}
	if (r.spec.rank > 4)
		return char_dl_lambda0(r.spec, n, qmax);
	DChi formula = d_chi_formula(r.spec);
	switch (r.target.kind) {
	case TargetSpec::Kind::LambdaK:
		return formula(DCharTarget::lambda(r.target.k), n, qmax);
	case TargetSpec::Kind::CapColor:
		return formula(DCharTarget::first_color(r.target.gamma), n, qmax);
	default:
		return formula(DCharTarget::exponent_two(), n, qmax);
	}
}

/* ---------------- char ---------------- */

void emit_rows(const Config& cfg,
			   const std::vector<std::pair<Weight, QSeries>>& rows)
{
	if (cfg.format == "json") {
		ordered_json doc;
		doc["qmax"] = cfg.qmax;
		doc["rows"] = ordered_json::array();
		for (const auto& [w, s] : rows) {
			ordered_json row;
			row["weight"] = w;
			row["coefficients"] = coeff_strings(s);
			doc["rows"].push_back(std::move(row));
		}
		std::cout << doc.dump() << "\n";
		return;
	}
	for (const auto& [w, s] : rows) {
		if (cfg.format == "csv")
			std::cout << join(weight_strings(w), ",") << ", "
					  << join(coeff_strings(s), ",") << "\n";
		else
			std::cout << weight_to_text(w) << "  " << series_pretty(s)
					  << "\n";
	}
}

int run_char(const Config& cfg)
{
	Resolved r = resolve(cfg);
	if (cfg.qmax < 0 || cfg.qmax > 200)
		return usage_error("--qmax must lie in 0..200");
	if (cfg.weight_text.empty() == cfg.grid_text.empty())
		return usage_error("give exactly one of --weight or --grid");
	std::vector<Weight> weights;
	if (!cfg.weight_text.empty()) {
		auto w = parse_numbers(cfg.weight_text);
		if (!w || w->size() != static_cast<std::size_t>(cfg.rank))
			return usage_error("--weight needs rank many integers");
		weights.push_back(*w);
	} else {
		auto bounds = parse_numbers(cfg.grid_text);
		if (!bounds || bounds->size() != static_cast<std::size_t>(cfg.rank))
			return usage_error("--grid needs rank many bounds");
		for (long long b : *bounds)
			if (b < 0 || b > 6)
				return usage_error("--grid bounds must lie in 0..6");
		Weight n(static_cast<std::size_t>(cfg.rank), 0);
		std::function<void(std::size_t)> walk = [&](std::size_t pos) {
			if (pos == n.size()) {
				if (realizable(r.spec, n))
					weights.push_back(n);
				return;
			}
			for (long long v = 0; v <= (*bounds)[pos]; ++v) {
				n[pos] = v;
				walk(pos + 1);
			}
		};
		walk(0);
	}
	std::vector<std::pair<Weight, QSeries>> rows;
	for (const Weight& n : weights)
		rows.emplace_back(n, formula_series(r, n, cfg.qmax));
	emit_rows(cfg, rows);
	return 0;
}

/* ---------------- enum ---------------- */

int run_enum(const Config& cfg)
{
	Resolved r = resolve(cfg);
	if (cfg.qmax < 0 || cfg.qmax > 200)
		return usage_error("--qmax must lie in 0..200");
	if (cfg.weight_text.empty())
		return usage_error("enum needs --weight");
	auto w = parse_numbers(cfg.weight_text);
	if (!w || w->size() != static_cast<std::size_t>(cfg.rank))
		return usage_error("--weight needs rank many integers");
	EnumRequest req{r.spec, *w, r.ic, {}};
	if (cfg.character) {
		std::vector<std::pair<Weight, QSeries>> rows;
		rows.emplace_back(*w, enumerate_character(req, cfg.qmax));
		emit_rows(cfg, rows);
		return 0;
	}
	std::vector<Monomial> basis = enumerate_basis(req, cfg.dmax);
	std::stable_sort(basis.begin(), basis.end(),
					 [](const Monomial& a, const Monomial& b) {
						 if (a.degree() != b.degree())
							 return a.degree() < b.degree();
						 return monomial_to_text(a) < monomial_to_text(b);
					 });
	for (const Monomial& x : basis) {
		if (cfg.format == "json") {
			ordered_json line;
			line["degree"] = x.degree();
			line["factors"] = monomial_to_text(x);
			std::cout << line.dump() << "\n";
		} else if (cfg.format == "csv") {
			std::cout << x.degree() << ",\"" << monomial_to_text(x)
					  << "\"\n";
		} else {
			std::cout << monomial_to_text(x) << "\n";
		}
	}
	return 0;
}

/* ---------------- verify ---------------- */

int run_verify(const std::string& suite, const VerifyOptions& opt)
{
	VerifyReport report = run_suite(suite, opt);
	ordered_json doc;
	doc["suite"] = report.suite;
	doc["cases"] = report.cases;
	doc["failures"] = ordered_json::array();
	for (const VerifyCase& f : report.failures) {
		ordered_json item;
		item["weight"] = f.weight;
		item["detail"] = f.detail;
		doc["failures"].push_back(std::move(item));
	}
	doc["max_discrepancy"] = report.max_discrepancy.str();
	std::cout << doc.dump() << "\n";
	return report.ok() ? 0 : 1;
}

} /* namespace */

int main(int argc, char** argv)
{
	CLI::App app{"Exact characters, bases, and verification suites for "
				 "colored monomial spaces"};
	app.require_subcommand(1);

	Config cfg;
	auto add_common = [&cfg](CLI::App* sub, bool with_dmax) {
		sub->add_option("--family", cfg.family, "A or D")->required();
		sub->add_option("--rank", cfg.rank, "rank of the algebra")
			->required();
		sub->add_option("--m", cfg.m, "peak position (family A only)");
		sub->add_option("--k", cfg.k, "level target (shorthand for "
									  "--target lambda:K)");
		sub->add_option("--target", cfg.target_text,
						"lambda:K | window:I,J | zero | gamma:COLOR | "
						"exp2");
		sub->add_option("--weight", cfg.weight_text,
						"comma-separated weight coordinates");
		sub->add_option("--qmax", cfg.qmax, "series truncation (<= 200)");
		sub->add_option("--format", cfg.format, "json | csv | text")
			->check(CLI::IsMember({"json", "csv", "text"}));
		if (with_dmax)
			sub->add_option("--dmax", cfg.dmax, "degree bound");
	};

	CLI::App* cmd_char =
		app.add_subcommand("char", "evaluate closed-form characters");
	add_common(cmd_char, false);
	cmd_char->add_option("--grid", cfg.grid_text,
						 "per-coordinate weight bounds (each <= 6); one "
						 "row per realizable weight");

	CLI::App* cmd_enum =
		app.add_subcommand("enum", "enumerate an admissible basis");
	add_common(cmd_enum, true);
	cmd_enum->add_flag("--character", cfg.character,
					   "emit the enumerated character instead of the "
					   "basis");

	VerifyOptions vopt;
	std::string suite;
	CLI::App* cmd_verify =
		app.add_subcommand("verify", "run a verification suite");
	cmd_verify
		->add_option("--suite", suite,
					 "a-formula | a-recurrence | a-bijection | "
					 "d4-formula | d4-recurrence | d4-split | dl-remark")
		->required();
	cmd_verify->add_option("--qmax", vopt.qmax, "series truncation");
	cmd_verify->add_option("--bound", vopt.entry_bound,
						   "per-coordinate weight bound");
	cmd_verify->add_option("--dmax", vopt.dmax,
						   "degree bound (split/merge suite)");
	cmd_verify->add_option("--partitions", vopt.partition_bound,
						   "total partition size (bijection suite)");
	cmd_verify->add_option("--jobs", vopt.jobs,
						   "worker threads (FSCHAR_JOBS overrides)");
	cmd_verify
		->add_flag("--corrupt", vopt.corrupt,
				   "self-test: inject a known-bad residual")
		->group(""); /* hidden */

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try {
		if (cmd_char->parsed())
			return run_char(cfg);
		if (cmd_enum->parsed())
			return run_enum(cfg);
		if (vopt.qmax < 0 || vopt.qmax > 200)
			return usage_error("--qmax must lie in 0..200");
		return run_verify(suite, vopt);
	} catch (const std::invalid_argument& e) {
		return usage_error(e.what());
	} catch (const std::exception& e) {
		std::cerr << "fschar: internal error: " << e.what() << "\n";
		return 1;
	}
}
