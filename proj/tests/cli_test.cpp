/* End-to-end checks of the command-line driver: spawns the real binary
 * (path injected by the build as FSCHAR_CLI_PATH) and checks output
 * bytes and exit codes. */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
	int exit_code = -1;
	std::string out;
};

RunResult run(const std::string& args, const std::string& env = "")
{
	std::string cmd = (env.empty() ? "" : env + " ") +
					  std::string(FSCHAR_CLI_PATH) + " " + args +
					  " 2>/dev/null";
	RunResult r;
	FILE* pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	char buf[4096];
	std::size_t got;
	while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
		r.out.append(buf, got);
	int status = pclose(pipe);
	r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

} /* namespace */

TEST_CASE("character rows in csv form")
{
	RunResult r = run("char --family A --rank 1 --m 1 --k 0 --weight 2 "
					  "--qmax 6 --format csv");
	CHECK(r.exit_code == 0);
	CHECK(r.out == "2, 0,0,0,0,1,1,2\n");
}

TEST_CASE("constant character of the zero weight")
{
	RunResult r = run("char --family D --rank 4 --target gamma:u2 "
					  "--weight 0,0,0,0 --qmax 4 --format csv");
	CHECK(r.exit_code == 0);
	CHECK(r.out == "0,0,0,0, 1,0,0,0,0\n");
}

TEST_CASE("unrealizable weights emit a zero row and succeed")
{
	RunResult r = run("char --family A --rank 3 --m 2 --weight 2,1,0 "
					  "--qmax 5 --format csv");
	CHECK(r.exit_code == 0);
	CHECK(r.out == "2,1,0, 0,0,0,0,0,0\n");
}

TEST_CASE("json rows carry coefficients as decimal strings")
{
	RunResult r = run("char --family D --rank 4 --k 0 --weight 1,1,1,1 "
					  "--qmax 8 --format json");
	CHECK(r.exit_code == 0);
	auto doc = nlohmann::json::parse(r.out);
	CHECK(doc["qmax"] == 8);
	REQUIRE(doc["rows"].size() == 1);
	CHECK(doc["rows"][0]["weight"] ==
		  nlohmann::json::array({1, 1, 1, 1}));
	CHECK(doc["rows"][0]["coefficients"][0] == "0");
	for (int d = 1; d <= 8; ++d)
		CHECK(doc["rows"][0]["coefficients"][static_cast<std::size_t>(d)] ==
			  "1");
}

TEST_CASE("grid runs emit one row per realizable weight")
{
	RunResult r = run("char --family A --rank 2 --m 1 --grid 2,2 "
					  "--qmax 4 --format json");
	CHECK(r.exit_code == 0);
	auto doc = nlohmann::json::parse(r.out);
	CHECK(doc["rows"].size() == 6); /* chains only, lexicographic */
	CHECK(doc["rows"][0]["weight"] == nlohmann::json::array({0, 0}));
	CHECK(doc["rows"][1]["weight"] == nlohmann::json::array({1, 0}));
	CHECK(doc["rows"][5]["weight"] == nlohmann::json::array({2, 2}));

	RunResult guard = run("char --family A --rank 2 --m 1 --grid 7,2");
	CHECK(guard.exit_code == 2);
}

TEST_CASE("basis enumeration streams deterministic lines")
{
	RunResult r = run("enum --family A --rank 1 --m 1 --k 0 --weight 1 "
					  "--dmax 2");
	CHECK(r.exit_code == 0);
	CHECK(r.out == "(1,1)(-1)\n(1,1)(-2)\n");

	RunResult zero = run("enum --family A --rank 1 --m 1 --weight 0 "
						 "--dmax 3");
	CHECK(zero.exit_code == 0);
	CHECK(zero.out == "1\n");

	RunResult js = run("enum --family D --rank 4 --weight 1,0,0,0 "
					   "--dmax 2 --format json");
	CHECK(js.exit_code == 0);
	auto first = nlohmann::json::parse(js.out.substr(0, js.out.find('\n')));
	CHECK(first["degree"] == 1);
	CHECK(first["factors"] == "b2(-1)");
}

TEST_CASE("enumerated character equals the closed-form row")
{
	std::string tail = " --family D --rank 4 --k 0 --weight 1,1,1,1 "
					   "--qmax 8 --format json";
	RunResult oracle = run("enum --character" + tail);
	RunResult closed = run("char" + tail);
	CHECK(oracle.exit_code == 0);
	CHECK(closed.exit_code == 0);
	CHECK(oracle.out == closed.out);
}

TEST_CASE("verification reports")
{
	RunResult ok = run("verify --suite a-formula --bound 1 --qmax 8");
	CHECK(ok.exit_code == 0);
	auto doc = nlohmann::json::parse(ok.out);
	CHECK(doc["suite"] == "a-formula");
	CHECK(doc["cases"].get<long long>() > 0);
	CHECK(doc["failures"].empty());
	CHECK(doc["max_discrepancy"] == "0");

	RunResult bad = run("verify --suite a-recurrence --bound 1 --qmax 6 "
						"--corrupt");
	CHECK(bad.exit_code == 1);
	auto rep = nlohmann::json::parse(bad.out);
	CHECK(!rep["failures"].empty());
	CHECK(rep["max_discrepancy"] != "0");
	CHECK(rep["failures"][0].contains("weight"));
	CHECK(rep["failures"][0].contains("detail"));

	RunResult unknown = run("verify --suite no-such-suite");
	CHECK(unknown.exit_code == 2);
}

TEST_CASE("usage errors exit with code 2")
{
	CHECK(run("char --family A --rank 3 --weight 1,1,1").exit_code ==
		  2); /* missing --m */
	CHECK(run("char --family D --rank 4 --m 2 --weight 0,0,0,0")
			  .exit_code == 2);
	CHECK(run("char --family A --rank 1 --m 1 --weight 1 --qmax 999")
			  .exit_code == 2);
	CHECK(run("char --family A --rank 1 --m 1 --weight 1,2").exit_code ==
		  2); /* weight length */
	CHECK(run("char --family D --rank 7 --weight 0,0,0,0,0,0,0")
			  .exit_code == 2);
	CHECK(run("char --family A --rank 1 --m 1 --k 0 --target zero "
			  "--weight 1")
			  .exit_code == 2); /* both --k and --target */
	CHECK(run("char --family D --rank 5 --target gamma:u2 "
			  "--weight 0,0,0,0,0")
			  .exit_code == 2); /* rank > 4 supports lambda:0 only */
	CHECK(run("enum --family A --rank 1 --m 1 --k 9 --weight 1")
			  .exit_code == 2);
	CHECK(run("char --no-such-flag").exit_code == 2);
	CHECK(run("--help").exit_code == 0);
	CHECK(run("char --help").exit_code == 0);
}

TEST_CASE("reports are identical across parallelism degrees")
{
	std::string args = "verify --suite d4-recurrence --bound 2 --qmax 10";
	RunResult serial = run(args + " --jobs 1");
	RunResult wide = run(args + " --jobs 8");
	RunResult env = run(args + " --jobs 1", "FSCHAR_JOBS=3");
	CHECK(serial.exit_code == 0);
	CHECK(serial.out == wide.out);
	CHECK(serial.out == env.out);
}
