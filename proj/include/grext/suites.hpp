#pragma once

#include "grext/config.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace grext {

using Json = nlohmann::ordered_json;

struct CheckOutcome {
	Json expected;
	Json computed;
	bool pass = false;
};

/// One verifiable claim instance. `anchor` names the result being checked
/// (stable claim ids shared with the docs); `run` does the computation.
struct Check {
	std::string id;
	std::string anchor;
	Json params;
	std::function<CheckOutcome()> run;
};

struct CheckResult {
	std::string id;
	std::string anchor;
	Json params;
	Json expected;
	Json computed;
	bool pass = false;
	long timing_ms = 0;
};

struct SuiteReport {
	std::string suite;
	std::vector<CheckResult> checks;

	bool passed() const
	{
		for (const auto &c : checks)
			if (!c.pass)
				return false;
		return true;
	}
};

/// Suite names in canonical order: magnus, products, ida, hochschild,
/// extdim, passidim, rational, symmetric.
const std::vector<std::string> &suite_names();

std::vector<Check> suite_checks(const std::string &name, const Config &cfg);

/// Runs the checks (in parallel up to cfg.jobs), assembling results in
/// declaration order. Deterministic given the config.
SuiteReport run_suite(const std::string &name, const Config &cfg);

Json report_json(const SuiteReport &report, bool timings);
std::string report_text(const SuiteReport &report, bool timings);

} // namespace grext
