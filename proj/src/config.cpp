#include "grext/config.hpp"

#include "grext/errors.hpp"

#include <json.hpp>

#include <fstream>

#ifndef GREXT_DEFAULT_FIXTURES
#define GREXT_DEFAULT_FIXTURES "fixtures"
#endif

namespace grext {

Config default_config()
{
	Config cfg;
	cfg.fixtures_dir = GREXT_DEFAULT_FIXTURES;
	return cfg;
}

Config load_config(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open config file: " + path);
	nlohmann::json j = nlohmann::json::parse(in);
	Config cfg = default_config();
	if (j.contains("max_module_dim"))
		cfg.max_module_dim = j["max_module_dim"].get<long>();
	if (j.contains("max_matrix_entries"))
		cfg.max_matrix_entries = j["max_matrix_entries"].get<long long>();
	if (j.contains("max_ball"))
		cfg.max_ball = j["max_ball"].get<long>();
	if (j.contains("max_functor_degree"))
		cfg.max_functor_degree = j["max_functor_degree"].get<int>();
	if (j.contains("jobs"))
		cfg.jobs = j["jobs"].get<int>();
	if (j.contains("fixtures_dir"))
		cfg.fixtures_dir = j["fixtures_dir"].get<std::string>();
	return cfg;
}

void check_module_dim(const Config &cfg, long dim)
{
	if (dim > cfg.max_module_dim)
		throw resource_limit_error("module dimension " + std::to_string(dim) +
		                           " exceeds bound " +
		                           std::to_string(cfg.max_module_dim));
}

void check_matrix_size(const Config &cfg, long rows, long cols)
{
	if (static_cast<long long>(rows) * cols > cfg.max_matrix_entries)
		throw resource_limit_error(
		    "matrix with " + std::to_string(rows) + "x" + std::to_string(cols) +
		    " entries exceeds bound " + std::to_string(cfg.max_matrix_entries));
}

} // namespace grext
