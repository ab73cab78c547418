#pragma once

#include <string>

namespace grext {

/// Resource bounds and run options. Defaults give predictable desk-scale
/// runs; all values can be overridden from a JSON config file or CLI flags.
struct Config {
	long max_module_dim = 20000;
	long long max_matrix_entries = 5000000;
	long max_ball = 200000;
	int max_functor_degree = 8;
	int jobs = 1;
	bool timings = false;
	std::string fixtures_dir; // defaults to the source fixtures/ directory
};

Config default_config();
Config load_config(const std::string &path);

void check_module_dim(const Config &cfg, long dim);
void check_matrix_size(const Config &cfg, long rows, long cols);

} // namespace grext
