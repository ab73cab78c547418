// Command-line front end: Ext computations between polynomial functors on
// free groups, Magnus expansions, truncated group-ring ranks, and the
// verification suites.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource limit.

#include "grext/ext_engine.hpp"
#include "grext/errors.hpp"
#include "grext/group_ring.hpp"
#include "grext/nat_hom.hpp"
#include "grext/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using grext::Json;

struct GlobalOpts {
	std::string out = "text";
	std::string config_path;
	int jobs = 0;
	bool timings = false;
};

grext::Config make_config(const GlobalOpts &g)
{
	grext::Config cfg = g.config_path.empty() ? grext::default_config()
	                                          : grext::load_config(g.config_path);
	if (g.jobs > 0)
		cfg.jobs = g.jobs;
	cfg.timings = g.timings;
	return cfg;
}

void emit(const GlobalOpts &g, const Json &json, const std::string &text)
{
	if (g.out == "json")
		std::cout << json.dump(2) << "\n";
	else
		std::cout << text;
}

Json group_json(const grext::FinAbGroup &gr)
{
	Json torsion = Json::array();
	for (const grext::Int &t : gr.torsion)
		torsion.push_back(grext::to_long(t));
	return Json{{"rank", gr.free_rank}, {"torsion", torsion}};
}

Json table_json(const std::vector<grext::FinAbGroup> &groups)
{
	Json arr = Json::array();
	for (std::size_t i = 0; i < groups.size(); ++i) {
		Json g = group_json(groups[i]);
		arr.push_back(Json{{"degree", i}, {"rank", g["rank"]}, {"torsion", g["torsion"]}});
	}
	return arr;
}

int run_ext(const GlobalOpts &g, const std::string &source_text,
            const std::string &target_text, int i_max, const std::string &mode,
            bool rational, const std::string &dump_dir)
{
	grext::Config cfg = make_config(g);
	grext::ExtSource src = grext::parse_ext_source(source_text);
	grext::ExprPtr target = grext::parse_functor(target_text, cfg.max_functor_degree);

	const auto t0 = std::chrono::steady_clock::now();
	Json out;
	out["query"] = "ext";
	out["params"] = Json{{"source", src.str()},
	                     {"target", grext::expr_key(target)},
	                     {"max_degree", i_max},
	                     {"mode", mode},
	                     {"rational", rational}};
	std::string text;

	if (!dump_dir.empty()) {
		grext::CochainComplex cx =
		    src.passi ? grext::passi_hom_complex(grext::passi_resolution(src.n, i_max + 1),
		                                         target, i_max, cfg)
		              : grext::bar_cochain_complex(src.n, target, i_max,
		                                           mode == "unnormalized"
		                                               ? grext::BarMode::unnormalized
		                                               : grext::BarMode::normalized,
		                                           cfg);
		std::filesystem::create_directories(dump_dir);
		for (std::size_t i = 0; i < cx.d.size(); ++i) {
			std::ofstream f(dump_dir + "/d" + std::to_string(i) + ".txt");
			grext::write_triplets(f, cx.d[i]);
		}
		out["dumped"] = dump_dir;
		text += "complex differentials written to " + dump_dir + "\n";
	}

	if (rational) {
		std::vector<long> betti = grext::rational_ext(src, target, i_max, cfg);
		out["betti"] = betti;
		text += "rational ext " + src.str() + " -> " + grext::expr_key(target) + ":\n";
		for (std::size_t i = 0; i < betti.size(); ++i)
			text += "  Betti^" + std::to_string(i) + " = " + std::to_string(betti[i]) + "\n";
	} else if (mode == "both" && !src.passi) {
		grext::ExtTable un =
		    grext::ext_ab_pow(src.n, target, i_max, grext::BarMode::unnormalized, cfg);
		grext::ExtTable no =
		    grext::ext_ab_pow(src.n, target, i_max, grext::BarMode::normalized, cfg);
		out["groups"] = table_json(no.groups);
		out["unnormalized_groups"] = table_json(un.groups);
		out["mode_agreement"] = un.groups == no.groups;
		text += "ext " + src.str() + " -> " + grext::expr_key(target) + " (both modes, " +
		        (un.groups == no.groups ? "agree" : "DISAGREE") + "):\n";
		for (std::size_t i = 0; i < no.groups.size(); ++i)
			text += "  Ext^" + std::to_string(i) + " = " + no.groups[i].str() + "\n";
		if (!(un.groups == no.groups))
			text += "  unnormalized table differs!\n";
	} else {
		grext::BarMode m = mode == "unnormalized" ? grext::BarMode::unnormalized
		                                          : grext::BarMode::normalized;
		grext::ExtTable t = grext::ext(src, target, i_max, m, cfg);
		out["groups"] = table_json(t.groups);
		text += "ext " + src.str() + " -> " + grext::expr_key(target) + ":\n";
		for (std::size_t i = 0; i < t.groups.size(); ++i)
			text += "  Ext^" + std::to_string(i) + " = " + t.groups[i].str() + "\n";
	}
	out["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
	                       std::chrono::steady_clock::now() - t0)
	                       .count();
	emit(g, out, text);
	return 0;
}

int run_magnus_expand(const GlobalOpts &g, const std::string &word_text, int cutoff)
{
	grext::Word w = grext::parse_word(word_text);
	grext::TruncTensor t = grext::magnus_expand(w, cutoff);
	Json out;
	out["query"] = "magnus expand";
	out["params"] = Json{{"word", grext::format_word(w)},
	                     {"rank", w.rank},
	                     {"cutoff", cutoff}};
	Json terms = Json::array();
	std::string text = "μ(" + grext::format_word(w) + ") mod degree " +
	                   std::to_string(cutoff + 1) + " =";
	bool first = true;
	for (const auto &[m, c] : t.coeffs) {
		terms.push_back(Json{{"monomial", grext::format_monomial(m)},
		                     {"coeff", grext::to_long(c)}});
		std::string cs = c.get_str();
		if (first) {
			text += " " + cs + "·" + grext::format_monomial(m);
			first = false;
		} else if (c > 0)
			text += " + " + cs + "·" + grext::format_monomial(m);
		else
			text += " - " + grext::Int(-c).get_str() + "·" + grext::format_monomial(m);
	}
	if (first)
		text += " 0";
	text += "\n";
	out["terms"] = terms;
	emit(g, out, text);
	return 0;
}

int run_passi_rank(const GlobalOpts &g, const std::string &factors_text, int cutoff,
                   long ball_radius)
{
	grext::Config cfg = make_config(g);
	std::vector<int> factors;
	std::size_t pos = 0;
	while (pos < factors_text.size()) {
		std::size_t comma = factors_text.find(',', pos);
		if (comma == std::string::npos)
			comma = factors_text.size();
		factors.push_back(std::stoi(factors_text.substr(pos, comma - pos)));
		pos = comma + 1;
	}
	if (factors.empty())
		throw CLI::ValidationError("--factors", "expected comma-separated ranks");

	grext::TruncGroupRing ring(factors, cutoff);
	Json graded = Json::array();
	long model_rank = 0;
	for (int r = 0; r <= cutoff; ++r) {
		graded.push_back(ring.graded_rank(r));
		model_rank += ring.graded_rank(r);
	}
	Json out;
	out["query"] = "passi rank";
	out["params"] = Json{{"factors", factors}, {"cutoff", cutoff}};
	std::string text;
	if (ball_radius >= 0) {
		grext::BallReport rep =
		    grext::ball_presentation(factors, cutoff, ball_radius, cfg.max_ball);
		out["params"]["ball"] = ball_radius;
		out["rank"] = rep.rank;
		Json tors = Json::array();
		for (const grext::Int &t : rep.torsion)
			tors.push_back(grext::to_long(t));
		out["torsion"] = tors;
		out["stable"] = rep.stable;
		out["graded"] = graded;
		out["model_rank"] = model_rank;
		text = "ball presentation rank " + std::to_string(rep.rank) + " (radius " +
		       std::to_string(ball_radius) + ", previous radius " +
		       std::to_string(rep.rank_prev) + ", stable " +
		       (rep.stable ? "yes" : "no") + "); model rank " +
		       std::to_string(model_rank) + "\n";
	} else {
		out["rank"] = model_rank;
		out["torsion"] = Json::array();
		out["stable"] = true;
		out["graded"] = graded;
		text = "rank of Z[G]/I^" + std::to_string(cutoff + 1) + " = " +
		       std::to_string(model_rank) + "; graded ranks:";
		for (int r = 0; r <= cutoff; ++r)
			text += " " + std::to_string(ring.graded_rank(r));
		text += "\n";
	}
	emit(g, out, text);
	return 0;
}

int run_verify(const GlobalOpts &g, const std::string &which)
{
	grext::Config cfg = make_config(g);
	std::vector<std::string> names;
	if (which == "all")
		names = grext::suite_names();
	else
		names = {which};
	bool all_pass = true;
	Json out = Json::array();
	std::string text;
	for (const std::string &name : names) {
		grext::SuiteReport report = grext::run_suite(name, cfg);
		all_pass = all_pass && report.passed();
		out.push_back(grext::report_json(report, cfg.timings));
		text += grext::report_text(report, cfg.timings);
	}
	emit(g, out.size() == 1 ? out[0] : out, text);
	return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact Ext computations for polynomial functors on free groups"};
	app.require_subcommand(1);

	GlobalOpts g;
	app.add_option("--out", g.out, "output format")->check(CLI::IsMember({"text", "json"}));
	app.add_option("--config", g.config_path, "JSON config file");
	app.add_option("--jobs", g.jobs, "parallel worker budget for suites");
	app.add_flag("--timings", g.timings, "include wall-clock timings in reports");

	auto *ext_cmd = app.add_subcommand("ext", "compute Ext groups");
	std::string source, target, mode = "normalized", dump_dir;
	int max_degree = 0;
	bool rational = false;
	ext_cmd->add_option("--source", source, "source functor: a, a^n or passi(n)")->required();
	ext_cmd->add_option("--target", target, "target functor expression")->required();
	ext_cmd->add_option("--max-degree", max_degree, "largest cohomological degree")->required();
	ext_cmd->add_option("--mode", mode, "resolution mode")
	    ->check(CLI::IsMember({"normalized", "unnormalized", "both"}));
	ext_cmd->add_flag("--rational", rational, "report Betti numbers only");
	ext_cmd->add_option("--dump-complex", dump_dir,
	                    "write the Hom-complex differentials (triplet format)");

	auto *magnus_cmd = app.add_subcommand("magnus", "Magnus expansion utilities");
	auto *expand_cmd = magnus_cmd->add_subcommand("expand", "expand a word");
	std::string word_text;
	int cutoff = 3;
	expand_cmd->add_option("--word", word_text, "word, e.g. x1*x2^-1")->required();
	expand_cmd->add_option("--cutoff", cutoff, "truncation degree")->required();

	auto *passi_cmd = app.add_subcommand("passi", "truncated group-ring ranks");
	auto *rank_cmd = passi_cmd->add_subcommand("rank", "rank of Z[G]/I^{N+1}");
	std::string factors_text;
	int passi_cutoff = 2;
	long ball_radius = -1;
	rank_cmd->add_option("--factors", factors_text, "free factor ranks, e.g. 2,1")->required();
	rank_cmd->add_option("--cutoff", passi_cutoff, "N (quotient by I^{N+1})")->required();
	rank_cmd->add_option("--ball", ball_radius, "ball radius for the presentation oracle");

	auto *verify_cmd = app.add_subcommand("verify", "run a verification suite");
	std::string which;
	verify_cmd->add_option("suite", which, "suite name or 'all'")->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return e.get_exit_code() == 0 ? 0 : 2;
	}

	try {
		if (app.got_subcommand(ext_cmd))
			return run_ext(g, source, target, max_degree, mode, rational, dump_dir);
		if (app.got_subcommand(magnus_cmd)) {
			if (!magnus_cmd->got_subcommand(expand_cmd)) {
				std::cerr << "usage: grext magnus expand --word <w> --cutoff <N>\n";
				return 2;
			}
			return run_magnus_expand(g, word_text, cutoff);
		}
		if (app.got_subcommand(passi_cmd)) {
			if (!passi_cmd->got_subcommand(rank_cmd)) {
				std::cerr << "usage: grext passi rank --factors <n1,...> --cutoff <N>\n";
				return 2;
			}
			return run_passi_rank(g, factors_text, passi_cutoff, ball_radius);
		}
		if (app.got_subcommand(verify_cmd)) {
			if (which != "all") {
				const auto &names = grext::suite_names();
				if (std::find(names.begin(), names.end(), which) == names.end()) {
					std::cerr << "unknown suite: " << which << "\n";
					return 2;
				}
			}
			return run_verify(g, which);
		}
	} catch (const grext::resource_limit_error &e) {
		std::cerr << "resource limit: " << e.what() << "\n";
		return 3;
	} catch (const grext::parse_error &e) {
		std::cerr << "parse error: " << e.what() << "\n";
		return 2;
	} catch (const std::invalid_argument &e) {
		std::cerr << "invalid arguments: " << e.what() << "\n";
		return 2;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 2;
}
