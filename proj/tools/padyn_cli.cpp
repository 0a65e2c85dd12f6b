#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "padyn/report.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  std::uint64_t p = 0;
  std::string a, b, c, d, e;
  std::vector<std::string> r_exps;
  std::string x;
  std::string q;
  std::size_t steps = 10000;
  std::size_t depth = 4;
  std::uint64_t iters = 0;
  std::size_t kmax = 10;
  unsigned mmax = 4;
  long long qmax = 0;
  long long qden = 3;
  std::string out_path;
  bool json = false;
};

void add_common_options(CLI::App* cmd, CliOptions* opt) {
  cmd->add_option("--config", opt->config_path,
                  "map config file (key = value lines: p, a, b[, c, d, e])");
  cmd->add_option("--p", opt->p, "prime");
  cmd->add_option("--a", opt->a, "parameter a (rational literal)");
  cmd->add_option("--b", opt->b, "parameter b (rational literal)");
  cmd->add_option("--c", opt->c, "parameter c (general map)");
  cmd->add_option("--d", opt->d, "parameter d (general map)");
  cmd->add_option("--e", opt->e, "parameter e (general map)");
  cmd->add_option("--out", opt->out_path, "CSV output path");
  cmd->add_flag("--json", opt->json, "print the JSON report to stdout");
}

padyn::RunConfig build_run_config(const CliOptions& opt) {
  padyn::RunConfig config;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw padyn::Error("cannot open config file: " + opt.config_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    config.map = padyn::parse_map_config(buffer.str());
  }
  if (opt.p != 0) config.map.p = opt.p;
  if (!opt.a.empty()) config.map.a = padyn::parse_rational(opt.a);
  if (!opt.b.empty()) config.map.b = padyn::parse_rational(opt.b);
  if (!opt.c.empty()) config.map.c = padyn::parse_rational(opt.c);
  if (!opt.d.empty()) config.map.d = padyn::parse_rational(opt.d);
  if (!opt.e.empty()) config.map.e = padyn::parse_rational(opt.e);
  for (const std::string& r : opt.r_exps)
    config.r_exps.push_back(padyn::parse_rational(r));
  if (!opt.x.empty()) config.x = padyn::parse_rational(opt.x);
  if (!opt.q.empty()) config.q = padyn::parse_rational(opt.q);
  config.steps = opt.steps;
  config.depth = opt.depth;
  config.iters = opt.iters;
  config.kmax = opt.kmax;
  config.mmax = opt.mmax;
  if (opt.qmax > 0) config.q_num_max = opt.qmax;
  config.q_den_max = opt.qden;
  config.out_path = opt.out_path;
  return config;
}

void emit(const padyn::Json& report, bool json) {
  if (json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << padyn::render_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact p-adic dynamics of (3,1)-rational maps with a unique fixed "
      "point: classification, orbits, ergodicity verdicts, periodic-orbit "
      "certificates"};
  app.require_subcommand(1);

  CliOptions opt;
  padyn::Json report;

  auto* classify = app.add_subcommand(
      "classify", "map summary, canonical reduction, sphere classes");
  add_common_options(classify, &opt);
  classify->add_option("--r-exp", opt.r_exps,
                       "sphere radius exponent (repeatable)");
  classify->callback(
      [&] { report = padyn::cmd_classify(build_run_config(opt)); });

  auto* reduce = app.add_subcommand(
      "reduce", "conjugate a general map to canonical form");
  add_common_options(reduce, &opt);
  reduce->callback([&] { report = padyn::cmd_reduce(build_run_config(opt)); });

  auto* orbit = app.add_subcommand("orbit", "iterate a seed point exactly");
  add_common_options(orbit, &opt);
  orbit->add_option("--x", opt.x, "seed point (rational literal)")->required();
  orbit->add_option("--steps", opt.steps, "maximum steps");
  orbit->callback([&] { report = padyn::cmd_orbit(build_run_config(opt)); });

  auto* spheres = app.add_subcommand(
      "spheres", "classification, displacement and minimal-ball table");
  add_common_options(spheres, &opt);
  spheres->add_option("--r-exp", opt.r_exps,
                      "sphere radius exponent (repeatable)")
      ->required();
  spheres->add_option("--m", opt.mmax, "largest ball depth m to test");
  spheres->callback(
      [&] { report = padyn::cmd_spheres(build_run_config(opt)); });

  auto* ergodicity = app.add_subcommand(
      "ergodicity", "ergodicity verdict on an invariant sphere");
  add_common_options(ergodicity, &opt);
  ergodicity->add_option("--r-exp", opt.r_exps, "sphere radius exponent")
      ->required();
  ergodicity->add_option("--iters", opt.iters,
                         "equidistribution probe iterations (0 = none)");
  ergodicity->add_option("--depth", opt.depth, "probe partition depth");
  ergodicity->add_option("--x", opt.x, "probe seed point");
  ergodicity->callback(
      [&] { report = padyn::cmd_ergodicity(build_run_config(opt)); });

  auto* periodic = app.add_subcommand(
      "periodic", "exact 2-periodic-orbit certificates from the q-line");
  add_common_options(periodic, &opt);
  periodic->add_option("--q", opt.q, "line slope q (rational literal)");
  periodic->add_option("--qmax", opt.qmax, "grid scan: numerator bound");
  periodic->add_option("--qden", opt.qden, "grid scan: denominator bound");
  periodic->callback(
      [&] { report = padyn::cmd_periodic(build_run_config(opt)); });

  auto* radii = app.add_subcommand(
      "radii", "pre-image sphere radius ladder (equal-norms case)");
  add_common_options(radii, &opt);
  radii->add_option("--kmax", opt.kmax, "largest ladder index k");
  radii->callback([&] { report = padyn::cmd_radii(build_run_config(opt)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const padyn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  emit(report, opt.json);
  return 0;
}
