#include "hinterp_tools/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>

#include "CLI11.hpp"
#include "hinterp/errors.hpp"
#include "hinterp_tools/commands.hpp"

namespace hinterp::tools {

namespace {

Exponent parse_exponent(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (text == "inf" || text == "infinity") return Exponent::infinity();
  std::size_t used = 0;
  const double q = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad exponent '" + text + "'");
  return Exponent::finite(q);
}

struct Flags {
  RunConfig cfg;
  std::vector<std::string> q_text;
  std::string format;
};

void add_output_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", f.cfg.out, "Output path, - for standard output");
  sub->add_option("--tol", f.cfg.tol, "Relative quadrature tolerance")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interpolation norms on Hilbert scales: tables and self-checks", "hinterp"};
  app.require_subcommand(1);
  Flags f;
  RunConfig& c = f.cfg;

  auto* constants = app.add_subcommand("constants", "Normalization constants N and N'");
  constants->add_option("--theta", c.theta, "theta values")->delimiter(',');
  constants->add_option("--q", f.q_text, "q values (number or inf)")->delimiter(',');

  auto* figure1 = app.add_subcommand("figure1", "Spectral vs Sobolev norms of sine modes");
  figure1->add_option("--jmax", c.jmax, "Number of sine modes")->check(CLI::Range(1, 64));
  figure1->add_option("--grid", c.grid, "Interior theta points")->check(CLI::Range(1, 100000));

  auto* interval = app.add_subcommand("interval-ratio", "Non-exactness ratio on an interval");
  interval->add_option("--a", c.a, "Interval lengths")->delimiter(',');

  auto* cusp = app.add_subcommand("cusp", "Norm scalings on the cusp domain");
  cusp->add_option("--p", c.p, "Cusp exponent (> 1)");
  cusp->add_option("--theta", c.theta, "Interpolation parameter")->expected(1);
  cusp->add_option("--h-min", c.h_min, "Smallest scale");
  cusp->add_option("--h-max", c.h_max, "Largest scale");
  cusp->add_option("--h-points", c.h_points, "Number of scales (>= 3)");

  auto* fractal = app.add_subcommand("fractal", "Fractal union of intervals");
  fractal->add_option("--nmax", c.nmax, "Number of intervals")->check(CLI::Range(2, 100000));
  fractal->add_option("--alpha-mode", c.alpha_mode, "Reading of alpha")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, AlphaMode>{{"norm", AlphaMode::norm},
                                           {"norm-squared", AlphaMode::norm_squared}}));

  auto* selfcheck = app.add_subcommand("weighted-selfcheck", "Property suites on weighted pairs");
  selfcheck->alias("selfcheck");
  selfcheck->add_option("--seed", c.seed, "Random seed");
  selfcheck->add_option("--cases", c.cases, "Cases per suite")->check(CLI::Range(1, 10000000));
  selfcheck->add_option("--normalization-scale", c.normalization_scale)
      ->group("")
      ->check(CLI::PositiveNumber);

  const std::map<CLI::App*, std::function<Report(const RunConfig&)>> commands{
      {constants, cmd_constants}, {figure1, cmd_figure1}, {interval, cmd_interval_ratio},
      {cusp, cmd_cusp},           {fractal, cmd_fractal}, {selfcheck, cmd_selfcheck}};
  for (const auto& [sub, fn] : commands) add_output_flags(sub, f);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const bool json_default = chosen == selfcheck;
  c.format = f.format.empty() ? (json_default ? Format::json : Format::csv)
                              : (f.format == "json" ? Format::json : Format::csv);

  Report report;
  try {
    for (const std::string& q : f.q_text) c.q.push_back(parse_exponent(q));
    report = commands.at(chosen)(c);
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (c.out != "-") {
    file.open(c.out, std::ios::binary);
    if (!file) {
      err << "cannot open output file " << c.out << '\n';
      return kUsage;
    }
    sink = &file;
  }
  if (c.format == Format::json) {
    write_json(*sink, report);
  } else {
    write_csv(*sink, report);
  }
  for (const std::string& msg : report.failures) err << "assertion failed: " << msg << '\n';
  return report.ok() ? kOk : kAssertionFailed;
}

}  // namespace hinterp::tools
