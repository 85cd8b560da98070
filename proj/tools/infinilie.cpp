#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "infinilie/chart.hpp"
#include "infinilie/json_io.hpp"
#include "infinilie/parse.hpp"
#include "infinilie/suites.hpp"

using namespace infinilie;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kPrecision = 3 };

struct Options {
  std::string config;
  std::string trunc;
  std::int64_t seed = -1;
  int samples = 0;
  std::string format = "text";
  bool no_time = false;
  bool inject_fault = false;
  std::string suite;
  std::string expr;
  std::string t;
  std::string axis;
  std::string group = "so3";
};

SuiteConfig make_config(const Options& o) {
  SuiteConfig c;
  if (!o.config.empty()) c = load_config(o.config, c);
  if (!o.trunc.empty()) {
    try {
      c.trunc = Exponent::parse(o.trunc);
    } catch (const Error&) {
      throw ConfigError("--trunc is not a rational: " + o.trunc);
    }
  }
  if (o.seed >= 0) c.seed = static_cast<std::uint64_t>(o.seed);
  if (o.inject_fault) c.inject_fault = true;
  c.validate();
  return c;
}

Format format_of(const Options& o) { return o.format == "json" ? Format::Json : Format::Text; }

int cmd_verify(const Options& o) {
  SuiteConfig cfg = make_config(o);
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    default_samples(o.suite);  // rejects unknown names
    names = {o.suite};
  }
  if (o.samples > 0)
    for (const auto& n : names) cfg.samples[n] = o.samples;
  cfg.validate();
  bool failed = false, precision = false;
  Json all = Json::array();
  for (const auto& n : names) {
    const Report r = run_suite(n, cfg);
    failed = failed || !r.passed();
    precision = precision || r.precision_exhausted;
    if (format_of(o) == Format::Json && names.size() > 1) {
      all.push_back(report_to_json(r, !o.no_time));
    } else {
      std::cout << emit_report(r, format_of(o), !o.no_time);
    }
  }
  if (!all.empty()) std::cout << all.dump(2) << "\n";
  if (failed) return kFail;
  return precision ? kPrecision : kPass;
}

int cmd_eval(const Options& o) {
  const SuiteConfig cfg = make_config(o);
  const ContextGuard guard(cfg.context());
  const GaussSeries g = parse_gauss_expr(o.expr);
  if (format_of(o) == Format::Json) {
    Json j{{"value", series_to_json(g)}, {"expr", to_expr(g)}, {"valuation", g.valuation().str()}};
    if (is_real(g)) j["class"] = to_string(classify(to_real(g)));
    std::cout << j.dump(2) << "\n";
    return kPass;
  }
  std::cout << to_expr(g) << "  (mod e^" << g.trunc().str() << ")\n";
  std::cout << "valuation " << g.valuation().str();
  if (is_real(g)) {
    const ValSeries x = to_real(g);
    std::cout << ", " << to_string(classify(x));
    if (classify(x) != Magnitude::OUTSIDE_O) std::cout << ", st = " << standard_part(x).str();
  }
  std::cout << "\n";
  return kPass;
}

Axis parse_axis(const std::string& text) {
  Axis a;
  std::stringstream ss(text);
  std::string part;
  std::size_t k = 0;
  while (std::getline(ss, part, ',')) {
    if (k == 3) throw ConfigError("--axis needs exactly three components");
    a[k++] = parse_expr(part);
  }
  if (k != 3) throw ConfigError("--axis needs exactly three components");
  return a;
}

void print_matrix(const SeriesMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::cout << "  [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) std::cout << (c ? ", " : "") << to_expr(m(r, c));
    std::cout << "]\n";
  }
}

int cmd_rho(const Options& o) {
  const SuiteConfig cfg = make_config(o);
  const ContextGuard guard(cfg.context());
  const ValSeries t = parse_expr(o.t);
  const Axis axis = parse_axis(o.axis);
  if (!is_unit(axis)) throw DomainError("axis is not a unit vector");
  const SeriesMatrix m = rho(t, axis);
  const bool g00 = in_G00<ValSeries>(GroupSpec::so(3), m);
  if (format_of(o) == Format::Json) {
    std::cout << Json{{"matrix", matrix_to_json<ValSeries>(m)}, {"in_G00", g00}}.dump(2) << "\n";
  } else {
    std::cout << "rho(" << to_expr(t) << ", (" << to_expr(axis[0]) << ", " << to_expr(axis[1]) << ", "
              << to_expr(axis[2]) << "))\n";
    print_matrix(m);
    std::cout << "in SO3^00: " << (g00 ? "yes" : "no") << "\n";
  }
  return kPass;
}

template <class S>
int chart_for(const GroupSpec& spec, const Options& o, const SuiteConfig& cfg) {
  const Axis axis{ValSeries(QuadExt(Rational(3, 5))), ValSeries(0), ValSeries(QuadExt(Rational(4, 5)))};
  const ChartData<S> cd = find_conjugators<S>(spec, make_arc<S>(spec, axis), cfg.seed);
  if (format_of(o) == Format::Json) {
    std::cout << chart_certificate(cd).dump(2) << "\n";
  } else {
    std::cout << "chart for " << spec.name() << ": " << cd.conjugators.size() << " conjugators, det_val "
              << cd.det_val.str() << ", trunc " << cd.trunc.str() << ", seed " << cd.seed << ", " << cd.attempts
              << (cd.attempts == 1 ? " attempt\n" : " attempts\n");
    const Exponent grade = cd.trunc - cd.det_val * Exponent(2);
    std::cout << "solutions certified modulo " << to_expr(ValSeries::monomial(QuadExt(1), grade, grade + Exponent(1))) << "\n";
  }
  return kPass;
}

int cmd_chart(const Options& o) {
  const SuiteConfig cfg = make_config(o);
  const ContextGuard guard(cfg.context());
  GroupSpec spec;
  try {
    spec = GroupSpec::parse(o.group);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (spec.family == Family::SU) return chart_for<GaussSeries>(spec, o, cfg);
  return chart_for<ValSeries>(spec, o, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic over an infinitesimally valued field, with verification suites"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config, "ini file with [run] and [samples] sections");
    sub->add_option("--trunc", o.trunc, "precision cap N (values are known modulo e^N)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
  verify->add_option("name", o.suite, "suite name, or 'all'");
  verify->add_option("--suite", o.suite, "suite name (same as the positional argument)");
  verify->add_option("--seed", o.seed, "random seed")->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", o.samples, "sample count override")->check(CLI::PositiveNumber);
  verify->add_flag("--no-time", o.no_time, "omit the wall time from the report");
  verify->add_flag("--inject-fault", o.inject_fault)->group("");
  common(verify);

  auto* eval = app.add_subcommand("eval", "evaluate an expression in e");
  eval->add_option("expr", o.expr, "expression")->required();
  common(eval);

  auto* rho_cmd = app.add_subcommand("rho", "rotation with tan-half-angle t about an axis");
  rho_cmd->add_option("--t", o.t, "angle parameter")->required();
  rho_cmd->add_option("--axis", o.axis, "unit axis x,y,z")->required();
  common(rho_cmd);

  auto* chart = app.add_subcommand("chart", "find chart conjugators and print the certificate");
  chart->add_option("--group", o.group, "so3, su2, so5 or su3");
  chart->add_option("--seed", o.seed, "random seed")->check(CLI::NonNegativeNumber);
  common(chart);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) {
      if (o.suite.empty()) throw ConfigError("verify needs a suite name; known: all, " + [] {
        std::string s;
        for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
      }());
      return cmd_verify(o);
    }
    if (*eval) return cmd_eval(o);
    if (*rho_cmd) return cmd_rho(o);
    if (*chart) return cmd_chart(o);
  } catch (const PrecisionError& e) {
    std::cerr << "precision: " << e.what() << "\n";
    return kPrecision;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
