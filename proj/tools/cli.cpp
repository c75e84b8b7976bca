#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "gchp/constructors.hpp"
#include "gchp/identities.hpp"
#include "gchp/inner_products.hpp"
#include "gchp/verify.hpp"

namespace gchp::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr unsigned max_index = 64;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string mode;
  std::string nu = "1";
  std::vector<std::string> xi{"0", "0"};
  double tolerance = 1e-10;
  unsigned quad_order = 0;
  std::string output = "json";
  std::string out_file;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Mode parse_mode(const std::string& text, const char* source) {
  const std::string t = lower(text);
  if (t == "exact") return Mode::exact;
  if (t == "float" || t == "floating") return Mode::floating;
  throw ConfigError(std::string(source) + ": unknown mode '" + text + "' (expected exact or float)");
}

Mode resolve_mode(const Config& config) {
  if (!config.mode.empty()) return parse_mode(config.mode, "--mode");
  if (const char* env = std::getenv("GCHP_MODE"); env != nullptr && *env != '\0')
    return parse_mode(env, "GCHP_MODE");
  return Mode::exact;
}

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw ConfigError(std::string(what) + ": not a number: '" + text + "'");
  }
}

Coefficient complex_arg(const std::string& re, const std::string& im, Mode mode, const char* what) {
  const Coefficient c = Coefficient::exact(rational_arg(re, what), rational_arg(im, what));
  return c.to_mode(mode);
}

Params make_params(const Coefficient& nu, const Coefficient& xi) {
  try {
    return Params(nu, xi);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

Params params_from(const Config& config, Mode mode) {
  const Coefficient nu = Coefficient::exact(rational_arg(config.nu, "--nu")).to_mode(mode);
  return make_params(nu, complex_arg(config.xi[0], config.xi[1], mode, "--xi"));
}

void check_index(unsigned v, const char* name) {
  if (v > max_index)
    throw ConfigError(std::string(name) + " must be at most " + std::to_string(max_index));
}

json complex_json(std::complex<double> v) { return json::array({v.real(), v.imag()}); }

json params_json(const Params& p) {
  json j{{"nu", p.nu_value()}, {"xi", complex_json(p.xi_value())}};
  if (p.mode() == Mode::exact) {
    j["nu_exact"] = p.nu().to_string();
    j["xi_exact"] = p.xi().to_string();
  }
  return j;
}

std::string number(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

// subcommands -----------------------------------------------------------

int cmd_matrix(unsigned m, unsigned n, const Config& config, std::ostream& out) {
  check_index(m, "m");
  check_index(n, "n");
  const Params params = params_from(config, resolve_mode(config));
  const BiPoly g = gchp(m, n, params);
  if (config.output == "pretty") {
    out << "G^{" << m << "," << n << "}  " << params.label() << '\n' << format_matrix(g);
  } else if (config.output == "csv") {
    out << "j,k,re,im\n";
    for (std::size_t j = 0; j < g.rows(); ++j)
      for (std::size_t k = 0; k < g.cols(); ++k) {
        const auto v = g.at(j, k).to_complex();
        out << j << ',' << k << ',' << number(v.real()) << ',' << number(v.imag()) << '\n';
      }
  } else {
    json doc{{"m", m}, {"n", n}, {"mode", to_string(params.mode())}};
    doc.update(params_json(params));
    doc["rows"] = g.rows();
    doc["cols"] = g.cols();
    json coeffs = json::array();
    json exact = json::array();
    for (std::size_t j = 0; j < g.rows(); ++j)
      for (std::size_t k = 0; k < g.cols(); ++k) {
        coeffs.push_back(complex_json(g.at(j, k).to_complex()));
        exact.push_back(g.at(j, k).to_string());
      }
    doc["coeffs"] = std::move(coeffs);
    if (params.mode() == Mode::exact) doc["coeffs_exact"] = std::move(exact);
    out << doc.dump(2) << '\n';
  }
  return exit_ok;
}

int cmd_eval(unsigned m, unsigned n, const std::string& z_re, const std::string& z_im,
             const Config& config, std::ostream& out) {
  check_index(m, "m");
  check_index(n, "n");
  const Mode mode = resolve_mode(config);
  const Params params = params_from(config, mode);
  const Coefficient z = complex_arg(z_re, z_im, mode, "z");
  const Coefficient value = eval(gchp(m, n, params), z);
  const auto v = value.to_complex();
  if (config.output == "pretty") {
    out << "G^{" << m << "," << n << "}(" << z.to_string() << ") = " << value.to_string() << '\n';
  } else if (config.output == "csv") {
    out << "re,im\n" << number(v.real()) << ',' << number(v.imag()) << '\n';
  } else {
    json doc{{"m", m}, {"n", n}, {"mode", to_string(mode)}};
    doc.update(params_json(params));
    doc["z"] = complex_json(z.to_complex());
    doc["value"] = complex_json(v);
    if (mode == Mode::exact) doc["value_exact"] = value.to_string();
    out << doc.dump(2) << '\n';
  }
  return exit_ok;
}

int cmd_inner(unsigned m, unsigned n, unsigned j, unsigned k, const Config& config,
              std::ostream& out) {
  for (unsigned v : {m, n, j, k}) check_index(v, "index");
  const Params params = params_from(config, resolve_mode(config));
  const BiPoly f = gchp(m, n, params);
  const BiPoly g = gchp(j, k, params);
  const InnerProductReport r = inner_product_report(f, g, params, config.quad_order);
  const bool ok = r.max_rel_delta <= config.tolerance;
  const unsigned order = config.quad_order == 0 ? default_quad_order(f, g) : config.quad_order;
  if (config.output == "pretty") {
    out << "<G^{" << m << "," << n << "}, G^{" << j << "," << k << "}>  " << params.label() << '\n'
        << "  exact       " << r.exact_value.to_string() << '\n'
        << "  quadrature  " << r.quad_value.to_string() << "  (order " << order << ")\n"
        << "  moments     " << r.moment_value.to_string() << '\n'
        << "  max delta   " << number(r.max_delta) << " (relative " << number(r.max_rel_delta) << ")\n"
        << "  " << (ok ? "agree" : "DISAGREE") << " within " << number(config.tolerance) << '\n';
  } else if (config.output == "csv") {
    out << "method,re,im\n";
    for (const auto& [name, c] : {std::pair{"exact", r.exact_value}, std::pair{"quadrature", r.quad_value},
                                  std::pair{"moments", r.moment_value}}) {
      const auto v = c.to_complex();
      out << name << ',' << number(v.real()) << ',' << number(v.imag()) << '\n';
    }
  } else {
    json doc{{"m", m}, {"n", n}, {"j", j}, {"k", k}, {"mode", to_string(params.mode())}};
    doc.update(params_json(params));
    doc["exact"] = complex_json(r.exact_value.to_complex());
    doc["quadrature"] = complex_json(r.quad_value.to_complex());
    doc["moments"] = complex_json(r.moment_value.to_complex());
    doc["moment_scale"] = moment_scale(params);
    doc["reduced"] = r.reduced.to_string();
    doc["quad_order"] = order;
    doc["max_delta"] = r.max_delta;
    doc["max_rel_delta"] = r.max_rel_delta;
    doc["tolerance"] = config.tolerance;
    doc["within_tolerance"] = ok;
    out << doc.dump(2) << '\n';
  }
  return ok ? exit_ok : exit_verification_failed;
}

std::string json_scalar(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return number(v.get<double>());
  throw ConfigError(std::string("params set: ") + what + " must be a number or a string");
}

/// [{"nu": "1/2", "xi": ["0", "-1"]}, ...]; numbers may be JSON numbers or strings.
std::vector<Params> read_params_set(const std::string& path, Mode mode) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open params set '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("params set '" + path + "': " + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw ConfigError("params set must be a non-empty JSON array");
  std::vector<Params> out;
  for (const json& entry : doc) {
    if (!entry.is_object() || !entry.contains("nu"))
      throw ConfigError("params set entries need a \"nu\" field");
    std::string re = "0";
    std::string im = "0";
    if (entry.contains("xi")) {
      const json& xi = entry["xi"];
      if (!xi.is_array() || xi.size() != 2) throw ConfigError("params set: xi must be [re, im]");
      re = json_scalar(xi[0], "xi");
      im = json_scalar(xi[1], "xi");
    }
    const Coefficient nu =
        Coefficient::exact(rational_arg(json_scalar(entry["nu"], "nu"), "nu")).to_mode(mode);
    out.push_back(make_params(nu, complex_arg(re, im, mode, "xi")));
  }
  return out;
}

int cmd_verify(unsigned max_degree, const std::string& params_file, bool corrupt,
               const Config& config, std::ostream& out) {
  if (max_degree > max_verify_degree)
    throw ConfigError("--max-degree must be at most " + std::to_string(max_verify_degree));
  VerifyOptions options;
  options.max_degree = max_degree;
  options.mode = resolve_mode(config);
  options.tolerance = config.tolerance;
  options.corrupt = corrupt;
  if (!params_file.empty()) options.params_set = read_params_set(params_file, options.mode);
  const VerifyReport report = run_verify(options);

  if (config.output == "pretty") {
    for (const CheckResult& c : report.checks) {
      out << std::left << std::setw(9) << to_string(c.status) << ' ' << c.name << "  residual "
          << number(c.residual);
      if (!c.note.empty()) out << "  " << c.note;
      out << '\n';
    }
    out << report.checks.size() << " checks: " << report.count(CheckStatus::passed) << " verified, "
        << report.count(CheckStatus::erratum) << " errata, " << report.count(CheckStatus::failed)
        << " failed\n";
    for (const std::string& e : report.errata) out << "erratum: " << e << '\n';
  } else if (config.output == "csv") {
    out << "name,status,residual,note\n";
    for (const CheckResult& c : report.checks)
      out << csv_field(c.name) << ',' << to_string(c.status) << ',' << number(c.residual) << ','
          << csv_field(c.note) << '\n';
  } else {
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
      json entry{{"name", c.name}, {"status", to_string(c.status)}, {"residual", c.residual}};
      if (!c.note.empty()) entry["note"] = c.note;
      if (!c.erratum.empty()) entry["erratum"] = c.erratum;
      checks.push_back(std::move(entry));
    }
    json doc{{"max_degree", report.max_degree},
             {"mode", to_string(report.mode)},
             {"tolerance", options.tolerance},
             {"passed", report.passed()},
             {"counts",
              {{"total", report.checks.size()},
               {"verified", report.count(CheckStatus::passed)},
               {"erratum", report.count(CheckStatus::erratum)},
               {"failed", report.count(CheckStatus::failed)}}},
             {"errata", report.errata},
             {"checks", std::move(checks)}};
    out << doc.dump(2) << '\n';
  }
  return report.passed() ? exit_ok : exit_verification_failed;
}

void add_common_options(CLI::App* sub, Config& config) {
  sub->add_option("--mode", config.mode, "exact or float (default: $GCHP_MODE, else exact)");
  sub->add_option("--nu", config.nu, "magnetic parameter nu > 0, e.g. 1/4 or 0.25");
  sub->add_option("--xi", config.xi, "shift xi as two numbers: re im")->expected(2);
  sub->add_option("--tol", config.tolerance, "tolerance for numerical agreement")
      ->check(CLI::PositiveNumber);
  sub->add_option("--quad-order", config.quad_order, "Gauss-Hermite points per axis (0: automatic)");
  sub->add_option("--output", config.output, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  sub->add_option("--out", config.out_file, "write output to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized complex Hermite polynomials G_nu^{m,n}(z, z* | xi)", "gchp"};
  app.require_subcommand(1);
  Config config;

  unsigned m = 0, n = 0, j = 0, k = 0;
  std::string z_re, z_im;
  unsigned max_degree = 8;
  std::string params_file;
  bool corrupt = false;

  auto* matrix = app.add_subcommand("matrix", "coefficient matrix of G^{m,n}");
  matrix->add_option("m", m)->required();
  matrix->add_option("n", n)->required();
  add_common_options(matrix, config);

  auto* evaluate = app.add_subcommand("eval", "evaluate G^{m,n} at z");
  evaluate->add_option("m", m)->required();
  evaluate->add_option("n", n)->required();
  evaluate->add_option("z_re", z_re)->required();
  evaluate->add_option("z_im", z_im)->required();
  add_common_options(evaluate, config);

  auto* inner = app.add_subcommand("inner", "<G^{m,n}, G^{j,k}> by three methods");
  inner->add_option("m", m)->required();
  inner->add_option("n", n)->required();
  inner->add_option("j", j)->required();
  inner->add_option("k", k)->required();
  add_common_options(inner, config);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--max-degree", max_degree, "largest index used by the checks (<= 10)");
  verify->add_option("--params-set", params_file, "JSON file: [{\"nu\": \"1/2\", \"xi\": [\"0\", \"-1\"]}, ...]");
  verify->add_flag("--corrupt", corrupt, "perturb one coefficient (negative control)")->group("");
  add_common_options(verify, config);

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  std::ofstream file;
  if (!config.out_file.empty()) {
    file.open(config.out_file);
    if (!file) {
      err << "error: cannot write '" << config.out_file << "'\n";
      return exit_usage;
    }
  }
  std::ostream& sink = config.out_file.empty() ? out : file;

  try {
    if (*matrix) return cmd_matrix(m, n, config, sink);
    if (*evaluate) return cmd_eval(m, n, z_re, z_im, config, sink);
    if (*inner) return cmd_inner(m, n, j, k, config, sink);
    return cmd_verify(max_degree, params_file, corrupt, config, sink);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_verification_failed;
  }
}

}  // namespace gchp::cli
