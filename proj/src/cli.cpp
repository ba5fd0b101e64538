#include "chromabound/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "chromabound/bound_engine.hpp"
#include "chromabound/lattice_theta.hpp"
#include "chromabound/parallel.hpp"
#include "chromabound/records.hpp"
#include "chromabound/special_functions.hpp"
#include "chromabound/verify.hpp"

namespace chromabound {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Options {
  std::string format = "plain";
  std::string out_path;
  std::string config_path;
  double tol = 1e-12;
  int m = 0, k = 0;
  int m_max = 5, k_max = 4;
  std::string lattice;
  int K = 512;
  std::string suite = "all";
};

// Values from the config file fill in anything not given on the command line.
void apply_config(const CLI::App& app, Options& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw std::invalid_argument("cannot read config file '" + o.config_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const auto kv = parse_config(buf.str());

  auto given = [&](const std::string& flag) {
    if (app.get_option_no_throw(flag) && app.count(flag) > 0) return true;
    for (const CLI::App* sub : app.get_subcommands()) {
      if (sub->get_option_no_throw(flag) && sub->count(flag) > 0) return true;
    }
    return false;
  };
  auto number = [](const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size()) throw std::invalid_argument("config key '" + key + "' is not a number: " + v);
    return x;
  };
  for (const auto& [key, value] : kv) {
    if (key == "tol") {
      if (!given("--tol")) o.tol = number(key, value);
    } else if (key == "K") {
      if (!given("--K")) o.K = static_cast<int>(number(key, value));
    } else if (key == "format") {
      if (!given("--format")) o.format = value;
    } else if (key == "out") {
      if (!given("--out")) o.out_path = value;
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
}

std::vector<Record> cmd_constants(const Options& o) {
  const auto g = gamma_chi(std::min(o.tol, 1e-15));
  Record r;
  r.add("gamma_chi", g.value)
      .add("u_star", g.u_star)
      .add("inner_max", g.inner_max)
      .add("stationarity_residual", g.stationarity_residual)
      .add("inv_sqrt2", 1.0 / std::numbers::sqrt2)
      .add("sqrt3_over_2", std::numbers::sqrt3 / 2.0)
      .add("kupavskii_base_m1", kupavskii_upper_base(1))
      .add("tol", o.tol);
  return {r};
}

std::vector<Record> cmd_bound(const Options& o, std::ostream& err) {
  if (o.m < 1 || o.k < 1) throw std::invalid_argument("--m and --k must be positive");
  const auto res = chromatic_lower_bound({o.m, o.k}, o.tol);
  if (res.trivial_regime) err << "warning: k > m, the bound may be trivial\n";
  auto r = to_record(res);
  r.add("tol", o.tol).add("warning", res.trivial_regime);
  return {r};
}

std::vector<Record> cmd_table(const Options& o) {
  if (o.m_max < 1 || o.k_max < 1) throw std::invalid_argument("--m-max and --k-max must be positive");
  std::vector<Record> out;
  for (const auto& res : bound_table(o.m_max, o.k_max, o.tol, thread_cap())) {
    out.push_back(to_record(res).add("tol", o.tol));
  }
  return out;
}

std::vector<Record> cmd_lattice_mu(const Options& o) {
  if (o.K < 16) throw std::invalid_argument("--K must be at least 16");
  const std::string& label = o.lattice;
  std::optional<MuResult> res;
  bool uses_K = false;
  if (label == "zn") {
    res = mu_z(o.tol);
  } else if (label == "e8") {
    res = mu_lattice(e8_series(o.K), o.tol);
    uses_K = true;
  } else if (label == "leech") {
    res = mu_lattice(leech_series(o.K), o.tol);
    uses_K = true;
  } else if (label.rfind("dn:", 0) == 0) {
    int n = 0;
    const auto digits = label.substr(3);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 1) {
      throw std::invalid_argument("bad D_n label '" + label + "'");
    }
    res = mu_dn(n, o.tol);
  } else {
    throw std::invalid_argument("unknown lattice '" + label + "' (expected zn, dn:<n>, e8, leech)");
  }
  auto r = to_record(*res);
  if (uses_K) r.add("K", std::int64_t{o.K});
  r.add("tol", o.tol);
  r.add("double_cap", double_cap_compare(res->mu) == DoubleCapVerdict::improvement
                          ? std::string("improvement")
                          : std::string("no_improvement"));
  return {r};
}

std::vector<Record> cmd_verify(const Options& o, bool& all_passed) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
  } else {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), o.suite) == known.end()) {
      throw std::invalid_argument("unknown suite '" + o.suite + "'");
    }
    suites = {o.suite};
  }
  std::vector<Record> out;
  all_passed = true;
  const unsigned threads = thread_cap();
  for (const auto& name : suites) {
    const auto rep = run_suite(name, threads);
    for (const auto& c : rep.checks) {
      Record r;
      r.add("suite", rep.suite).add("check", c.name).add("passed", c.passed).add("detail", c.detail);
      out.push_back(std::move(r));
    }
    all_passed = all_passed && rep.passed();
  }
  return out;
}

}  // namespace

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    }
    out[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lower bounds for chromatic numbers of Euclidean spaces with forbidden distances"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format: json, csv or plain");
  app.add_option("--out", o.out_path, "Write output to this file instead of stdout");
  app.add_option("--config", o.config_path, "key=value file with defaults for tol, K, format, out");

  auto* constants = app.add_subcommand("constants", "Gamma_chi and reference constants");
  constants->add_option("--tol", o.tol)->check(CLI::PositiveNumber);

  auto* bound = app.add_subcommand("bound", "Lower bound on the base for one (m, k)");
  bound->add_option("--m", o.m)->required();
  bound->add_option("--k", o.k)->required();
  bound->add_option("--tol", o.tol)->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Bounds for every 1 <= k <= k-max, 1 <= m <= m-max");
  table->add_option("--m-max", o.m_max);
  table->add_option("--k-max", o.k_max);
  table->add_option("--tol", o.tol)->check(CLI::PositiveNumber);

  auto* lattice = app.add_subcommand("lattice-mu", "Packing parameter mu for a lattice theta series");
  lattice->add_option("--lattice", o.lattice, "zn, dn:<n>, e8 or leech")->required();
  lattice->add_option("--K", o.K, "Number of exact theta coefficients (>= 16)");
  lattice->add_option("--tol", o.tol)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--suite", o.suite, "theta, bounds, combinatorics, tensor or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string command;
  std::vector<Record> records;
  bool verified = true;
  try {
    apply_config(app, o);
    if (!(o.tol > 0)) throw std::invalid_argument("tol must be positive");
    const auto format = parse_format(o.format);
    if (constants->parsed()) {
      command = "constants";
      records = cmd_constants(o);
    } else if (bound->parsed()) {
      command = "bound";
      records = cmd_bound(o, err);
    } else if (table->parsed()) {
      command = "table";
      records = cmd_table(o);
    } else if (lattice->parsed()) {
      command = "lattice-mu";
      records = cmd_lattice_mu(o);
    } else {
      command = "verify";
      records = cmd_verify(o, verified);
    }
    const auto text = render_records(command, records, format);
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write '" + o.out_path + "'");
      file << text;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  if (!verified) {
    for (const auto& r : records) {
      const auto* passed = r.find("passed");
      if (passed && !std::get<bool>(*passed)) {
        err << "FAILED " << std::get<std::string>(*r.find("suite")) << ": "
            << std::get<std::string>(*r.find("check")) << "\n  "
            << std::get<std::string>(*r.find("detail")) << "\n";
      }
    }
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace chromabound
