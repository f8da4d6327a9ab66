// Copyright 2026 The wpcoop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wpcoop/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wpcoop/analytic.hpp"
#include "wpcoop/montecarlo.hpp"
#include "wpcoop/validation.hpp"

namespace wpcoop {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::string> schemes;
  std::string rate;
  std::string snr_db;
  std::string alpha = "opt";
  double eta = 1.0;
  unsigned users = 2;
  unsigned k1 = 2;
  unsigned k2 = 2;
  unsigned field_degree = 8;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string mode = "analytic";
  bool independent_links = false;
  bool system_outage = false;
  std::optional<std::string> epsilons;
  std::string out;
  std::string format = "csv";
  std::string config;
  std::string inject_fault;
};

// A table whose cells are already formatted. Finite numbers are written
// unquoted in JSON, other numbers as null.
struct Table {
  struct Cell {
    std::string text;
    bool numeric;
    bool finite = true;
  };
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

Table::Cell num(double v) { return {format_number(v), true, std::isfinite(v)}; }
Table::Cell prob(double p) { return {format_probability(p), true, std::isfinite(p)}; }
Table::Cell text(std::string s) { return {std::move(s), false}; }
Table::Cell integer(std::uint64_t v) { return {std::to_string(v), true}; }

std::string render_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c].text;
    os << '\n';
  }
  return os.str();
}

std::string render_json(const Table& t) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << "  {";
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      const auto& cell = t.rows[r][c];
      os << (c ? ", " : "") << nlohmann::json(t.columns[c]).dump() << ": ";
      if (cell.numeric && cell.finite) {
        os << cell.text;
      } else if (cell.numeric || cell.text.empty()) {
        os << "null";
      } else {
        os << nlohmann::json(cell.text).dump();
      }
    }
    os << (r + 1 < t.rows.size() ? "},\n" : "}\n");
  }
  os << "]\n";
  return os.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double parse_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + ": '" + s + "'");
  }
  if (used != s.size()) throw UsageError(std::string("invalid ") + what + ": '" + s + "'");
  return v;
}

std::vector<Scheme> schemes_of(const Options& o, const std::string& fallback) {
  const std::string list = o.schemes.value_or(fallback);
  std::vector<Scheme> out;
  for (const auto& token : split_list(list)) {
    try {
      out.push_back(parse_scheme(token, o.users, o.k1, o.k2, o.field_degree));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("scheme list is empty");
  return out;
}

std::vector<double> epsilons_of(const Options& o, const std::string& fallback) {
  std::vector<double> out;
  for (const auto& token : split_list(o.epsilons.value_or(fallback))) {
    const double e = parse_double(token, "epsilon");
    if (!(e > 0.0 && e < 1.0)) throw UsageError("epsilon must lie in (0, 1)");
    out.push_back(e);
  }
  if (out.empty()) throw UsageError("epsilon list is empty");
  return out;
}

std::vector<double> grid(const std::string& text, const std::string& fallback) {
  try {
    return SweepSpec::parse(text.empty() ? fallback : text).values();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

double single(const std::string& text, const std::string& fallback, const char* what) {
  const auto v = grid(text, fallback);
  if (v.size() != 1) throw UsageError(std::string(what) + " must be a single value here");
  return v.front();
}

SystemParams base_params(const Options& o) {
  SystemParams p;
  p.eta = o.eta;
  if (o.alpha != "opt") p.alpha = parse_double(o.alpha, "alpha");
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

Table cmd_outage(const Options& o) {
  if (o.mode != "analytic" && o.mode != "mc" && o.mode != "both") throw UsageError("mode must be analytic, mc or both");
  const bool mc = o.mode != "analytic";
  if (mc && o.trials == 0) throw UsageError("trials must be at least 1");
  const auto schemes = schemes_of(o, "edt,edf,enc,egnc");
  SystemParams p = base_params(o);
  p.rate = single(o.rate, "0.5", "rate");
  const auto snrs = grid(o.snr_db, "0:80:1");

  Table t;
  t.columns = {"snr_db", "scheme", "alpha", "analytic_outage"};
  if (mc) t.columns.insert(t.columns.end(), {"mc_outage", "mc_ci95", "trials", "seed"});
  for (double snr : snrs) {
    p.snr_db = snr;
    for (const auto& s : schemes) {
      std::vector<Table::Cell> row{num(snr), text(s.name())};
      row.push_back(s.energy_transfer ? num(resolve_alpha(s, p)) : text(""));
      try {
        row.push_back(prob(outage_scheme(s, p)));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (mc) {
        const auto est =
            estimate_outage(s, p, o.trials, o.seed, SimOptions{o.independent_links, o.system_outage}, o.threads);
        row.insert(row.end(), {prob(est.p_hat), prob(est.ci_halfwidth_95), integer(est.trials), integer(est.seed)});
      }
      t.add(std::move(row));
    }
  }
  return t;
}

Table cmd_alpha(const Options& o) {
  const auto schemes = schemes_of(o, "edt,edf,enc,egnc");
  SystemParams p = base_params(o);
  p.snr_db = single(o.snr_db, "60", "snr-db");
  const auto rates = grid(o.rate, "0.5:8:0.25");
  Table t;
  t.columns = {"rate", "scheme", "alpha_closed", "alpha_numeric"};
  for (double r : rates) {
    if (!(r > 0.0)) throw UsageError("rate must be positive");
    p.rate = r;
    for (const auto& s : schemes) {
      if (!s.energy_transfer) throw UsageError("alpha is defined for energy-transfer schemes only");
      t.add({num(r), text(s.name()), num(optimal_alpha_closed(r, s)), num(optimal_alpha_numeric(s, p))});
    }
  }
  return t;
}

Table cmd_capacity(const Options& o) {
  const auto schemes = schemes_of(o, "edt,edf,enc,egnc");
  const auto eps = epsilons_of(o, "1e-3");
  if (eps.size() != 1) throw UsageError("capacity takes a single epsilon");
  SystemParams p = base_params(o);
  const auto snrs = grid(o.snr_db, "0:100:1");
  Table t;
  t.columns = {"snr_db", "scheme", "rate_max"};
  for (double snr : snrs) {
    p.snr_db = snr;
    for (const auto& s : schemes) {
      if (!s.energy_transfer) throw UsageError("capacity is defined for energy-transfer schemes only");
      t.add({num(snr), text(s.name()), num(epsilon_outage_capacity(eps.front(), p, s))});
    }
  }
  return t;
}

Table cmd_threshold(const Options& o) {
  const auto schemes = schemes_of(o, "edf,enc,egnc");
  const auto eps = epsilons_of(o, "1e-3,1e-5,1e-7");
  Table t;
  t.columns = {"epsilon", "scheme", "threshold_numeric_db", "threshold_lb_db"};
  for (double e : eps) {
    for (const auto& s : schemes) {
      try {
        t.add({prob(e), text(s.name()), num(threshold_snr_db(e, s, ThresholdMode::Numeric, o.eta)),
               num(threshold_snr_db(e, s, ThresholdMode::LowerBound, o.eta))});
      } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
      }
    }
  }
  return t;
}

int cmd_validate(const Options& o, std::ostream& out) {
  ValidationOptions v;
  v.trials = o.trials;
  v.seed = o.seed;
  if (o.inject_fault == "wrong-m0") {
    v.model.link.m0 *= 1.1;
  } else if (!o.inject_fault.empty()) {
    throw UsageError("unknown fault '" + o.inject_fault + "'");
  }
  bool ok = true;
  for (const auto& c : run_validation(v)) {
    ok &= c.pass;
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " measured=" << format_number(c.measured)
        << " expected=" << format_number(c.expected) << " tol=" << format_number(c.tolerance) << '\n';
  }
  out << (ok ? "all checks passed" : "validation FAILED") << '\n';
  return ok ? kExitOk : kExitValidationFailed;
}

void add_shared(CLI::App* sub, Options& o) {
  sub->add_option("--schemes", o.schemes, "Comma-separated schemes: dt, df, nc, gnc, edt, edf, enc, egnc");
  sub->add_option("--rate", o.rate, "Target rate R (bpcu), value or start:stop:step");
  sub->add_option("--snr-db", o.snr_db, "SNR in dB, value or start:stop:step");
  sub->add_option("--alpha", o.alpha, "Energy-transfer time share, or 'opt'");
  sub->add_option("--eta", o.eta, "Energy transfer efficiency");
  sub->add_option("--users", o.users, "Users M for GNC and DT");
  sub->add_option("--k1", o.k1, "Information frames per user (GNC)");
  sub->add_option("--k2", o.k2, "Parity frames per user (GNC)");
  sub->add_option("--field-degree", o.field_degree, "GF(2^m) degree for GNC");
  sub->add_option("--trials", o.trials, "Monte Carlo trials");
  sub->add_option("--seed", o.seed, "Monte Carlo seed");
  sub->add_option("--threads", o.threads, "Monte Carlo worker threads (0: all)");
  sub->add_option("--mode", o.mode, "analytic, mc or both");
  sub->add_flag("--independent-links", o.independent_links, "Independent harvest gain per link");
  sub->add_flag("--system-outage", o.system_outage, "Count a round as failed if any user fails");
  sub->add_option("--epsilon,--epsilons", o.epsilons, "Target outage probability list");
  sub->add_option("--out", o.out, "Output file (default stdout)");
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--config", o.config, "JSON file whose keys are flag names");
}

// Turns {"snr-db": "0:10:1", "independent-links": true, ...} into flags.
std::vector<std::string> config_arguments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid config file: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  std::vector<std::string> args;
  for (const auto& [key, value] : j.items()) {
    if (key == "config") throw UsageError("config files cannot nest");
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
      continue;
    }
    std::string v;
    if (value.is_string()) {
      v = value.get<std::string>();
    } else if (value.is_array()) {
      for (const auto& item : value) {
        if (!v.empty()) v += ',';
        v += item.is_string() ? item.get<std::string>() : item.dump();
      }
    } else if (value.is_number()) {
      v = value.dump();
    } else {
      throw UsageError("unsupported value for config key '" + key + "'");
    }
    args.push_back(flag);
    args.push_back(v);
  }
  return args;
}

std::optional<std::string> find_config(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

}  // namespace

SweepSpec SweepSpec::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is{std::string(text)};
  while (std::getline(is, part, ':')) parts.push_back(part);
  if (!text.empty() && text.back() == ':') parts.emplace_back();
  const auto value = [](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) {
      throw std::invalid_argument("malformed range value '" + s + "'");
    }
    return v;
  };
  SweepSpec spec;
  if (parts.size() == 1) {
    spec.start = spec.stop = value(parts[0]);
    return spec;
  }
  if (parts.size() != 3) throw std::invalid_argument("range must be start:stop:step");
  spec.start = value(parts[0]);
  spec.stop = value(parts[1]);
  spec.step = value(parts[2]);
  if (spec.start > spec.stop) throw std::invalid_argument("range start exceeds stop");
  if (!(spec.step > 0.0)) throw std::invalid_argument("range step must be positive");
  return spec;
}

std::vector<double> SweepSpec::values() const {
  const double span = (stop - start) / step;
  const auto n = static_cast<std::size_t>(std::floor(span + 1e-9));
  if (n > 10'000'000) throw std::invalid_argument("range has too many points");
  std::vector<double> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string format_probability(double p) {
  if (std::isfinite(p) && p != 0.0 && std::fabs(p) < 1e-3) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9e", p);
    return buf;
  }
  return format_number(p);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Outage analysis of wireless-powered cooperative network coding"};
  app.name("wpcoop");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  auto* outage = app.add_subcommand("outage", "Outage probability versus SNR");
  auto* alpha = app.add_subcommand("alpha", "Closed-form and numeric optimal time share versus rate");
  auto* capacity = app.add_subcommand("capacity", "Epsilon-outage capacity versus SNR");
  auto* threshold = app.add_subcommand("threshold", "SNR up to which cooperation beats direct transmission");
  auto* validate = app.add_subcommand("validate", "Run the self-check suite");
  for (auto* sub : {outage, alpha, capacity, threshold, validate}) add_shared(sub, o);
  validate->add_option("--inject-fault", o.inject_fault, "Negative control: wrong-m0");

  try {
    std::vector<std::string> argv = args;
    if (const auto path = find_config(args)) {
      auto extra = config_arguments(*path);
      // Config values first so explicit flags override them.
      const auto sub = std::find_if(argv.begin(), argv.end(), [&](const std::string& a) {
        return a == "outage" || a == "alpha" || a == "capacity" || a == "threshold" || a == "validate";
      });
      argv.insert(sub == argv.end() ? argv.end() : sub + 1, extra.begin(), extra.end());
    }
    std::reverse(argv.begin(), argv.end());
    app.parse(std::move(argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    Table table;
    if (outage->parsed()) table = cmd_outage(o);
    if (alpha->parsed()) table = cmd_alpha(o);
    if (capacity->parsed()) table = cmd_capacity(o);
    if (threshold->parsed()) table = cmd_threshold(o);
    const std::string body = o.format == "json" ? render_json(table) : render_csv(table);
    if (o.out.empty()) {
      out << body;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write '" + o.out + "'");
      file << body;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidationFailed;
  }
  return kExitOk;
}

}  // namespace wpcoop
