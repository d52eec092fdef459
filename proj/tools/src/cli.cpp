#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "staircase/ech.hpp"
#include "staircase/ehrhart.hpp"
#include "staircase/ellipsoid.hpp"
#include "staircase/four_thirds.hpp"
#include "staircase/theorem_report.hpp"
#include "suites.hpp"

namespace staircase::cli {

namespace {

struct Table {
  std::vector<std::string> header;
  // Columns shown by the text renderer; csv and json show all.
  std::vector<bool> in_text;
  std::vector<std::vector<std::string>> rows;
};

struct Document {
  std::vector<std::pair<std::string, std::string>> fields;
  std::optional<Table> table;
  std::vector<CheckResult> checks;
};

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names = {
      {"capacities", Command::capacities},   {"ehrhart", Command::ehrhart},
      {"accumulation", Command::accumulation}, {"scan", Command::scan},
      {"verify", Command::verify},           {"report-43", Command::report_43},
      {"theorem-report", Command::theorem_report}};
  return names;
}

// Reads command parameters, turning parse problems into UsageError.
class Params {
 public:
  explicit Params(const RunConfig& config) : config_(config) {}

  bool has(const std::string& key) const { return config_.parameters.count(key) != 0; }

  std::vector<Rational> rationals(const std::string& key, std::size_t expected) const {
    const auto it = config_.parameters.find(key);
    if (it == config_.parameters.end()) {
      throw UsageError("missing --" + key);
    }
    if (it->second.size() != expected) {
      throw UsageError("--" + key + " expects " + std::to_string(expected) + " values");
    }
    std::vector<Rational> out;
    for (const std::string& token : it->second) {
      try {
        out.push_back(Rational::parse(token));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + " for --" + key);
      }
    }
    return out;
  }

  Rational rational(const std::string& key) const { return rationals(key, 1).front(); }

  Rational rational(const std::string& key, const Rational& fallback) const {
    return has(key) ? rational(key) : fallback;
  }

  std::int64_t integer(const std::string& key) const {
    const Rational value = rational(key);
    if (!value.is_integer() || !value.numerator().fits_slong_p()) {
      throw UsageError("--" + key + " expects an integer, got '" + value.str() + "'");
    }
    return value.numerator().get_si();
  }

  std::int64_t integer(const std::string& key, std::int64_t fallback) const {
    return has(key) ? integer(key) : fallback;
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    const auto it = config_.parameters.find(key);
    return it == config_.parameters.end() || it->second.empty() ? fallback : it->second.front();
  }

 private:
  const RunConfig& config_;
};

std::string yes_no(bool value) { return value ? "true" : "false"; }

Document capacities_command(const RunConfig& config) {
  const Params params(config);
  const std::vector<Rational> axes = params.rationals("ellipsoid", 2);
  const std::int64_t count = params.integer("count", 11);
  if (count < 1) {
    throw UsageError("--count must be positive");
  }
  Document doc;
  Table table{{"k", "capacity", "capacity_decimal"}, {true, true, false}, {}};
  const std::vector<Rational> values =
      capacity_prefix(Ellipsoid(axes[0], axes[1]), static_cast<std::size_t>(count));
  for (std::size_t k = 0; k < values.size(); ++k) {
    table.rows.push_back({std::to_string(k), values[k].str(), values[k].decimal(config.precision)});
  }
  doc.table = std::move(table);
  return doc;
}

void add_verdict_fields(Document& doc, const EmbeddingVerdict& verdict) {
  const DominationVerdict& d = verdict.domination;
  doc.fields.emplace_back("normalization", verdict.normalization.str());
  doc.fields.emplace_back("source_triangle", "T(" + verdict.source_triangle.u().str() + ", " +
                                                 verdict.source_triangle.v().str() + ")");
  doc.fields.emplace_back("target_triangle", "T(" + verdict.target_triangle.u().str() + ", " +
                                                 verdict.target_triangle.v().str() + ")");
  doc.fields.emplace_back("embeds", yes_no(d.holds));
  doc.fields.emplace_back("exhaustive", yes_no(d.exhaustive));
  doc.fields.emplace_back("checked_up_to", std::to_string(d.checked_up_to));
  if (d.first_failure) {
    doc.fields.emplace_back("first_failure", std::to_string(*d.first_failure));
  }
  doc.fields.emplace_back("min_margin", d.min_margin.get_str());
  doc.fields.emplace_back("min_margin_at", std::to_string(d.min_margin_at));
}

Document ehrhart_command(const RunConfig& config) {
  const Params params(config);
  Document doc;
  if (params.has("source") || params.has("target")) {
    const std::vector<Rational> s = params.rationals("source", 2);
    const std::vector<Rational> t = params.rationals("target", 2);
    const Ellipsoid source(s[0], s[1]);
    const Ellipsoid target(t[0], t[1]);
    const bool exact = params.has("exact");
    add_verdict_fields(doc, exact ? embedding_decision_exact(source, target)
                                  : embedding_decision(source, target, config.t_max));
    return doc;
  }
  const std::vector<Rational> legs = params.rationals("triangle", 2);
  const RightTriangle triangle(legs[0], legs[1]);
  if (params.has("counts")) {
    const std::int64_t last = params.integer("counts");
    if (last < 0) {
      throw UsageError("--counts must be nonnegative");
    }
    Table table{{"t", "count"}, {true, true}, {}};
    for (std::int64_t t = 0; t <= last; ++t) {
      table.rows.push_back({std::to_string(t), triangle_count(triangle, t).get_str()});
    }
    doc.table = std::move(table);
    return doc;
  }
  const QuasiPolynomial qp = fit_quasi_polynomial(triangle);
  doc.fields.emplace_back("period", std::to_string(qp.period()));
  doc.fields.emplace_back("leading", qp.leading().str());
  Table table{{"r", "linear", "constant", "linear_decimal", "constant_decimal"},
              {true, true, true, false, false},
              {}};
  for (std::int64_t r = 0; r < qp.period(); ++r) {
    const auto i = static_cast<std::size_t>(r);
    table.rows.push_back({std::to_string(r), qp.linear()[i].str(), qp.constant()[i].str(),
                          qp.linear()[i].decimal(config.precision),
                          qp.constant()[i].decimal(config.precision)});
  }
  doc.table = std::move(table);
  return doc;
}

Document accumulation_command(const RunConfig& config) {
  const Params params(config);
  const AccumulationData acc = accumulation_point(params.integer("k"), params.integer("l"));
  Document doc;
  doc.fields = {{"k", std::to_string(acc.k)},
                {"l", std::to_string(acc.l)},
                {"per", acc.per.str()},
                {"vol", acc.vol.str()},
                {"a0", acc.a0.str()},
                {"decimal", acc.a0.decimal(config.precision)}};
  return doc;
}

Table scan_table(const std::vector<ScanRow>& rows, int precision) {
  Table table{{"a", "a_decimal", "volume_bound", "bullet_bound", "bullet_decimal",
               "capacity_bound", "capacity_decimal"},
              std::vector<bool>(7, true),
              {}};
  for (const ScanRow& row : rows) {
    table.rows.push_back({row.a.str(), row.a.decimal(precision), row.volume.decimal(30),
                          row.bullet ? row.bullet->str() : "",
                          row.bullet ? row.bullet->decimal(precision) : "",
                          row.capacity.str(), row.capacity.decimal(precision)});
  }
  return table;
}

Document scan_command(const RunConfig& config) {
  const Params params(config);
  const Rational step = params.rational("step", Rational(1) / Rational(60));
  if (step.sign() <= 0) {
    throw UsageError("--step must be positive");
  }
  Document doc;
  doc.table = scan_table(scan_embedding_function(params.rational("b"), params.rational("a-lo"),
                                                 params.rational("a-hi"), step, config.n_cap),
                         config.precision);
  return doc;
}

Document verify_command(const RunConfig& config) {
  const Params params(config);
  const std::string suite = params.text("suite", "all");
  if (!is_suite(suite)) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  SuiteOptions options;
  options.t_max = config.t_max;
  options.n_cap = config.n_cap;
  options.seed = config.seed;
  Document doc;
  doc.checks = run_suite(suite, options);
  return doc;
}

Document report_43_command(const RunConfig& config) {
  const Params params(config);
  const Rational lo = params.rational("a-lo", Rational(2));
  const Rational hi = params.rational("a-hi", Rational(4));
  const Rational step = params.rational("step", Rational(1) / Rational(20));
  if (lo < Rational(2) || hi > Rational(4) || hi < lo || step.sign() <= 0) {
    throw UsageError("report-43 needs 2 <= a-lo <= a-hi <= 4 and step > 0");
  }
  const FourThirdsReport report = verify_43_case(config.t_max, rational_grid(lo, hi, step),
                                                 config.n_cap);
  Document doc;
  Table table{{"a", "claimed", "ratio_k2", "ratio_k10", "capacity_bound", "lower_matches",
               "upper_holds", "checked_up_to"},
              std::vector<bool>(8, true),
              {}};
  for (const FourThirdsRow& row : report.rows) {
    table.rows.push_back({row.a.str(), row.claimed.str(), row.ratio_k2.str(), row.ratio_k10.str(),
                          row.capacity_bound.str(), yes_no(row.lower_matches),
                          yes_no(row.upper.holds()),
                          std::to_string(row.upper.domination.checked_up_to)});
    doc.checks.push_back({"four-thirds a=" + row.a.str(),
                          "capacity bound = claimed value and E(1,a) -> claimed E(1,4/3)",
                          row.passed, "claimed " + row.claimed.str()});
  }
  doc.table = std::move(table);
  return doc;
}

Document theorem_report_command(const RunConfig& config) {
  const Params params(config);
  TheoremReportOptions options;
  options.t_max = config.t_max;
  options.n_cap = config.n_cap;
  options.scan_step = params.rational("scan-step", options.scan_step);
  if (options.scan_step.sign() <= 0) {
    throw UsageError("--scan-step must be positive");
  }
  const TheoremReport report = theorem_report(params.integer("k"), params.integer("l"), options);
  Document doc;
  std::string bullets;
  for (const BulletBound& bullet : report.governing_bullets) {
    bullets += (bullets.empty() ? "" : " ") + std::to_string(bullet.index);
  }
  doc.fields = {{"k", std::to_string(report.k)},
                {"l", std::to_string(report.l)},
                {"b", report.b.str()},
                {"case", to_string(report.kind)},
                {"special", yes_no(report.special)},
                {"a0", report.accumulation.a0.str()},
                {"a0_decimal", report.accumulation.a0.decimal(config.precision)},
                {"governing_bullets", bullets}};
  doc.checks = report.checks;
  doc.table = scan_table(report.scan, config.precision);
  return doc;
}

std::string csv_escape(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) {
    return value;
  }
  std::string out = "\"";
  for (const char c : value) {
    out += c;
    if (c == '"') {
      out += '"';
    }
  }
  return out + "\"";
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    os << (i == 0 ? "" : ",") << csv_escape(cells[i]);
  }
  os << '\n';
}

std::string verdict(const CheckResult& check) { return check.passed ? "pass" : "fail"; }

void render_text(const Document& doc, std::ostream& os) {
  for (const auto& [key, value] : doc.fields) {
    os << key << ": " << value << '\n';
  }
  if (doc.table) {
    for (const auto& row : doc.table->rows) {
      bool first = true;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (doc.table->in_text[i]) {
          os << (first ? "" : ", ") << row[i];
          first = false;
        }
      }
      os << '\n';
    }
  }
  for (const CheckResult& check : doc.checks) {
    os << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.witness << '\n';
  }
}

void render_csv(const Document& doc, std::ostream& os) {
  if (doc.table) {
    write_csv_row(os, doc.table->header);
    for (const auto& row : doc.table->rows) {
      write_csv_row(os, row);
    }
  } else if (!doc.checks.empty()) {
    write_csv_row(os, {"name", "hypothesis", "verdict", "witness"});
    for (const CheckResult& check : doc.checks) {
      write_csv_row(os, {check.name, check.hypothesis, verdict(check), check.witness});
    }
  } else {
    write_csv_row(os, {"key", "value"});
    for (const auto& [key, value] : doc.fields) {
      write_csv_row(os, {key, value});
    }
  }
}

void render_json(const Document& doc, std::ostream& os) {
  nlohmann::ordered_json root = nlohmann::ordered_json::object();
  for (const auto& [key, value] : doc.fields) {
    root[key] = value;
  }
  if (doc.table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : doc.table->rows) {
      nlohmann::ordered_json entry = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        entry[doc.table->header[i]] = row[i];
      }
      rows.push_back(std::move(entry));
    }
    root["rows"] = std::move(rows);
  }
  if (!doc.checks.empty()) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& check : doc.checks) {
      checks.push_back({{"name", check.name},
                        {"hypothesis", check.hypothesis},
                        {"verdict", verdict(check)},
                        {"witness", check.witness}});
    }
    root["checks"] = std::move(checks);
  }
  os << root.dump(2) << '\n';
}

Document dispatch(const RunConfig& config) {
  switch (config.command) {
    case Command::capacities:
      return capacities_command(config);
    case Command::ehrhart:
      return ehrhart_command(config);
    case Command::accumulation:
      return accumulation_command(config);
    case Command::scan:
      return scan_command(config);
    case Command::verify:
      return verify_command(config);
    case Command::report_43:
      return report_43_command(config);
    case Command::theorem_report:
      return theorem_report_command(config);
  }
  throw UsageError("unknown command");
}

}  // namespace

std::optional<RunConfig> parse_arguments(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact ellipsoid embedding computations and verification suites", "staircase"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "text";
  std::string output;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--output", output, "Write results to this file instead of stdout");
  app.add_option("--precision", config.precision, "Significant digits for decimals")
      ->check(CLI::Range(1, 1000));
  app.add_option("--t-max", config.t_max, "Largest dilation checked")->check(CLI::PositiveNumber);
  app.add_option("--n-cap", config.n_cap, "Number of capacities in lower bounds")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for sampled suites");

  // Parameter values are collected raw and parsed as rationals in run().
  std::map<std::string, std::vector<std::string>> raw;
  std::map<std::string, bool> flags;
  const auto param = [&](CLI::App* sub, const std::string& name, int count,
                         const std::string& help) {
    sub->add_option("--" + name, raw[name], help)->expected(count);
  };
  const auto flag = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_flag("--" + name, flags[name], help);
  };

  CLI::App* capacities = app.add_subcommand("capacities", "ECH capacities c_0..c_{count-1}");
  param(capacities, "ellipsoid", 2, "Ellipsoid parameters a b");
  param(capacities, "count", 1, "Number of capacities (default 11)");

  CLI::App* ehrhart = app.add_subcommand("ehrhart", "Ehrhart quasi-polynomials and embedding tests");
  param(ehrhart, "triangle", 2, "Triangle legs u v");
  param(ehrhart, "counts", 1, "List lattice counts for t = 0..N instead of the fit");
  param(ehrhart, "source", 2, "Source ellipsoid a b");
  param(ehrhart, "target", 2, "Target ellipsoid c d");
  flag(ehrhart, "exact", "Decide domination for all t");

  CLI::App* accumulation = app.add_subcommand("accumulation", "Accumulation point for b = k/l");
  param(accumulation, "k", 1, "Numerator");
  param(accumulation, "l", 1, "Denominator");

  CLI::App* scan = app.add_subcommand("scan", "Grid scan of volume, bullet and capacity bounds");
  param(scan, "b", 1, "Target eccentricity");
  param(scan, "a-lo", 1, "First grid value");
  param(scan, "a-hi", 1, "Last grid value");
  param(scan, "step", 1, "Grid step (default 1/60)");

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "all or one of the suite names");

  CLI::App* report_43 = app.add_subcommand("report-43", "Embedding function for b = 4/3 on [2, 4]");
  param(report_43, "a-lo", 1, "First grid value (default 2)");
  param(report_43, "a-hi", 1, "Last grid value (default 4)");
  param(report_43, "step", 1, "Grid step (default 1/20)");

  CLI::App* theorem = app.add_subcommand("theorem-report", "Finiteness checks for b = k/l");
  param(theorem, "k", 1, "Numerator");
  param(theorem, "l", 1, "Denominator");
  param(theorem, "scan-step", 1, "Scan step (default 1/60)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const std::string name = app.get_subcommands().front()->get_name();
  config.command = command_names().at(name);
  config.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::text;
  if (!output.empty()) {
    config.output_path = output;
  }
  CLI::App* chosen = app.get_subcommands().front();
  for (const auto& [key, values] : raw) {
    if (chosen->get_option_no_throw("--" + key) != nullptr && !values.empty()) {
      config.parameters[key] = values;
    }
  }
  for (const auto& [key, set] : flags) {
    if (set && chosen->get_option_no_throw("--" + key) != nullptr) {
      config.parameters[key] = {};
    }
  }
  if (config.command == Command::verify) {
    config.parameters["suite"] = {suite};
  }
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Document doc;
  try {
    doc = dispatch(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  if (config.output_path) {
    file.open(*config.output_path);
    if (!file) {
      err << "cannot open output file '" << *config.output_path << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = config.output_path ? static_cast<std::ostream&>(file) : out;
  switch (config.format) {
    case Format::text:
      render_text(doc, sink);
      break;
    case Format::csv:
      render_csv(doc, sink);
      break;
    case Format::json:
      render_json(doc, sink);
      break;
  }

  bool ok = true;
  for (const CheckResult& check : doc.checks) {
    if (!check.passed) {
      err << "FAIL " << check.name << " (" << check.hypothesis << "): " << check.witness << '\n';
      ok = false;
    }
  }
  return ok ? kExitOk : kExitFailure;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const std::optional<RunConfig> config = parse_arguments(args, out);
    return config ? run(*config, out, err) : kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace staircase::cli
