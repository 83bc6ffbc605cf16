#include "spair/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "spair/channel.hpp"
#include "spair/codes.hpp"
#include "spair/oracle.hpp"
#include "spair/pairmetrics.hpp"

namespace spair::cli {
namespace {

// Keeps every command's output small enough to print.
constexpr std::uint64_t kMaxCliLength = std::uint64_t{1} << 20;

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "n/a"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", v);
      return buf;
    }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

Cell int_cell(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::string word_text(const ring::RingElement& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(w[k].code);
  }
  return s;
}

codes::CodeSpec family_spec(const FamilyArgs& a, std::uint64_t i = 0) {
  codes::CodeSpec spec{a.p, a.m, a.e, 0};
  try {
    spec.validate();
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  if (spec.n() > kMaxCliLength) throw UsageError("code length p^e = " + std::to_string(spec.n()) + " is too large");
  if (i > spec.n()) throw UsageError("i = " + std::to_string(i) + " exceeds p^e = " + std::to_string(spec.n()));
  spec.i = i;
  return spec;
}

}  // namespace

void render(const RecordTable& table, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::tsv: {
      for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "\t" : "") << table.columns[c];
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "\t" : "") << cell_text(row[c]);
        out << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) rec[table.columns[c]] = cell_json(row[c]);
        arr.push_back(std::move(rec));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::pretty: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t c = 0; c < table.columns.size(); ++c) width[c] = table.columns[c].size();
      std::vector<std::vector<std::string>> text;
      for (const auto& row : table.rows) {
        auto& line = text.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
          line.push_back(cell_text(row[c]));
          width[c] = std::max(width[c], line.back().size());
        }
      }
      auto emit = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c) line += "  ";
          line += cells[c];
          if (c + 1 < cells.size()) line.append(width[c] - cells[c].size(), ' ');
        }
        out << line << '\n';
      };
      emit(table.columns);
      std::vector<std::string> rule;
      for (auto w : width) rule.emplace_back(w, '-');
      emit(rule);
      for (const auto& line : text) emit(line);
      break;
    }
  }
}

std::vector<gf::FieldElement> parse_vector(const std::string& literal, const gf::FieldSpec& field) {
  std::vector<gf::FieldElement> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = literal.find(',', pos);
    const std::string token = literal.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw UsageError("bad vector entry '" + token + "' in '" + literal + "'");
    if (value >= field.q())
      throw UsageError("vector entry " + token + " is not a valid encoding in F_" + std::to_string(field.q()));
    out.push_back(gf::FieldElement{static_cast<std::uint32_t>(value)});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

gf::FieldSpec make_field(std::uint32_t p, std::uint32_t m, const std::optional<std::string>& modulus) {
  try {
    if (!modulus) return gf::build_field(p, m);
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(*modulus);
    std::string token;
    while (std::getline(ss, token, ',')) {
      std::uint32_t v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw UsageError("bad modulus coefficient '" + token + "'");
      coeffs.push_back(v);
    }
    if (coeffs.size() != static_cast<std::size_t>(m) + 1)
      throw UsageError("modulus must list " + std::to_string(m + 1) + " coefficients c_0..c_m");
    return gf::FieldSpec(p, std::move(coeffs));
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

int cmd_table(const FamilyArgs& args, OutputFormat format, std::ostream& out, std::ostream&) {
  const codes::CodeSpec spec = family_spec(args);
  if (args.modulus) make_field(args.p, args.m, args.modulus);
  RecordTable table{{"i", "dim", "d_h", "d_p", "branch", "mds_pair"}, {}};
  for (const auto& r : codes::distance_table(spec.p, spec.e, spec.m)) {
    Cell mds = r.mds_pair ? Cell{*r.mds_pair} : Cell{};
    table.rows.push_back({int_cell(r.i), int_cell(r.dimension), int_cell(r.d_h), int_cell(r.d_p), r.branch, mds});
  }
  render(table, format, out);
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, OutputFormat format, std::ostream& out, std::ostream& err) {
  const codes::CodeSpec spec = family_spec(args.family);
  if (args.max_enum == 0) throw UsageError("--max-enum must be >= 1");
  const gf::FieldSpec field = make_field(spec.p, spec.m, args.family.modulus);
  const oracle::VerificationReport report =
      oracle::verify_family(spec.p, spec.e, spec.m, oracle::EnumBudget{args.max_enum, true}, args.jobs, field);

  RecordTable table{{"i", "formula_dh", "oracle_dh", "formula_dp", "oracle_dp", "status", "witness"}, {}};
  for (const auto& e : report.entries) {
    table.rows.push_back({int_cell(e.i), int_cell(e.formula_dh), e.oracle_dh ? int_cell(*e.oracle_dh) : Cell{},
                          int_cell(e.formula_dp), e.oracle_dp ? int_cell(*e.oracle_dp) : Cell{},
                          oracle::to_string(e.status), e.witness ? Cell{word_text(*e.witness)} : Cell{}});
  }
  render(table, format, out);

  const auto verdict = report.verdict();
  err << "verdict: " << oracle::to_string(verdict) << " (" << report.count(oracle::EntryStatus::match) << " match, "
      << report.count(oracle::EntryStatus::mismatch) << " mismatch, " << report.count(oracle::EntryStatus::skipped)
      << " skipped)\n";
  switch (verdict) {
    case oracle::EntryStatus::match:
      return kExitOk;
    case oracle::EntryStatus::mismatch:
      return kExitMismatch;
    case oracle::EntryStatus::skipped:
      return kExitIncomplete;
  }
  return kExitMismatch;
}

int cmd_weight(const WeightArgs& args, OutputFormat format, std::ostream& out, std::ostream&) {
  const gf::FieldSpec field = make_field(args.p, args.m, args.modulus);
  const auto coeffs = parse_vector(args.vector, field);
  if (coeffs.size() < 2) throw UsageError("pair reads need a vector of length >= 2");
  const ring::RingElement x(coeffs);

  std::string reads;
  for (const auto& [a, b] : metrics::pair_read(x).pairs()) {
    if (!reads.empty()) reads += ' ';
    reads += "(" + std::to_string(a.code) + "," + std::to_string(b.code) + ")";
  }
  RecordTable table{{"n", "hamming_weight", "pair_weight", "pair_read"},
                    {{int_cell(x.size()), int_cell(metrics::hamming_weight(x)), int_cell(metrics::pair_weight(x)), reads}}};
  render(table, format, out);
  return kExitOk;
}

int cmd_pairdist(const PairDistArgs& args, OutputFormat format, std::ostream& out, std::ostream& err) {
  const gf::FieldSpec field = make_field(args.p, args.m, args.modulus);
  const auto xs = parse_vector(args.x, field);
  const auto ys = parse_vector(args.y, field);
  if (xs.size() != ys.size()) throw UsageError("x and y must have equal length");
  if (xs.size() < 2) throw UsageError("pair distance needs length >= 2");
  const ring::RingElement x(xs);
  const ring::RingElement y(ys);

  const std::size_t n = x.size();
  const std::size_t d_h = metrics::hamming_distance(x, y);
  const std::size_t runs = metrics::run_count(x, y).block_count;
  const std::size_t d_p = metrics::pair_distance(x, y);

  std::string identity = "not-applicable";
  int code = kExitOk;
  if (d_h > 0 && d_h < n) identity = d_p == d_h + runs ? "holds" : "violated";
  if (d_h == n && d_p != n) identity = "violated";
  if (identity == "violated") {
    err << "internal error: d_p = d_H + L does not hold for this pair\n";
    code = kExitMismatch;
  }
  RecordTable table{{"n", "d_h", "l", "d_p", "identity"},
                    {{int_cell(n), int_cell(d_h), int_cell(runs), int_cell(d_p), identity}}};
  render(table, format, out);
  return code;
}

int cmd_mds(const FamilyArgs& args, OutputFormat format, std::ostream& out, std::ostream&) {
  codes::CodeSpec spec = family_spec(args);
  if (args.modulus) make_field(args.p, args.m, args.modulus);
  RecordTable table{{"i", "dimension", "d_p"}, {}};
  for (std::uint64_t i = 0; i < spec.n(); ++i) {
    spec.i = i;
    if (codes::is_mds_pair(spec))
      table.rows.push_back({int_cell(i), int_cell(spec.dimension()), int_cell(codes::closed_form_pair_distance(spec))});
  }
  render(table, format, out);
  return kExitOk;
}

int cmd_simulate(const SimulateArgs& args, OutputFormat format, std::ostream& out, std::ostream& err) {
  const codes::CodeSpec spec = family_spec(args.family, args.i);
  if (args.t > spec.n()) throw UsageError("t exceeds the code length");
  const codes::CyclicCode code(spec, make_field(spec.p, spec.m, args.family.modulus));
  const std::uint64_t d_p = codes::closed_form_pair_distance(spec);
  const std::size_t guaranteed_t = channel::guaranteed_correctable(spec);

  channel::ExperimentResult result;
  try {
    result = channel::correctability_experiment(code, args.t, args.trials, args.seed, args.max_enum);
  } catch (const oracle::BudgetExhausted& ex) {
    err << ex.what() << '\n';
    return kExitIncomplete;
  }

  const bool guaranteed = d_p > 0 && args.t <= guaranteed_t;
  RecordTable table{{"p", "e", "m", "i", "t", "trials", "seed", "d_p", "guaranteed_t", "guaranteed", "successes",
                     "success_rate"},
                    {{int_cell(spec.p), int_cell(spec.e), int_cell(spec.m), int_cell(spec.i), int_cell(args.t),
                      int_cell(args.trials), int_cell(args.seed), int_cell(d_p), int_cell(guaranteed_t), guaranteed,
                      int_cell(result.successes), result.success_rate()}}};
  render(table, format, out);
  if (guaranteed && result.successes != result.trials) {
    err << "guarantee violated: " << result.trials - result.successes << " of " << result.trials
        << " trials failed with t <= floor((d_p - 1) / 2)\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbol-pair distances of repeated-root cyclic codes <(x-1)^i> of length p^e over F_{p^m}", "spair"};
  app.require_subcommand(1);
  app.fallthrough();

  OutputFormat format = OutputFormat::pretty;
  unsigned jobs = 1;
  const std::map<std::string, OutputFormat> formats{
      {"tsv", OutputFormat::tsv}, {"json", OutputFormat::json}, {"pretty", OutputFormat::pretty}};
  app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--jobs", jobs, "Worker threads for exhaustive search")->check(CLI::Range(1U, 256U));

  auto add_family = [](CLI::App* sub, FamilyArgs& f) {
    sub->add_option("--p", f.p, "Characteristic (prime)")->required();
    sub->add_option("--e", f.e, "Length exponent, n = p^e")->required();
    sub->add_option("--m", f.m, "Extension degree, q = p^m")->required();
    sub->add_option("--modulus", f.modulus, "Field modulus c_0,...,c_m (monic, irreducible)");
  };

  FamilyArgs table_args;
  auto* table = app.add_subcommand("table", "Closed-form distance table for every i");
  add_family(table, table_args);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the closed forms against exhaustive search");
  add_family(verify, verify_args.family);
  verify->add_option("--max-enum", verify_args.max_enum, "Codeword budget per code");

  WeightArgs weight_args;
  auto* weight = app.add_subcommand("weight", "Hamming and pair weight of a vector");
  weight->add_option("--p", weight_args.p, "Characteristic (prime)")->required();
  weight->add_option("--m", weight_args.m, "Extension degree")->required();
  weight->add_option("--modulus", weight_args.modulus, "Field modulus c_0,...,c_m");
  weight->add_option("--vector", weight_args.vector, "Comma-separated element encodings")->required();

  PairDistArgs pd_args;
  auto* pairdist = app.add_subcommand("pairdist", "Hamming distance, run count and pair distance");
  pairdist->add_option("--p", pd_args.p, "Characteristic (prime)")->required();
  pairdist->add_option("--m", pd_args.m, "Extension degree")->required();
  pairdist->add_option("--modulus", pd_args.modulus, "Field modulus c_0,...,c_m");
  pairdist->add_option("--x", pd_args.x, "First vector")->required();
  pairdist->add_option("--y", pd_args.y, "Second vector")->required();

  FamilyArgs mds_args;
  auto* mds = app.add_subcommand("mds", "Exponents i whose code is MDS in the pair metric");
  add_family(mds, mds_args);

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Pair-error correction experiment");
  add_family(simulate, sim_args.family);
  simulate->add_option("--i", sim_args.i, "Generator exponent")->required();
  simulate->add_option("--t", sim_args.t, "Pair errors per trial")->required();
  simulate->add_option("--trials", sim_args.trials, "Number of trials");
  simulate->add_option("--seed", sim_args.seed, "Random seed")->required();
  simulate->add_option("--max-enum", sim_args.max_enum, "Codebook size limit");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex, out, err);
    return kExitUsage;
  }

  verify_args.jobs = jobs;
  try {
    if (*table) return cmd_table(table_args, format, out, err);
    if (*verify) return cmd_verify(verify_args, format, out, err);
    if (*weight) return cmd_weight(weight_args, format, out, err);
    if (*pairdist) return cmd_pairdist(pd_args, format, out, err);
    if (*mds) return cmd_mds(mds_args, format, out, err);
    if (*simulate) return cmd_simulate(sim_args, format, out, err);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace spair::cli
