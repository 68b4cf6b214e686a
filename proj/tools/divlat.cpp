// divlat — command-line front end for the divergence-lattice library.
//
// Subcommands:
//   compute    read distribution pairs, print all 15 measures and the 10
//              chain slacks per pair
//   verify     run inequality families over seeded random pairs
//   constants  recover every tight constant (limit, grid sup, monotone
//              pattern) and emit a JSON table
//   pyramid    evaluate the 55 differences for one pair (JSON array,
//              optional DOT lattice)
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 I/O error.  All floating-point output is fixed at 12 significant
// digits so reports are byte-identical across runs with the same
// configuration.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "divlat/constants.hpp"
#include "divlat/distribution.hpp"
#include "divlat/errors.hpp"
#include "divlat/generating_function.hpp"
#include "divlat/inequalities.hpp"
#include "divlat/measures.hpp"
#include "divlat/polynomial.hpp"
#include "divlat/pyramid.hpp"

namespace {

using divlat::real;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

std::string fmt_real(real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string join_reals(const std::vector<real>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += fmt_real(v[i]);
  }
  return out;
}

// ------------------------------------------------------------------ input
struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitIo, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw CliError{kExitIo, "cannot read " + path};
  return ss.str();
}

std::vector<std::vector<real>> parse_csv_rows(const std::string& text) {
  std::vector<std::vector<real>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    std::vector<real> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      const char* begin = cell.c_str();
      char* end = nullptr;
      errno = 0;
      const real v = std::strtold(begin, &end);
      while (end && *end == ' ') ++end;
      if (end == begin || (end && *end != '\0' && *end != '\r'))
        throw CliError{kExitConfig, "line " + std::to_string(lineno) +
                                        ": cannot parse '" + cell +
                                        "' as a number"};
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

// Error::what() already carries the code-name prefix; strip it before
// wrapping the message with row/pair context.
std::string error_detail(const divlat::Error& e) {
  const std::string prefix =
      std::string(divlat::error_code_name(e.code())) + ": ";
  const std::string what = e.what();
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

std::vector<divlat::DistributionPair> pairs_from_rows(
    std::vector<std::vector<real>> rows) {
  if (rows.size() % 2 != 0)
    throw divlat::Error(divlat::ErrorCode::kOddRowCount,
                        "input holds " + std::to_string(rows.size()) +
                            " rows; pairs need an even count");
  std::vector<divlat::DistributionPair> pairs;
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    divlat::DistributionPair pr;
    try {
      pr.p = divlat::validate(rows[i]);
    } catch (const divlat::Error& e) {
      throw divlat::Error(e.code(),
                          "row " + std::to_string(i + 1) + ": " + error_detail(e));
    }
    try {
      pr.q = divlat::validate(rows[i + 1]);
    } catch (const divlat::Error& e) {
      throw divlat::Error(e.code(),
                          "row " + std::to_string(i + 2) + ": " + error_detail(e));
    }
    if (pr.p.size() != pr.q.size())
      throw divlat::Error(divlat::ErrorCode::kDimensionMismatch,
                          "rows " + std::to_string(i + 1) + " and " +
                              std::to_string(i + 2) +
                              " have different lengths");
    pairs.push_back(std::move(pr));
  }
  return pairs;
}

std::vector<real> reals_from_json(const nlohmann::json& a,
                                  const char* what) {
  if (!a.is_array())
    throw CliError{kExitConfig, std::string(what) + " must be an array"};
  std::vector<real> out;
  for (const auto& v : a) {
    if (!v.is_number())
      throw CliError{kExitConfig,
                     std::string(what) + " must contain only numbers"};
    out.push_back(static_cast<real>(v.get<double>()));
  }
  return out;
}

std::vector<divlat::DistributionPair> parse_json_pairs(
    const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CliError{kExitConfig, std::string("JSON parse error: ") + e.what()};
  }
  std::vector<nlohmann::json> objs;
  if (doc.is_object())
    objs.push_back(doc);
  else if (doc.is_array())
    objs.assign(doc.begin(), doc.end());
  else
    throw CliError{kExitConfig,
                   "JSON input must be a {\"p\",\"q\"} object or an array "
                   "of them"};
  std::vector<divlat::DistributionPair> pairs;
  std::size_t idx = 0;
  for (const auto& o : objs) {
    ++idx;
    if (!o.is_object() || !o.contains("p") || !o.contains("q"))
      throw CliError{kExitConfig, "pair " + std::to_string(idx) +
                                      ": expected {\"p\": [...], \"q\": "
                                      "[...]}"};
    divlat::DistributionPair pr;
    try {
      pr.p = divlat::validate(reals_from_json(o["p"], "p"));
      pr.q = divlat::validate(reals_from_json(o["q"], "q"));
    } catch (const divlat::Error& e) {
      throw divlat::Error(e.code(),
                          "pair " + std::to_string(idx) + ": " + error_detail(e));
    }
    if (pr.p.size() != pr.q.size())
      throw divlat::Error(divlat::ErrorCode::kDimensionMismatch,
                          "pair " + std::to_string(idx) +
                              ": p and q have different lengths");
    pairs.push_back(std::move(pr));
  }
  return pairs;
}

std::vector<divlat::DistributionPair> load_pairs(const std::string& path,
                                                 const std::string& format) {
  const std::string text = read_file(path);
  if (format == "json") return parse_json_pairs(text);
  if (format == "csv") return pairs_from_rows(parse_csv_rows(text));
  // auto: sniff the first non-space byte
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{' || c == '[') return parse_json_pairs(text);
    break;
  }
  return pairs_from_rows(parse_csv_rows(text));
}

void write_output(const std::optional<std::string>& out_path,
                  const std::string& content) {
  if (!out_path) {
    std::fputs(content.c_str(), stdout);
    return;
  }
  std::ofstream out(*out_path, std::ios::binary);
  if (!out) throw CliError{kExitIo, "cannot open " + *out_path};
  out << content;
  if (!out) throw CliError{kExitIo, "cannot write " + *out_path};
}

unsigned resolve_threads(unsigned flag_value) {
  if (const char* env = std::getenv("DIVLAT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw CliError{kExitConfig,
                     std::string("DIVLAT_THREADS must be a positive "
                                 "integer, got '") +
                         env + "'"};
    return static_cast<unsigned>(v);
  }
  if (flag_value >= 1) return flag_value;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// ---------------------------------------------------------------- compute
int cmd_compute(const std::string& input, const std::string& format,
                real tolerance) {
  const auto pairs = load_pairs(input, format);
  std::string out;
  bool all_ok = true;
  std::size_t idx = 0;
  for (const auto& pr : pairs) {
    ++idx;
    const auto values = divlat::measure_vector(pr.p, pr.q);
    const auto slacks = divlat::check_chain5(values);
    out += "pair " + std::to_string(idx) + " n=" +
           std::to_string(pr.p.size()) + "\n";
    for (divlat::MeasureId id : divlat::kAllMeasures)
      out += std::string("  ") + divlat::measure_name(id) + " " +
             fmt_real(values[static_cast<int>(id)]) + "\n";
    for (int k = 0; k < 10; ++k) {
      out += "  chain5-slack-" + std::to_string(k + 1) + " " +
             fmt_real(slacks[static_cast<std::size_t>(k)]) + "\n";
      if (!(slacks[static_cast<std::size_t>(k)] >= -tolerance))
        all_ok = false;
    }
  }
  std::fputs(out.c_str(), stdout);
  return all_ok ? kExitOk : kExitVerifyFail;
}

// ----------------------------------------------------------------- verify
std::string pair_to_json(const divlat::DistributionPair& pr) {
  return "{\"p\": [" + join_reals(pr.p.probs, ", ") + "], \"q\": [" +
         join_reals(pr.q.probs, ", ") + "]}";
}

int cmd_verify(const std::vector<std::string>& family_names,
               std::size_t n_pairs, const std::vector<std::size_t>& dims,
               std::uint64_t seed, real tolerance,
               const std::optional<std::string>& out_path,
               const std::string& format, unsigned threads) {
  std::vector<divlat::Family> families;
  for (const std::string& name : family_names) {
    const auto f = divlat::family_from_name(name);
    if (!f) throw CliError{kExitConfig, "unknown family '" + name + "'"};
    families.push_back(*f);
  }
  std::vector<divlat::InequalityRecord> records;
  for (const auto& r : divlat::catalog()) {
    if (families.empty() ||
        std::find(families.begin(), families.end(), r.family) !=
            families.end())
      records.push_back(r);
  }
  const auto pairs = divlat::make_suite_pairs(dims, n_pairs, seed);
  const auto report = divlat::verify_suite(records, pairs, tolerance, threads);

  std::string out;
  if (format == "json") {
    out = "{\n";
    out += "  \"total\": " + std::to_string(report.total) + ",\n";
    out += "  \"passed\": " + std::to_string(report.passed) + ",\n";
    out += "  \"worst_slack\": " + fmt_real(report.worst_slack) + ",\n";
    out += "  \"worst_record\": \"" + json_escape(report.worst_record) +
           "\",\n";
    out += "  \"worst_pair\": " + pair_to_json(report.worst_pair) + ",\n";
    out += "  \"tolerance\": " + fmt_real(report.tolerance) + "\n";
    out += "}\n";
  } else if (format == "csv") {
    out =
        "total,passed,worst_slack,worst_record,worst_pair_p,worst_pair_q,"
        "tolerance\n";
    out += std::to_string(report.total) + "," +
           std::to_string(report.passed) + "," +
           fmt_real(report.worst_slack) + "," + report.worst_record + ",\"" +
           join_reals(report.worst_pair.p.probs, ";") + "\",\"" +
           join_reals(report.worst_pair.q.probs, ";") + "\"," +
           fmt_real(report.tolerance) + "\n";
  } else {
    out = "total: " + std::to_string(report.total) + "\n";
    out += "passed: " + std::to_string(report.passed) + "\n";
    out += "worst_slack: " + fmt_real(report.worst_slack) + "\n";
    out += "worst_record: " + report.worst_record + "\n";
    out += "worst_pair_p: " + join_reals(report.worst_pair.p.probs, " ") +
           "\n";
    out += "worst_pair_q: " + join_reals(report.worst_pair.q.probs, " ") +
           "\n";
    out += "tolerance: " + fmt_real(report.tolerance) + "\n";
  }
  write_output(out_path, out);
  return report.passed == report.total ? kExitOk : kExitVerifyFail;
}

// -------------------------------------------------------------- constants
int cmd_constants(int grid_points,
                  const std::optional<std::string>& out_path,
                  unsigned threads) {
  if (grid_points < 100)
    throw CliError{kExitConfig, "--grid-points must be at least 100"};
  std::vector<divlat::ConstantEstimate> rows(59);
  const unsigned nthreads =
      std::min<unsigned>(threads, 59u) > 0 ? std::min<unsigned>(threads, 59u)
                                           : 1u;
  if (nthreads <= 1) {
    for (int part = 1; part <= 59; ++part)
      rows[static_cast<std::size_t>(part - 1)] =
          divlat::estimate_part(part, grid_points);
  } else {
    std::vector<std::thread> workers;
    std::vector<int> next_part(1, 1);
    for (unsigned t = 0; t < nthreads; ++t) {
      workers.emplace_back([&rows, grid_points, t, nthreads] {
        for (int part = 1 + static_cast<int>(t); part <= 59;
             part += static_cast<int>(nthreads))
          rows[static_cast<std::size_t>(part - 1)] =
              divlat::estimate_part(part, grid_points);
      });
    }
    for (auto& w : workers) w.join();
  }

  bool all_pass = true;
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& e = rows[i];
    all_pass = all_pass && e.pass;
    out += "  {\"part\": " + std::to_string(i + 1) +
           ", \"claimed_num\": " + e.claimed.get_num().get_str() +
           ", \"claimed_den\": " + e.claimed.get_den().get_str() +
           ", \"limit\": " + fmt_real(e.limit_at_one) +
           ", \"grid_sup\": " + fmt_real(e.grid_sup) +
           ", \"monotone_ok\": " + (e.monotone_ok ? "true" : "false") +
           ", \"proof\": \"" +
           (e.proof == divlat::ProofKind::Ratio ? "ratio" : "pyramid") +
           "\", \"pass\": " + (e.pass ? "true" : "false") + "}";
    out += i + 1 < rows.size() ? ",\n" : "\n";
  }
  out += "]\n";
  write_output(out_path, out);
  return all_pass ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------- pyramid
int cmd_pyramid(const std::string& input,
                const std::optional<std::string>& dot_path) {
  const auto pairs = load_pairs(input, "auto");
  if (pairs.size() != 1)
    throw CliError{kExitConfig,
                   "pyramid expects exactly one (P, Q) pair, got " +
                       std::to_string(pairs.size())};
  const auto table = divlat::pyramid_table(pairs[0].p, pairs[0].q);

  std::string out = "[";
  for (int i = 0; i < divlat::kDifferenceCount; ++i) {
    if (i) out += ", ";
    out += fmt_real(table[static_cast<std::size_t>(i)]);
  }
  out += "]\n";
  std::fputs(out.c_str(), stdout);

  if (dot_path) {
    std::string dot = "digraph pyramid {\n  rankdir=LR;\n";
    for (int idx = 1; idx <= divlat::kDifferenceCount; ++idx) {
      const auto d = divlat::difference_from_index(idx);
      dot += "  d" + std::to_string(idx) + " [label=\"D" +
             std::to_string(idx) + " " + divlat::measure_name(d.upper.id) +
             "|" + divlat::measure_name(d.lower.id) + "\\n" +
             fmt_real(table[static_cast<std::size_t>(idx - 1)]) + "\"];\n";
    }
    for (int L = 2; L <= 10; ++L)
      for (int j = L * (L - 1) / 2 + 1; j < L * (L - 1) / 2 + L; ++j)
        dot += "  d" + std::to_string(j) + " -> d" + std::to_string(j + 1) +
               ";\n";
    dot += "}\n";
    write_output(dot_path, dot);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divergence measure lattice toolkit"};
  app.set_version_flag("--version", "divlat 1.0.0");
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand(
      "compute", "evaluate all measures and chain slacks for input pairs");
  std::string compute_input, compute_format;
  real compute_tol = 1e-10L;
  compute->add_option("--input", compute_input, "input file")->required();
  compute->add_option("--format", compute_format, "csv or json")
      ->required()
      ->check(CLI::IsMember({"csv", "json"}));
  compute->add_option("--tolerance", compute_tol, "slack tolerance");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check inequality families on seeded random pairs");
  std::string families_csv;
  std::size_t verify_pairs = 10000;
  std::string dims_csv = "2,3,5,10,50";
  std::uint64_t verify_seed = 42;
  real verify_tol = 1e-10L;
  std::string verify_out;
  std::string verify_format = "text";
  unsigned verify_threads = 0;
  verify->add_option("--families", families_csv,
                     "comma-separated family names (default: all)");
  verify->add_option("--pairs", verify_pairs, "random pairs per dimension");
  verify->add_option("--dims", dims_csv, "comma-separated dimensions");
  verify->add_option("--seed", verify_seed, "random seed");
  verify->add_option("--tolerance", verify_tol, "relative slack tolerance");
  verify->add_option("--out", verify_out, "write report to file");
  verify->add_option("--format", verify_format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--threads", verify_threads,
                     "worker threads (default: machine parallelism)");

  // constants
  auto* constants =
      app.add_subcommand("constants", "recover every tight constant");
  int grid_points = 10000;
  std::string constants_out;
  unsigned constants_threads = 0;
  constants->add_option("--grid-points", grid_points,
                        "log-grid sample count (>= 100)");
  constants->add_option("--out", constants_out, "write JSON table to file");
  constants->add_option("--threads", constants_threads,
                        "worker threads (default: machine parallelism)");

  // pyramid
  auto* pyramid = app.add_subcommand(
      "pyramid", "evaluate the 55 differences for one pair");
  std::string pyramid_input, pyramid_dot;
  pyramid->add_option("--input", pyramid_input, "input file with one pair")
      ->required();
  pyramid->add_option("--dot", pyramid_dot, "write DOT lattice to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*compute) return cmd_compute(compute_input, compute_format, compute_tol);
    if (*verify) {
      std::vector<std::string> family_names;
      {
        std::istringstream ss(families_csv);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) family_names.push_back(tok);
      }
      std::vector<std::size_t> dims;
      {
        std::istringstream ss(dims_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          if (tok.empty()) continue;
          char* end = nullptr;
          const long v = std::strtol(tok.c_str(), &end, 10);
          if (end == tok.c_str() || *end != '\0' || v < 2)
            throw CliError{kExitConfig,
                           "--dims entries must be integers >= 2"};
          dims.push_back(static_cast<std::size_t>(v));
        }
      }
      if (dims.empty())
        throw CliError{kExitConfig, "--dims must name at least one dimension"};
      if (verify_pairs < 1)
        throw CliError{kExitConfig, "--pairs must be at least 1"};
      if (!(verify_tol > 0.0L))
        throw CliError{kExitConfig, "--tolerance must be positive"};
      return cmd_verify(family_names, verify_pairs, dims, verify_seed,
                        verify_tol,
                        verify_out.empty()
                            ? std::nullopt
                            : std::optional<std::string>(verify_out),
                        verify_format, resolve_threads(verify_threads));
    }
    if (*constants)
      return cmd_constants(grid_points,
                           constants_out.empty()
                               ? std::nullopt
                               : std::optional<std::string>(constants_out),
                           resolve_threads(constants_threads));
    if (*pyramid)
      return cmd_pyramid(pyramid_input,
                         pyramid_dot.empty()
                             ? std::nullopt
                             : std::optional<std::string>(pyramid_dot));
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code;
  } catch (const divlat::Error& e) {
    std::fprintf(stderr, "error [%s]: %s\n",
                 divlat::error_code_name(e.code()), e.what());
    switch (e.code()) {
      case divlat::ErrorCode::kIoError:
        return kExitIo;
      default:
        return kExitConfig;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitConfig;
}
