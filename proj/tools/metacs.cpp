// metacs: evaluation, verification and table generation from the command line.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "metacs/csmodel.hpp"
#include "metacs/hallittlewood.hpp"
#include "metacs/padicweil.hpp"
#include "metacs/suites.hpp"
#include "metacs/weylroots.hpp"
#include "metacs/zetagj.hpp"

using namespace metacs;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class LogLevel { error, info, debug };

LogLevel log_level() {
  const char* env = std::getenv("METACS_LOG");
  const std::string v = env ? env : "error";
  if (v == "error" || v.empty()) return LogLevel::error;
  if (v == "info") return LogLevel::info;
  if (v == "debug") return LogLevel::debug;
  throw UsageError("METACS_LOG must be one of error, info, debug");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("malformed " + what + ": '" + s + "'");
  }
  if (used != s.size()) throw UsageError("malformed " + what + ": '" + s + "'");
  return v;
}

BigRat parse_rational(const std::string& s, const std::string& what) {
  const auto slash = s.find('/');
  const int num = parse_int(s.substr(0, slash), what);
  const int den = slash == std::string::npos ? 1 : parse_int(s.substr(slash + 1), what);
  if (den == 0) throw UsageError("zero denominator in " + what + ": '" + s + "'");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

// Comma-separated weakly decreasing parts, padded with zeros to k entries.
Partition parse_partition(const std::string& s, int k) {
  std::vector<int> parts;
  for (const auto& item : split(s, ',')) parts.push_back(parse_int(item, "partition"));
  if (static_cast<int>(parts.size()) > k) throw UsageError("partition has more than k = " + std::to_string(k) + " parts");
  parts.resize(static_cast<std::size_t>(k), 0);
  try {
    Partition lam(parts);
    if (!lam.is_nonneg()) throw UsageError("partition has negative parts");
    return lam;
  } catch (const MathError& e) {
    throw UsageError(std::string("malformed partition: ") + e.what());
  }
}

std::vector<BigRat> parse_rationals(const std::string& s, int count, const std::string& what) {
  std::vector<BigRat> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_rational(item, what));
  if (static_cast<int>(out.size()) != count)
    throw UsageError(what + " needs exactly " + std::to_string(count) + " entries");
  return out;
}

struct Flags {
  std::optional<int> k, n, trunc, max_norm, trials, degree;
  std::optional<long> p;
  std::uint64_t seed = 0;
  int eps = 1;
  std::string format;
  std::string out;
  std::string lambda;
  bool theta = false;
  bool timings = false;
  std::string chr;
  std::string a, b;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
  if (!file) throw std::runtime_error("cannot write " + path);
}

std::string command_line(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) out += (i > 1 ? " " : "") + std::string(argv[i]);
  return out;
}

int cmd_verify(const std::string& suite, const Flags& f, const std::string& command, LogLevel level) {
  SuiteOptions opts;
  opts.k = f.k;
  opts.n = f.n;
  opts.p = f.p;
  opts.trunc = f.trunc;
  opts.max_norm = f.max_norm;
  opts.trials = f.trials;
  opts.seed = f.seed;
  opts.timings = f.timings;
  if (f.p && !is_odd_prime(*f.p)) throw UsageError("--p must be an odd prime");
  if (level == LogLevel::debug) std::clog << "verify " << suite << " seed " << f.seed << "\n";

  std::vector<Report> reports;
  try {
    reports = run_suite(suite, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.status == Status::pass;
    if (level != LogLevel::error || r.status != Status::pass)
      std::clog << to_string(r.status) << " " << r.check << " " << r.params.dump() << "\n";
  }
  const std::string fmt = f.format.empty() ? "json" : f.format;
  if (fmt == "json") emit(render_json(command, f.seed, reports), f.out);
  else if (fmt == "csv") emit(render_csv(reports), f.out);
  else emit(render_text(reports), f.out);
  return ok ? 0 : kExitFail;
}

int require_k(const Flags& f) {
  if (!f.k || *f.k < 1) throw UsageError("--k must be a positive integer");
  return *f.k;
}

void print_value(const std::string& target, const json& params, const std::string& value, const Flags& f,
                 const std::string& command) {
  const std::string fmt = f.format.empty() ? "text" : f.format;
  if (fmt == "json") {
    json doc{{"version", kVersion}, {"command", command}, {"target", target}, {"params", params}, {"value", value}};
    emit(doc.dump(2) + "\n", f.out);
  } else if (fmt == "csv") {
    emit("target,params,value\n" + target + ",\"" + params.dump() + "\"," + value + "\n", f.out);
  } else {
    emit(value + "\n", f.out);
  }
}

int cmd_eval(const std::string& target, const Flags& f, const std::string& command) {
  json params = json::object();
  std::string value;
  if (target == "cs") {
    const int k = require_k(f);
    if (f.lambda.empty()) throw UsageError("--lambda is required");
    const Partition lam = parse_partition(f.lambda, k);
    if (f.eps != 1 && f.eps != -1) throw UsageError("--eps must be +1 or -1");
    if (f.theta && !f.chr.empty()) throw UsageError("--theta and --char are exclusive");
    params = {{"k", k}, {"lambda", lam.to_string()}};
    if (f.theta) {
      params["theta"] = true;
      value = theta_normalized_value(k, lam).ratio.to_string();
    } else {
      const SymplecticChar eta = f.chr.empty() ? SymplecticChar::symbolic(k)
                                               : SymplecticChar::numeric(parse_rationals(f.chr, k, "character"));
      params["eps"] = f.eps;
      if (!f.chr.empty()) params["char"] = f.chr;
      value = cs_value_expanded(CSInput{eta, f.eps}, lam).to_string();
    }
  } else if (target == "hl") {
    const int k = require_k(f);
    if (f.lambda.empty()) throw UsageError("--lambda is required");
    const Partition lam = parse_partition(f.lambda, k);
    params = {{"k", k}, {"lambda", lam.to_string()}};
    value = hl_P(lam, k).to_string();
  } else if (target == "zeta-coeff") {
    const int k = require_k(f);
    if (!f.degree || *f.degree < 0) throw UsageError("--degree must be a nonnegative integer");
    const SatakeParams sp =
        f.chr.empty() ? SatakeParams::symbolic(k) : SatakeParams::numeric(parse_rationals(f.chr, k, "Satake parameters"));
    params = {{"k", k}, {"degree", *f.degree}};
    if (!f.chr.empty()) params["char"] = f.chr;
    value = zeta_series(sp, *f.degree).coeff(*f.degree).to_string();
  } else if (target == "hilbert" || target == "gamma") {
    if (!f.p || !is_odd_prime(*f.p)) throw UsageError("--p must be an odd prime");
    if (f.a.empty()) throw UsageError("--a is required");
    const BigRat a = parse_rational(f.a, "--a");
    if (a == 0) throw UsageError("--a must be nonzero");
    params = {{"p", *f.p}, {"a", a.get_str()}};
    if (*f.p == 3) params["small_residue_field"] = true;
    if (target == "hilbert") {
      if (f.b.empty()) throw UsageError("--b is required");
      const BigRat b = parse_rational(f.b, "--b");
      if (b == 0) throw UsageError("--b must be nonzero");
      params["b"] = b.get_str();
      value = std::to_string(hilbert2(PadicScalar(a, *f.p), PadicScalar(b, *f.p)));
    } else {
      const auto conv = select_gauss_convention({3, 5, 7, 11, 13}).convention;
      params["convention"] = to_string(conv);
      value = weil_gamma(PadicScalar(a, *f.p), conv).to_string();
    }
  } else {
    throw UsageError("unknown eval target: " + target);
  }
  print_value(target, params, value, f, command);
  return 0;
}

// Rows of string cells; the first row is the header.
using Table = std::vector<std::vector<std::string>>;

std::string render_table(const Table& t, const std::string& fmt) {
  if (fmt == "json") {
    json rows = json::array();
    for (std::size_t r = 1; r < t.size(); ++r) {
      json row = json::object();
      for (std::size_t c = 0; c < t[0].size(); ++c) row[t[0][c]] = t[r][c];
      rows.push_back(row);
    }
    return json{{"version", kVersion}, {"rows", rows}}.dump(2) + "\n";
  }
  std::string out;
  for (const auto& row : t) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += row[c].find_first_of(",\"") == std::string::npos ? row[c] : "\"" + row[c] + "\"";
    }
    out += "\n";
  }
  return out;
}

int cmd_table(const std::string& target, const Flags& f) {
  Table t;
  if (target == "theta") {
    const int k = f.k.value_or(2), norm = f.max_norm.value_or(6);
    t.push_back({"k", "lambda", "ratio", "expected", "status"});
    for (const auto& lam : even_partitions(k, norm)) {
      const auto r = theta_normalized_value(k, lam);
      t.push_back({std::to_string(k), lam.to_string(), r.ratio.to_string(), r.expected.to_string(),
                   r.pass ? "pass" : "fail"});
    }
  } else if (target == "cs") {
    const int k = f.k.value_or(1), norm = f.max_norm.value_or(4);
    if (k > 2) throw UsageError("symbolic CS tables are limited to k <= 2");
    t.push_back({"k", "eps", "lambda", "value"});
    const CSInput in{SymplecticChar::symbolic(k), f.eps};
    for (const auto& lam : even_partitions(k, norm))
      t.push_back({std::to_string(k), std::to_string(f.eps), lam.to_string(), cs_value_compact(in, lam).to_string()});
  } else if (target == "q-poly") {
    t.push_back({"n", "Q"});
    for (int n = 1; n <= f.n.value_or(6); ++n) t.push_back({std::to_string(n), poincare_Q(n).to_string()});
  } else if (target == "hilbert") {
    const long p = f.p.value_or(5);
    if (!is_odd_prime(p)) throw UsageError("--p must be an odd prime");
    long nonresidue = 2;
    while (legendre(nonresidue, p) != -1) ++nonresidue;
    const std::vector<long> reps{1, nonresidue, p, nonresidue * p};
    t.push_back({"p", "a", "b", "symbol"});
    for (long a : reps)
      for (long b : reps)
        t.push_back({std::to_string(p), std::to_string(a), std::to_string(b),
                     std::to_string(hilbert2(PadicScalar(a, p), PadicScalar(b, p)))});
  } else {
    throw UsageError("unknown table target: " + target);
  }
  emit(render_table(t, f.format.empty() ? "csv" : f.format), f.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for metaplectic Shalika functionals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Flags f;
  std::string suite, target;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", f.k, "rank k (GL(2k) / Sp(k))");
    sub->add_option("--n", f.n, "matrix size n");
    sub->add_option("--p", f.p, "odd residue characteristic");
    sub->add_option("--trunc", f.trunc, "series truncation degree");
    sub->add_option("--max-norm", f.max_norm, "bound on |lambda|");
    sub->add_option("--trials", f.trials, "number of seeded trials");
    sub->add_option("--seed", f.seed, "PRNG seed")->capture_default_str();
    sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", f.out, "output file (default stdout)");
  };

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites{"all"};
  for (const auto& s : suite_names()) suites.push_back(s);
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  add_common(verify);
  verify->add_flag("--timings", f.timings, "record wall-clock durations (breaks byte determinism)");

  auto* eval = app.add_subcommand("eval", "evaluate a single exact value");
  eval->add_option("target", target, "cs | hl | zeta-coeff | hilbert | gamma")
      ->required()
      ->check(CLI::IsMember({"cs", "hl", "zeta-coeff", "hilbert", "gamma"}));
  add_common(eval);
  eval->add_option("--lambda", f.lambda, "comma-separated partition");
  eval->add_flag("--theta", f.theta, "use the theta character (normalized value)");
  eval->add_option("--char", f.chr, "comma-separated rational character values");
  eval->add_option("--eps", f.eps, "sign +1 or -1");
  eval->add_option("--degree", f.degree, "coefficient degree in X");
  eval->add_option("--a", f.a, "rational a");
  eval->add_option("--b", f.b, "rational b");

  auto* table = app.add_subcommand("table", "write a table of values");
  table->add_option("target", target, "theta | cs | q-poly | hilbert")
      ->required()
      ->check(CLI::IsMember({"theta", "cs", "q-poly", "hilbert"}));
  add_common(table);
  table->add_option("--eps", f.eps, "sign +1 or -1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string command = command_line(argc, argv);
  try {
    const LogLevel level = log_level();
    if (verify->parsed()) return cmd_verify(suite, f, command, level);
    if (eval->parsed()) return cmd_eval(target, f, command);
    return cmd_table(target, f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
