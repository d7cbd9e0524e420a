// mvop: evaluate, verify and export the multivariate Hahn, Krawtchouk and
// Meixner systems in exact arithmetic.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "mvop/io.hpp"
#include "mvop/measures.hpp"
#include "mvop/operators.hpp"
#include "mvop/polynomials.hpp"
#include "mvop/verify.hpp"

namespace {

using namespace mvop;

constexpr int kUsageError = 2;

struct RunConfig {
  std::string family = "hahn";
  int n = 0;
  int N = 0;
  std::string beta;
  int x_max = 0;
  std::string a;
  std::string b;
  std::string m;
  std::string x;
  int m_max = -1;
  std::string output;
  std::string format;
  std::uint64_t seed = 20240601;
  std::vector<std::string> checks;
  std::string what = "weights";
  std::string op = "T";
  bool with_float = false;
  bool timings = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Builds the parameter bundle. Missing a (and b) are drawn from the seed.
FamilyParams build_params(const RunConfig& c) {
  Family family;
  try {
    family = parse_family(c.family);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--family: ") + e.what());
  }
  std::vector<Rational> a;
  if (!c.a.empty()) {
    try {
      a = io::parse_rational_list(c.a);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--a: ") + e.what());
    }
    if (c.n != 0 && c.n != static_cast<int>(a.size())) {
      throw UsageError("--a: expected " + std::to_string(c.n) + " entries, got " + std::to_string(a.size()));
    }
  }
  const int n = a.empty() ? c.n : static_cast<int>(a.size());
  if (n < 2) {
    throw UsageError("--n: need n >= 2 (or give --a)");
  }
  std::mt19937_64 rng(c.seed);
  auto parse = [](const std::string& flag, const std::string& text) {
    try {
      return Rational::parse(text);
    } catch (const std::exception& e) {
      throw UsageError(flag + ": " + e.what());
    }
  };
  try {
    switch (family) {
      case Family::hahn: {
        if (c.N < 1) {
          throw UsageError("--N: required for hahn");
        }
        FamilyParams p = a.empty() ? random_hahn(rng, n, c.N) : FamilyParams::hahn(a, Rational(1), c.N);
        if (!c.b.empty()) {
          p.b = parse("--b", c.b);
        } else if (!a.empty()) {
          p.b = random_rational(rng);
        }
        p.validate();
        return p;
      }
      case Family::krawtchouk:
        if (c.N < 1) {
          throw UsageError("--N: required for krawtchouk");
        }
        return a.empty() ? random_krawtchouk(rng, n, c.N) : FamilyParams::krawtchouk(a, c.N);
      case Family::meixner: {
        const Rational beta = c.beta.empty() ? Rational(2) : parse("--beta", c.beta);
        return a.empty() ? random_meixner(rng, n, beta) : FamilyParams::meixner(a, beta);
      }
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family");
}

std::optional<int> box(const FamilyParams& p, const RunConfig& c) {
  if (p.bounded()) {
    return std::nullopt;
  }
  if (c.x_max < 1) {
    throw UsageError("--xmax: required for meixner (truncation bound, >= 1)");
  }
  return c.x_max;
}

std::vector<int> parse_ints(const std::string& flag, const std::string& text, int n) {
  std::vector<int> v;
  try {
    v = io::parse_int_list(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (static_cast<int>(v.size()) != n) {
    throw UsageError(flag + ": expected " + std::to_string(n) + " entries");
  }
  return v;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) {
    throw UsageError("--output: cannot write '" + c.output + "'");
  }
  out << text;
  if (!out) {
    throw UsageError("--output: write to '" + c.output + "' failed");
  }
}

std::string format_or(const RunConfig& c, const std::string& fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "json" && f != "csv" && f != "text") {
    throw UsageError("--format: expected json, csv or text");
  }
  return f;
}

int cmd_eval(const RunConfig& c) {
  const FamilyParams p = build_params(c);
  if (c.m.empty()) {
    throw UsageError("--m: required for eval");
  }
  const auto m = parse_ints("--m", c.m, p.dim());
  const std::string fmt = format_or(c, "text");
  try {
    if (!c.x.empty()) {
      const auto x = parse_ints("--x", c.x, p.dim());
      const Rational v = eigenpolynomial(m, x, p);
      if (fmt == "json") {
        io::Json j;
        j["params"] = io::params_json(p);
        j["m"] = m;
        j["x"] = x;
        j["value"] = v.str();
        if (c.with_float) {
          j["value_float"] = v.to_double();
        }
        emit(c, j.dump(2) + "\n");
      } else {
        emit(c, v.str() + (c.with_float ? " " + std::to_string(v.to_double()) : "") + "\n");
      }
      return 0;
    }
    const LatticeFunction table = eigenpolynomial_table(m, p, domain_lattice(p, box(p, c)));
    if (fmt == "json") {
      emit(c, io::eval_table_json(p, m, table, c.with_float).dump(2) + "\n");
    } else {
      emit(c, io::eval_table_csv(table, c.with_float));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return 0;
}

int cmd_verify(const RunConfig& c) {
  const FamilyParams p = build_params(c);
  SuiteOptions options;
  options.x_max = box(p, c);
  options.seed = c.seed;
  options.checks.insert(c.checks.begin(), c.checks.end());
  for (const auto& name : options.checks) {
    const auto& known = suite_check_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw UsageError("--check: unknown check '" + name + "'");
    }
  }
  const int m_max = c.m_max >= 0 ? c.m_max : (p.bounded() ? p.N : 3);
  if (p.bounded() && m_max > p.N) {
    throw UsageError("--m-max: must not exceed N");
  }
  const auto reports = run_suite(p, m_max, options);
  const std::string fmt = format_or(c, "text");
  if (fmt == "json") {
    emit(c, io::reports_json(p, reports, c.timings).dump(2) + "\n");
  } else if (fmt == "csv") {
    emit(c, io::reports_csv(reports, c.timings));
  } else {
    emit(c, p.describe() + "\n" + io::reports_text(reports, c.timings));
  }
  for (const auto& r : reports) {
    if (r.status == CheckStatus::fail) {
      return 1;
    }
  }
  return 0;
}

int cmd_export(const RunConfig& c) {
  const FamilyParams p = build_params(c);
  const auto x_max = box(p, c);
  const std::string fmt = format_or(c, "csv");
  const bool json = fmt == "json";
  if (c.what == "weights") {
    const WeightTable w = make_weight_table(p, x_max);
    emit(c, json ? io::weight_table_json(w, c.with_float).dump(2) + "\n" : io::weight_table_csv(w, c.with_float));
  } else if (c.what == "operator") {
    OperatorSpec op;
    try {
      op = parse_operator(p, c.op);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--op: ") + e.what());
    }
    const SparseMatrix m = operator_matrix(op, domain_lattice(p, x_max));
    emit(c, json ? io::operator_matrix_json(op, m, c.with_float).dump(2) + "\n"
                 : io::operator_matrix_csv(m, c.with_float));
  } else if (c.what == "gram") {
    const int m_max = c.m_max >= 0 ? c.m_max : (p.bounded() ? p.N : 2);
    if (p.bounded() && m_max > p.N) {
      throw UsageError("--m-max: must not exceed N");
    }
    const GramResult g = gram_check(p, m_max, x_max);
    emit(c, json ? io::gram_json(p, g, c.with_float).dump(2) + "\n" : io::gram_csv(g, c.with_float));
  } else if (c.what == "eval") {
    if (c.m.empty()) {
      throw UsageError("--m: required for --what eval");
    }
    const auto m = parse_ints("--m", c.m, p.dim());
    const LatticeFunction t = eigenpolynomial_table(m, p, domain_lattice(p, x_max));
    emit(c, json ? io::eval_table_json(p, m, t, c.with_float).dump(2) + "\n" : io::eval_table_csv(t, c.with_float));
  } else {
    throw UsageError("--what: expected weights, operator, gram or eval");
  }
  return 0;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--family", c.family, "hahn | krawtchouk | meixner")->capture_default_str();
  sub->add_option("--n", c.n, "dimension (inferred from --a when given)");
  sub->add_option("--N", c.N, "lattice bound (hahn, krawtchouk)");
  sub->add_option("--beta", c.beta, "meixner beta as p/q (default 2)");
  sub->add_option("--xmax", c.x_max, "meixner truncation |x| <= xmax");
  sub->add_option("--a", c.a, "comma separated rationals, e.g. 1/2,3,2 (random from --seed if omitted)");
  sub->add_option("--b", c.b, "hahn b as p/q (random from --seed if omitted)");
  sub->add_option("--seed", c.seed, "seed for generic parameters")->capture_default_str();
  sub->add_option("--output,-o", c.output, "output path (default stdout)");
  sub->add_option("--format", c.format, "json | csv | text");
  sub->add_flag("--float", c.with_float, "add a labeled floating point column");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multivariate Hahn, Krawtchouk and Meixner polynomials"};
  app.require_subcommand(1);
  RunConfig c;

  auto* eval = app.add_subcommand("eval", "print P_m(x), or the table over the lattice");
  add_common(eval, c);
  eval->add_option("--m", c.m, "degree label m_0,...,m_{n-1}");
  eval->add_option("--x", c.x, "lattice point x_1,...,x_n");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify, c);
  verify->add_option("--m-max", c.m_max, "largest total degree (default N, or 3 for meixner)");
  verify->add_option("--check", c.checks, "run only the named checks (repeatable)");
  verify->add_flag("--timings", c.timings, "include wall-clock seconds per check");

  auto* exp = app.add_subcommand("export", "write weights, operator matrices, Gram matrices or tables");
  add_common(exp, c);
  exp->add_option("--what", c.what, "weights | operator | gram | eval")->capture_default_str();
  exp->add_option("--op", c.op, "operator for --what operator: T, 0, 1, ..., n-1")->capture_default_str();
  exp->add_option("--m-max", c.m_max, "largest total degree for --what gram");
  exp->add_option("--m", c.m, "degree label for --what eval");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*eval) {
      return cmd_eval(c);
    }
    if (*verify) {
      return cmd_verify(c);
    }
    return cmd_export(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsageError;
  }
}
