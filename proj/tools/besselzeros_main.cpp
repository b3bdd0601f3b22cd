// Command-line front end: coefficient generation, zero queries, table
// reproduction and Airy zeros.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "besselzeros/airy.hpp"
#include "besselzeros/cache.hpp"
#include "besselzeros/errors.hpp"
#include "besselzeros/residual.hpp"
#include "besselzeros/zero_expansion.hpp"

#ifndef BESSELZEROS_DEFAULT_FIXTURES
#define BESSELZEROS_DEFAULT_FIXTURES "data/fixtures.txt"
#endif

namespace bz = besselzeros;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitVerification = 4;

constexpr int kMaxGenOrder = 8;
constexpr int kMaxDigits = 5000;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_digits() {
  const char* env = std::getenv("BESSELZEROS_DIGITS");
  if (env == nullptr || *env == '\0') return bz::WorkingPrecision::kDefaultDigits;
  try {
    std::size_t used = 0;
    const int d = std::stoi(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return d;
  } catch (const std::exception&) {
    throw Usage(std::string("BESSELZEROS_DIGITS is not an integer: ") + env);
  }
}

void check_digits(int digits) {
  if (digits < bz::WorkingPrecision::kMinDigits || digits > kMaxDigits) {
    throw Usage("--digits must be in " + std::to_string(bz::WorkingPrecision::kMinDigits) + ".." +
                std::to_string(kMaxDigits));
  }
}

struct GenOptions {
  std::string family;
  int max_order = 0;
  std::string out;
  std::size_t term_limit = bz::UpsilonEngine::kDefaultTermLimit;
};

int run_gen(const GenOptions& o) {
  if (o.max_order < 1 || o.max_order > kMaxGenOrder) {
    throw Usage("--max-order must be in 1.." + std::to_string(kMaxGenOrder));
  }
  const bz::Family family = o.family == "j" ? bz::Family::Standard : bz::Family::Derivative;
  const std::string text = bz::serialize_cache(bz::generate_cache(family, o.max_order, o.term_limit));
  std::ofstream out(o.out, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw Usage("cannot write " + o.out);
  std::cout << "wrote " << o.out << " (" << bz::family_name(family) << ", S=" << o.max_order << ")\n";
  return kExitOk;
}

struct ZeroOptions {
  std::string family;
  std::string nu;
  int m = 0;
  int terms = 4;
  std::optional<int> digits;
  bool json = false;
};

bz::ZeroFamily parse_zero_family(const std::string& s) {
  if (s == "j") return bz::ZeroFamily::J;
  if (s == "y") return bz::ZeroFamily::Y;
  return bz::ZeroFamily::JPrime;
}

int run_zero(const ZeroOptions& o) {
  const int digits = o.digits.value_or(default_digits());
  check_digits(digits);
  if (o.m < 1) throw Usage("--m must be >= 1");
  if (o.terms < 0 || o.terms > bz::UpsilonEngine::kDefaultMaxOrder) {
    throw Usage("--terms must be in 0.." + std::to_string(bz::UpsilonEngine::kDefaultMaxOrder));
  }
  std::optional<bz::BigReal> nu;
  {
    bz::WorkingPrecision wp(digits + bz::ZeroSolver::kGuardDigits + 200);
    try {
      nu = bz::BigReal(o.nu);
    } catch (const std::invalid_argument&) {
      throw Usage("--nu is not a number: " + o.nu);
    }
  }
  if (nu->sign() <= 0 || !nu->is_finite()) throw Usage("--nu must be positive");

  bz::ZeroSolver solver(std::max(o.terms, 1));
  const bz::ZeroResult r = solver.solve(parse_zero_family(o.family), *nu, o.m, o.terms, digits);
  if (o.json) {
    json out;
    out["family"] = bz::family_name(r.family);
    out["nu"] = o.nu;
    out["m"] = r.m;
    out["terms"] = r.terms;
    out["digits"] = r.digits;
    out["z"] = r.z().to_string(digits);
    out["x"] = r.x().to_string(digits);
    json ps = json::array(), cs = json::array();
    for (const auto& v : r.partial_sums) ps.push_back(v.to_string(digits));
    for (const auto& v : r.coefficients) cs.push_back(v.to_string(digits));
    out["partial_sums"] = ps;
    out["coefficients"] = cs;
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
  std::cout << "family   " << bz::family_name(r.family) << "\n"
            << "nu       " << o.nu << "\n"
            << "m        " << r.m << "\n"
            << "terms    " << r.terms << "\n"
            << "digits   " << r.digits << "\n"
            << "z        " << r.z().to_string(digits) << "\n"
            << "x        " << r.x().to_string(digits) << "\n"
            << "z0-1     " << r.proximity.to_string(6) << "\n\n"
            << "S  partial sum z_S" << std::string(digits, ' ') << "coefficient z_{m,S}\n";
  for (int s = 0; s <= r.terms; ++s) {
    std::cout << std::left << std::setw(3) << s << std::setw(digits + 18)
              << r.partial_sums[s].to_string(digits) << r.coefficients[s].to_string(digits) << "\n";
  }
  return kExitOk;
}

struct TableOptions {
  int which = 1;
  std::optional<int> digits;
  std::string fixtures = BESSELZEROS_DEFAULT_FIXTURES;
  bool json = false;
};

int run_table(const TableOptions& o) {
  const int digits = o.digits.value_or(default_digits());
  check_digits(digits);
  std::ifstream in(o.fixtures);
  if (!in) throw Usage("cannot open fixture file " + o.fixtures);
  const bz::FixtureSet fixtures = bz::FixtureSet::load(in);
  const bz::BesselEvaluator eval(&fixtures);
  bz::ZeroSolver solver(4);
  const bz::TableReport report = bz::reproduce_table(o.which, solver, eval, digits);

  if (o.json) {
    json cells = json::array();
    for (const auto& c : report.cells) {
      json cell{{"nu", c.nu}, {"m", c.m}, {"expected", c.expected}, {"pass", c.pass}};
      if (c.computed) {
        cell["computed"] = c.computed->to_string(8);
        cell["rel_dev"] = c.rel_dev;
      }
      if (!c.error.empty()) cell["error"] = c.error;
      cells.push_back(cell);
    }
    json out{{"which", report.which},     {"digits", report.digits},
             {"tolerance", report.tolerance}, {"pass", report.all_pass()},
             {"cells", cells}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "# table " << report.which << ", digits " << report.digits << ", tolerance "
              << report.tolerance << "\n"
              << "nu\tm\texpected\tcomputed\trel_dev\tstatus\n";
    for (const auto& c : report.cells) {
      std::cout << c.nu << '\t' << c.m << '\t' << c.expected << '\t'
                << (c.computed ? c.computed->to_string(8) : "-") << '\t';
      if (c.computed) {
        std::ostringstream dev;
        dev << std::scientific << std::setprecision(2) << c.rel_dev;
        std::cout << dev.str();
      } else {
        std::cout << "-";
      }
      std::cout << '\t' << (c.pass ? "pass" : "FAIL") << "\n";
    }
  }
  if (report.all_pass()) return kExitOk;
  std::cerr << report.failures() << " cell(s) failed:\n";
  for (const auto& c : report.cells) {
    if (c.pass) continue;
    std::cerr << "  nu=" << c.nu << " m=" << c.m << ": ";
    if (!c.error.empty()) {
      std::cerr << c.error << "\n";
    } else {
      std::cerr << "expected " << c.expected << ", computed " << c.computed->to_string(8)
                << ", rel_dev " << c.rel_dev << "\n";
    }
  }
  return kExitVerification;
}

struct AiryOptions {
  std::string kind;
  int m = 0;
  std::optional<int> digits;
  std::string cache;
};

int run_airy(const AiryOptions& o) {
  const int digits = o.digits.value_or(default_digits());
  check_digits(digits);
  if (o.m < 1) throw Usage("--m must be >= 1");
  const bz::AiryZeroKind kind = o.kind == "a"   ? bz::AiryZeroKind::A
                                : o.kind == "b" ? bz::AiryZeroKind::B
                                                : bz::AiryZeroKind::APrime;
  bz::AiryZeroCache cache;
  if (!o.cache.empty()) {
    std::ifstream in(o.cache);
    if (in) cache.load(in);
  }
  bz::WorkingPrecision wp(digits);
  const bz::BigReal v = cache.get(kind, o.m);
  std::cout << v.to_string(digits) << "\n";
  if (!o.cache.empty()) {
    std::ofstream out(o.cache);
    if (!out) throw Usage("cannot write " + o.cache);
    cache.save(out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform asymptotic approximations to zeros of Bessel functions"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate the symbolic coefficient cache");
  gen_cmd->add_option("--family", gen.family, "Coefficient family")
      ->required()
      ->check(CLI::IsMember({"j", "jprime"}));
  gen_cmd->add_option("--max-order", gen.max_order, "Highest order S")->required();
  gen_cmd->add_option("--out", gen.out, "Output path")->required();
  gen_cmd->add_option("--term-limit", gen.term_limit, "Abort if an element exceeds this many terms");

  ZeroOptions zero;
  auto* zero_cmd = app.add_subcommand("zero", "Approximate the m-th zero");
  zero_cmd->add_option("--family", zero.family, "Zero family")
      ->required()
      ->check(CLI::IsMember({"j", "y", "jprime"}));
  zero_cmd->add_option("--nu", zero.nu, "Order nu > 0")->required();
  zero_cmd->add_option("--m", zero.m, "Zero index m >= 1")->required();
  zero_cmd->add_option("--terms", zero.terms, "Number of correction terms S")->capture_default_str();
  zero_cmd->add_option("--digits", zero.digits, "Significant digits");
  zero_cmd->add_flag("--json", zero.json, "Emit one JSON object");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Reproduce a residual table");
  table_cmd->add_option("--which", table.which, "Table number")->required()->check(CLI::IsMember({1, 2}));
  table_cmd->add_option("--digits", table.digits, "Significant digits");
  table_cmd->add_option("--fixtures", table.fixtures, "Fixture file")->capture_default_str();
  table_cmd->add_flag("--json", table.json, "Emit one JSON object");

  AiryOptions airy;
  auto* airy_cmd = app.add_subcommand("airy", "Negative zero of Ai, Bi or Ai'");
  airy_cmd->add_option("--kind", airy.kind, "Zero kind")
      ->required()
      ->check(CLI::IsMember({"a", "b", "aprime"}));
  airy_cmd->add_option("--m", airy.m, "Zero index m >= 1")->required();
  airy_cmd->add_option("--digits", airy.digits, "Significant digits");
  airy_cmd->add_option("--cache", airy.cache, "Zero cache file (read and updated)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*zero_cmd) return run_zero(zero);
    if (*table_cmd) return run_table(table);
    if (*airy_cmd) return run_airy(airy);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bz::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bz::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bz::Error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
