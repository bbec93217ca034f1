#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "grasspi/decide.hpp"
#include "grasspi/error.hpp"
#include "grasspi/report.hpp"
#include "grasspi/selftest.hpp"
#include "grasspi/text.hpp"

using namespace grasspi;

namespace {

constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;

struct Options {
  unsigned p = 3;
  unsigned q = 0;
  std::string expr;
  std::string modulus;
  bool json = false;
  bool central = false;
  std::string level = "quick";
};

std::uint64_t seed_from_env() {
  const char* s = std::getenv("GRASSPI_SEED");
  if (s == nullptr || *s == '\0') return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ConfigError(std::string("GRASSPI_SEED is not an unsigned integer: ") + s);
  }
}

FieldPtr make_field(const Options& o) {
  const unsigned q = o.q == 0 ? o.p : o.q;
  if (!is_prime(o.p)) throw ConfigError("p = " + std::to_string(o.p) + " is not prime");
  std::uint64_t pw = o.p;
  unsigned d = 1;
  while (pw < q) {
    pw *= o.p;
    ++d;
  }
  if (pw != q) throw ConfigError("q = " + std::to_string(q) + " is not a power of p = " + std::to_string(o.p));
  if (o.modulus.empty()) return Field::of_order(q);
  std::vector<std::uint32_t> coeffs;
  std::stringstream in(o.modulus);
  std::string item;
  while (std::getline(in, item, ',')) coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  if (coeffs.size() != d + 1) throw ConfigError("--modulus needs " + std::to_string(d + 1) + " coefficients c0,...,cd");
  return Field::with_modulus(o.p, coeffs);
}

double ms_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

void print_witness(std::ostream& out, const Verdict& v) {
  if (!v.witness) {
    out << "no witness (member)\n";
    return;
  }
  out << "m = " << v.witness->m << '\n';
  for (const auto& [x, img] : v.witness->images) out << "x" << x << " -> " << img.to_string() << '\n';
  if (v.fresh) out << "fresh variable: x" << *v.fresh << '\n';
  if (v.value) out << "value = " << v.value->to_string() << '\n';
}

int run_decision(const std::string& command, const Options& o) {
  const FieldPtr field = make_field(o);
  const std::uint64_t seed = seed_from_env();
  std::map<std::string, double> timings;
  auto t0 = std::chrono::steady_clock::now();
  const FreePoly f = parse_poly(o.expr, field);
  timings["parse"] = ms_since(t0);

  if (command == "canonicalize") {
    t0 = std::chrono::steady_clock::now();
    const CanonicalForm c = canonicalize(f);
    timings["canonicalize"] = ms_since(t0);
    if (o.json) {
      Json out;
      out["params"] = {{"command", command}, {"p", field->characteristic()}, {"q", field->order()},
                       {"modulus", field->modulus()}, {"expr", o.expr}, {"poly", format_poly(f)}, {"seed", seed}};
      out["canonical_form"] = c.format();
      out["timings"] = timings;
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << c.format() << '\n';
    }
    return 0;
  }

  const bool central = command == "check-central" || (command == "witness" && o.central);
  t0 = std::chrono::steady_clock::now();
  const Verdict v = central ? cp_membership(f, seed) : t_membership(f, seed);
  timings["decide"] = ms_since(t0);

  if (o.json) {
    std::cout << verdict_json(f, v, {command, o.expr, seed}, timings).dump(2) << '\n';
  } else if (command == "witness") {
    print_witness(std::cout, v);
  } else {
    std::cout << (v.member() ? "member" : "nonmember") << " (" << v.route << ")\n";
    if (v.canonical) std::cout << "canonical form: " << v.canonical->format() << '\n';
    if (!v.member()) print_witness(std::cout, v);
  }
  return v.member() ? kExitMember : kExitNonMember;
}

int run_selftest_cmd(const Options& o) {
  SelftestLevel level;
  if (o.level == "quick") {
    level = SelftestLevel::kQuick;
  } else if (o.level == "full") {
    level = SelftestLevel::kFull;
  } else {
    throw ConfigError("--level must be quick or full");
  }
  const std::uint64_t seed = seed_from_env();
  bool ok = true;
  for (int id = 1; id <= 9; ++id) {
    const CriterionResult r = run_criterion(id, level, seed);
    std::cout << summary_line(r) << std::endl;
    for (const auto& line : r.log) std::cerr << "  [" << id << "] " << line << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grasspi: T-ideal and central membership tests for G over F_q"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--p", o.p, "characteristic")->required();
    sub->add_option("--q", o.q, "field order (defaults to p)");
    sub->add_option("--expr", o.expr, "polynomial expression")->required();
    sub->add_option("--modulus", o.modulus, "defining polynomial c0,c1,...,cd (monic) for untabulated q");
    sub->add_flag("--json", o.json, "emit a JSON report on stdout");
  };
  CLI::App* identity = app.add_subcommand("check-identity", "decide membership in T(G)");
  CLI::App* central = app.add_subcommand("check-central", "decide membership in CP(G)");
  CLI::App* canon = app.add_subcommand("canonicalize", "print the canonical form modulo T^(3)");
  CLI::App* witness = app.add_subcommand("witness", "print a refuting assignment and its value");
  for (CLI::App* sub : {identity, central, canon, witness}) add_common(sub);
  witness->add_flag("--central", o.central, "refute centrality instead of identity");
  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suites");
  selftest->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUnsupported;
  }

  try {
    if (selftest->parsed()) return run_selftest_cmd(o);
    for (CLI::App* sub : {identity, central, canon, witness}) {
      if (sub->parsed()) return run_decision(sub->get_name(), o);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ConfigError& e) {
    std::cerr << "unsupported parameters: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const DomainError& e) {
    std::cerr << "unsupported parameters: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
