// cubicfields: command-line front end for the library.
//
// Exit codes: 0 success or identity pass, 1 identity fail, 2 usage error,
// 3 evaluation error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubicfields/bfile.hpp"
#include "cubicfields/cubic.hpp"
#include "cubicfields/errors.hpp"
#include "cubicfields/expression.hpp"
#include "cubicfields/gaussian.hpp"
#include "cubicfields/identities.hpp"
#include "cubicfields/roots.hpp"
#include "cubicfields/sequences.hpp"

namespace cf = cubicfields;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEval = 3;

struct Globals {
  int digits = 50;
  bool json = false;
};

// A finished command: JSON document plus the human rendering.
struct Result {
  Json doc;
  std::vector<std::string> lines;
  int exit_code = kExitPass;
};

Json header(const std::string& kind, Json inputs, int digits) {
  Json doc;
  doc["kind"] = kind;
  doc["inputs"] = std::move(inputs);
  doc["digits"] = digits;
  return doc;
}

std::string fixed(const cf::HighReal& x, int digits) { return x.to_fixed(digits); }

std::string residual_text(const cf::HighReal& r) {
  if (r.is_zero()) return "0";
  return r.to_sci(3);
}

cf::Scalar real_arg(const std::string& text, int digits) {
  return cf::parse_scalar(text, cf::PrecisionPolicy(digits).working_digits());
}

std::uint64_t prime_arg(const std::string& text) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(text, &used);
  if (used != text.size() || text.front() == '-') throw std::invalid_argument("expected a positive integer, got '" + text + "'");
  return v;
}

Result zero_result(const std::string& kind, Json inputs, const cf::ZeroTriple& zt, const cf::Cubic& c, int digits) {
  Result out;
  out.doc = header(kind, std::move(inputs), digits);
  Json zeros = Json::array();
  for (const auto& z : zt.zeros) zeros.push_back(fixed(z, digits));
  out.doc["zeros"] = zeros;
  out.doc["residual"] = residual_text(cf::max_residual(c, zt));
  out.lines.push_back("polynomial: " + c.to_string(digits));
  for (std::size_t i = 0; i < 3; ++i) {
    std::string line = "x" + std::to_string(i + 1) + " = " + fixed(zt.zeros[i], digits);
    if (zt.branch[i] >= 0) line += "   (k = " + std::to_string(zt.branch[i]) + ")";
    out.lines.push_back(line);
  }
  if (zt.orbit_order) {
    const auto& o = *zt.orbit_order;
    out.lines.push_back("eta orbit: x" + std::to_string(o[0] + 1) + " -> x" + std::to_string(o[1] + 1) + " -> x" +
                        std::to_string(o[2] + 1));
  }
  out.lines.push_back("max residual: " + out.doc["residual"].get<std::string>());
  return out;
}

Result report_result(const std::string& kind, Json inputs, const cf::IdentityReport& r, int digits) {
  Result out;
  out.doc = header(kind, std::move(inputs), digits);
  Json report;
  report["name"] = r.name;
  report["lhs"] = fixed(r.lhs, digits);
  report["rhs"] = fixed(r.rhs, digits);
  report["pass"] = r.pass;
  out.doc["report"] = report;
  out.doc["residual"] = residual_text(r.residual);
  out.lines = {"identity: " + r.name, "lhs: " + fixed(r.lhs, digits), "rhs: " + fixed(r.rhs, digits),
               "residual: " + residual_text(r.residual), std::string("verdict: ") + (r.pass ? "PASS" : "FAIL")};
  out.exit_code = r.pass ? kExitPass : kExitFail;
  return out;
}

Json coset_json(const cf::CosetTriple& cosets) {
  Json arr = Json::array();
  for (const auto& c : cosets) arr.push_back(c);
  return arr;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> to_strings(const std::vector<mpz_class>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

Result terms_result(const std::string& kind, Json inputs, const std::vector<mpz_class>& terms, int digits,
                    bool bfile, const std::string& id, long offset) {
  Result out;
  out.doc = header(kind, std::move(inputs), digits);
  out.doc["terms"] = to_strings(terms);
  if (bfile) {
    std::string text = cf::format_bfile(cf::make_bfile(id, offset, terms));
    text.pop_back();
    out.lines.push_back(text);
  } else {
    out.lines.push_back(join(to_strings(terms), " "));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramanujan cubic polynomials, Gaussian periods and cube-root identities"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--digits", g.digits, "Target precision in decimal digits")->capture_default_str();
  app.add_flag("--json", g.json, "Emit JSON instead of text");

  std::function<Result()> action;

  // roots
  auto* roots = app.add_subcommand("roots", "Closed-form zeros")->require_subcommand(1);
  std::vector<std::string> coeffs;
  std::string h_text;
  std::string s_text;
  std::string gamma_text;
  std::string r_text;
  bool explain = false;

  auto* roots_cubic = roots->add_subcommand("cubic", "Zeros of a3 x^3 + a2 x^2 + a1 x + a0");
  roots_cubic->add_option("coeffs", coeffs, "a3 a2 a1 a0")->required()->expected(4);
  roots_cubic->callback([&] {
    action = [&] {
      std::vector<cf::Scalar> c;
      Json inputs;
      for (const auto& t : coeffs) c.push_back(real_arg(t, g.digits));
      inputs["coefficients"] = coeffs;
      const cf::PrecisionPolicy policy(g.digits);
      const cf::Cubic cubic(c[0], c[1], c[2], c[3]);
      const cf::Cubic monic = cubic.monic();
      const bool rcp = cf::is_rcp(monic, policy);
      Result out = zero_result("roots.cubic", inputs, cf::solve_cubic_trig(cubic, policy), cubic, g.digits);
      out.doc["checks"] = Json{{"rcp_relation", rcp}, {"three_real_zeros", true}};
      out.lines.push_back(std::string("rcp coefficient relation: ") + (rcp ? "yes" : "no"));
      return out;
    };
  });

  auto* roots_scp = roots->add_subcommand("scp", "Zeros of x^3 - h x^2 - (h+3) x - 1");
  roots_scp->add_option("--h", h_text, "Parameter h")->required();
  roots_scp->callback([&] {
    action = [&] {
      const cf::Scalar h = real_arg(h_text, g.digits);
      return zero_result("roots.scp", Json{{"h", h_text}}, cf::scp_zeros(h, cf::PrecisionPolicy(g.digits)),
                         cf::build_scp(h), g.digits);
    };
  });

  auto* roots_rcp = roots->add_subcommand("rcp", "Zeros of x^3 + hs x^2 - (h+3) s^2 x + s^3");
  roots_rcp->add_option("--h", h_text, "Parameter h")->required();
  roots_rcp->add_option("--s", s_text, "Scale s (nonzero)")->required();
  roots_rcp->add_flag("--explain", explain, "Show how the zero set is derived");
  roots_rcp->callback([&] {
    action = [&] {
      const cf::PrecisionPolicy policy(g.digits);
      const cf::RcpParams params{real_arg(h_text, g.digits), real_arg(s_text, g.digits)};
      const cf::ZeroTriple zt = cf::rcp_zeros(params, policy);
      Result out = zero_result("roots.rcp", Json{{"h", h_text}, {"s", s_text}}, zt, cf::build_rcp(params), g.digits);
      if (explain) {
        // Both printed forms: -s*zeta(h,-1) is what is computed, -s*zeta(h,1)
        // is the variant that differs by a global sign.
        const cf::ZeroTriple plus = cf::rcp_zeros({params.h, cf::Scalar(1)}, policy);
        const cf::HighReal s = params.s.to_high(policy.working_digits());
        std::vector<cf::HighReal> alt;
        for (const auto& z : plus.zeros) alt.push_back(-s * z);
        std::sort(alt.begin(), alt.end(), [](const auto& a, const auto& b) { return a > b; });
        const cf::Cubic rho = cf::build_rcp(params);
        cf::HighReal alt_residual(policy.working_digits());
        Json alt_json = Json::array();
        for (const auto& z : alt) {
          const cf::HighReal r = cf::abs(rho.evaluate(z));
          if (r > alt_residual) alt_residual = r;
          alt_json.push_back(fixed(z, g.digits));
        }
        out.doc["explain"] = Json{
            {"used", "zeta(h,s) = -s * zeta(h,-1), zeta(h,-1) the zeros of x^3 - h x^2 - (h+3) x - 1"},
            {"alternative", "zeta(h,s) = -s * zeta(h,1); since zeta(h,1) = -zeta(h,-1) this is the negated set"},
            {"alternative_zeros", alt_json},
            {"alternative_residual", residual_text(alt_residual)}};
        out.lines.push_back("derivation: zeta(h,s) = -s * zeta(h,-1), zeta(h,-1) = zeros of x^3 - h x^2 - (h+3) x - 1");
        out.lines.push_back("alternative form -s * zeta(h,1) gives the negated set:");
        for (const auto& z : alt_json) out.lines.push_back("  " + z.get<std::string>());
        out.lines.push_back("  max residual of the alternative: " + residual_text(alt_residual));
      }
      return out;
    };
  });

  auto* roots_witula = roots->add_subcommand("witula", "RCP from gamma and r");
  roots_witula->add_option("--gamma", gamma_text, "gamma, not 1 or 2")->required();
  roots_witula->add_option("--r", r_text, "Constant term r")->required();
  roots_witula->callback([&] {
    action = [&] {
      const cf::PrecisionPolicy policy(g.digits);
      const cf::Cubic c = cf::build_rcp_witula(real_arg(gamma_text, g.digits), real_arg(r_text, g.digits), policy);
      return zero_result("roots.witula", Json{{"gamma", gamma_text}, {"r", r_text}}, cf::solve_cubic_trig(c, policy),
                         c, g.digits);
    };
  });

  // periods / deltas / minpoly / shanks-primes
  std::string p_text;
  auto* periods = app.add_subcommand("periods", "Cubic Gaussian periods of a prime p = 1 (mod 3)");
  periods->add_option("p", p_text, "Prime")->required();
  periods->callback([&] {
    action = [&] {
      const cf::PrecisionPolicy policy(g.digits);
      const cf::PeriodSet ps = cf::gaussian_periods(prime_arg(p_text), policy);
      Result out;
      out.doc = header("periods", Json{{"p", p_text}}, g.digits);
      Json zeros = Json::array();
      for (const auto& v : ps.values) zeros.push_back(fixed(v, g.digits));
      Json report;
      report["g"] = ps.g;
      report["cosets"] = coset_json(ps.cosets);
      report["h"] = ps.h ? Json(*ps.h) : Json(nullptr);
      report["L"] = ps.L ? Json(*ps.L) : Json(nullptr);
      std::optional<cf::HighReal> residual;
      if (ps.h) {
        const cf::Cubic minpoly = cf::period_minimal_poly(*ps.h);
        report["minimal_polynomial"] = minpoly.to_string();
        residual = cf::HighReal(policy.working_digits());
        for (const auto& v : ps.values) {
          const cf::HighReal r = cf::abs(minpoly.evaluate(v));
          if (r > *residual) residual = r;
        }
      }
      out.doc["zeros"] = zeros;
      out.doc["report"] = report;
      out.doc["residual"] = residual ? Json(residual_text(*residual)) : Json(nullptr);
      out.lines.push_back("p = " + p_text + ", primitive root g = " + std::to_string(ps.g));
      for (int k = 0; k < 3; ++k) {
        std::vector<std::string> members;
        for (auto m : ps.cosets[k]) members.push_back(std::to_string(m));
        out.lines.push_back("C" + std::to_string(k) + " = {" + join(members, ", ") + "}  eta" + std::to_string(k) +
                            " = " + fixed(ps.values[k], g.digits));
      }
      if (ps.h) {
        out.lines.push_back("Shanks parameter h = " + std::to_string(*ps.h) + ", L = " + std::to_string(*ps.L));
        out.lines.push_back("minimal polynomial: " + report["minimal_polynomial"].get<std::string>() +
                            "  (max residual " + residual_text(*residual) + ")");
      }
      return out;
    };
  });

  auto* deltas = app.add_subcommand("deltas", "Oriented differences of the periods of a Shanks prime");
  deltas->add_option("p", p_text, "Shanks prime")->required();
  deltas->callback([&] {
    action = [&] {
      const cf::PrecisionPolicy policy(g.digits);
      const cf::DeltaSet ds = cf::period_differences(prime_arg(p_text), policy);
      const cf::Cubic target(1, 0, -static_cast<long>(ds.p), static_cast<long>(ds.p));
      const cf::ZeroTriple zt = cf::make_zero_triple(ds.deltas);
      Result out = zero_result("deltas", Json{{"p", p_text}}, zt, target, g.digits);
      Json closed = Json::array();
      for (const auto& c : ds.closed_form) closed.push_back(fixed(c, g.digits));
      out.doc["report"] = Json{{"h", ds.h},
                               {"orientation", ds.orientation},
                               {"closed_form", closed},
                               {"closed_form_sign", ds.closed_form_sign}};
      out.lines.push_back("h = " + std::to_string(ds.h) + ", orientation " + std::to_string(ds.orientation) +
                          ", closed-form sign " + std::to_string(ds.closed_form_sign));
      return out;
    };
  });

  long h_int = 0;
  auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of the periods of tau(h)");
  minpoly->add_option("--h", h_int, "Integer h >= -1, not divisible by 3")->required();
  minpoly->callback([&] {
    action = [&] {
      const cf::Cubic c = cf::period_minimal_poly(h_int);
      Result out;
      out.doc = header("minpoly", Json{{"h", h_int}}, g.digits);
      Json coeffs_json = Json::array();
      for (const auto& a : c.coefficients()) coeffs_json.push_back(a.to_string());
      out.doc["report"] = Json{{"p", cf::tau(h_int).to_string()},
                               {"L", cf::lehmer_L(h_int)},
                               {"polynomial", c.to_string()},
                               {"coefficients", coeffs_json}};
      out.lines.push_back(c.to_string());
      return out;
    };
  });

  std::uint64_t limit = 1000;
  auto* shanks = app.add_subcommand("shanks-primes", "Primes h^2 + 3h + 9 up to a limit");
  shanks->add_option("--limit", limit, "Upper bound")->capture_default_str();
  shanks->callback([&] {
    action = [&] {
      const auto primes = cf::shanks_primes(limit);
      Result out;
      out.doc = header("shanks-primes", Json{{"limit", limit}}, g.digits);
      Json terms = Json::array();
      Json hs = Json::array();
      std::vector<std::string> text;
      for (const auto& sp : primes) {
        terms.push_back(std::to_string(sp.p));
        hs.push_back(sp.h);
        text.push_back(std::to_string(sp.p));
      }
      out.doc["terms"] = terms;
      out.doc["report"] = Json{{"h", hs}};
      out.lines.push_back(join(text, " "));
      return out;
    };
  });

  // identity
  auto* identity = app.add_subcommand("identity", "Cube-root identities")->require_subcommand(1);
  std::string alpha_text;
  std::string name_text;
  auto* id_rama = identity->add_subcommand("ramanujan", "Sum of cube roots of the RCP zeros");
  id_rama->add_option("--h", h_text)->required();
  id_rama->add_option("--s", s_text)->required();
  id_rama->callback([&] {
    action = [&] {
      const auto r = cf::ramanujan_cbrt_sum_check(real_arg(h_text, g.digits), real_arg(s_text, g.digits), g.digits);
      return report_result("identity.ramanujan", Json{{"h", h_text}, {"s", s_text}}, r, g.digits);
    };
  });
  auto* id_ext = identity->add_subcommand("extended", "Cube root of alpha through its eta orbit");
  id_ext->add_option("--alpha", alpha_text)->required();
  id_ext->add_option("--s", s_text)->required();
  id_ext->callback([&] {
    action = [&] {
      const auto r = cf::extended_identity_check(real_arg(alpha_text, g.digits), real_arg(s_text, g.digits), g.digits);
      return report_result("identity.extended", Json{{"alpha", alpha_text}, {"s", s_text}}, r, g.digits);
    };
  });
  auto* id_gauss = identity->add_subcommand("gauss", "Cube roots of shifted Gaussian periods");
  id_gauss->add_option("--h", h_int)->required();
  id_gauss->callback([&] {
    action = [&] {
      return report_result("identity.gauss", Json{{"h", h_int}}, cf::gauss_period_cbrt_identity(h_int, g.digits),
                           g.digits);
    };
  });
  auto* id_named = identity->add_subcommand("named", "Catalog identity by name");
  id_named->add_option("name", name_text)->required();
  id_named->callback([&] {
    action = [&] {
      return report_result("identity.named", Json{{"name", name_text}}, cf::verify_named(name_text, g.digits),
                           g.digits);
    };
  });

  // verify
  std::string equation;
  auto* verify = app.add_subcommand("verify", "Check \"<lhs> == <rhs>\" numerically");
  verify->add_option("equation", equation)->required();
  verify->callback([&] {
    action = [&] {
      const auto pos = equation.find("==");
      if (pos == std::string::npos || equation.find("==", pos + 2) != std::string::npos) {
        throw std::invalid_argument("expected exactly one '==' in \"" + equation + "\"");
      }
      const cf::Expression lhs = cf::parse_expression(equation.substr(0, pos));
      const cf::Expression rhs = cf::parse_expression(equation.substr(pos + 2));
      const auto r = cf::verify_expression(lhs, rhs, g.digits);
      return report_result("verify",
                           Json{{"lhs", cf::print_expression(lhs)}, {"rhs", cf::print_expression(rhs)}}, r, g.digits);
    };
  });

  // seq
  auto* seq = app.add_subcommand("seq", "Integer sequences")->require_subcommand(1);
  unsigned long terms = 10;
  unsigned long k = 1;
  unsigned long vertices = 6;
  bool bfile = false;
  auto add_seq_common = [&](CLI::App* sub) {
    sub->add_option("--terms", terms, "Number of terms")->capture_default_str();
    sub->add_flag("--bfile", bfile, "Emit 'n a(n)' lines");
  };
  auto* seq_a = seq->add_subcommand("a198636", "5, -6, 1 recurrence from 3, 5, 13");
  add_seq_common(seq_a);
  seq_a->callback([&] {
    action = [&] {
      return terms_result("seq.a198636", Json{{"terms", terms}}, cf::recurrence_terms(cf::a198636_spec(), terms),
                          g.digits, bfile, "A198636", 0);
    };
  });
  auto* seq_trace = seq->add_subcommand("trace", "A(k, n) = Tr(M^(kn))");
  add_seq_common(seq_trace);
  seq_trace->add_option("--h", h_int)->required();
  seq_trace->add_option("--k", k)->capture_default_str()->check(CLI::PositiveNumber);
  seq_trace->callback([&] {
    action = [&] {
      std::vector<mpz_class> out;
      for (unsigned long n = 0; n < terms; ++n) out.push_back(cf::trace_power_sum(h_int, k, n));
      Result r = terms_result("seq.trace", Json{{"h", h_int}, {"k", k}, {"terms", terms}}, out, g.digits, bfile,
                              "A000000", 0);
      const cf::RecurrenceSpec spec = cf::char_poly_of_power(h_int, k);
      r.doc["report"] = Json{{"char_poly", {spec.c2.get_str(), spec.c1.get_str(), spec.c0.get_str()}}};
      return r;
    };
  });
  auto* seq_walks = seq->add_subcommand("walks", "Closed walks of length 0, 1, ... on the path P_N");
  add_seq_common(seq_walks);
  seq_walks->add_option("--n", vertices, "Vertex count")->capture_default_str()->check(CLI::PositiveNumber);
  seq_walks->callback([&] {
    action = [&] {
      const cf::WalkTable table(vertices);
      std::vector<mpz_class> out;
      for (unsigned long l = 0; l < terms; ++l) out.push_back(table.closed_walks(l));
      return terms_result("seq.walks", Json{{"n", vertices}, {"terms", terms}}, out, g.digits, bfile, "A000000", 0);
    };
  });

  // oeis-check
  std::string seq_id;
  std::optional<unsigned long> check_terms;
  std::optional<std::uint64_t> check_limit;
  bool offline = false;
  std::string cache_dir;
  auto* oeis = app.add_subcommand("oeis-check", "Compare local terms with an OEIS b-file");
  oeis->add_option("id", seq_id, "A005471 or A198636")->required();
  oeis->add_option("--terms", check_terms, "Terms to compare (A198636)");
  oeis->add_option("--limit", check_limit, "Prime bound (A005471)");
  oeis->add_flag("--offline", offline, "Use only the cache and the bundled fixtures");
  oeis->add_option("--cache-dir", cache_dir, "Cache directory");
  oeis->callback([&] {
    action = [&] {
      if (!cf::is_valid_sequence_id(seq_id)) {
        throw std::invalid_argument("sequence id must be 'A' followed by six digits, got '" + seq_id + "'");
      }
      std::vector<mpz_class> local;
      Json inputs{{"id", seq_id}};
      const std::uint64_t lim = check_limit.value_or(100000);
      if (seq_id == "A198636") {
        const unsigned long n = check_terms.value_or(30);
        local = cf::recurrence_terms(cf::a198636_spec(), n);
        inputs["terms"] = n;
      } else if (seq_id == "A005471") {
        for (const auto& sp : cf::shanks_primes(lim)) local.emplace_back(static_cast<unsigned long>(sp.p));
        inputs["limit"] = lim;
      } else {
        throw std::invalid_argument("no local generator for " + seq_id);
      }
      cf::FetchOptions opts;
      opts.cache_dir = cache_dir.empty() ? cf::default_cache_dir() : std::filesystem::path(cache_dir);
      opts.fixture_dir = cf::default_fixture_dir();
      opts.offline = offline;
      const cf::BFile remote = cf::fetch_bfile(seq_id, opts);

      std::vector<mpz_class> expected;
      if (seq_id == "A005471") {
        for (const auto& [n, v] : remote.rows) {
          if (v <= static_cast<unsigned long>(lim)) expected.push_back(v);
        }
      } else {
        for (std::size_t i = 0; i < remote.rows.size() && i < local.size(); ++i) expected.push_back(remote.rows[i].second);
      }

      std::optional<std::size_t> mismatch;
      const std::size_t n = std::max(local.size(), expected.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (i >= local.size() || i >= expected.size() || local[i] != expected[i]) {
          mismatch = i;
          break;
        }
      }
      const bool pass = !mismatch;
      Result out;
      out.doc = header("oeis-check", inputs, g.digits);
      out.doc["terms"] = to_strings(local);
      out.doc["report"] = Json{{"compared", std::min(local.size(), expected.size())},
                               {"first_mismatch", mismatch ? Json(*mismatch) : Json(nullptr)},
                               {"pass", pass}};
      out.doc["residual"] = mismatch ? "1" : "0";
      out.lines.push_back(seq_id + ": " + std::to_string(local.size()) + " local terms, " +
                          std::to_string(expected.size()) + " reference terms");
      if (mismatch) out.lines.push_back("first mismatch at position " + std::to_string(*mismatch));
      out.lines.push_back(pass ? "PASS" : "FAIL");
      out.exit_code = pass ? kExitPass : kExitFail;
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (g.digits < 1) throw cf::Error(cf::ErrorCode::InvalidPrecision, "--digits must be positive");
    Result r = action();
    if (g.json) {
      std::cout << r.doc.dump(2) << '\n';
    } else {
      for (const auto& line : r.lines) std::cout << line << '\n';
    }
    return r.exit_code;
  } catch (const cf::ParseError& e) {
    std::cerr << "error: " << e.what() << " (offset " << e.offset() << ")\n";
    return kExitUsage;
  } catch (const cf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case cf::ErrorCode::InvalidPrecision:
      case cf::ErrorCode::UnknownIdentity:
        return kExitUsage;
      default:
        return kExitEval;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEval;
  }
}
