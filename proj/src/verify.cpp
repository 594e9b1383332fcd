#include "holomorphy/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "holomorphy/automorphisms.hpp"
#include "holomorphy/cayley.hpp"
#include "holomorphy/holomorph.hpp"
#include "holomorphy/numtheory.hpp"
#include "holomorphy/rng.hpp"

namespace holomorphy {

namespace {

using Clock = std::chrono::steady_clock;

// Above this automorphism count, pair checks are sampled instead of
// exhaustive.
constexpr std::size_t kPairExhaustiveLimit = 264;
constexpr std::size_t kSampledPairs = 100000;
constexpr std::size_t kSampledTriples = 10000;
// Up to this group order the power/repeated-multiplication comparison
// calls the public power() for every single exponent.
constexpr std::size_t kPowerExhaustiveLimit = 216;

ClaimResult claim(std::string id, std::string anchor, bool pass,
                  std::uint64_t cases,
                  std::optional<std::string> counterexample = std::nullopt) {
  return ClaimResult{std::move(id), std::move(anchor), pass, cases,
                     std::move(counterexample)};
}

SuiteResult run_lemma23() {
  SuiteResult suite;
  suite.name = "lemma23";
  std::uint64_t cases = 0;
  std::optional<std::string> cex;
  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull}) {
    std::uint64_t pe = 1;
    for (std::uint32_t e = 1; e <= 4 && !cex; ++e) {
      pe *= p;
      for (std::uint64_t k = 1; k < pe; k += p) {
        ++cases;
        if (!lemma23_holds(k, p, e)) {
          std::ostringstream os;
          os << "p=" << p << " e=" << e << " k=" << k;
          cex = os.str();
          break;
        }
      }
    }
  }
  suite.claims.push_back(
      claim("lemma23", "Lemma 2.3", !cex.has_value(), cases, cex));
  return suite;
}

SuiteResult run_lemma24(const HolContext& ctx) {
  SuiteResult suite;
  suite.name = "lemma24";
  const std::uint64_t n = ctx.n();
  std::uint64_t cases = 0;
  std::optional<std::string> cex;
  for (std::uint64_t k = 2; k < n && !cex; ++k) {
    if (std::gcd(k, n) != 1) continue;
    if (multiplicative_order(k, n) != ctx.phi()) continue;
    ++cases;
    const Lemma24Result got = lemma24_check(k, n);
    if (got != Lemma24Result{false, 2, 0}) {
      std::ostringstream os;
      os << "k=" << k << ": p_divides=" << got.p_divides_km1
         << " gcd=" << got.gcd_n_km1 << " geom_sum=" << got.geom_sum_mod_n;
      cex = os.str();
    }
  }
  suite.claims.push_back(
      claim("lemma24", "Lemma 2.4", !cex.has_value(), cases, cex));
  return suite;
}

SuiteResult run_lemma31(const HolContext& ctx) {
  SuiteResult suite;
  suite.name = "lemma31";
  std::uint64_t cases = 0;
  std::optional<std::string> cex;
  for (std::uint64_t a = 0; a < ctx.n() && !cex; ++a) {
    const HolElem xa = ctx.elem(static_cast<std::int64_t>(a), 0);
    for (std::uint64_t b = 0; b < 2 * ctx.phi(); ++b) {
      ++cases;
      const HolElem yb = ctx.power(ctx.y(), b);
      const HolElem via_ops = ctx.mul(yb, ctx.mul(xa, ctx.inverse(yb)));
      const HolElem via_formula = ctx.elem(
          static_cast<std::int64_t>(ctx.conjugate_by_y_power(a, b)), 0);
      if (via_ops != via_formula) {
        std::ostringstream os;
        os << "a=" << a << " b=" << b;
        cex = os.str();
        break;
      }
    }
  }
  suite.claims.push_back(
      claim("lemma31", "Lemma 3.1", !cex.has_value(), cases, cex));
  return suite;
}

SuiteResult run_lemma32(const HolContext& ctx) {
  SuiteResult suite;
  suite.name = "lemma32";
  const std::uint64_t order = ctx.group_order();
  const std::uint64_t m_max = 2 * order;
  const bool exhaustive = order <= kPowerExhaustiveLimit;
  std::uint64_t cases = 0;
  std::optional<std::string> cex;
  for (const HolElem& g : ctx.elements()) {
    if (cex) break;
    // Checkpoints where the public power() is exercised even when the
    // group is too large to call it for every exponent.
    std::set<std::uint64_t> checkpoints;
    if (!exhaustive) {
      checkpoints = {0, 1, 2, 3, order - 1, order, m_max};
      SplitMix64 rng(0xc4a11e7u ^ (ctx.index_of(g) * 0x9e3779b97f4a7c15ull));
      for (int t = 0; t < 4; ++t) checkpoints.insert(rng.below(m_max + 1));
    }
    const std::uint64_t kb = mod_pow(static_cast<std::int64_t>(ctx.k()),
                                     static_cast<std::uint64_t>(g.b),
                                     ctx.n());
    HolElem repeated = ctx.identity();
    std::uint64_t sum = 0;
    std::uint64_t term = 1;
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      // formula route: (a * (1 + k^b + ... + k^(b(m-1))), b m)
      const HolElem formula = ctx.elem(
          static_cast<std::int64_t>(
              mod_mul(static_cast<std::uint64_t>(g.a), sum, ctx.n())),
          static_cast<std::int64_t>(
              (static_cast<std::uint64_t>(g.b) * (m % ctx.phi())) %
              ctx.phi()));
      ++cases;
      bool ok = formula == repeated;
      if (ok && (exhaustive || checkpoints.count(m) > 0)) {
        ++cases;
        ok = ctx.power(g, m) == repeated;
      }
      if (!ok) {
        std::ostringstream os;
        os << "g=(" << g.a << "," << g.b << ") m=" << m;
        cex = os.str();
        break;
      }
      repeated = ctx.mul(repeated, g);
      sum = (sum + term) % ctx.n();
      term = mod_mul(term, kb, ctx.n());
    }
  }
  suite.claims.push_back(
      claim("lemma32", "Lemma 3.2", !cex.has_value(), cases, cex));
  return suite;
}

std::string format_elem_set(const HolContext& ctx,
                            const std::vector<HolElem>& elems) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) os << ", ";
    os << ctx.format(elems[i]);
  }
  os << "}";
  return os.str();
}

SuiteResult run_center(const HolContext& ctx) {
  SuiteResult suite;
  suite.name = "center";
  const std::vector<HolElem> got = ctx.center();
  const std::vector<HolElem> want{
      ctx.identity(), ctx.elem(static_cast<std::int64_t>(ctx.n() / 2), 0)};
  const bool pass = got == want;
  suite.claims.push_back(claim(
      "center", "Lemma 2.2", pass, ctx.group_order(),
      pass ? std::nullopt
           : std::optional<std::string>("center = " +
                                        format_elem_set(ctx, got))));
  return suite;
}

SuiteResult run_psi_hom(const HolContext& ctx, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "psi-hom";
  const std::vector<AutData> auts = enumerate_aut(ctx);

  std::uint64_t cases = 0;
  std::optional<std::string> cex;
  auto check_pair = [&](const AutData& alpha, const AutData& beta) {
    ++cases;
    if (psi(ctx, compose(ctx, alpha, beta)) !=
        ctx.mul(psi(ctx, alpha), psi(ctx, beta))) {
      std::ostringstream os;
      os << "alpha=(" << alpha.c << "," << alpha.j << ") beta=(" << beta.c
         << "," << beta.j << ")";
      cex = os.str();
    }
  };
  if (auts.size() <= kPairExhaustiveLimit) {
    for (const AutData& alpha : auts) {
      if (cex) break;
      for (const AutData& beta : auts) {
        check_pair(alpha, beta);
        if (cex) break;
      }
    }
  } else {
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < kSampledPairs && !cex; ++t) {
      check_pair(auts[rng.below(auts.size())], auts[rng.below(auts.size())]);
    }
  }
  suite.claims.push_back(
      claim("psi-hom", "Proposition 3.6", !cex.has_value(), cases, cex));

  // compose must agree with pointwise composition of the induced maps
  std::uint64_t triple_cases = 0;
  std::optional<std::string> triple_cex;
  SplitMix64 rng(seed ^ 0xabcdef1234567890ull);
  for (std::size_t t = 0; t < kSampledTriples && !triple_cex; ++t) {
    const AutData& alpha = auts[rng.below(auts.size())];
    const AutData& beta = auts[rng.below(auts.size())];
    const HolElem g = ctx.element_at(rng.below(ctx.group_order()));
    ++triple_cases;
    if (apply(ctx, compose(ctx, alpha, beta), g) !=
        apply(ctx, alpha, apply(ctx, beta, g))) {
      std::ostringstream os;
      os << "alpha=(" << alpha.c << "," << alpha.j << ") beta=(" << beta.c
         << "," << beta.j << ") g=(" << g.a << "," << g.b << ")";
      triple_cex = os.str();
    }
  }
  suite.claims.push_back(claim("compose-pointwise", "Proposition 3.6",
                               !triple_cex.has_value(), triple_cases,
                               triple_cex));
  return suite;
}

SuiteResult run_psi_bij(const HolContext& ctx) {
  SuiteResult suite;
  suite.name = "psi-bij";
  const std::vector<AutData> auts = enumerate_aut(ctx);

  std::vector<HolElem> images;
  images.reserve(auts.size());
  for (const AutData& alpha : auts) images.push_back(psi(ctx, alpha));

  std::vector<HolElem> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  const bool injective =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  suite.claims.push_back(
      claim("psi-injective", "Proposition 3.7", injective, images.size()));

  const bool surjective = sorted == ctx.elements();
  suite.claims.push_back(
      claim("psi-surjective", "Proposition 3.8", surjective, images.size()));

  std::uint64_t cases = 0;
  std::optional<std::string> cex;
  for (const AutData& alpha : auts) {
    ++cases;
    const VerificationOutcome outcome = validate_automorphism(ctx, alpha);
    if (!outcome.ok) {
      std::ostringstream os;
      os << "(c=" << alpha.c << ", j=" << alpha.j << "): " << outcome.witness;
      cex = os.str();
      break;
    }
  }
  suite.claims.push_back(
      claim("aut-valid", "Proposition 3.8", !cex.has_value(), cases, cex));
  return suite;
}

void check_table_guard(std::uint64_t size, std::uint64_t max_order,
                       const char* what) {
  if (size > max_order) {
    throw std::domain_error(std::string(what) + ": table of size " +
                            std::to_string(size) +
                            " exceeds the limit of " +
                            std::to_string(max_order) +
                            " (raise HOLOMORPHY_MAX_ORDER to override)");
  }
}

SuiteResult run_oracle_match(const HolContext& ctx, std::uint64_t max_order) {
  SuiteResult suite;
  suite.name = "oracle-match";
  check_table_guard(ctx.group_order(), max_order, "oracle-match");

  const CayleyGroup table = build_holomorph_table(ctx);
  const Presentation pres = holomorph_presentation(ctx);
  const std::vector<GroupHom> brute =
      enumerate_automorphisms_bruteforce(table, pres);

  const bool count_ok = brute.size() == ctx.group_order();
  suite.claims.push_back(claim(
      "aut-count", "Theorem 3.9", count_ok, brute.size(),
      count_ok ? std::nullopt
               : std::optional<std::string>(
                     "found " + std::to_string(brute.size()) + ", expected " +
                     std::to_string(ctx.group_order()))));

  // The parametrized family and the brute-force search must agree as sets
  // of mappings.
  std::vector<std::vector<std::int32_t>> parametrized;
  parametrized.reserve(ctx.group_order());
  for (const AutData& alpha : enumerate_aut(ctx)) {
    std::vector<std::int32_t> mapping(ctx.group_order());
    for (std::size_t i = 0; i < mapping.size(); ++i) {
      mapping[i] = static_cast<std::int32_t>(
          ctx.index_of(apply(ctx, alpha, ctx.element_at(i))));
    }
    parametrized.push_back(std::move(mapping));
  }
  std::vector<std::vector<std::int32_t>> bruteforce;
  bruteforce.reserve(brute.size());
  for (const GroupHom& hom : brute) bruteforce.push_back(hom.mapping());
  std::sort(parametrized.begin(), parametrized.end());
  std::sort(bruteforce.begin(), bruteforce.end());
  suite.claims.push_back(claim("aut-set", "Lemmas 3.3/3.4",
                               parametrized == bruteforce,
                               parametrized.size()));

  // Composition of parameters, transcribed by (c, j) -> x^c y^j, must
  // reproduce the multiplication table entry for entry.
  const std::vector<AutData> auts = enumerate_aut(ctx);
  bool transcription_ok = true;
  std::optional<std::string> transcription_cex;
  std::uint64_t transcription_cases = 0;
  for (std::size_t i = 0; i < auts.size() && transcription_ok; ++i) {
    for (std::size_t j = 0; j < auts.size(); ++j) {
      ++transcription_cases;
      const std::size_t composed =
          ctx.index_of(psi(ctx, compose(ctx, auts[i], auts[j])));
      if (static_cast<std::int32_t>(composed) !=
          table.mul(static_cast<std::int32_t>(i),
                    static_cast<std::int32_t>(j))) {
        std::ostringstream os;
        os << "i=" << i << " j=" << j;
        transcription_cex = os.str();
        transcription_ok = false;
        break;
      }
    }
  }
  suite.claims.push_back(claim("psi-transcription", "Theorem 3.9",
                               transcription_ok, transcription_cases,
                               transcription_cex));

  const CayleyGroup aut_table = aut_group_table(table, brute);
  const bool iso_found =
      find_isomorphism(table, aut_table, pres).has_value();
  suite.claims.push_back(
      claim("aut-table-iso", "Theorem 3.9", iso_found, aut_table.size()));
  return suite;
}

SuiteResult run_dihedral(std::uint64_t n, std::uint64_t max_order) {
  if (n < 3) {
    throw std::domain_error("dihedral suite: need n >= 3, got " +
                            std::to_string(n));
  }
  SuiteResult suite;
  suite.name = "dihedral";
  const std::uint64_t aut_size = n * totient(n);
  check_table_guard(std::max(2 * n, aut_size), max_order, "dihedral");

  const CayleyGroup dihedral = build_dihedral(n);
  const std::vector<GroupHom> brute =
      enumerate_automorphisms_bruteforce(dihedral, dihedral_presentation(n));
  const bool count_ok = brute.size() == aut_size;
  suite.claims.push_back(claim(
      "dihedral-aut-count", "Section 1 (dihedral)", count_ok, brute.size(),
      count_ok ? std::nullopt
               : std::optional<std::string>(
                     "found " + std::to_string(brute.size()) + ", expected " +
                     std::to_string(aut_size))));

  const CayleyGroup aut_table = aut_group_table(dihedral, brute);
  const CayleyGroup holomorph = build_general_holomorph(n);
  const bool iso_found =
      find_isomorphism(holomorph, aut_table,
                       general_holomorph_presentation(n))
          .has_value();
  suite.claims.push_back(claim("dihedral-aut-iso", "Section 1 (dihedral)",
                               iso_found, aut_table.size()));
  return suite;
}

SuiteResult run_completeness_odd(std::uint64_t n, std::uint64_t max_order) {
  if (n < 3 || n % 2 == 0) {
    throw std::domain_error(
        "completeness-odd suite: need odd n >= 3, got " + std::to_string(n));
  }
  SuiteResult suite;
  suite.name = "completeness-odd";
  const std::uint64_t aut_size = n * totient(n);
  check_table_guard(aut_size, max_order, "completeness-odd");

  const CayleyGroup holomorph = build_general_holomorph(n);
  const std::vector<std::int32_t> center = center_bruteforce(holomorph);
  const bool center_ok =
      center == std::vector<std::int32_t>{holomorph.identity()};
  suite.claims.push_back(claim(
      "odd-center-trivial", "Section 1 (completeness)", center_ok,
      holomorph.size(),
      center_ok ? std::nullopt
                : std::optional<std::string>(
                      "center has " + std::to_string(center.size()) +
                      " elements")));

  const std::vector<GroupHom> brute = enumerate_automorphisms_bruteforce(
      holomorph, general_holomorph_presentation(n));
  const bool count_ok = brute.size() == aut_size;
  suite.claims.push_back(claim(
      "odd-aut-count", "Section 1 (completeness)", count_ok, brute.size(),
      count_ok ? std::nullopt
               : std::optional<std::string>(
                     "found " + std::to_string(brute.size()) + ", expected " +
                     std::to_string(aut_size))));

  std::vector<std::vector<std::int32_t>> inner;
  inner.reserve(holomorph.size());
  for (std::size_t w = 0; w < holomorph.size(); ++w) {
    inner.push_back(
        conjugation_mapping(holomorph, static_cast<std::int32_t>(w)));
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  std::vector<std::vector<std::int32_t>> outer;
  outer.reserve(brute.size());
  for (const GroupHom& hom : brute) outer.push_back(hom.mapping());
  std::sort(outer.begin(), outer.end());
  suite.claims.push_back(claim("odd-aut-eq-inn", "Section 1 (completeness)",
                               inner == outer, holomorph.size()));
  return suite;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.pass; });
}

bool VerificationReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed(); });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json suites_json = nlohmann::json::array();
  for (const SuiteResult& suite : suites) {
    nlohmann::json claims_json = nlohmann::json::array();
    for (const ClaimResult& c : suite.claims) {
      nlohmann::json cj{{"id", c.id},
                        {"anchor", c.anchor},
                        {"status", c.pass ? "pass" : "fail"},
                        {"cases", c.cases}};
      if (c.counterexample) cj["counterexample"] = *c.counterexample;
      claims_json.push_back(std::move(cj));
    }
    suites_json.push_back(nlohmann::json{
        {"name", suite.name}, {"claims", claims_json}, {"millis", 0}});
  }
  return nlohmann::json{{"context",
                         {{"n", context.n},
                          {"p", context.p},
                          {"e", context.e},
                          {"phi", context.phi},
                          {"k", context.k}}},
                        {"suites", suites_json}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "context: n=" << context.n << " p=" << context.p
     << " e=" << context.e << " phi=" << context.phi << " k=" << context.k
     << "\n";
  std::size_t passed = 0;
  for (const SuiteResult& suite : suites) {
    std::uint64_t cases = 0;
    for (const ClaimResult& c : suite.claims) cases += c.cases;
    os << "suite " << suite.name << ": "
       << (suite.passed() ? "PASS" : "FAIL") << " (" << suite.claims.size()
       << (suite.claims.size() == 1 ? " claim, " : " claims, ") << cases
       << " cases, " << suite.millis << " ms)\n";
    for (const ClaimResult& c : suite.claims) {
      os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << " ("
         << c.anchor << "): " << c.cases << " cases";
      if (c.counterexample) os << "; counterexample: " << *c.counterexample;
      os << "\n";
    }
    if (suite.passed()) ++passed;
  }
  os << "result: " << (passed == suites.size() ? "PASS" : "FAIL") << " ("
     << passed << "/" << suites.size() << " suites)\n";
  return os.str();
}

const std::vector<std::pair<SuiteId, std::string>>& suite_registry() {
  static const std::vector<std::pair<SuiteId, std::string>> registry{
      {SuiteId::Lemma23, "lemma23"},
      {SuiteId::Lemma24, "lemma24"},
      {SuiteId::Lemma31, "lemma31"},
      {SuiteId::Lemma32, "lemma32"},
      {SuiteId::Center, "center"},
      {SuiteId::PsiHom, "psi-hom"},
      {SuiteId::PsiBij, "psi-bij"},
      {SuiteId::OracleMatch, "oracle-match"},
      {SuiteId::Dihedral, "dihedral"},
      {SuiteId::CompletenessOdd, "completeness-odd"},
  };
  return registry;
}

std::optional<SuiteId> suite_from_name(std::string_view name) {
  for (const auto& [id, suite_name] : suite_registry()) {
    if (suite_name == name) return id;
  }
  return std::nullopt;
}

const std::string& suite_name(SuiteId id) {
  for (const auto& [suite_id, name] : suite_registry()) {
    if (suite_id == id) return name;
  }
  throw std::logic_error("unknown suite id");
}

std::vector<SuiteId> default_suites() {
  std::vector<SuiteId> out;
  for (const auto& [id, name] : suite_registry()) {
    if (id != SuiteId::CompletenessOdd) out.push_back(id);
  }
  return out;
}

VerificationReport run_suites(std::uint64_t n,
                              const std::vector<SuiteId>& suites,
                              const VerifyOptions& options) {
  const bool needs_context = std::any_of(
      suites.begin(), suites.end(), [](SuiteId id) {
        switch (id) {
          case SuiteId::Lemma24:
          case SuiteId::Lemma31:
          case SuiteId::Lemma32:
          case SuiteId::Center:
          case SuiteId::PsiHom:
          case SuiteId::PsiBij:
          case SuiteId::OracleMatch:
            return true;
          default:
            return false;
        }
      });

  std::optional<HolContext> ctx;
  if (needs_context) ctx = HolContext::make(n, options.k);

  VerificationReport report;
  report.context.n = n;
  if (ctx) {
    report.context.p = ctx->p();
    report.context.e = ctx->e();
    report.context.phi = ctx->phi();
    report.context.k = ctx->k();
  } else if (n >= 1 && n <= kFactorizeBound) {
    report.context.phi = totient(n);
  }

  for (SuiteId id : suites) {
    const auto t0 = Clock::now();
    SuiteResult result;
    switch (id) {
      case SuiteId::Lemma23:
        result = run_lemma23();
        break;
      case SuiteId::Lemma24:
        result = run_lemma24(*ctx);
        break;
      case SuiteId::Lemma31:
        result = run_lemma31(*ctx);
        break;
      case SuiteId::Lemma32:
        result = run_lemma32(*ctx);
        break;
      case SuiteId::Center:
        result = run_center(*ctx);
        break;
      case SuiteId::PsiHom:
        result = run_psi_hom(*ctx, options.seed);
        break;
      case SuiteId::PsiBij:
        result = run_psi_bij(*ctx);
        break;
      case SuiteId::OracleMatch:
        result = run_oracle_match(*ctx, options.max_order);
        break;
      case SuiteId::Dihedral:
        result = run_dihedral(n, options.max_order);
        break;
      case SuiteId::CompletenessOdd:
        result = run_completeness_odd(n, options.max_order);
        break;
    }
    result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - t0)
                        .count();
    report.suites.push_back(std::move(result));
  }
  return report;
}

}  // namespace holomorphy
