#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace holomorphy {

struct ClaimResult {
  std::string id;      // stable claim identifier, e.g. "lemma31"
  std::string anchor;  // the statement it checks, e.g. "Lemma 3.1"
  bool pass = false;
  std::uint64_t cases = 0;
  std::optional<std::string> counterexample;  // set only on failure
};

struct SuiteResult {
  std::string name;
  std::vector<ClaimResult> claims;
  std::int64_t millis = 0;
  bool passed() const;
};

struct ContextEcho {
  std::uint64_t n = 0;
  std::uint64_t p = 0;  // 0 when the run needed no 2p^e context
  std::uint32_t e = 0;
  std::uint64_t phi = 0;
  std::uint64_t k = 0;
};

struct VerificationReport {
  ContextEcho context;
  std::vector<SuiteResult> suites;
  bool all_passed() const;

  // Byte-stable for fixed inputs: millis is pinned to 0 here; the text
  // rendering carries the measured timings instead.
  nlohmann::json to_json() const;
  std::string to_text() const;
};

enum class SuiteId {
  Lemma23,
  Lemma24,
  Lemma31,
  Lemma32,
  Center,
  PsiHom,
  PsiBij,
  OracleMatch,
  Dihedral,
  CompletenessOdd,
};

// (id, CLI name) pairs in canonical order.
const std::vector<std::pair<SuiteId, std::string>>& suite_registry();
std::optional<SuiteId> suite_from_name(std::string_view name);
const std::string& suite_name(SuiteId id);

// Every suite except completeness-odd; this set requires n = 2 p^e.
std::vector<SuiteId> default_suites();

struct VerifyOptions {
  std::optional<std::uint64_t> k;  // generator override
  std::uint64_t seed = 0;          // for sampled checks
  std::uint64_t max_order = 2000;  // guard on any table built
};

// Runs the suites in the order given. Throws ShapeError / GeneratorError /
// std::domain_error when n or k does not fit a requested suite (input
// errors); claim failures are recorded in the report, not thrown.
VerificationReport run_suites(std::uint64_t n,
                              const std::vector<SuiteId>& suites,
                              const VerifyOptions& options = {});

}  // namespace holomorphy
