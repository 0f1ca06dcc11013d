#ifndef DETLOCI_VERIFIER_HPP
#define DETLOCI_VERIFIER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "detloci/detschemes.hpp"
#include "detloci/invariants.hpp"

namespace detloci {

enum class IdentityStatus { holds, fails, skipped };
std::string to_string(IdentityStatus s);

// One checked equality lhs = rhs together with the integers it was built from.
struct IdentityRecord {
  IdentityStatus status = IdentityStatus::skipped;
  std::string formula;
  long long lhs = 0;
  long long rhs = 0;
  std::map<std::string, long long> inputs;
  std::string reason;  // why the identity was skipped

  long long delta() const { return lhs - rhs; }
  static IdentityRecord skip(std::string formula, std::string reason);
  static IdentityRecord compare(std::string formula, long long lhs, long long rhs,
                                std::map<std::string, long long> inputs);
};

struct CaseOptions {
  std::uint32_t prime = 101;
  int window_lo = -3;
  int window_hi = 0;
  // tangent, nB, fib1, fib2 and homIB_A with the identities built from them.
  bool flag_quantities = true;
  // Hom from the first flag ideal into successive stages; steps counted from the top.
  int a3r_steps = 0;
  bool exgenassump = false;
  bool ext1 = true;
  bool kappa = false;
  // Redraws allowed when a random matrix fails the dimension certificate.
  int max_retries = 4;
};

struct CaseReport {
  DegreeData data;
  MatrixSpec spec;
  std::uint32_t prime = 101;
  std::uint64_t seed = 1;  // seed of the draw that was used
  int attempts = 1;
  std::string matrix;

  PredicateMap predicates;
  DimPrediction predicted;
  std::map<std::string, long long> invariants;

  int window_lo = -3;
  int window_hi = 0;
  // Hom-group and module dimensions over the degree window.
  std::map<std::string, std::vector<long long>> windows;
  // Degree-zero values and other single integers.
  std::map<std::string, long long> computed;
  std::map<std::string, IdentityRecord> identities;
  // Tangent dimension against the predicted dimension of the locus.
  IdentityRecord prediction;
  bool prediction_binding = false;  // a mismatch fails the verdict
  std::vector<std::string> notes;

  bool pass() const;
  std::string verdict() const { return pass() ? "pass" : "fail"; }
  // Value of a named window at degree v, if computed.
  std::optional<long long> window_value(const std::string& name, int v) const;
};

// True when the spec draws random entries.
bool spec_is_random(const MatrixSpec& spec);

CaseReport run_case(const DegreeData& d, const MatrixSpec& spec, const CaseOptions& opt = {});

nlohmann::json to_json(const IdentityRecord& r);
nlohmann::json to_json(const CaseReport& r);
std::string render_table(const CaseReport& r);

struct CatalogEntry {
  std::string name;
  std::string description;
  DegreeData data;
  MatrixSpec spec;
  CaseOptions options;
  std::map<std::string, std::vector<long long>> expected_windows;
  std::map<std::string, long long> expected_values;
  std::map<std::string, IdentityStatus> expected_identities;
};

const std::vector<CatalogEntry>& catalog();
// Throws std::invalid_argument listing the available names.
const CatalogEntry& catalog_entry(const std::string& name);

struct CatalogResult {
  std::string name;
  CaseReport report;
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

// Runs one entry and compares against its expected integers and identity
// outcomes; prime overrides the entry's field when given.
CatalogResult verify_entry(const CatalogEntry& e, std::optional<std::uint32_t> prime = std::nullopt);
// "all" or a single name; results keep catalog order.
std::vector<CatalogResult> verify_catalog(const std::string& name, std::optional<std::uint32_t> prime = std::nullopt,
                                          int jobs = 1);
nlohmann::json to_json(const CatalogResult& r);

}  // namespace detloci

#endif
