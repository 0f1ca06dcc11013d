#ifndef DETLOCI_CLI_HPP
#define DETLOCI_CLI_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "detloci/detschemes.hpp"
#include "detloci/invariants.hpp"
#include "detloci/verifier.hpp"

namespace detloci {

// Case files are flat "key = value" lines; '#' starts a comment and a line
// holding only "---" separates cases in a batch file.
//
//   name    = free text
//   t, c, r, n = integers
//   a, b    = integers separated by spaces or commas (b defaults to zeros)
//   matrix  = generic | random | power | explicit
//   entries = row-major entries, ',' between entries and ';' between rows
//   seed    = unsigned integer
//   prime   = odd prime below 2^16
//   window  = lo..hi
//   checks  = comma list of flag, ext1, exgenassump, kappa, a3r or a3r:STEPS
//   format  = text | json
//
// Unknown or repeated keys are errors.
struct CaseSpec {
  std::string name;
  DegreeData data;
  MatrixSpec matrix;
  CaseOptions options;
  bool window_set = false;
  bool json = false;
};

CaseSpec parse_case(const std::string& text);
std::vector<CaseSpec> parse_cases(const std::string& text);
std::string read_file(const std::string& path);

std::vector<int> parse_int_list(const std::string& s, const std::string& field);
std::pair<int, int> parse_window(const std::string& s);
// Applies a checks list to opt.
void apply_checks(const std::string& s, CaseOptions& opt);
std::vector<std::string> split_entries(const std::string& s);

// Invariant table for cmd_invariants.
nlohmann::json invariants_json(const DegreeData& d);
std::string invariants_text(const DegreeData& d);
nlohmann::json prediction_json(const DimPrediction& p);
std::string prediction_text(const DimPrediction& p);

}  // namespace detloci

#endif
