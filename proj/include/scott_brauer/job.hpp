#pragma once

// Job documents for the command-line front end: parsing, canonical emission
// and execution into a report with a fixed schema.

#include <chrono>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "scott_brauer/brauer.hpp"

namespace sb::cli {

/// A recorded expectation of a built-in example did not hold.
class FixtureMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generated by generators of the group (by index) and/or explicit
/// permutations given as 0-based image arrays.
struct SubgroupSpec {
  std::vector<std::size_t> generator_indices;
  std::vector<std::vector<int>> permutations;

  bool operator==(const SubgroupSpec&) const = default;
};

struct ModuleSpec {
  /// "scott" (Sc(G,H)), "permutation" (Ind_H^G k), "trivial" or "matrices".
  std::string kind = "scott";
  std::string subgroup;  ///< H, for scott and permutation
  /// One square matrix per group generator, entries as field element codes.
  std::vector<std::vector<std::vector<long long>>> matrices;

  bool operator==(const ModuleSpec&) const = default;
};

struct JobOptions {
  bool conjugacy_reduction = true;
  unsigned max_extension_degree = 12;
  std::size_t max_order = 100000;
  std::size_t max_dim = 512;

  bool operator==(const JobOptions&) const = default;
};

struct JobSpec {
  std::string command;  ///< scott, decompose, brauer-quotient, check-bi
  unsigned p = 2;
  unsigned m = 1;
  std::size_t degree = 1;
  std::vector<std::vector<int>> generators;
  std::map<std::string, SubgroupSpec> subgroups;
  ModuleSpec module;
  std::string vertex;  ///< name of P (check-bi; optional for brauer-quotient)
  std::string q;       ///< name of Q (brauer-quotient)
  JobOptions options;

  bool operator==(const JobSpec&) const = default;
};

inline const std::vector<std::string> kCommands = {"scott", "decompose", "brauer-quotient", "check-bi", "reproduce"};
inline const std::vector<std::string> kExamples = {"ex2.3", "ex3.4", "ex3.5"};

/// Throws ParseError on malformed documents, unknown keys or bad permutations.
JobSpec parse_job(const std::string& text);
nlohmann::json job_to_json(const JobSpec& spec);
/// Canonical text: emit(parse(emit(s))) == emit(s).
std::string emit_job(const JobSpec& spec);
/// SHA-256 of the canonical text, hex.
std::string digest(const std::string& text);

struct Report {
  std::string command;
  std::string input_digest;
  std::string field;
  std::size_t group_order = 0;
  nlohmann::json verdicts = nlohmann::json::array();
  std::vector<std::size_t> extensions;
  nlohmann::json timings = nlohmann::json::object();
  std::vector<std::string> lines;  ///< human-readable form

  nlohmann::json to_json() const;
};

Report run_job(const JobSpec& spec);
/// Replays a built-in example and compares it against the recorded
/// expectations; throws FixtureMismatch on any drift.
Report reproduce(const std::string& example_id, const JobOptions& options = {});
/// The job document describing a built-in example.
JobSpec example_job(const std::string& example_id);

}  // namespace sb::cli
