#pragma once

#include <string>
#include <vector>

#include "kproj/analysis.hpp"

namespace kproj {

// Shortest decimal that round-trips to the same binary64 value (17
// significant digits at most); used everywhere a number is printed so that
// identical runs give byte-identical artifacts.
std::string format_double(double v);

// Resolved run configuration. Field `depth` / range zeros mean "use the
// family default" (A: [2,1000] at depth 1002; B: [2,30] at 32; C: [2,10] at
// 12, or [2,22] at 24 in extended mode).
struct RunConfig {
  Case family = Case::B;
  double lambda = 0.5;
  double q = 1.0;
  int depth = 0;
  int n0 = 0;
  int n1 = 0;
  std::string out_dir = ".";
  std::vector<std::string> formats = {"json"};
  Precision mode = Precision::standard;

  AlphaSequence make_sequence() const;
  void apply_defaults();
};

RunConfig config_from_json(const std::string& text);
std::string config_to_json(const RunConfig& cfg);

std::string sequence_to_json(const AlphaSequence& seq);
AlphaSequence sequence_from_json(const std::string& text);

// Boundary as a list of typed pieces plus the generating sequence and depth;
// the loader restores the pieces bit-identically.
std::string boundary_to_json(const BoundaryModel& model);
BoundaryModel boundary_from_json(const std::string& text);

std::string projection_to_json(const ProjectionResult& result);
std::string lemma_report_to_json(const LemmaReport& report,
                                 const RunConfig& cfg);

std::string quotients_csv(const std::vector<QuotientSample>& samples);
std::string lemma_csv(const LemmaReport& report);

// Throws std::runtime_error on failure.
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace kproj
