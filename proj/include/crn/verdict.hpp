#ifndef CRN_VERDICT_HPP
#define CRN_VERDICT_HPP

#include <string>
#include <vector>

#include "crn/wdne.hpp"

#include <json.hpp>

namespace crn {

enum class Boundedness { Conservative, ComplexBalancedStructural, AssumedByFlag, Unknown };
enum class Verdict { Persistent, PersistentAndGAC, PersistentIfBounded, Inconclusive };

std::string to_string(Boundedness b);
std::string to_string(Verdict v);
std::string to_string(StatusKind k);

struct AnalyzedSiphon {
  SiphonRecord record;
  SiphonStatus status;
  std::string rule;  // provenance of the resolving rule (or the failure)
};

struct AnalysisReport {
  StructureSummary structure;
  std::vector<AnalyzedSiphon> siphons;
  bool nested_critical_locking = false;
  Boundedness boundedness = Boundedness::Unknown;
  Verdict verdict = Verdict::Inconclusive;
};

struct AnalysisConfig {
  Rational epsilon = Rational(1, Integer(1) << 40);
  std::size_t j_subset_cap = std::size_t{1} << 16;
  std::size_t siphon_cap = 20;
  bool assume_bounded = false;
  std::size_t threads = 1;  // per-siphon certification parallelism
};

AnalysisReport analyze(const Network& net, const AnalysisConfig& config = {});

nlohmann::ordered_json report_to_json(const AnalysisReport& report, const Network& net);
std::string report_to_text(const AnalysisReport& report, const Network& net);

}  // namespace crn

#endif
