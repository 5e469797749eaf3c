#include "crn/verdict.hpp"

#include <future>
#include <sstream>

namespace crn {

std::string to_string(Boundedness b) {
  switch (b) {
    case Boundedness::Conservative: return "Conservative";
    case Boundedness::ComplexBalancedStructural: return "ComplexBalancedStructural";
    case Boundedness::AssumedByFlag: return "AssumedByFlag";
    case Boundedness::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Persistent: return "Persistent";
    case Verdict::PersistentAndGAC: return "PersistentAndGAC";
    case Verdict::PersistentIfBounded: return "PersistentIfBounded";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string to_string(StatusKind k) {
  switch (k) {
    case StatusKind::ExcludedByConservation: return "ExcludedByConservation";
    case StatusKind::WdneCertified: return "WdneCertified";
    case StatusKind::VertexOrEmpty: return "VertexOrEmpty";
    case StatusKind::Unresolved: return "Unresolved";
  }
  return "Unresolved";
}

namespace {

std::string rule_for(const AnalyzedSiphon& s) {
  switch (s.status.kind) {
    case StatusKind::ExcludedByConservation:
      return s.status.certificate
                 ? "conservation exclusion; full-support semi-conservation vector also yields the "
                   "empty-J certificate"
                 : "conservation exclusion: c^T x(t) is a positive invariant vanishing on L_I";
    case StatusKind::WdneCertified:
      switch (s.status.route) {
        case CertRoute::FacetShortcutRoute:
          return "weakly dynamically non-emptiable via the facet construction";
        case CertRoute::NoncriticalShortcut:
          return "weakly dynamically non-emptiable via the empty-J conservation certificate";
        case CertRoute::Direct:
          return "weakly dynamically non-emptiable via J search";
      }
      return "weakly dynamically non-emptiable";
    case StatusKind::VertexOrEmpty:
      return "vertex face of a complex balanced system; unreachable by any trajectory";
    case StatusKind::Unresolved:
      return s.status.note.empty() ? "unresolved" : "unresolved: " + s.status.note;
  }
  return "unresolved";
}

bool corollary_route(const AnalyzedSiphon& s) {
  switch (s.status.kind) {
    case StatusKind::WdneCertified:
    case StatusKind::VertexOrEmpty:
      return true;
    case StatusKind::ExcludedByConservation:
      return s.status.certificate.has_value();
    case StatusKind::Unresolved:
      return false;
  }
  return false;
}

}  // namespace

AnalysisReport analyze(const Network& net, const AnalysisConfig& config) {
  AnalysisReport report;
  report.structure = analyze_structure(net);

  const std::vector<SiphonRecord> records = enumerate_siphons(net, false, config.siphon_cap);
  const CertifyConfig certify_config{config.epsilon, config.j_subset_cap};

  std::vector<SiphonStatus> statuses(records.size());
  if (config.threads > 1 && records.size() > 1) {
    // Certification is pure per siphon; results are collected back in
    // enumeration order, so the report stays deterministic.
    std::vector<std::future<SiphonStatus>> futures;
    futures.reserve(records.size());
    for (const auto& record : records)
      futures.push_back(std::async(std::launch::async, [&net, &record, &certify_config, &report] {
        return certify_siphon(net, record, certify_config, report.structure);
      }));
    for (std::size_t i = 0; i < records.size(); ++i) statuses[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < records.size(); ++i)
      statuses[i] = certify_siphon(net, records[i], certify_config, report.structure);
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    AnalyzedSiphon entry;
    entry.record = records[i];
    entry.status = std::move(statuses[i]);
    entry.rule = rule_for(entry);
    report.siphons.push_back(std::move(entry));
  }
  report.nested_critical_locking = has_nested_critical_locking_sets(net, records);

  if (report.structure.conservative)
    report.boundedness = Boundedness::Conservative;
  else if (report.structure.complex_balanced_for_all_k)
    report.boundedness = Boundedness::ComplexBalancedStructural;
  else if (config.assume_bounded)
    report.boundedness = Boundedness::AssumedByFlag;
  else
    report.boundedness = Boundedness::Unknown;

  bool all_resolved = true;
  bool all_corollary = true;
  for (const auto& s : report.siphons) {
    if (s.status.kind == StatusKind::Unresolved) all_resolved = false;
    if (!corollary_route(s)) all_corollary = false;
  }

  if (!all_resolved)
    report.verdict = Verdict::Inconclusive;
  else if (report.boundedness == Boundedness::Unknown)
    report.verdict = Verdict::PersistentIfBounded;
  else if (report.structure.complex_balanced_for_all_k && all_corollary)
    report.verdict = Verdict::PersistentAndGAC;
  else
    report.verdict = Verdict::Persistent;
  return report;
}

namespace {

using Json = nlohmann::ordered_json;

Json json_rationals(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(format_rational(q));
  return arr;
}

Json json_species_set(const SpeciesSet& members, const Network& net) {
  Json arr = Json::array();
  for (std::size_t i : members) arr.push_back(net.species_name(i));
  return arr;
}

Json json_pairs(const std::vector<OrderPair>& pairs) {
  Json arr = Json::array();
  for (const auto& p : pairs)
    arr.push_back(Json::array({p.dominated + 1, p.dominating + 1}));  // 1-based in reports
  return arr;
}

Json json_status(const SiphonStatus& status) {
  Json st;
  st["kind"] = to_string(status.kind);
  if (status.certificate) {
    const auto& cert = *status.certificate;
    st["J"] = json_pairs(cert.pairs);
    st["epsilon"] = format_rational(cert.epsilon);
    st["c"] = json_rationals(cert.c);
    st["alpha"] = json_rationals(cert.alpha);
  } else {
    st["J"] = nullptr;
    st["epsilon"] = nullptr;
    st["c"] = nullptr;
    st["alpha"] = nullptr;
  }
  if (status.conservation_witness)
    st["witness"] = json_rationals(*status.conservation_witness);
  else if (!status.failed_attempts.empty())
    st["witness"] = json_rationals(status.failed_attempts.front().cone_witness);
  else
    st["witness"] = nullptr;
  if (!status.failed_attempts.empty()) {
    Json attempts = Json::array();
    for (const auto& att : status.failed_attempts) {
      Json a;
      a["J"] = json_pairs(att.pairs);
      a["cone_witness"] = json_rationals(att.cone_witness);
      attempts.push_back(std::move(a));
    }
    st["failed_attempts"] = std::move(attempts);
  }
  if (status.search_capped) st["search_capped"] = true;
  if (!status.note.empty()) st["note"] = status.note;
  return st;
}

}  // namespace

nlohmann::ordered_json report_to_json(const AnalysisReport& report, const Network& net) {
  Json root;
  Json structure;
  structure["complexes"] = report.structure.complex_count;
  structure["linkage_classes"] = report.structure.linkage_count;
  structure["rank"] = report.structure.stoich_rank;
  structure["deficiency"] = report.structure.deficiency;
  structure["weakly_reversible"] = report.structure.weakly_reversible;
  structure["conservative"] = report.structure.conservative;
  structure["conservation_vector"] =
      report.structure.conservation_vector ? json_rationals(*report.structure.conservation_vector)
                                           : Json(nullptr);
  structure["complex_balanced_for_all_k"] = report.structure.complex_balanced_for_all_k;
  root["structure"] = std::move(structure);
  root["boundedness"] = to_string(report.boundedness);

  Json siphons = Json::array();
  for (const auto& s : report.siphons) {
    Json rec;
    rec["I"] = json_species_set(s.record.members, net);
    rec["locking"] = s.record.locking;
    rec["critical"] = s.record.critical;
    rec["trivial"] = s.record.trivial;
    rec["full_support_conservation"] = s.record.full_support_conservation;
    rec["face_dim"] = s.record.geometry.face_dim;
    rec["is_facet"] = s.record.geometry.is_facet;
    rec["is_vertex"] = s.record.geometry.is_vertex;
    rec["status"] = json_status(s.status);
    siphons.push_back(std::move(rec));
  }
  root["siphons"] = std::move(siphons);
  root["nested_critical_locking_sets"] = report.nested_critical_locking;
  root["verdict"] = to_string(report.verdict);

  Json trace = Json::array();
  for (const auto& s : report.siphons) {
    Json entry;
    entry["I"] = json_species_set(s.record.members, net);
    entry["rule"] = s.rule;
    trace.push_back(std::move(entry));
  }
  root["rule_trace"] = std::move(trace);
  return root;
}

namespace {

std::string species_set_text(const SpeciesSet& members, const Network& net) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : members) {
    if (!first) out += ",";
    first = false;
    out += net.species_name(i);
  }
  return out + "}";
}

}  // namespace

std::string report_to_text(const AnalysisReport& report, const Network& net) {
  std::ostringstream os;
  os << "structure: n=" << report.structure.complex_count
     << " l=" << report.structure.linkage_count << " s=" << report.structure.stoich_rank
     << " deficiency=" << report.structure.deficiency
     << (report.structure.weakly_reversible ? " weakly-reversible" : " not-weakly-reversible")
     << (report.structure.conservative ? " conservative" : " not-conservative");
  if (report.structure.complex_balanced_for_all_k) os << " complex-balanced(structural)";
  os << "\n";
  os << "boundedness: " << to_string(report.boundedness) << "\n";
  os << "siphons: " << report.siphons.size() << "\n";
  for (const auto& s : report.siphons) {
    os << "  " << species_set_text(s.record.members, net)
       << (s.record.locking ? " locking" : " semi-locking")
       << (s.record.critical ? " critical" : " non-critical") << " face_dim="
       << s.record.geometry.face_dim;
    if (s.record.geometry.is_facet) os << " facet";
    if (s.record.geometry.is_vertex) os << " vertex";
    os << "\n    " << to_string(s.status.kind) << ": " << s.rule << "\n";
    if (s.status.certificate) {
      const auto& cert = *s.status.certificate;
      os << "    J = [";
      for (std::size_t p = 0; p < cert.pairs.size(); ++p) {
        if (p) os << ", ";
        os << "(" << cert.pairs[p].dominated + 1 << "," << cert.pairs[p].dominating + 1 << ")";
      }
      os << "]  epsilon = " << format_rational(cert.epsilon) << "\n    c = (";
      for (std::size_t i = 0; i < cert.c.size(); ++i) {
        if (i) os << ", ";
        os << format_rational(cert.c[i]);
      }
      os << ")  alpha = (";
      for (std::size_t i = 0; i < cert.alpha.size(); ++i) {
        if (i) os << ", ";
        os << format_rational(cert.alpha[i]);
      }
      os << ")\n";
    }
  }
  os << "verdict: " << to_string(report.verdict) << "\n";
  return os.str();
}

}  // namespace crn
