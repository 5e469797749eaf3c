#ifndef CRN_WDNE_HPP
#define CRN_WDNE_HPP

#include <optional>
#include <string>
#include <vector>

#include "crn/lp.hpp"
#include "crn/siphon.hpp"
#include "crn/structure.hpp"

namespace crn {

/// Reaction dominance pair: the reactant of `dominated` majorizes the
/// reactant of `dominating` on I (strictly somewhere), so near the face the
/// dominated rate is arbitrarily small relative to the dominating one.
struct OrderPair {
  std::size_t dominated = 0;   // i in R_i <=_I R_j
  std::size_t dominating = 0;  // j

  bool operator==(const OrderPair&) const = default;
  auto operator<=>(const OrderPair&) const = default;
};

/// The full relation R_I: all pairs (i, j) with R_i <=_I R_j. Raw pairs, no
/// transitive closure.
std::vector<OrderPair> order_pairs(const Network& net, const SpeciesSet& members);

/// Gamma_I stacked over one row per pair (i, j): +1 in column i, -epsilon in
/// column j.
struct GammaTilde {
  SpeciesSet members;
  std::vector<OrderPair> pairs;
  Rational epsilon;
  RationalMatrix matrix;  // (|I| + |pairs|) x r
};

GammaTilde build_gamma_tilde(const Network& net, const SpeciesSet& members,
                             const std::vector<OrderPair>& pairs, const Rational& epsilon);

/// Certificate of weak dynamical non-emptiability: strictly positive c with
/// c^T GammaTilde >= 0; alpha = -c_I extended by zeros off I.
struct WdneCertificate {
  SpeciesSet members;
  std::vector<OrderPair> pairs;
  Rational epsilon;
  std::vector<Rational> c;      // |I| + |pairs| entries, all >= 1
  std::vector<Rational> alpha;  // m entries, negative exactly on I
};

/// Exact re-verification of all certificate invariants.
bool verify_certificate(const Network& net, const WdneCertificate& cert);

struct WdneCheck {
  std::optional<WdneCertificate> certificate;
  std::vector<Rational> cone_witness;  // branch-1 diagnostic when no certificate
};

WdneCheck check_wdne(const Network& net, const SpeciesSet& members,
                     const std::vector<OrderPair>& pairs, const Rational& epsilon);

/// Classical non-emptiability: the cone {v >= 0, Gamma_I v <= 0, v_i <=
/// eps v_j for all (i,j) in R_I} is trivial.
struct DneClassicResult {
  bool non_emptiable = false;
  std::vector<Rational> witness;  // nonzero cone point when not non-emptiable
};

DneClassicResult check_dne_classic(const Network& net, const SpeciesSet& members,
                                   const Rational& epsilon);

/// Rank-one factorization shortcut for facets of weakly reversible networks:
/// proposes a pair set J built per linkage class from the net-loss reactions,
/// each paired with a dominating net-gain reaction. The caller must still
/// validate J through check_wdne.
struct FacetShortcut {
  std::vector<OrderPair> pairs;
  std::vector<Rational> z;      // positive factor on I
  std::vector<Rational> gamma;  // per-reaction net direction
};

std::optional<FacetShortcut> facet_shortcut(const Network& net, const SpeciesSet& members);

enum class StatusKind { ExcludedByConservation, WdneCertified, VertexOrEmpty, Unresolved };
enum class CertRoute { Direct, FacetShortcutRoute, NoncriticalShortcut };

struct FailedAttempt {
  std::vector<OrderPair> pairs;
  std::vector<Rational> cone_witness;
};

struct SiphonStatus {
  StatusKind kind = StatusKind::Unresolved;
  CertRoute route = CertRoute::Direct;
  std::optional<WdneCertificate> certificate;
  std::optional<std::vector<Rational>> conservation_witness;
  std::vector<FailedAttempt> failed_attempts;
  bool search_capped = false;
  std::string note;
};

struct CertifyConfig {
  Rational epsilon = Rational(1, Integer(1) << 40);
  std::size_t j_subset_cap = std::size_t{1} << 16;
};

/// Tries, in order: conservation exclusion, the facet shortcut, the J search
/// (empty set, full R_I, singletons, growing subsets), and the vertex route
/// for complex balanced systems.
SiphonStatus certify_siphon(const Network& net, const SiphonRecord& record,
                            const CertifyConfig& config, const StructureSummary& structure);

}  // namespace crn

#endif
