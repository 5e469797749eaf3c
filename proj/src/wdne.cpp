#include "crn/wdne.hpp"

#include <algorithm>
#include <numeric>

namespace crn {

namespace {

// R_i <=_I R_j: reactant of i majorizes reactant of j on I, strictly somewhere.
bool dominates(const Network& net, const SpeciesSet& members, std::size_t i, std::size_t j) {
  const auto& alpha_i = net.reactions()[i].reactant;
  const auto& alpha_j = net.reactions()[j].reactant;
  bool strict = false;
  for (std::size_t k : members) {
    const long long ai = alpha_i.coefficient(k);
    const long long aj = alpha_j.coefficient(k);
    if (ai < aj) return false;
    if (ai > aj) strict = true;
  }
  return strict;
}

}  // namespace

std::vector<OrderPair> order_pairs(const Network& net, const SpeciesSet& members) {
  if (members.empty()) throw std::invalid_argument("order_pairs: empty species set");
  std::vector<OrderPair> pairs;
  const std::size_t r = net.reaction_count();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && dominates(net, members, i, j)) pairs.push_back({i, j});
  return pairs;
}

GammaTilde build_gamma_tilde(const Network& net, const SpeciesSet& members,
                             const std::vector<OrderPair>& pairs, const Rational& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  const std::vector<OrderPair> relation = order_pairs(net, members);
  for (const auto& p : pairs) {
    if (std::find(relation.begin(), relation.end(), p) == relation.end())
      throw std::invalid_argument("pair not in the dominance relation of I");
  }

  const RationalMatrix gamma = stoichiometric_matrix(net).rational();
  const std::vector<std::size_t> rows(members.begin(), members.end());
  RationalMatrix gamma_j(pairs.size(), net.reaction_count());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    gamma_j.at(p, pairs[p].dominated) = 1;
    gamma_j.at(p, pairs[p].dominating) = -epsilon;
  }
  return {members, pairs, epsilon, gamma.select_rows(rows).stacked(gamma_j)};
}

bool verify_certificate(const Network& net, const WdneCertificate& cert) {
  const GammaTilde gt = build_gamma_tilde(net, cert.members, cert.pairs, cert.epsilon);
  if (cert.c.size() != gt.matrix.rows()) return false;
  for (const auto& q : cert.c)
    if (q < 1) return false;
  for (const auto& entry : gt.matrix.apply_left(cert.c))
    if (entry < 0) return false;

  if (cert.alpha.size() != net.species_count()) return false;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < cert.alpha.size(); ++i) {
    if (cert.members.count(i)) {
      if (cert.alpha[i] != -cert.c[idx] || cert.alpha[i] >= 0) return false;
      ++idx;
    } else if (cert.alpha[i] != 0) {
      return false;
    }
  }
  return true;
}

WdneCheck check_wdne(const Network& net, const SpeciesSet& members,
                     const std::vector<OrderPair>& pairs, const Rational& epsilon) {
  const GammaTilde gt = build_gamma_tilde(net, members, pairs, epsilon);
  FarkasResult farkas = farkas_alternative(gt.matrix);

  WdneCheck out;
  if (farkas.branch == FarkasBranch::ConeWitness) {
    out.cone_witness = std::move(farkas.witness);
    return out;
  }

  WdneCertificate cert;
  cert.members = members;
  cert.pairs = pairs;
  cert.epsilon = epsilon;
  cert.c = std::move(farkas.witness);
  cert.alpha.assign(net.species_count(), Rational(0));
  std::size_t idx = 0;
  for (std::size_t i : members) cert.alpha[i] = -cert.c[idx++];
  if (!verify_certificate(net, cert))
    throw std::logic_error("check_wdne: certificate failed re-verification");
  out.certificate = std::move(cert);
  return out;
}

DneClassicResult check_dne_classic(const Network& net, const SpeciesSet& members,
                                   const Rational& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  const std::size_t r = net.reaction_count();
  const RationalMatrix gamma = stoichiometric_matrix(net).rational();

  LpSystem sys;
  sys.num_vars = r;
  for (std::size_t k : members) {
    LinearConstraint row;
    row.coeffs.resize(r);
    for (std::size_t i = 0; i < r; ++i) row.coeffs[i] = gamma.at(k, i);
    row.relation = Relation::LessEq;
    row.rhs = 0;
    sys.constraints.push_back(std::move(row));
  }
  for (const auto& p : order_pairs(net, members)) {
    LinearConstraint row;
    row.coeffs.assign(r, Rational(0));
    row.coeffs[p.dominated] = 1;
    row.coeffs[p.dominating] = -epsilon;
    row.relation = Relation::LessEq;
    row.rhs = 0;
    sys.constraints.push_back(std::move(row));
  }
  LinearConstraint norm;
  norm.coeffs.assign(r, Rational(1));
  norm.relation = Relation::Equal;
  norm.rhs = 1;
  sys.constraints.push_back(std::move(norm));

  LpOutcome lp = lp_feasible(sys);
  DneClassicResult out;
  out.non_emptiable = !lp.feasible;
  if (lp.feasible) out.witness = std::move(lp.point);
  return out;
}

std::optional<FacetShortcut> facet_shortcut(const Network& net, const SpeciesSet& members) {
  const ComplexGraph graph = complex_graph(net);
  if (!is_weakly_reversible(graph)) return std::nullopt;

  const RationalMatrix gamma = stoichiometric_matrix(net).rational();
  const std::vector<std::size_t> rows(members.begin(), members.end());
  const RationalMatrix gamma_i = gamma.select_rows(rows);
  if (rank(gamma_i) != 1) return std::nullopt;

  const std::size_t r = net.reaction_count();
  const std::size_t ni = rows.size();

  // Factor Gamma_I = z gamma^T with z strictly positive on I.
  std::size_t anchor = r;
  for (std::size_t i = 0; i < r && anchor == r; ++i)
    for (std::size_t j = 0; j < ni; ++j)
      if (gamma_i.at(j, i) != 0) {
        anchor = i;
        break;
      }
  if (anchor == r) return std::nullopt;

  std::vector<Rational> z(ni);
  const bool anchor_positive = gamma_i.at(0, anchor) > 0;
  for (std::size_t j = 0; j < ni; ++j) {
    const Rational& entry = gamma_i.at(j, anchor);
    if (entry == 0 || (entry > 0) != anchor_positive) return std::nullopt;
    z[j] = anchor_positive ? entry : -entry;
  }
  std::vector<Rational> direction(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Rational lambda = gamma_i.at(0, i) / z[0];
    for (std::size_t j = 0; j < ni; ++j)
      if (gamma_i.at(j, i) != lambda * z[j]) return std::nullopt;
    direction[i] = lambda;
  }

  // Per linkage class, pair every net-loss reaction with one dominating
  // net-gain reaction.
  std::vector<OrderPair> pairs;
  for (std::size_t cls = 0; cls < graph.linkage_classes.size(); ++cls) {
    std::vector<std::size_t> gain, loss;
    for (std::size_t i = 0; i < r; ++i) {
      if (graph.node_class[graph.edges[i].first] != cls) continue;
      if (direction[i] > 0) gain.push_back(i);
      if (direction[i] < 0) loss.push_back(i);
    }
    if (loss.empty()) continue;
    if (gain.empty()) return std::nullopt;

    std::size_t best = gain.front();
    std::size_t best_count = 0;
    for (std::size_t cand : gain) {
      std::size_t count = 0;
      for (std::size_t j : loss)
        if (dominates(net, members, j, cand)) ++count;
      if (count > best_count) {
        best = cand;
        best_count = count;
      }
    }
    for (std::size_t j : loss) {
      if (!dominates(net, members, j, best)) return std::nullopt;
      pairs.push_back({j, best});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return FacetShortcut{std::move(pairs), std::move(z), std::move(direction)};
}

namespace {

constexpr std::size_t kMaxStoredAttempts = 8;

void record_failure(SiphonStatus& status, std::vector<OrderPair> pairs,
                    std::vector<Rational> witness) {
  if (status.failed_attempts.size() < kMaxStoredAttempts)
    status.failed_attempts.push_back({std::move(pairs), std::move(witness)});
}

std::optional<std::vector<Rational>> semi_conservation_witness(const Network& net,
                                                               const SpeciesSet& members) {
  const std::size_t m = net.species_count();
  const RationalMatrix gamma = stoichiometric_matrix(net).rational();
  LpSystem sys;
  sys.num_vars = m;
  LinearConstraint norm;
  norm.coeffs.assign(m, Rational(0));
  for (std::size_t i : members) norm.coeffs[i] = 1;
  norm.relation = Relation::Equal;
  norm.rhs = 1;
  sys.constraints.push_back(std::move(norm));
  for (std::size_t i = 0; i < m; ++i) {
    if (members.count(i)) continue;
    LinearConstraint zero;
    zero.coeffs.assign(m, Rational(0));
    zero.coeffs[i] = 1;
    zero.relation = Relation::Equal;
    zero.rhs = 0;
    sys.constraints.push_back(std::move(zero));
  }
  for (std::size_t j = 0; j < gamma.cols(); ++j) {
    LinearConstraint col;
    col.coeffs.resize(m);
    for (std::size_t i = 0; i < m; ++i) col.coeffs[i] = gamma.at(i, j);
    col.relation = Relation::Equal;
    col.rhs = 0;
    sys.constraints.push_back(std::move(col));
  }
  LpOutcome lp = lp_feasible(sys);
  if (!lp.feasible) return std::nullopt;
  return lp.point;
}

}  // namespace

SiphonStatus certify_siphon(const Network& net, const SiphonRecord& record,
                            const CertifyConfig& config, const StructureSummary& structure) {
  const SpeciesSet& members = record.members;
  SiphonStatus status;

  // The trivial siphon of a complex balanced system is the origin vertex; no
  // trajectory may approach it, so it never needs a WDNE search.
  if (record.trivial && structure.complex_balanced_for_all_k && record.geometry.is_vertex) {
    status.kind = StatusKind::VertexOrEmpty;
    status.note = "origin vertex of a complex balanced system";
    return status;
  }

  // (a) Conservation exclusion: a semi-conservation vector supported inside I
  // keeps c^T x(t) constant and positive, so L_I is unreachable.
  if (!record.critical) {
    status.kind = StatusKind::ExcludedByConservation;
    status.conservation_witness = semi_conservation_witness(net, members);
    if (!status.conservation_witness)
      throw std::logic_error("non-critical siphon without a semi-conservation witness");
    // (b) With support exactly I the empty-J certificate also exists.
    if (record.full_support_conservation) {
      SpeciesSet complement;
      for (std::size_t i = 0; i < net.species_count(); ++i)
        if (!members.count(i)) complement.insert(i);
      auto c_full = sign_constrained_nullvector(stoichiometric_matrix(net).rational(), members,
                                                complement);
      if (c_full) {
        WdneCertificate cert;
        cert.members = members;
        cert.epsilon = config.epsilon;
        cert.alpha.assign(net.species_count(), Rational(0));
        for (std::size_t i : members) {
          cert.c.push_back((*c_full)[i]);
          cert.alpha[i] = -(*c_full)[i];
        }
        if (verify_certificate(net, cert)) {
          status.certificate = std::move(cert);
          status.route = CertRoute::NoncriticalShortcut;
        }
      }
    }
    return status;
  }

  // (c) Facet shortcut: the proposal is only trusted after check_wdne
  // validates it.
  if (structure.weakly_reversible) {
    if (auto shortcut = facet_shortcut(net, members)) {
      WdneCheck chk = check_wdne(net, members, shortcut->pairs, config.epsilon);
      if (chk.certificate) {
        status.kind = StatusKind::WdneCertified;
        status.route = CertRoute::FacetShortcutRoute;
        status.certificate = std::move(chk.certificate);
        return status;
      }
      record_failure(status, shortcut->pairs, std::move(chk.cone_witness));
    }
  }

  // (d) J search over subsets of R_I: empty set, the full relation, all
  // singletons, then growing subsets up to the cap.
  const std::vector<OrderPair> relation = order_pairs(net, members);
  std::vector<std::vector<OrderPair>> candidates;
  candidates.push_back({});
  if (!relation.empty()) candidates.push_back(relation);
  if (relation.size() > 1)
    for (const auto& p : relation) candidates.push_back({p});

  std::size_t attempted = 0;
  auto try_candidate = [&](const std::vector<OrderPair>& pairs) -> bool {
    ++attempted;
    WdneCheck chk = check_wdne(net, members, pairs, config.epsilon);
    if (chk.certificate) {
      status.kind = StatusKind::WdneCertified;
      status.route = CertRoute::Direct;
      status.certificate = std::move(chk.certificate);
      return true;
    }
    record_failure(status, pairs, std::move(chk.cone_witness));
    return false;
  };

  for (const auto& pairs : candidates)
    if (try_candidate(pairs)) return status;

  for (std::size_t size = 2; size + 1 <= relation.size(); ++size) {
    // Lexicographic combinations of the given size.
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
      if (attempted >= config.j_subset_cap) {
        status.search_capped = true;
        break;
      }
      std::vector<OrderPair> pairs;
      pairs.reserve(size);
      for (std::size_t k : idx) pairs.push_back(relation[k]);
      if (try_candidate(pairs)) return status;

      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == relation.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t k = pos; k < size; ++k) idx[k] = idx[k - 1] + 1;
    }
    if (status.search_capped) break;
  }

  status.note = "no certificate among " + std::to_string(attempted) +
                " pair sets at epsilon = " + format_rational(config.epsilon);

  // (e) Vertex route for complex balanced systems.
  if (structure.complex_balanced_for_all_k && record.geometry.is_vertex) {
    status.kind = StatusKind::VertexOrEmpty;
    return status;
  }

  status.kind = StatusKind::Unresolved;
  return status;
}

}  // namespace crn
