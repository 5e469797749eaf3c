#include "crn/siphon.hpp"

#include <algorithm>
#include <functional>

#include "crn/lp.hpp"

namespace crn {

namespace {

bool complex_intersects(const Complex& cx, const SpeciesSet& members) {
  for (const auto& [id, coeff] : cx.coefficients()) {
    (void)coeff;
    if (members.count(id)) return true;
  }
  return false;
}

}  // namespace

bool is_semilocking(const Network& net, const SpeciesSet& members) {
  if (members.empty()) throw std::invalid_argument("empty species set");
  for (const auto& rx : net.reactions()) {
    if (complex_intersects(rx.product, members) && !complex_intersects(rx.reactant, members))
      return false;
  }
  return true;
}

bool is_locking(const Network& net, const SpeciesSet& members) {
  if (members.empty()) throw std::invalid_argument("empty species set");
  for (const auto& rx : net.reactions())
    if (!complex_intersects(rx.reactant, members)) return false;
  return true;
}

bool is_critical(const Network& net, const SpeciesSet& members) {
  const std::size_t m = net.species_count();
  const RationalMatrix gamma = stoichiometric_matrix(net).rational();

  // Semi-conservation vector with support contained in I: c >= 0,
  // sum_{i in I} c_i = 1 (normalizing c != 0), c_i = 0 off I, Gamma^T c = 0.
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
  return !lp_feasible(sys).feasible;
}

bool has_full_support_conservation(const Network& net, const SpeciesSet& members) {
  SpeciesSet complement;
  for (std::size_t i = 0; i < net.species_count(); ++i)
    if (!members.count(i)) complement.insert(i);
  return sign_constrained_nullvector(stoichiometric_matrix(net).rational(), members, complement)
      .has_value();
}

namespace {

SiphonRecord classify(const Network& net, SpeciesSet members) {
  SiphonRecord rec;
  rec.locking = is_locking(net, members);
  rec.critical = is_critical(net, members);
  rec.trivial = members.size() == net.species_count();
  rec.full_support_conservation = has_full_support_conservation(net, members);
  rec.geometry = face_geometry(net, members);
  rec.members = std::move(members);
  return rec;
}

// Guided DFS over in/out decisions per species. A partial assignment is
// pruned once some reaction's product touches a decided-in species while its
// whole reactant support is decided out.
void dfs_enumerate(const Network& net, std::size_t next, std::vector<int>& state,
                   std::vector<SpeciesSet>& out) {
  const std::size_t m = net.species_count();
  for (const auto& rx : net.reactions()) {
    bool product_in = false;
    for (const auto& [id, c] : rx.product.coefficients()) {
      (void)c;
      if (state[id] == 1) product_in = true;
    }
    if (!product_in) continue;
    bool reactant_possible = false;
    for (const auto& [id, c] : rx.reactant.coefficients()) {
      (void)c;
      if (state[id] != 0) reactant_possible = true;
    }
    if (!reactant_possible) return;
  }

  if (next == m) {
    SpeciesSet members;
    for (std::size_t i = 0; i < m; ++i)
      if (state[i] == 1) members.insert(i);
    if (!members.empty() && is_semilocking(net, members)) out.push_back(std::move(members));
    return;
  }
  state[next] = 1;
  dfs_enumerate(net, next + 1, state, out);
  state[next] = 0;
  dfs_enumerate(net, next + 1, state, out);
  state[next] = -1;  // undecided marker restored
}

}  // namespace

std::vector<SiphonRecord> enumerate_siphons(const Network& net, bool minimal_only,
                                            std::size_t species_cap) {
  const std::size_t m = net.species_count();
  if (m > species_cap) throw EnumerationOverflow(species_cap);

  std::vector<SpeciesSet> found;
  if (m <= 12) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      SpeciesSet members;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::uint64_t{1} << i)) members.insert(i);
      if (is_semilocking(net, members)) found.push_back(std::move(members));
    }
  } else {
    std::vector<int> state(m, -1);
    dfs_enumerate(net, 0, state, found);
  }

  std::sort(found.begin(), found.end(), [](const SpeciesSet& a, const SpeciesSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  if (minimal_only) {
    std::vector<SpeciesSet> minimal;
    for (const auto& cand : found) {
      bool dominated = false;
      for (const auto& kept : minimal) {
        if (std::includes(cand.begin(), cand.end(), kept.begin(), kept.end())) {
          dominated = true;
          break;
        }
      }
      if (!dominated) minimal.push_back(cand);
    }
    found = std::move(minimal);
  }

  std::vector<SiphonRecord> records;
  records.reserve(found.size());
  for (auto& members : found) records.push_back(classify(net, std::move(members)));
  return records;
}

bool has_nested_critical_locking_sets(const Network& net,
                                      const std::vector<SiphonRecord>& siphons) {
  std::vector<const SiphonRecord*> critical_locking;
  for (const auto& rec : siphons)
    if (rec.locking && rec.critical) critical_locking.push_back(&rec);
  (void)net;
  for (std::size_t a = 0; a < critical_locking.size(); ++a) {
    for (std::size_t b = 0; b < critical_locking.size(); ++b) {
      if (a == b) continue;
      const auto& sa = critical_locking[a]->members;
      const auto& sb = critical_locking[b]->members;
      if (sa.size() < sb.size() && std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
        return true;
    }
  }
  return false;
}

}  // namespace crn
