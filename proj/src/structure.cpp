#include "crn/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "crn/lp.hpp"

namespace crn {

ComplexGraph complex_graph(const Network& net) {
  ComplexGraph g;
  std::map<Complex, std::size_t> node_of;
  auto intern = [&](const Complex& cx) {
    auto [it, inserted] = node_of.emplace(cx, g.nodes.size());
    if (inserted) g.nodes.push_back(cx);
    return it->second;
  };
  for (const auto& rx : net.reactions())
    g.edges.emplace_back(intern(rx.reactant), intern(rx.product));

  // Linkage classes: weakly connected components via union-find.
  std::vector<std::size_t> parent(g.nodes.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& [u, v] : g.edges) parent[find(u)] = find(v);

  std::map<std::size_t, std::size_t> class_of_root;
  g.node_class.resize(g.nodes.size());
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    auto [it, inserted] = class_of_root.emplace(find(v), g.linkage_classes.size());
    if (inserted) g.linkage_classes.emplace_back();
    g.node_class[v] = it->second;
    g.linkage_classes[it->second].push_back(v);
  }
  return g;
}

bool is_weakly_reversible(const ComplexGraph& g) {
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<std::size_t>> fwd(n), rev(n);
  for (const auto& [u, v] : g.edges) {
    fwd[u].push_back(v);
    rev[v].push_back(u);
  }
  auto reach = [&](std::size_t start, const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    return seen;
  };
  // A weakly connected component is strongly connected iff every node of the
  // component is reachable from any fixed node in both directions.
  for (const auto& cls : g.linkage_classes) {
    const auto fwd_seen = reach(cls.front(), fwd);
    const auto rev_seen = reach(cls.front(), rev);
    for (std::size_t v : cls)
      if (!fwd_seen[v] || !rev_seen[v]) return false;
  }
  return true;
}

ConservationAnalysis conservation_analysis(const Network& net) {
  SpeciesSet all;
  for (std::size_t i = 0; i < net.species_count(); ++i) all.insert(i);
  auto c = sign_constrained_nullvector(stoichiometric_matrix(net).rational(), all, {});
  ConservationAnalysis out;
  out.conservative = c.has_value();
  out.vector = std::move(c);
  return out;
}

long long deficiency(const Network& net) {
  const ComplexGraph g = complex_graph(net);
  return static_cast<long long>(g.nodes.size()) - static_cast<long long>(g.linkage_classes.size()) -
         static_cast<long long>(rank(stoichiometric_matrix(net).rational()));
}

StructureSummary analyze_structure(const Network& net) {
  StructureSummary s;
  const ComplexGraph g = complex_graph(net);
  s.complex_count = g.nodes.size();
  s.linkage_count = g.linkage_classes.size();
  s.stoich_rank = rank(stoichiometric_matrix(net).rational());
  s.deficiency = static_cast<long long>(s.complex_count) -
                 static_cast<long long>(s.linkage_count) - static_cast<long long>(s.stoich_rank);
  s.weakly_reversible = is_weakly_reversible(g);
  auto cons = conservation_analysis(net);
  s.conservative = cons.conservative;
  s.conservation_vector = std::move(cons.vector);
  s.complex_balanced_for_all_k = s.weakly_reversible && s.deficiency == 0;
  return s;
}

FaceGeometry face_geometry(const Network& net, const SpeciesSet& members) {
  if (members.empty()) throw std::invalid_argument("face_geometry: empty species set");
  const RationalMatrix gamma = stoichiometric_matrix(net).rational();
  const std::vector<std::size_t> rows(members.begin(), members.end());
  const std::size_t s = rank(gamma);
  const std::size_t rank_i = rank(gamma.select_rows(rows));

  FaceGeometry geo;
  geo.siphon = members;
  geo.face_dim = s - rank_i;
  geo.is_facet = s >= 1 && geo.face_dim == s - 1;
  geo.is_vertex = geo.face_dim == 0;
  return geo;
}

}  // namespace crn
