#ifndef CRN_STRUCTURE_HPP
#define CRN_STRUCTURE_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "crn/network.hpp"

namespace crn {

using SpeciesSet = std::set<std::size_t>;

/// Directed graph on the distinct complexes of a network; one edge per
/// reaction, partitioned into linkage classes (weakly connected components).
struct ComplexGraph {
  std::vector<Complex> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // edges[i] = reaction i
  std::vector<std::vector<std::size_t>> linkage_classes;   // node indices per class
  std::vector<std::size_t> node_class;                     // class of each node
};

ComplexGraph complex_graph(const Network& net);

/// True iff every linkage class is strongly connected.
bool is_weakly_reversible(const ComplexGraph& g);

struct ConservationAnalysis {
  bool conservative = false;
  std::optional<std::vector<Rational>> vector;  // strictly positive left null vector of Gamma
};

ConservationAnalysis conservation_analysis(const Network& net);

struct StructureSummary {
  std::size_t complex_count = 0;   // n
  std::size_t linkage_count = 0;   // l
  std::size_t stoich_rank = 0;     // s
  long long deficiency = 0;        // n - l - s
  bool weakly_reversible = false;
  bool conservative = false;
  std::optional<std::vector<Rational>> conservation_vector;
  bool complex_balanced_for_all_k = false;  // weakly reversible and deficiency zero
};

StructureSummary analyze_structure(const Network& net);

long long deficiency(const Network& net);

struct FaceGeometry {
  SpeciesSet siphon;
  std::size_t face_dim = 0;  // s - rank(Gamma_I)
  bool is_facet = false;
  bool is_vertex = false;
};

FaceGeometry face_geometry(const Network& net, const SpeciesSet& members);

}  // namespace crn

#endif
