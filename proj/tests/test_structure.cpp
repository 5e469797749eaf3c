#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crn/structure.hpp"
#include "fixture_util.hpp"

using crn::Network;
using crn::Rational;
using crn::SpeciesSet;

TEST_CASE("structure of the triangle network") {
  const Network net = load_fixture("example1.crn");
  const auto s = crn::analyze_structure(net);
  CHECK(s.complex_count == 3);
  CHECK(s.linkage_count == 1);
  CHECK(s.stoich_rank == 2);
  CHECK(s.deficiency == 0);
  CHECK(s.weakly_reversible);
  CHECK(!s.conservative);
  CHECK(!s.conservation_vector.has_value());
  CHECK(s.complex_balanced_for_all_k);
}

TEST_CASE("structure of the three-species cycle") {
  const Network net = load_fixture("example2.crn");
  const auto s = crn::analyze_structure(net);
  CHECK(s.complex_count == 4);
  CHECK(s.linkage_count == 1);
  CHECK(s.stoich_rank == 3);
  CHECK(s.deficiency == 0);
  CHECK(s.weakly_reversible);
  CHECK(!s.conservative);
  CHECK(s.complex_balanced_for_all_k);
}

TEST_CASE("structure of the four-complex cycle") {
  const Network net = load_fixture("example3.crn");
  const auto s = crn::analyze_structure(net);
  CHECK(s.complex_count == 4);
  CHECK(s.linkage_count == 1);
  CHECK(s.stoich_rank == 3);
  CHECK(s.deficiency == 0);
  CHECK(s.weakly_reversible);
  CHECK(!s.conservative);
}

TEST_CASE("conservative isomerization") {
  const Network net = load_fixture("abba.crn");
  const auto s = crn::analyze_structure(net);
  CHECK(s.complex_count == 2);
  CHECK(s.linkage_count == 1);
  CHECK(s.stoich_rank == 1);
  CHECK(s.deficiency == 0);
  CHECK(s.conservative);
  REQUIRE(s.conservation_vector.has_value());
  const auto& c = *s.conservation_vector;
  CHECK(c[0] > 0);
  CHECK(c[0] == c[1]);
  // c is a left null vector of Gamma.
  const auto gamma = crn::stoichiometric_matrix(net).rational();
  for (const auto& v : gamma.apply_left(c)) CHECK(v == 0);
}

TEST_CASE("non weakly reversible chain") {
  const Network net = crn::parse_network("A -> B ; k = 1\nB -> C ; k = 1\n");
  const auto s = crn::analyze_structure(net);
  CHECK(!s.weakly_reversible);
  CHECK(s.complex_count == 3);
  CHECK(s.linkage_count == 1);
  CHECK(s.stoich_rank == 2);
  CHECK(s.deficiency == 0);
  CHECK(!s.complex_balanced_for_all_k);
  CHECK(s.conservative);  // (1,1,1)
}

TEST_CASE("two linkage classes") {
  const Network net = crn::parse_network("A <-> B ; k = 1, 1\nC <-> D ; k = 1, 1\n");
  const auto s = crn::analyze_structure(net);
  CHECK(s.complex_count == 4);
  CHECK(s.linkage_count == 2);
  CHECK(s.stoich_rank == 2);
  CHECK(s.deficiency == 0);
  CHECK(s.weakly_reversible);
}

TEST_CASE("complex graph wiring") {
  const Network net = load_fixture("example1.crn");
  const auto g = crn::complex_graph(net);
  CHECK(g.nodes.size() == 3);
  REQUIRE(g.edges.size() == 3);
  // One edge per reaction, endpoints are the interned reactant/product.
  for (std::size_t i = 0; i < net.reaction_count(); ++i) {
    CHECK(g.nodes[g.edges[i].first] == net.reactions()[i].reactant);
    CHECK(g.nodes[g.edges[i].second] == net.reactions()[i].product);
  }
  CHECK(crn::is_weakly_reversible(g));
}

TEST_CASE("face geometry of the triangle network") {
  const Network net = load_fixture("example1.crn");
  const auto facet = crn::face_geometry(net, SpeciesSet{0});
  CHECK(facet.face_dim == 1);
  CHECK(facet.is_facet);
  CHECK(!facet.is_vertex);

  const auto vertex = crn::face_geometry(net, SpeciesSet{0, 1});
  CHECK(vertex.face_dim == 0);
  CHECK(!vertex.is_facet);
  CHECK(vertex.is_vertex);
}

TEST_CASE("face geometry of the three-species cycle") {
  const Network net = load_fixture("example2.crn");
  const auto g = crn::face_geometry(net, SpeciesSet{0, 1});
  CHECK(g.face_dim == 1);  // s = 3, rank(Gamma_I) = 2
  CHECK(!g.is_facet);
  CHECK(!g.is_vertex);
}
