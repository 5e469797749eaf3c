#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "crn/wdne.hpp"
#include "fixture_util.hpp"

using crn::Network;
using crn::OrderPair;
using crn::Rational;
using crn::SpeciesSet;

namespace {

std::vector<OrderPair> sorted(std::vector<OrderPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

TEST_CASE("dominance relation of the fixtures") {
  const Network ex1 = load_fixture("example1.crn");
  CHECK(sorted(crn::order_pairs(ex1, {0})) == std::vector<OrderPair>{{1, 0}, {1, 2}});

  const Network ex2 = load_fixture("example2.crn");
  CHECK(sorted(crn::order_pairs(ex2, {0, 1})) ==
        std::vector<OrderPair>{{1, 3}, {2, 0}, {2, 3}, {4, 3}});

  const Network ex3 = load_fixture("example3.crn");
  CHECK(crn::order_pairs(ex3, {0, 1}) == std::vector<OrderPair>{{1, 2}});
}

TEST_CASE("gamma tilde layout") {
  const Network ex2 = load_fixture("example2.crn");
  const Rational eps(1, 4);
  const auto gt = crn::build_gamma_tilde(ex2, {0, 1}, {{2, 3}}, eps);
  REQUIRE(gt.matrix.rows() == 3);
  REQUIRE(gt.matrix.cols() == 5);
  // First the rows of Gamma restricted to I...
  CHECK(gt.matrix.at(0, 0) == -1);
  CHECK(gt.matrix.at(0, 1) == 1);
  CHECK(gt.matrix.at(1, 0) == 2);
  CHECK(gt.matrix.at(1, 4) == -2);
  // ...then one row per pair: +1 on the dominated column, -eps on the
  // dominating one.
  CHECK(gt.matrix.at(2, 2) == 1);
  CHECK(gt.matrix.at(2, 3) == -eps);
  CHECK(gt.matrix.at(2, 0) == 0);

  CHECK_THROWS_AS(crn::build_gamma_tilde(ex2, {0, 1}, {{0, 1}}, eps), std::invalid_argument);
  CHECK_THROWS_AS(crn::build_gamma_tilde(ex2, {0, 1}, {}, Rational(0)), std::invalid_argument);
}

TEST_CASE("certificate for the three-species cycle with one pair") {
  const Network ex2 = load_fixture("example2.crn");
  const auto chk = crn::check_wdne(ex2, {0, 1}, {{2, 3}}, Rational(1, 4));
  REQUIRE(chk.certificate.has_value());
  const auto& cert = *chk.certificate;
  CHECK(crn::verify_certificate(ex2, cert));
  REQUIRE(cert.alpha.size() == 3);
  CHECK(cert.alpha[0] < 0);
  CHECK(cert.alpha[1] < 0);
  CHECK(cert.alpha[2] == 0);

  // The hand certificate c = (2,1,2) verifies too.
  crn::WdneCertificate hand;
  hand.members = {0, 1};
  hand.pairs = {{2, 3}};
  hand.epsilon = Rational(1, 4);
  hand.c = {Rational(2), Rational(1), Rational(2)};
  hand.alpha = {Rational(-2), Rational(-1), Rational(0)};
  CHECK(crn::verify_certificate(ex2, hand));
  // ...but not beyond epsilon = 1/2, where a column of c^T GammaTilde
  // changes sign.
  hand.epsilon = Rational(3, 4);
  CHECK(!crn::verify_certificate(ex2, hand));
}

TEST_CASE("dropping the (5,4) pair breaks certifiability") {
  const Network ex2 = load_fixture("example2.crn");
  const std::vector<OrderPair> j_tilde = {{1, 3}, {2, 0}, {2, 3}};
  const auto chk = crn::check_wdne(ex2, {0, 1}, j_tilde, Rational(1, 4));
  CHECK(!chk.certificate.has_value());
  REQUIRE(chk.cone_witness.size() == 5);
  // The escaping cone is the ray through (1,0,0,0,1).
  CHECK(chk.cone_witness[0] > 0);
  CHECK(chk.cone_witness[0] == chk.cone_witness[4]);
  CHECK(chk.cone_witness[1] == 0);
  CHECK(chk.cone_witness[2] == 0);
  CHECK(chk.cone_witness[3] == 0);
}

TEST_CASE("the full relation also certifies the three-species cycle") {
  const Network ex2 = load_fixture("example2.crn");
  const auto relation = crn::order_pairs(ex2, {0, 1});
  const auto chk = crn::check_wdne(ex2, {0, 1}, relation, Rational(1, 4));
  REQUIRE(chk.certificate.has_value());
  CHECK(crn::verify_certificate(ex2, *chk.certificate));
}

TEST_CASE("the four-complex cycle is not certifiable") {
  const Network ex3 = load_fixture("example3.crn");
  const Rational tiny(1, crn::Integer(1) << 40);
  CHECK(!crn::check_wdne(ex3, {0, 1}, {}, tiny).certificate.has_value());
  const auto chk = crn::check_wdne(ex3, {0, 1}, {{1, 2}}, tiny);
  CHECK(!chk.certificate.has_value());

  // (0,0,1,2) lies in the cone for any epsilon: check it against GammaTilde
  // at epsilon = 1/4 directly.
  const auto gt = crn::build_gamma_tilde(ex3, {0, 1}, {{1, 2}}, Rational(1, 4));
  const std::vector<Rational> v = {Rational(0), Rational(0), Rational(1), Rational(2)};
  bool nonzero = false;
  for (const auto& entry : gt.matrix.apply(v)) {
    CHECK(entry <= 0);
    if (entry != 0) nonzero = true;
  }
  CHECK(nonzero);
}

TEST_CASE("classical non-emptiability of the triangle facet fails") {
  const Network ex1 = load_fixture("example1.crn");
  const auto res = crn::check_dne_classic(ex1, {0}, Rational(1, 4));
  CHECK(!res.non_emptiable);
  REQUIRE(res.witness.size() == 3);
  CHECK(res.witness[0] == 0);
  CHECK(res.witness[1] == 0);
  CHECK(res.witness[2] > 0);
}

TEST_CASE("facet shortcut on the triangle network") {
  const Network ex1 = load_fixture("example1.crn");
  const auto shortcut = crn::facet_shortcut(ex1, {0});
  REQUIRE(shortcut.has_value());
  CHECK(shortcut->z == std::vector<Rational>{Rational(1)});
  CHECK(shortcut->gamma == std::vector<Rational>{Rational(1), Rational(-1), Rational(0)});
  CHECK(shortcut->pairs == std::vector<OrderPair>{{1, 0}});

  // Not applicable when rank(Gamma_I) is 2.
  const Network ex2 = load_fixture("example2.crn");
  CHECK(!crn::facet_shortcut(ex2, {0, 1}).has_value());
}

TEST_CASE("tampered certificates are rejected") {
  const Network ex1 = load_fixture("example1.crn");
  auto chk = crn::check_wdne(ex1, {0}, {{1, 0}}, Rational(1, 4));
  REQUIRE(chk.certificate.has_value());
  auto cert = *chk.certificate;
  cert.c[0] = Rational(1, 2);  // violates c >= 1
  CHECK(!crn::verify_certificate(ex1, cert));
  cert = *chk.certificate;
  cert.alpha[1] = Rational(-1);  // support must be exactly I
  CHECK(!crn::verify_certificate(ex1, cert));
}

TEST_CASE("certify_siphon routes on the fixtures") {
  using crn::CertRoute;
  using crn::StatusKind;
  const crn::CertifyConfig config;

  auto status_of = [&](const Network& net, std::size_t index) {
    const auto structure = crn::analyze_structure(net);
    const auto records = crn::enumerate_siphons(net);
    return crn::certify_siphon(net, records.at(index), config, structure);
  };

  const Network ex1 = load_fixture("example1.crn");
  const auto facet_status = status_of(ex1, 0);
  CHECK(facet_status.kind == StatusKind::WdneCertified);
  CHECK(facet_status.route == CertRoute::FacetShortcutRoute);
  REQUIRE(facet_status.certificate.has_value());
  CHECK(facet_status.certificate->pairs == std::vector<OrderPair>{{1, 0}});

  CHECK(status_of(ex1, 1).kind == StatusKind::VertexOrEmpty);

  const Network ex2 = load_fixture("example2.crn");
  const auto direct = status_of(ex2, 0);
  CHECK(direct.kind == StatusKind::WdneCertified);
  CHECK(direct.route == CertRoute::Direct);
  REQUIRE(direct.certificate.has_value());
  CHECK(direct.certificate->pairs.size() == 4);  // the full relation wins first

  const Network ex3 = load_fixture("example3.crn");
  const auto unresolved = status_of(ex3, 0);
  CHECK(unresolved.kind == StatusKind::Unresolved);
  CHECK(!unresolved.note.empty());
  CHECK(!unresolved.failed_attempts.empty());
  CHECK(status_of(ex3, 1).kind == StatusKind::VertexOrEmpty);

  // A conserved non-trivial siphon: excluded, with the empty-J certificate.
  const Network bind = crn::parse_network("A + B -> C ; k = 1\nC -> A + B ; k = 1\n");
  const auto structure = crn::analyze_structure(bind);
  const auto records = crn::enumerate_siphons(bind);
  bool saw_shortcut = false;
  for (const auto& record : records) {
    if (record.trivial || !record.full_support_conservation) continue;
    const auto status = crn::certify_siphon(bind, record, config, structure);
    CHECK(status.kind == StatusKind::ExcludedByConservation);
    CHECK(status.route == CertRoute::NoncriticalShortcut);
    REQUIRE(status.certificate.has_value());
    CHECK(status.certificate->pairs.empty());
    CHECK(crn::verify_certificate(bind, *status.certificate));
    REQUIRE(status.conservation_witness.has_value());
    saw_shortcut = true;
  }
  CHECK(saw_shortcut);
}
