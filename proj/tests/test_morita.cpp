#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "morita/enumerate.hpp"
#include "morita/errors.hpp"
#include "morita/morita.hpp"

using namespace morita;
using fixtures::identity_map;
using fixtures::pair_to_point;
using fixtures::points_of_pair;

namespace {

  std::vector<Bibundle> biprincipal_samples() {
    return {identity_bibundle(cyclic_group(2)),
            identity_bibundle(pair_groupoid(2)),
            identity_bibundle(disjoint_union({pair_groupoid(2), cyclic_group(3)})),
            pair_to_point(2),
            pair_to_point(3),
            opposite_bibundle(pair_to_point(2))};
  }

  Bibundle not_pre_principal() {
    // Z/2 fixing a single point
    return left_action_as_bibundle(
        trivial_action(cyclic_group(2), {"p"}, {0}, Side::left));
  }

}  // namespace

TEST_CASE("Psi inverts the tensor action map") {
  auto const samples = biprincipal_samples();
  for (auto const& b1 : samples) {
    for (auto const& b2 : samples) {
      if (!(b1.right_groupoid() == b2.left_groupoid())) {
        continue;
      }
      auto const t = tensor_action_inverse(b1, b2);
      CHECK(t.phi.is_bijective());
      CHECK(t.is_left_inverse());
      CHECK(t.is_right_inverse());
    }
  }
  // left pre-principal only: points of pair(2) with Z/2 acting trivially on
  // the right is not right principal but still composes
  auto const b = left_action_as_bibundle(points_of_pair(2));
  auto const t = tensor_action_inverse(identity_bibundle(pair_groupoid(2)), b);
  CHECK(t.is_left_inverse());
  CHECK(t.is_right_inverse());

  CHECK_THROWS_AS(tensor_action_inverse(identity_bibundle(cyclic_group(2)), not_pre_principal()),
                  NotPrePrincipal);
  CHECK_THROWS_AS(tensor_action_inverse(pair_to_point(2), pair_to_point(2)), GroupoidMismatch);
}

TEST_CASE("weak inverse of the identity bibundle") {
  auto const g    = product(pair_groupoid(2), cyclic_group(2));
  auto const b    = identity_bibundle(g);
  auto const cert = weak_inverse_witness(b);
  CHECK(verify_certificate(cert));
  auto const bc = compose_bibundles(b, Bibundle::make(g, g, cert.c));
  for (std::uint32_t c = 0; c < bc.tensor.size(); ++c) {
    for (auto const& [x1, x2] : bc.tensor.members(c)) {
      CHECK(cert.iso_g[c] == g.compose(x1, g.inverse(x2)));
    }
  }
}

TEST_CASE("weak inverse of the pair-to-point bibundle") {
  auto const cert = weak_inverse_witness(pair_to_point(2));
  CHECK(cert.iso_h.size() == 1);
  CHECK(cert.iso_g.size() == 4);
  CHECK(verify_certificate(cert));
  CHECK_THROWS_AS(weak_inverse_witness(not_pre_principal()), NotBiprincipal);
}

TEST_CASE("tampered certificates are rejected") {
  auto const good = weak_inverse_witness(identity_bibundle(cyclic_group(3)));
  REQUIRE(verify_certificate(good));

  SUBCASE("non-equivariant bijection") {
    auto bad = good;
    std::swap(bad.iso_g[0], bad.iso_g[1]);
    auto const check = check_certificate(bad);
    CHECK_FALSE(check.ok);
    CHECK(check.report.ok());
    CHECK_FALSE(check.reason.empty());
  }
  SUBCASE("corrupted action of C") {
    auto bad = good;
    auto& e  = bad.c.left.entries.front();
    e[2]     = (e[2] + 1) % 3;
    auto const check = check_certificate(bad);
    CHECK_FALSE(check.ok);
    CHECK_FALSE(check.report.ok());
  }
  SUBCASE("wrong length") {
    auto bad = good;
    bad.iso_h.pop_back();
    CHECK_FALSE(verify_certificate(bad));
  }
}

TEST_CASE("decide_morita") {
  auto const z2 = cyclic_group(2);

  auto const same = decide_morita(z2, z2, 2);
  REQUIRE(same.certificate.has_value());
  CHECK(same.bibundle->size() == 2);
  CHECK(find_biequivariant_iso(*same.bibundle, identity_bibundle(z2)).has_value());
  CHECK(verify_certificate(*same.certificate));
  CHECK_FALSE(same.exhausted);

  auto const again = decide_morita(z2, z2, 2);
  CHECK(again.certificate->b == same.certificate->b);
  CHECK(again.candidates_examined == same.candidates_examined);

  auto const pp = decide_morita(pair_groupoid(2), point_groupoid(), 2);
  REQUIRE(pp.certificate.has_value());
  CHECK(pp.bibundle->size() == 2);
  CHECK(verify_certificate(*pp.certificate));

  auto const none = decide_morita(z2, point_groupoid(), 3);
  CHECK_FALSE(none.certificate.has_value());
  CHECK(none.exhausted);

  // orbit counts differ
  CHECK_FALSE(decide_morita(unit_groupoid(2), pair_groupoid(2), 3).certificate);
  CHECK_FALSE(decide_morita(z2, z2, 1).certificate);
}

TEST_CASE("orbit bijection") {
  auto const g  = disjoint_union({pair_groupoid(2), cyclic_group(2), unit_groupoid(1)});
  auto const ob = orbit_bijection(identity_bibundle(g));
  CHECK(ob.forward == identity_map(3));
  CHECK(ob.is_mutual_inverse());

  auto const pp = orbit_bijection(pair_to_point(3));
  CHECK(pp.forward.size() == 1);
  CHECK(pp.backward.size() == 1);
  CHECK(pp.is_mutual_inverse());

  for (auto const& b : biprincipal_samples()) {
    auto const o = orbit_bijection(b);
    CHECK(o.is_mutual_inverse());
    // every point over an object agrees with the chosen orbit
    for (Point x = 0; x < b.size(); ++x) {
      CHECK(o.forward[o.g_orbits.class_of(b.l(x))] == o.h_orbits.class_of(b.r(x)));
    }
  }
  CHECK_THROWS_AS(orbit_bijection(not_pre_principal()), NotBiprincipal);
}

TEST_CASE("fibrating invariance") {
  CHECK(fibrating_invariance_check(pair_to_point(2)));
  CHECK(is_fibrating(pair_groupoid(2)));
  CHECK(is_fibrating(point_groupoid()));
  for (auto const& b : biprincipal_samples()) {
    CHECK(fibrating_invariance_check(b));
  }
  CHECK_THROWS_AS(fibrating_invariance_check(not_pre_principal()), NotBiprincipal);
}

TEST_CASE("transport along bibundles") {
  auto const h = product(pair_groupoid(2), cyclic_group(2));
  auto const y = regular_action(h, Side::left);
  auto const t = transport_action(identity_bibundle(h), y);
  CHECK(t.size() == y.size());
  CHECK(action_orbit_space(t).size() == action_orbit_space(y).size());
  CHECK(transport_map(identity_bibundle(h), y, y, identity_map(y.size()))
        == identity_map(y.size()));

  // pair(3) to point: a set Y becomes three copies, one orbit per point of Y
  auto const s = trivial_action(point_groupoid(), {"a", "b"}, {0, 0}, Side::left);
  auto const u = transport_action(pair_to_point(3), s);
  CHECK(u.size() == 6);
  CHECK(action_orbit_space(u).size() == 2);
}

TEST_CASE("round trip natural isomorphism") {
  SUBCASE("identity bibundle") {
    auto const z3 = cyclic_group(3);
    auto const y  = regular_action(z3, Side::left);
    auto const rt = roundtrip_natural_iso(identity_bibundle(z3), y);
    CHECK(rt.mu.size() == y.size());
    CHECK(check_roundtrip(rt));
    CHECK(check_naturality(rt, rt, identity_map(y.size())));

    // right multiplication by a generator is left equivariant
    std::vector<Point> shift;
    for (Arrow a = 0; a < 3; ++a) {
      shift.push_back(z3.compose(a, 1));
    }
    REQUIRE(is_equivariant(shift, y, y));
    CHECK(check_naturality(rt, rt, shift));

    auto const z  = trivial_action(z3, {"*"}, {0}, Side::left);
    auto const rz = roundtrip_natural_iso(identity_bibundle(z3), z);
    CHECK(check_roundtrip(rz));
    CHECK(check_naturality(rt, rz, {0, 0, 0}));
  }
  SUBCASE("pair groupoid against the point") {
    // X goes from pair(2) to the point, so Y is a plain set
    auto const b  = pair_to_point(2);
    auto const y  = trivial_action(point_groupoid(), {"a", "b", "c"}, {0, 0, 0}, Side::left);
    auto const z  = trivial_action(point_groupoid(), {"u", "v"}, {0, 0}, Side::left);
    auto const ry = roundtrip_natural_iso(b, y);
    auto const rz = roundtrip_natural_iso(b, z);
    CHECK(check_roundtrip(ry));
    CHECK(check_roundtrip(rz));
    CHECK(check_naturality(ry, rz, {1, 0, 1}));
    CHECK(check_naturality(ry, ry, {2, 2, 0}));
  }
  SUBCASE("opposite direction") {
    auto const b  = opposite_bibundle(pair_to_point(2));
    auto const y  = points_of_pair(2);
    auto const rt = roundtrip_natural_iso(b, y);
    CHECK(check_roundtrip(rt));
    auto const r2 = regular_action(pair_groupoid(2), Side::left);
    auto const rr = roundtrip_natural_iso(b, r2);
    CHECK(check_roundtrip(rr));
    // target map of the regular action onto the points
    std::vector<Point> tgt;
    for (Arrow a = 0; a < 4; ++a) {
      tgt.push_back(pair_groupoid(2).target(a));
    }
    REQUIRE(is_equivariant(tgt, r2, y));
    CHECK(check_naturality(rr, rt, tgt));
  }
  SUBCASE("a wrong mu is caught") {
    auto const z2 = cyclic_group(2);
    auto       rt = roundtrip_natural_iso(identity_bibundle(z2), regular_action(z2, Side::left));
    std::swap(rt.mu[0], rt.mu[1]);
    CHECK_FALSE(check_roundtrip(rt));
  }
  CHECK_THROWS_AS(roundtrip_natural_iso(not_pre_principal(),
                                        trivial_action(point_groupoid(), {"a"}, {0}, Side::left)),
                  NotBiprincipal);
}

TEST_CASE("Morita equivalence is an equivalence relation") {
  std::vector<FiniteGroupoid> gs{point_groupoid(), pair_groupoid(2), pair_groupoid(3),
                                 cyclic_group(2)};
  auto const report = morita_equivalence_relation_checks(gs, biprincipal_samples());
  CHECK(report.ok());
  CHECK(report.reflexive == 4);
  CHECK(report.symmetric == 6);
  CHECK(report.transitive > 0);

  auto const bad = morita_equivalence_relation_checks({}, {not_pre_principal()});
  CHECK_FALSE(bad.ok());
}
