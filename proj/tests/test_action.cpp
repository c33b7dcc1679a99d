#include <map>
#include <set>

#include "doctest.h"
#include "morita/bundle.hpp"
#include "morita/errors.hpp"

using namespace morita;

namespace {

  // pair_groupoid(n) acting on {0..n-1} by (i,j).j = i
  Action points_of_pair(std::size_t n) {
    auto      g = pair_groupoid(n);
    RawAction raw;
    for (Point x = 0; x < n; ++x) {
      raw.carrier.push_back(std::to_string(x));
      raw.moment.push_back(x);
    }
    for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
      raw.entries.push_back({a, g.source(a), g.target(a)});
    }
    return Action::make(g, raw, Side::left);
  }

  Bundle over_point(Action a) {
    std::vector<std::uint32_t> proj(a.size(), 0);
    return Bundle::make(std::move(a), {"*"}, proj);
  }

  // Direct check that (g, x) |-> (g.x, x) hits every same-fibre pair once.
  bool bijective_by_sets(Bundle const& b) {
    auto const&                                a = b.action();
    std::multiset<std::pair<Point, Point>>     image;
    for (Point x = 0; x < a.size(); ++x) {
      for (Arrow g = 0; g < a.groupoid().number_of_arrows(); ++g) {
        if (a.groupoid().source(g) == a.moment(x)) {
          image.emplace(a.act(g, x), x);
        }
      }
    }
    std::size_t fibre_pairs = 0;
    for (Point x1 = 0; x1 < a.size(); ++x1) {
      for (Point x2 = 0; x2 < a.size(); ++x2) {
        if (b.project(x1) == b.project(x2)) {
          ++fibre_pairs;
          if (image.count({x1, x2}) != 1) {
            return false;
          }
        }
      }
    }
    return image.size() == fibre_pairs;
  }

}  // namespace

TEST_CASE("regular actions validate") {
  for (auto const& g : {pair_groupoid(2), cyclic_group(3),
                        disjoint_union({pair_groupoid(2), cyclic_group(2)})}) {
    CHECK(validate_left_action(g, regular_action(g, Side::left).raw()).ok());
    CHECK(validate_right_action(g, regular_action(g, Side::right).raw()).ok());
  }
}

TEST_CASE("action validation catches each condition") {
  auto const g   = pair_groupoid(2);
  auto const raw = regular_action(g, Side::left).raw();

  SUBCASE("moment") {
    auto bad = raw;
    // (0,1).(1,1) = (0,1); send it to (1,1), whose moment is 1, not 0
    for (auto& e : bad.entries) {
      if (g.arrow_name(e[0]) == "(0,1)" && g.arrow_name(e[1]) == "(1,1)") {
        e[2] = *g.find_arrow("(1,1)");
      }
    }
    CHECK(validate_left_action(g, bad).contains(Law::action_moment));
  }
  SUBCASE("unit") {
    auto z2  = cyclic_group(2);
    auto bad = regular_action(z2, Side::left).raw();
    for (auto& e : bad.entries) {
      if (e[0] == 0) {
        e[2] = 1 - e[1];
      }
    }
    CHECK(validate_left_action(z2, bad).contains(Law::action_unit));
  }
  SUBCASE("compatibility") {
    auto z3  = cyclic_group(3);
    auto bad = regular_action(z3, Side::left).raw();
    // 1.0 = 1 becomes 2; moments and units stay intact
    for (auto& e : bad.entries) {
      if (e[0] == 1 && e[1] == 0) {
        e[2] = 2;
      }
    }
    auto report = validate_left_action(z3, bad);
    CHECK(report.contains(Law::action_compatibility));
    CHECK_FALSE(report.contains(Law::action_unit));
  }
  SUBCASE("domain, missing, duplicate, dangling") {
    auto bad = raw;
    bad.entries.push_back(bad.entries.front());
    CHECK(validate_left_action(g, bad).contains(Law::duplicate_entry));
    bad = raw;
    bad.entries.pop_back();
    CHECK(validate_left_action(g, bad).contains(Law::action_missing));
    bad = raw;
    bad.entries.push_back({*g.find_arrow("(0,1)"), *g.find_arrow("(0,0)"), 0});
    CHECK(validate_left_action(g, bad).contains(Law::action_domain));
    bad           = raw;
    bad.moment[0] = 9;
    CHECK(validate_left_action(g, bad).contains(Law::dangling_identifier));
    bad = raw;
    bad.moment.pop_back();
    CHECK(validate_left_action(g, bad).contains(Law::incomplete_map));
  }
  CHECK_THROWS_AS(Action::make(g, RawAction{{"a"}, {0}, {}}, Side::left),
                  ValidationError);
}

TEST_CASE("act and sides") {
  auto const g = pair_groupoid(2);
  auto const l = regular_action(g, Side::left);
  auto const r = regular_action(g, Side::right);
  auto const a = *g.find_arrow("(1,0)");
  auto const u = *g.find_arrow("(0,0)");
  CHECK(l.act(a, u) == a);
  CHECK(r.act(u, a) == a);
  CHECK_THROWS_AS(l.act(a, a), DomainMismatch);
  CHECK_THROWS_AS(r.act(a, u), DomainMismatch);

  // g * x = x . g^-1 and back again
  auto const lr = to_left(r);
  for (Point x = 0; x < lr.size(); ++x) {
    for (Arrow h : lr.acting_on(x)) {
      CHECK(lr.act(h, x) == r.act(g.inverse(h), x));
    }
  }
  CHECK(to_right(to_left(r)) == r);
  CHECK(to_left(to_right(l)) == l);
  CHECK_THROWS_AS(to_left(l), std::invalid_argument);
}

TEST_CASE("orbit spaces of actions") {
  CHECK(action_orbit_space(regular_action(cyclic_group(2), Side::left)).size() == 1);
  auto const u3 = unit_groupoid(3);
  CHECK(action_orbit_space(trivial_action(u3, {"a", "b", "c"}, {0, 1, 2}, Side::left))
            .size()
        == 3);
  auto const p2     = pair_groupoid(2);
  auto const orbits = action_orbit_space(regular_action(p2, Side::left));
  CHECK(orbits.size() == 2);
  for (Arrow x = 0; x < p2.number_of_arrows(); ++x) {
    for (Arrow y = 0; y < p2.number_of_arrows(); ++y) {
      CHECK((orbits.class_of(x) == orbits.class_of(y))
            == (p2.source(x) == p2.source(y)));
    }
  }
  CHECK_THROWS_AS(trivial_action(pair_groupoid(2), {"p"}, {0}, Side::left),
                  ValidationError);
}

TEST_CASE("action maps") {
  for (auto const& g : {pair_groupoid(2), cyclic_group(3), pair_groupoid(3)}) {
    auto const m = action_map(regular_bundle(g, Side::left));
    CHECK(m.domain.size() == g.number_of_composable_pairs());
    CHECK(m.codomain.size() == g.number_of_composable_pairs());
    CHECK(m.is_bijective());
  }
  auto const u2 = unit_groupoid(2);
  auto const b  = over_point(trivial_action(u2, {"p", "q"}, {0, 1}, Side::left));
  auto const m  = action_map(b);
  CHECK(m.codomain.size() == 4);
  CHECK(m.domain.size() == 2);
  for (std::size_t i = 0; i < m.domain.size(); ++i) {
    auto const [x1, x2] = m.codomain[m.value[i]];
    CHECK(x1 == x2);
  }
  auto const empty = action_map(Bundle::make(
      trivial_action(u2, {}, {}, Side::left), {"*"}, {}));
  CHECK(empty.domain.empty());
  CHECK(empty.codomain.empty());
  CHECK(empty.is_bijective());
}

TEST_CASE("principality") {
  auto const reg = regular_bundle(pair_groupoid(3), Side::left);
  CHECK(is_pre_principal(reg));
  CHECK(is_subductive(reg));
  CHECK(is_principal(reg));

  auto const u2 = unit_groupoid(2);
  auto const unit_pts
      = over_point(trivial_action(u2, {"p", "q"}, {0, 1}, Side::left));
  CHECK_FALSE(is_pre_principal(unit_pts));

  auto const z2 = over_point(regular_action(cyclic_group(2), Side::left));
  CHECK(is_pre_principal(z2));

  // projection = identity
  CHECK(is_subductive(Bundle::make(
      trivial_action(u2, {"p", "q"}, {0, 1}, Side::left), {"p", "q"}, {0, 1})));
  CHECK_FALSE(is_subductive(
      Bundle::make(trivial_action(u2, {}, {}, Side::left), {"*"}, {})));

  // pre-principal but a base point is missed
  auto const missing = Bundle::make(regular_action(cyclic_group(2), Side::left),
                                    {"a", "b"}, {0, 0});
  CHECK(is_pre_principal(missing));
  CHECK_FALSE(is_principal(missing));

  // Z/2 acting trivially on a point: subductive, not free
  auto const fixed = Bundle::make(
      Action::make(cyclic_group(2), RawAction{{"p"}, {0}, {{0, 0, 0}, {1, 0, 0}}},
                   Side::left),
      {"*"}, {0});
  CHECK(is_subductive(fixed));
  CHECK_FALSE(is_free(fixed.action()));
  CHECK_FALSE(action_map(fixed).is_injective());
  CHECK_FALSE(is_principal(fixed));

  // projection must be invariant
  CHECK_THROWS_AS(Bundle::make(regular_action(cyclic_group(2), Side::left),
                               {"a", "b"}, {0, 1}),
                  ValidationError);
}

TEST_CASE("pre-principality agrees with freeness plus fibre transitivity") {
  std::vector<Bundle> bundles{
      regular_bundle(pair_groupoid(2), Side::left),
      regular_bundle(pair_groupoid(2), Side::right),
      regular_bundle(cyclic_group(3), Side::right),
      over_point(points_of_pair(3)),
      over_point(regular_action(cyclic_group(2), Side::left)),
      over_point(trivial_action(unit_groupoid(2), {"p", "q"}, {0, 1}, Side::left)),
      Bundle::make(trivial_action(unit_groupoid(2), {"p", "q"}, {0, 1}, Side::left),
                   {"p", "q"}, {0, 1}),
      Bundle::make(
          Action::make(cyclic_group(2), RawAction{{"p"}, {0}, {{0, 0, 0}, {1, 0, 0}}},
                       Side::left),
          {"*"}, {0})};
  for (auto const& b : bundles) {
    bool const pre = is_pre_principal(b);
    CHECK(pre == (is_free(b.action()) && is_fibre_transitive(b)));
    if (b.side() == Side::left) {
      CHECK(pre == bijective_by_sets(b));
    }
  }
}

TEST_CASE("division maps") {
  auto const g   = pair_groupoid(3);
  auto const reg = regular_bundle(g, Side::left);
  auto const d   = division_map(reg);
  CHECK(check_division_laws(reg, d).ok());
  for (Arrow g1 = 0; g1 < g.number_of_arrows(); ++g1) {
    for (Arrow g2 = 0; g2 < g.number_of_arrows(); ++g2) {
      if (g.source(g1) == g.source(g2)) {
        CHECK(d(g1, g2) == g.compose(g1, g.inverse(g2)));
      } else {
        CHECK_FALSE(d.defined(g1, g2));
        CHECK_THROWS_AS(d(g1, g2), DomainMismatch);
      }
    }
    CHECK(d(g1, g1) == g.unit(g.target(g1)));
  }

  auto const pts = over_point(points_of_pair(3));
  auto const dp  = division_map(pts);
  for (Point i = 0; i < 3; ++i) {
    for (Point j = 0; j < 3; ++j) {
      CHECK(g.arrow_name(dp(i, j))
            == "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  // right bundle: x1 . d(x1, x2) = x2
  auto const right = regular_bundle(cyclic_group(3), Side::right);
  auto const dr    = division_map(right);
  CHECK(check_division_laws(right, dr).ok());
  for (Point x1 = 0; x1 < 3; ++x1) {
    for (Point x2 = 0; x2 < 3; ++x2) {
      CHECK(right.action().act(dr(x1, x2), x1) == x2);
    }
  }

  CHECK_THROWS_AS(division_map(over_point(
                      trivial_action(unit_groupoid(2), {"p", "q"}, {0, 1}, Side::left))),
                  NotPrePrincipal);

  // a corrupted table is caught
  std::vector<Arrow> table(9 * 9);
  for (Point x1 = 0; x1 < 9; ++x1) {
    for (Point x2 = 0; x2 < 9; ++x2) {
      table[x1 * 9 + x2] = d.defined(x1, x2) ? d(x1, x2) : kUndefined;
    }
  }
  table[0] = *g.find_arrow("(1,1)");
  CHECK_FALSE(check_division_laws(reg, DivisionMap(9, table)).ok());
}

TEST_CASE("equivariant maps and bundle morphisms") {
  auto const g   = pair_groupoid(2);
  auto const reg = regular_action(g, Side::left);
  std::vector<Point> id(reg.size());
  for (Point x = 0; x < reg.size(); ++x) {
    id[x] = x;
  }
  CHECK(is_equivariant(id, reg, reg));
  CHECK_FALSE(is_equivariant(std::vector<Point>(reg.size(), 0), reg, reg));

  // G x_{G0} X with h.(g, x) = (h o g, x) maps to X by (g, x) |-> g.x
  auto const            x = points_of_pair(2);
  RawAction             raw;
  std::map<std::pair<Arrow, Point>, Point> index;
  std::vector<Point>    to_x;
  for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
    for (Point p = 0; p < x.size(); ++p) {
      if (g.source(a) == x.moment(p)) {
        index[{a, p}] = static_cast<Point>(raw.carrier.size());
        raw.carrier.push_back(g.arrow_name(a) + "|" + x.point_name(p));
        raw.moment.push_back(g.target(a));
        to_x.push_back(x.act(a, p));
      }
    }
  }
  for (auto const& [key, i] : index) {
    for (Arrow h : g.arrows_from(g.target(key.first))) {
      raw.entries.push_back({h, i, index.at({g.compose(h, key.first), key.second})});
    }
  }
  auto const product_action = Action::make(g, raw, Side::left);
  CHECK(is_equivariant(to_x, product_action, x));

  auto const reg_b = regular_bundle(g, Side::left);
  CHECK(is_bundle_morphism(id, reg_b, reg_b));
  // every endomorphism of a principal bundle is a bijection
  std::vector<Point> swap_fibres(reg.size());
  for (Point p = 0; p < reg.size(); ++p) {
    // right multiplication by a fixed isotropy element (here the unit)
    swap_fibres[p] = g.compose(p, g.unit(g.source(p)));
  }
  CHECK(is_bundle_morphism(swap_fibres, reg_b, reg_b));
}
