#include <algorithm>
#include <set>

#include "doctest.h"
#include "morita/errors.hpp"
#include "morita/groupoid.hpp"

using namespace morita;

namespace {

  // Reachability by brute force: repeat relaxation until nothing changes.
  std::vector<std::set<Object>> reachable_sets(FiniteGroupoid const& g) {
    auto const                    n = g.number_of_objects();
    std::vector<std::set<Object>> reach(n);
    for (Object x = 0; x < n; ++x) {
      reach[x].insert(x);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (Object x = 0; x < n; ++x) {
        for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
          if (reach[x].count(g.source(a)) && reach[x].insert(g.target(a)).second) {
            changed = true;
          }
          if (reach[x].count(g.target(a)) && reach[x].insert(g.source(a)).second) {
            changed = true;
          }
        }
      }
    }
    return reach;
  }

  RawGroupoid redirect_first_entry(RawGroupoid raw, Arrow to) {
    for (auto& e : raw.composition) {
      if (e[2] != to) {
        e[2] = to;
        break;
      }
    }
    return raw;
  }

}  // namespace

TEST_CASE("pair groupoid") {
  auto g1 = pair_groupoid(1);
  CHECK(g1.number_of_objects() == 1);
  CHECK(g1.number_of_arrows() == 1);
  CHECK(g1.unit(0) == 0);

  auto g2 = pair_groupoid(2);
  CHECK(g2.number_of_arrows() == 4);
  for (Object x = 0; x < 2; ++x) {
    CHECK(isotropy_group(g2, x) == std::vector<Arrow>{g2.unit(x)});
  }

  auto g3 = pair_groupoid(3);
  CHECK(g3.number_of_arrows() == 9);
  CHECK(orbit_space(g3).size() == 1);

  // (i,j) is j -> i and (i,j) o (j,k) = (i,k)
  auto a = *g3.find_arrow("(2,1)");
  auto b = *g3.find_arrow("(1,0)");
  CHECK(g3.source(a) == 1);
  CHECK(g3.target(a) == 2);
  CHECK(g3.arrow_name(g3.compose(a, b)) == "(2,0)");
  CHECK_THROWS_AS(g3.compose(b, b), DomainMismatch);
  CHECK_THROWS_AS(pair_groupoid(0), std::invalid_argument);
}

TEST_CASE("relation groupoid") {
  std::vector<std::string> abc{"a", "b", "c"};
  auto eq = relation_groupoid(abc, {{0, 0}, {1, 1}, {2, 2}});
  CHECK(eq.number_of_arrows() == 3);
  CHECK(orbit_space(eq).size() == 3);

  auto part
      = relation_groupoid(abc, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}});
  CHECK(part.number_of_arrows() == 5);
  CHECK(orbit_space(part).size() == 2);

  std::vector<std::pair<std::size_t, std::size_t>> full;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      full.emplace_back(i, j);
    }
  }
  CHECK(relation_groupoid({"0", "1", "2"}, full) == pair_groupoid(3));

  CHECK_THROWS_AS(relation_groupoid(abc, {{0, 0}, {1, 1}}), NotAnEquivalence);
  CHECK_THROWS_AS(relation_groupoid(abc, {{0, 0}, {1, 1}, {2, 2}, {0, 1}}),
                  NotAnEquivalence);
  CHECK_THROWS_AS(
      relation_groupoid(abc,
                        {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {1, 2}, {2, 1}}),
      NotAnEquivalence);
  CHECK_THROWS_AS(relation_groupoid(abc, {{0, 5}}), NotAnEquivalence);
}

TEST_CASE("groups as groupoids") {
  auto z2 = cyclic_group(2);
  CHECK(z2.number_of_objects() == 1);
  CHECK(z2.number_of_arrows() == 2);
  CHECK(isotropy_group(z2, 0).size() == 2);

  auto trivial = cyclic_group(1);
  CHECK(trivial.number_of_arrows() == 1);
  CHECK(is_fibrating(trivial));

  CHECK(isotropy_group(cyclic_group(3), 0).size() == 3);
  CHECK_THROWS_AS(isotropy_group(z2, 1), UnknownObject);

  // identity need not be element 0
  auto g = group_as_groupoid({{1, 0}, {0, 1}}, {"a", "e"});
  CHECK(g.arrow_name(g.unit(0)) == "e");

  CHECK_THROWS_AS(group_as_groupoid({{0, 0}, {0, 0}}), NotAGroup);
  CHECK_THROWS_AS(group_as_groupoid({{0, 2}, {1, 0}}), NotAGroup);
  CHECK_THROWS_AS(group_as_groupoid({}), NotAGroup);
  // identity exists, associative fails
  CHECK_THROWS_AS(group_as_groupoid({{0, 1, 2}, {1, 1, 0}, {2, 0, 2}}),
                  NotAGroup);
}

TEST_CASE("isotropy groupoid and fibrating") {
  auto iso = isotropy_groupoid(pair_groupoid(2));
  CHECK(iso.number_of_objects() == 2);
  CHECK(iso.number_of_arrows() == 2);
  CHECK(orbit_space(iso).size() == 2);
  CHECK(isotropy_groupoid(cyclic_group(3)) == cyclic_group(3));
  CHECK(isotropy_groupoid(unit_groupoid(3)) == unit_groupoid(3));

  CHECK(is_fibrating(pair_groupoid(3)));
  CHECK_FALSE(is_fibrating(unit_groupoid(2)));
  CHECK(is_fibrating(cyclic_group(2)));
  CHECK(is_fibrating(FiniteGroupoid()));
}

TEST_CASE("orbit space agrees with brute-force reachability") {
  std::vector<FiniteGroupoid> gs{
      pair_groupoid(3),
      unit_groupoid(3),
      disjoint_union({pair_groupoid(2), cyclic_group(2), unit_groupoid(2)}),
      product(pair_groupoid(2), cyclic_group(3)),
      isotropy_groupoid(product(pair_groupoid(2), unit_groupoid(2)))};
  for (auto const& g : gs) {
    auto orbits = orbit_space(g);
    auto reach  = reachable_sets(g);
    for (Object x = 0; x < g.number_of_objects(); ++x) {
      for (Object y = 0; y < g.number_of_objects(); ++y) {
        CHECK((orbits.class_of(x) == orbits.class_of(y)) == (reach[x].count(y) == 1));
      }
    }
    for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
      CHECK(orbits.class_of(g.source(a)) == orbits.class_of(g.target(a)));
    }
  }
}

TEST_CASE("constructed groupoids revalidate cleanly") {
  std::vector<FiniteGroupoid> gs{
      FiniteGroupoid(),
      pair_groupoid(4),
      disjoint_union({pair_groupoid(2), cyclic_group(4)}),
      product(cyclic_group(2), cyclic_group(3)),
      product(pair_groupoid(2), pair_groupoid(2))};
  for (auto const& g : gs) {
    CHECK(validate_groupoid(g.raw()).ok());
    for (Object x = 0; x < g.number_of_objects(); ++x) {
      auto iso = isotropy_group(g, x);
      CHECK(std::count(iso.begin(), iso.end(), g.unit(x)) == 1);
    }
  }
  CHECK(product(pair_groupoid(2), pair_groupoid(2)).number_of_arrows() == 16);
  CHECK(orbit_space(product(pair_groupoid(2), unit_groupoid(3))).size() == 3);
}

TEST_CASE("validation catches broken tables") {
  auto const good = pair_groupoid(2).raw();
  CHECK(validate_groupoid(good).ok());

  SUBCASE("redirected composite") {
    auto report = validate_groupoid(redirect_first_entry(good, 1));
    CHECK_FALSE(report.ok());
    CHECK((report.contains(Law::associativity)
           || report.contains(Law::composite_endpoints)
           || report.contains(Law::left_unit) || report.contains(Law::right_unit)));
  }
  SUBCASE("unit with wrong target") {
    auto bad    = good;
    bad.unit[0] = 1;  // (0,1) : 1 -> 0
    CHECK(validate_groupoid(bad).contains(Law::unit_endpoints));
  }
  SUBCASE("dangling") {
    auto bad      = good;
    bad.target[2] = 7;
    auto report   = validate_groupoid(bad);
    CHECK(report.contains(Law::dangling_identifier));
    CHECK(report.violations().size() == 1);
  }
  SUBCASE("missing composite") {
    auto bad = good;
    bad.composition.pop_back();
    CHECK(validate_groupoid(bad).contains(Law::missing_composite));
  }
  SUBCASE("duplicate and out-of-domain entries") {
    auto bad = good;
    bad.composition.push_back(bad.composition.front());
    bad.composition.push_back({1, 1, 1});  // (0,1) o (0,1) is undefined
    auto report = validate_groupoid(bad);
    CHECK(report.contains(Law::duplicate_entry));
    CHECK(report.contains(Law::composition_domain));
  }
  SUBCASE("inverse") {
    auto bad       = good;
    bad.inverse[1] = 1;
    auto report    = validate_groupoid(bad);
    CHECK(report.contains(Law::inverse_endpoints));
    CHECK(report.contains(Law::inverse_involution));
  }
  SUBCASE("size limit") {
    auto report = validate_groupoid(pair_groupoid(3).raw(), {5});
    CHECK(report.contains(Law::size_limit));
    CHECK_THROWS_AS(FiniteGroupoid::make(pair_groupoid(3).raw(), {5}),
                    ValidationError);
  }
  SUBCASE("incomplete map") {
    auto bad = good;
    bad.unit.pop_back();
    CHECK(validate_groupoid(bad).contains(Law::incomplete_map));
  }
}

TEST_CASE("surjection laws on library maps") {
  // target map of pair_groupoid(3) onto objects, then orbit projection
  auto const g      = pair_groupoid(3);
  auto const orbits = orbit_space(product(g, unit_groupoid(2)));
  std::set<Object> image;
  for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
    image.insert(g.target(a));
  }
  CHECK(image.size() == g.number_of_objects());
  // composite of the target map with the (surjective) class map is surjective
  auto const          classes = orbit_space(g);
  std::set<std::uint32_t> composite;
  for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
    composite.insert(classes.class_of(g.target(a)));
  }
  CHECK(composite.size() == classes.size());
  CHECK(orbits.size() == 2);
  // unit map is injective; it is surjective only for unit groupoids, where it
  // is then a bijection
  auto const u = unit_groupoid(3);
  std::set<Arrow> units;
  for (Object x = 0; x < u.number_of_objects(); ++x) {
    units.insert(u.unit(x));
  }
  CHECK(units.size() == u.number_of_arrows());
}
