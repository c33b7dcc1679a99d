#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "morita/enumerate.hpp"
#include "morita/errors.hpp"

using namespace morita;

namespace {

  // Isomorphism classes of groupoids with at most two objects and three
  // arrows, straight from the axioms: every source/target assignment, every
  // endpoint-respecting composition table, checked for associativity, units
  // and inverses, then compared under all object and arrow relabellings.
  struct Tiny {
    std::size_t              objects;
    std::vector<Object>      src, tgt;
    std::map<std::pair<Arrow, Arrow>, Arrow> comp;  // (g, h) -> g o h
  };

  bool is_groupoid(Tiny const& t) {
    auto const n = t.src.size();
    auto c = [&](Arrow g, Arrow h) { return t.comp.at({g, h}); };
    for (Arrow f = 0; f < n; ++f) {
      for (Arrow g = 0; g < n; ++g) {
        for (Arrow h = 0; h < n; ++h) {
          if (t.src[f] == t.tgt[g] && t.src[g] == t.tgt[h]
              && c(c(f, g), h) != c(f, c(g, h))) {
            return false;
          }
        }
      }
    }
    std::vector<Arrow> unit(t.objects, kUndefined);
    for (Object x = 0; x < t.objects; ++x) {
      for (Arrow e = 0; e < n; ++e) {
        if (t.src[e] != x || t.tgt[e] != x) {
          continue;
        }
        bool is_unit = true;
        for (Arrow g = 0; g < n; ++g) {
          if ((t.src[g] == x && c(g, e) != g) || (t.tgt[g] == x && c(e, g) != g)) {
            is_unit = false;
          }
        }
        if (is_unit) {
          unit[x] = e;
        }
      }
      if (unit[x] == kUndefined) {
        return false;
      }
    }
    for (Arrow g = 0; g < n; ++g) {
      bool invertible = false;
      for (Arrow h = 0; h < n; ++h) {
        if (t.src[h] == t.tgt[g] && t.tgt[h] == t.src[g]
            && c(g, h) == unit[t.tgt[g]] && c(h, g) == unit[t.src[g]]) {
          invertible = true;
        }
      }
      if (!invertible) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::uint32_t> encode(Tiny const& t) {
    auto const                 n = t.src.size();
    std::vector<std::uint32_t> best;
    std::vector<Object>        po(t.objects);
    std::iota(po.begin(), po.end(), 0u);
    do {
      std::vector<Arrow> pa(n);
      std::iota(pa.begin(), pa.end(), 0u);
      do {
        std::vector<std::uint32_t> code{static_cast<std::uint32_t>(t.objects),
                                        static_cast<std::uint32_t>(n)};
        std::vector<Arrow> inv(n);
        for (Arrow a = 0; a < n; ++a) {
          inv[pa[a]] = a;
        }
        for (Arrow a = 0; a < n; ++a) {
          code.push_back(po[t.src[inv[a]]]);
          code.push_back(po[t.tgt[inv[a]]]);
        }
        for (Arrow a = 0; a < n; ++a) {
          for (Arrow b = 0; b < n; ++b) {
            auto it = t.comp.find({inv[a], inv[b]});
            code.push_back(it == t.comp.end() ? kUndefined : pa[it->second]);
          }
        }
        if (best.empty() || code < best) {
          best = code;
        }
      } while (std::next_permutation(pa.begin(), pa.end()));
    } while (std::next_permutation(po.begin(), po.end()));
    return best;
  }

  void fill(Tiny& t,
            std::vector<std::pair<Arrow, Arrow>> const& pairs,
            std::size_t                                 i,
            std::set<std::vector<std::uint32_t>>&       classes) {
    if (i == pairs.size()) {
      if (is_groupoid(t)) {
        classes.insert(encode(t));
      }
      return;
    }
    auto const [g, h] = pairs[i];
    for (Arrow v = 0; v < t.src.size(); ++v) {
      if (t.src[v] == t.src[h] && t.tgt[v] == t.tgt[g]) {
        t.comp[{g, h}] = v;
        fill(t, pairs, i + 1, classes);
      }
    }
    t.comp.erase({g, h});
  }

  std::size_t brute_force_groupoid_count(std::size_t max_objects, std::size_t max_arrows) {
    std::set<std::vector<std::uint32_t>> classes;
    for (std::size_t m = 0; m <= max_objects; ++m) {
      for (std::size_t n = 0; n <= max_arrows; ++n) {
        std::size_t assignments = 1;
        for (std::size_t i = 0; i < 2 * n; ++i) {
          assignments *= m;
        }
        if (n == 0) {
          assignments = 1;
        }
        for (std::size_t code = 0; code < assignments; ++code) {
          Tiny        t{m, std::vector<Object>(n), std::vector<Object>(n), {}};
          std::size_t rest = code;
          for (Arrow a = 0; a < n; ++a) {
            t.src[a] = rest % m;
            rest /= m;
            t.tgt[a] = rest % m;
            rest /= m;
          }
          std::vector<std::pair<Arrow, Arrow>> pairs;
          for (Arrow g = 0; g < n; ++g) {
            for (Arrow h = 0; h < n; ++h) {
              if (t.src[g] == t.tgt[h]) {
                pairs.emplace_back(g, h);
              }
            }
          }
          fill(t, pairs, 0, classes);
        }
      }
    }
    return classes.size();
  }

  // Every raw left action on the carrier whose entries land in the right
  // fibre, checked by the validator.
  std::size_t brute_force_action_count(FiniteGroupoid const&      g,
                                       std::vector<Object> const& moment) {
    std::vector<std::pair<Arrow, Point>> slots;
    std::vector<std::vector<Point>>      choices;
    for (Point x = 0; x < moment.size(); ++x) {
      for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
        if (g.source(a) == moment[x]) {
          slots.emplace_back(a, x);
          choices.emplace_back();
          for (Point y = 0; y < moment.size(); ++y) {
            if (moment[y] == g.target(a)) {
              choices.back().push_back(y);
            }
          }
          if (choices.back().empty()) {
            return 0;
          }
        }
      }
    }
    RawAction raw;
    for (Point x = 0; x < moment.size(); ++x) {
      raw.carrier.push_back(std::to_string(x));
    }
    raw.moment = moment;
    std::size_t              count = 0;
    std::vector<std::size_t> digit(slots.size(), 0);
    while (true) {
      raw.entries.clear();
      for (std::size_t i = 0; i < slots.size(); ++i) {
        raw.entries.push_back({slots[i].first, slots[i].second, choices[i][digit[i]]});
      }
      count += validate_left_action(g, raw).ok();
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == choices[i].size()) {
        digit[i++] = 0;
      }
      if (i == digit.size()) {
        break;
      }
    }
    return count;
  }

  Action relabel(Action const& a, std::vector<Point> const& p) {
    auto      raw = a.raw();
    RawAction out{raw.carrier, raw.moment, {}};
    for (Point x = 0; x < p.size(); ++x) {
      out.carrier[p[x]] = raw.carrier[x];
      out.moment[p[x]]  = raw.moment[x];
    }
    for (auto const& [g, x, y] : raw.entries) {
      out.entries.push_back({g, p[x], p[y]});
    }
    return Action::make(a.groupoid(), out, a.side());
  }

}  // namespace

TEST_CASE("groups of small order") {
  std::vector<std::size_t> expected{0, 1, 1, 1, 2, 1, 2};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(groups_of_order(n).size() == expected[n]);
    for (auto const& t : groups_of_order(n)) {
      CHECK_NOTHROW(group_as_groupoid(t));
    }
  }
  CHECK_THROWS_AS(groups_of_order(9), BoundsTooLarge);
}

TEST_CASE("groupoid enumeration counts") {
  CHECK(groupoids_up_to_iso(0, 0).size() == 1);
  CHECK(groupoids_up_to_iso(1, 2).size() == 3);
  CHECK(groupoids_up_to_iso(2, 4).size() == 11);
  CHECK(groupoids_up_to_iso(3, 6).size() == 31);
  CHECK(groupoids_up_to_iso(2, 3).size() == brute_force_groupoid_count(2, 3));
  CHECK(groupoids_up_to_iso(2, 3).size() == 6);
  CHECK(groupoids_up_to_iso(1, 3).size() == brute_force_groupoid_count(1, 3));
}

TEST_CASE("groupoid enumeration contents") {
  auto const gs = groupoids_up_to_iso(2, 4);
  auto has      = [&](FiniteGroupoid const& g) {
    return std::any_of(gs.begin(), gs.end(), [&](auto const& x) {
      return x.number_of_objects() == g.number_of_objects()
             && x.number_of_arrows() == g.number_of_arrows()
             && orbit_space(x).size() == orbit_space(g).size()
             && is_fibrating(x) == is_fibrating(g);
    });
  };
  CHECK(has(pair_groupoid(2)));
  CHECK(has(unit_groupoid(2)));
  CHECK(has(cyclic_group(4)));
  for (auto const& g : gs) {
    CHECK(validate_groupoid(g.raw()).ok());
  }
  CHECK(groupoids_up_to_iso(3, 6) == groupoids_up_to_iso(3, 6));
}

TEST_CASE("action enumeration matches brute force") {
  std::vector<std::pair<FiniteGroupoid, std::vector<Object>>> cases{
      {cyclic_group(2), {0, 0}},
      {cyclic_group(2), {0, 0, 0}},
      {cyclic_group(3), {0, 0, 0}},
      {pair_groupoid(2), {0, 1}},
      {pair_groupoid(2), {0, 0, 1, 1}},
      {pair_groupoid(2), {0, 1, 1}},
      {disjoint_union({cyclic_group(2), unit_groupoid(1)}), {0, 0, 1}},
      {product(pair_groupoid(2), cyclic_group(2)), {0, 0, 1, 1}}};
  for (auto const& [g, moment] : cases) {
    std::vector<std::string> carrier;
    for (std::size_t i = 0; i < moment.size(); ++i) {
      carrier.push_back(std::to_string(i));
    }
    std::size_t count = 0;
    for_each_left_action(g, carrier, moment, nullptr, [&](Action const& a) {
      CHECK(validate_left_action(g, a.raw()).ok());
      ++count;
      return true;
    });
    CHECK(count == brute_force_action_count(g, moment));
  }
}

TEST_CASE("labelled action enumeration and early stop") {
  auto const                       g = cyclic_group(2);
  std::vector<std::uint32_t> const labels{0, 0, 1, 1};
  std::size_t                      count = 0;
  for_each_left_action(g, {"a", "b", "c", "d"}, {0, 0, 0, 0}, &labels,
                       [&](Action const& a) {
                         for (Point x = 0; x < 4; ++x) {
                           CHECK(labels[a.act(1, x)] == labels[x]);
                         }
                         ++count;
                         return true;
                       });
  CHECK(count == 4);
  std::size_t seen = 0;
  bool const  done = for_each_left_action(g, {"a", "b"}, {0, 0}, nullptr, [&](Action const&) {
    ++seen;
    return false;
  });
  CHECK_FALSE(done);
  CHECK(seen == 1);
}

TEST_CASE("sorted sequences") {
  CHECK(sorted_sequences(3, 2).size() == 6);
  CHECK(sorted_sequences(1, 4).size() == 1);
  CHECK(sorted_sequences(0, 0).size() == 1);
  CHECK(sorted_sequences(0, 1).empty());
  for (auto const& s : sorted_sequences(4, 3)) {
    CHECK(std::is_sorted(s.begin(), s.end()));
  }
}

TEST_CASE("actions up to isomorphism") {
  CHECK(left_actions_up_to_iso(cyclic_group(2), 2).size() == 4);
  CHECK(left_actions_up_to_iso(unit_groupoid(2), 1).size() == 3);
  // Z/3 on three points: trivial, or the regular action
  auto const z3 = left_actions_up_to_iso(cyclic_group(3), 3);
  CHECK(std::count_if(z3.begin(), z3.end(), [](auto const& a) { return a.size() == 3; })
        == 2);
}

TEST_CASE("canonical form is a relabelling invariant") {
  auto const a = regular_action(product(pair_groupoid(2), cyclic_group(2)), Side::left);
  std::vector<Point> p(a.size());
  std::iota(p.begin(), p.end(), 0u);
  std::reverse(p.begin(), p.end());
  CHECK(canonical_form(relabel(a, p)) == canonical_form(a));
  std::rotate(p.begin(), p.begin() + 3, p.end());
  CHECK(canonical_form(relabel(a, p)) == canonical_form(a));

  auto const b = identity_bibundle(cyclic_group(3));
  CHECK(canonical_form(b) == canonical_form(identity_bibundle(cyclic_group(3))));
}

TEST_CASE("bibundle enumeration") {
  auto const pt = point_groupoid();
  CHECK(bibundles_up_to_iso(pt, pt, 3).size() == 4);
  CHECK(bibundle_search_estimate(pt, pt, 3) == 4);
  CHECK(bibundle_search_estimate(unit_groupoid(2), pt, 2) == 1 + 2 + 3);

  auto const z2  = cyclic_group(2);
  auto const all = bibundles_up_to_iso(z2, z2, 2, {true, true, true});
  REQUIRE(all.size() == 1);
  CHECK(find_biequivariant_iso(all.front(), identity_bibundle(z2)).has_value());

  std::size_t examined = 0;
  std::size_t count    = 0;
  for_each_bibundle(z2, z2, 2, {}, [&](Bibundle const& b) {
    CHECK(validate_bibundle(z2, z2, b.raw()).ok());
    ++count;
    return true;
  }, &examined);
  CHECK(count > 0);
  CHECK(examined >= count);
}
