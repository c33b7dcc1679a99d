#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "morita/bibundle.hpp"

namespace fixtures {

  using namespace morita;

  // pair_groupoid(n) acting on {0..n-1} by (i,j).j = i
  inline Action points_of_pair(std::size_t n) {
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

  // The (pair_groupoid(n), point)-bibundle on n points.
  inline Bibundle pair_to_point(std::size_t n) {
    return left_action_as_bibundle(points_of_pair(n));
  }

  inline std::vector<Point> identity_map(std::size_t n) {
    std::vector<Point> id(n);
    std::iota(id.begin(), id.end(), Point(0));
    return id;
  }

  template <typename F>
  std::vector<Point> compose_maps(std::vector<Point> const& outer, F const& inner) {
    std::vector<Point> out;
    for (auto x : inner) {
      out.push_back(outer.at(x));
    }
    return out;
  }

}  // namespace fixtures
