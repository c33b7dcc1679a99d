#include "morita/bundle.hpp"

#include <algorithm>

#include "morita/errors.hpp"
#include "report_builder.hpp"

namespace morita {

  ValidationReport validate_bundle(Action const&                     action,
                                   std::vector<std::string> const&   base,
                                   std::vector<std::uint32_t> const& projection) {
    detail::ReportBuilder report;
    if (projection.size() != action.size()) {
      report.add(Law::incomplete_map, {"projection"});
      return report.take();
    }
    for (Point x = 0; x < action.size(); ++x) {
      if (projection[x] >= base.size()) {
        report.add(Law::dangling_identifier,
                   {"projection", action.point_name(x),
                    "#" + std::to_string(projection[x])});
      }
    }
    if (!report.ok()) {
      return report.take();
    }
    for (Point x = 0; x < action.size(); ++x) {
      for (Arrow g : action.acting_on(x)) {
        Point const y = action.act(g, x);
        if (projection[y] != projection[x]) {
          report.add(Law::projection_invariance,
                     {action.groupoid().arrow_name(g), action.point_name(x)});
        }
      }
    }
    return report.take();
  }

  Bundle Bundle::make(Action                     action,
                      std::vector<std::string>   base,
                      std::vector<std::uint32_t> projection) {
    auto report = validate_bundle(action, base, projection);
    if (!report.ok()) {
      throw ValidationError("invalid bundle", std::move(report));
    }
    Bundle b;
    b._action     = std::move(action);
    b._base       = std::move(base);
    b._projection = std::move(projection);
    return b;
  }

  Bundle regular_bundle(FiniteGroupoid const& g, Side side) {
    auto                       action = regular_action(g, side);
    std::vector<std::string>   base;
    std::vector<std::uint32_t> projection;
    for (Object x = 0; x < g.number_of_objects(); ++x) {
      base.push_back(g.object_name(x));
    }
    for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
      projection.push_back(side == Side::left ? g.source(a) : g.target(a));
    }
    return Bundle::make(std::move(action), std::move(base), std::move(projection));
  }

  Bundle flip_side(Bundle const& b) {
    return Bundle::make(flip_side(b.action()), b.base(), b.projection());
  }

  ////////////////////////////////////////////////////////////////////////
  // Action map and principality
  ////////////////////////////////////////////////////////////////////////

  bool ActionMap::is_injective() const {
    std::vector<bool> hit(codomain.size(), false);
    for (auto v : value) {
      if (hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    return true;
  }

  bool ActionMap::is_surjective() const {
    std::vector<bool> hit(codomain.size(), false);
    std::size_t       count = 0;
    for (auto v : value) {
      if (!hit[v]) {
        hit[v] = true;
        ++count;
      }
    }
    return count == codomain.size();
  }

  ActionMap action_map(Bundle const& b) {
    auto const&              a = b.action();
    auto const               n = a.size();
    ActionMap                result;
    std::vector<std::size_t> index(n * n, kUndefined);
    for (Point x1 = 0; x1 < n; ++x1) {
      for (Point x2 = 0; x2 < n; ++x2) {
        if (b.project(x1) == b.project(x2)) {
          index[x1 * n + x2] = result.codomain.size();
          result.codomain.emplace_back(x1, x2);
        }
      }
    }
    for (Point x = 0; x < n; ++x) {
      for (Arrow g : a.acting_on(x)) {
        Point const y = a.act(g, x);
        result.domain.emplace_back(g, x);
        result.value.push_back(b.side() == Side::left ? index[y * n + x]
                                                      : index[x * n + y]);
      }
    }
    return result;
  }

  bool is_pre_principal(Bundle const& b) {
    return action_map(b).is_bijective();
  }

  bool is_subductive(Bundle const& b) {
    std::vector<bool> hit(b.base().size(), false);
    for (auto p : b.projection()) {
      hit[p] = true;
    }
    return std::all_of(hit.cbegin(), hit.cend(), [](bool h) { return h; });
  }

  bool is_principal(Bundle const& b) {
    return is_subductive(b) && is_pre_principal(b);
  }

  bool is_fibre_transitive(Bundle const& b) {
    auto const& a = b.action();
    for (Point x1 = 0; x1 < a.size(); ++x1) {
      for (Point x2 = 0; x2 < a.size(); ++x2) {
        if (b.project(x1) != b.project(x2)) {
          continue;
        }
        bool found = false;
        for (Arrow g : a.acting_on(x2)) {
          if (a.act(g, x2) == x1) {
            found = true;
            break;
          }
        }
        if (!found) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Division maps
  ////////////////////////////////////////////////////////////////////////

  Arrow DivisionMap::operator()(Point x1, Point x2) const {
    if (!defined(x1, x2)) {
      throw DomainMismatch("division map undefined at (" + std::to_string(x1)
                           + ", " + std::to_string(x2) + ")");
    }
    return _table[x1 * _n + x2];
  }

  DivisionMap division_map(Bundle const& b) {
    if (!is_pre_principal(b)) {
      throw NotPrePrincipal("division map requires a pre-principal bundle");
    }
    Bundle const       left = b.side() == Side::left ? b : flip_side(b);
    auto const&        a    = left.action();
    auto const         n    = a.size();
    std::vector<Arrow> table(n * n, kUndefined);
    // Inverting the action map: (g, x2) |-> (g.x2, x2).
    for (Point x2 = 0; x2 < n; ++x2) {
      for (Arrow g : a.acting_on(x2)) {
        table[a.act(g, x2) * n + x2] = g;
      }
    }
    return DivisionMap(n, std::move(table));
  }

  ValidationReport check_division_laws(Bundle const& b, DivisionMap const& d) {
    Bundle const          left = b.side() == Side::left ? b : flip_side(b);
    auto const&           a    = left.action();
    auto const&           G    = a.groupoid();
    detail::ReportBuilder report;
    auto const            pt  = [&](Point x) { return a.point_name(x); };
    auto const            arr = [&](Arrow g) { return G.arrow_name(g); };

    if (d.size() != a.size()) {
      report.add(Law::carrier_mismatch,
                 {std::to_string(d.size()), std::to_string(a.size())});
      return report.take();
    }
    for (Point x1 = 0; x1 < a.size(); ++x1) {
      for (Point x2 = 0; x2 < a.size(); ++x2) {
        bool const same_fibre = left.project(x1) == left.project(x2);
        if (d.defined(x1, x2) != same_fibre) {
          report.add(Law::division_action, {pt(x1), pt(x2)});
          continue;
        }
        if (!same_fibre) {
          continue;
        }
        Arrow const g = d(x1, x2);
        if (g >= G.number_of_arrows() || G.source(g) != a.moment(x2)
            || G.target(g) != a.moment(x1)) {
          report.add(Law::division_endpoints, {pt(x1), pt(x2)});
          continue;
        }
        if (a.act(g, x2) != x1) {
          report.add(Law::division_action, {pt(x1), pt(x2), arr(g)});
        }
        if (!d.defined(x2, x1) || d(x2, x1) != G.inverse(g)) {
          report.add(Law::division_inverse, {pt(x1), pt(x2)});
        }
        if (x1 == x2 && g != G.unit(a.moment(x1))) {
          report.add(Law::division_unit, {pt(x1)});
        }
        for (Arrow h : a.acting_on(x1)) {
          Point const y = a.act(h, x1);
          if (!d.defined(y, x2) || d(y, x2) != G.compose(h, g)) {
            report.add(Law::division_equivariance, {arr(h), pt(x1), pt(x2)});
          }
        }
      }
    }
    return report.take();
  }

  bool is_bundle_morphism(std::vector<Point> const& map,
                          Bundle const&             from,
                          Bundle const&             to) {
    if (!is_equivariant(map, from.action(), to.action())
        || from.base().size() != to.base().size()) {
      return false;
    }
    for (Point x = 0; x < map.size(); ++x) {
      if (to.project(map[x]) != from.project(x)) {
        return false;
      }
    }
    return true;
  }

}  // namespace morita
