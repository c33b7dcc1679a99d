#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "morita/action.hpp"
#include "morita/validation.hpp"

namespace morita {

  // Checks that the projection is total, lands in the base and is constant
  // on orbits.
  ValidationReport validate_bundle(Action const&                     action,
                                   std::vector<std::string> const&   base,
                                   std::vector<std::uint32_t> const& projection);

  // An action together with an invariant projection onto a base set.
  class Bundle {
   public:
    Bundle() = default;

    // Throws ValidationError.
    static Bundle make(Action                     action,
                       std::vector<std::string>   base,
                       std::vector<std::uint32_t> projection);

    Action const& action() const noexcept {
      return _action;
    }

    Side side() const noexcept {
      return _action.side();
    }

    std::vector<std::string> const& base() const noexcept {
      return _base;
    }

    std::vector<std::uint32_t> const& projection() const noexcept {
      return _projection;
    }

    std::uint32_t project(Point x) const {
      return _projection.at(x);
    }

    bool operator==(Bundle const&) const = default;

   private:
    Action                     _action;
    std::vector<std::string>   _base;
    std::vector<std::uint32_t> _projection;
  };

  // The groupoid acting on its own arrows, projected to objects by the
  // moment of the opposite side (source for left, target for right).
  Bundle regular_bundle(FiniteGroupoid const& g, Side side);

  // The same bundle with its action viewed from the other side.
  Bundle flip_side(Bundle const& b);

  // The enumerated action map. For a left bundle, (g, x) |-> (g.x, x); for a
  // right bundle, (g, x) |-> (x, x.g). The codomain is every pair of points
  // in a common fibre, in lexicographic order.
  struct ActionMap {
    std::vector<std::pair<Arrow, Point>> domain;
    std::vector<std::pair<Point, Point>> codomain;
    std::vector<std::size_t>             value;  // index into codomain

    bool is_injective() const;
    bool is_surjective() const;

    bool is_bijective() const {
      return is_injective() && is_surjective();
    }
  };

  ActionMap action_map(Bundle const& b);

  bool is_pre_principal(Bundle const& b);
  bool is_subductive(Bundle const& b);
  bool is_principal(Bundle const& b);

  // Independent of the action map: any two points of a fibre are related.
  bool is_fibre_transitive(Bundle const& b);

  // The unique arrow relating two points of a fibre. For a left bundle,
  // d(x1, x2) . x2 = x1; for a right bundle, x1 . d(x1, x2) = x2.
  class DivisionMap {
   public:
    DivisionMap() = default;
    DivisionMap(std::size_t n, std::vector<Arrow> table)
        : _n(n), _table(std::move(table)) {}

    std::size_t size() const noexcept {
      return _n;
    }

    bool defined(Point x1, Point x2) const {
      return x1 < _n && x2 < _n && _table[x1 * _n + x2] != kUndefined;
    }

    // Throws DomainMismatch off the common-fibre pairs.
    Arrow operator()(Point x1, Point x2) const;

    bool operator==(DivisionMap const&) const = default;

   private:
    std::size_t        _n = 0;
    std::vector<Arrow> _table;
  };

  // Throws NotPrePrincipal.
  DivisionMap division_map(Bundle const& b);

  // Checks the division-map laws on every defined pair. For a left bundle:
  //   d(x1, x2) . x2 = x1
  //   source d(x1, x2) = l(x2), target d(x1, x2) = l(x1)
  //   d(x1, x2)^-1 = d(x2, x1), d(x, x) = unit(l(x))
  //   d(g.x1, x2) = g o d(x1, x2)
  // A right bundle is checked through its left form, whose division map
  // coincides with the right one.
  ValidationReport check_division_laws(Bundle const& b, DivisionMap const& d);

  // Equivariant and compatible with projections into a common base.
  bool is_bundle_morphism(std::vector<Point> const& map,
                          Bundle const&             from,
                          Bundle const&             to);

}  // namespace morita
