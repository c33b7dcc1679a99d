#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morita/groupoid.hpp"
#include "morita/partition.hpp"
#include "morita/types.hpp"
#include "morita/validation.hpp"

namespace morita {

  // Unvalidated action tables. Entries are stored as (arrow, point, result)
  // for both sides: for a left action the result is g.x, for a right action
  // it is x.g.
  struct RawAction {
    std::vector<std::string>                  carrier;
    std::vector<Object>                       moment;
    std::vector<std::array<std::uint32_t, 3>> entries;

    bool operator==(RawAction const&) const = default;
  };

  // Conditions (1), (2), (3) of a groupoid action, plus domain and shape
  // problems. A left entry (g, x) is admissible iff source(g) = moment(x); a
  // right entry iff target(g) = moment(x).
  ValidationReport validate_action(FiniteGroupoid const& g,
                                   RawAction const&      raw,
                                   Side                  side);

  inline ValidationReport validate_left_action(FiniteGroupoid const& g,
                                               RawAction const&      raw) {
    return validate_action(g, raw, Side::left);
  }

  inline ValidationReport validate_right_action(FiniteGroupoid const& g,
                                                RawAction const&      raw) {
    return validate_action(g, raw, Side::right);
  }

  // A validated left or right action of a finite groupoid on a finite set.
  class Action {
   public:
    // The empty left action of the empty groupoid.
    Action();

    // Throws ValidationError.
    static Action make(FiniteGroupoid g, RawAction raw, Side side);

    Side side() const noexcept;
    FiniteGroupoid const& groupoid() const noexcept;
    std::size_t size() const noexcept;

    Object moment(Point x) const;
    std::vector<Object> const& moments() const noexcept;

    // g.x for a left action, x.g for a right action.
    // Throws DomainMismatch when undefined.
    Point act(Arrow g, Point x) const;
    bool  defined(Arrow g, Point x) const;

    // Arrows that may act on x, in increasing order.
    std::span<Arrow const> acting_on(Point x) const;

    std::string const& point_name(Point x) const;
    std::vector<std::string> const& carrier() const noexcept;
    std::optional<Point> find_point(std::string const& name) const;

    RawAction const& raw() const noexcept;

    bool operator==(Action const& other) const;

   private:
    struct Data;
    explicit Action(std::shared_ptr<Data const> data);
    std::shared_ptr<Data const> _data;
  };

  // g * x := x . inverse(g), and conversely. Both are involutive up to the
  // identity of tables.
  Action to_left(Action const& right);
  Action to_right(Action const& left);

  // The same action viewed from the other side.
  Action flip_side(Action const& a);

  // Carrier is the set of arrows; moment is target (left) or source (right);
  // the action is composition.
  Action regular_action(FiniteGroupoid const& g, Side side);

  // Every arrow that can act fixes the point. Valid only when every such
  // arrow is a loop; throws ValidationError otherwise.
  Action trivial_action(FiniteGroupoid const&            g,
                        std::vector<std::string> const& carrier,
                        std::vector<Object> const&      moment,
                        Side                            side);

  OrbitPartition action_orbit_space(Action const& a);

  // map[x] is the image of x. Checks moments intertwine and the map commutes
  // with the action on every defined pair. Actions must be on the same side
  // and of the same groupoid.
  bool is_equivariant(std::vector<Point> const& map,
                      Action const&             from,
                      Action const&             to);

  // Whether every point is moved by every non-unit arrow acting on it.
  bool is_free(Action const& a);

}  // namespace morita
