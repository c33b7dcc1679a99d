#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "morita/action.hpp"
#include "morita/bundle.hpp"
#include "morita/groupoid.hpp"
#include "morita/validation.hpp"

namespace morita {

  // A left G-action and a right H-action on the same carrier.
  struct RawBibundle {
    RawAction left;
    RawAction right;

    bool operator==(RawBibundle const&) const = default;
  };

  // Validates both actions, then the mutual invariance of the moments and the
  // commutation (g.x).h = g.(x.h).
  ValidationReport validate_bibundle(FiniteGroupoid const& g,
                                     FiniteGroupoid const& h,
                                     RawBibundle const&    raw);

  class Bibundle {
   public:
    Bibundle() = default;

    // Throws ValidationError.
    static Bibundle make(FiniteGroupoid g, FiniteGroupoid h, RawBibundle raw);

    // Assembles a bibundle from validated actions; still checks invariance
    // and commutation.
    static Bibundle from_actions(Action left, Action right);

    FiniteGroupoid const& left_groupoid() const noexcept {
      return _left.groupoid();
    }

    FiniteGroupoid const& right_groupoid() const noexcept {
      return _right.groupoid();
    }

    Action const& left() const noexcept {
      return _left;
    }

    Action const& right() const noexcept {
      return _right;
    }

    std::size_t size() const noexcept {
      return _left.size();
    }

    Object l(Point x) const {
      return _left.moment(x);
    }

    Object r(Point x) const {
      return _right.moment(x);
    }

    // g.x
    Point act_left(Arrow g, Point x) const {
      return _left.act(g, x);
    }

    // x.h
    Point act_right(Point x, Arrow h) const {
      return _right.act(h, x);
    }

    std::string const& point_name(Point x) const {
      return _left.point_name(x);
    }

    RawBibundle raw() const {
      return {_left.raw(), _right.raw()};
    }

    bool operator==(Bibundle const&) const = default;

   private:
    Action _left;
    Action _right;
  };

  // Whether a left and a right action on the same carrier form a bibundle:
  // mutually invariant moments and commuting actions.
  bool actions_commute(Action const& left, Action const& right);

  // Carrier = arrows, l = target, r = source, both actions by composition.
  Bibundle identity_bibundle(FiniteGroupoid const& g);

  // Same carrier, moments swapped, h.x := x.h^-1 and x.g := g^-1.x.
  Bibundle opposite_bibundle(Bibundle const& b);

  // A left H-action as an (H, point)-bibundle with the trivial right action.
  Bibundle left_action_as_bibundle(Action const& a);

  // A right H-action as a (point, H)-bibundle with the trivial left action.
  Bibundle right_action_as_bibundle(Action const& a);

  // The point groupoid: one object, one arrow.
  FiniteGroupoid point_groupoid();

  // G acting on X, projected by r onto the objects of H.
  Bundle left_bundle(Bibundle const& b);

  // H acting on X, projected by l onto the objects of G.
  Bundle right_bundle(Bibundle const& b);

  struct Principality {
    bool left_subductive     = false;
    bool right_subductive    = false;
    bool left_pre_principal  = false;
    bool right_pre_principal = false;

    bool operator==(Principality const&) const = default;
  };

  Principality bibundle_principality(Bibundle const& b);

  // For a left pre-principal bibundle, with d the left division map:
  //   d(x1.h, x2.h) = d(x1, x2)
  //   d(x1, g^-1.x2) = d(x1, x2) o g
  // Throws NotPrePrincipal.
  ValidationReport check_bibundle_division_laws(Bibundle const& b);

  // Intertwines both moments and both actions. Requires the same groupoid
  // pair on both sides.
  bool is_biequivariant(std::vector<Point> const& map,
                        Bibundle const&           from,
                        Bibundle const&           to);

  // Biequivariant and bijective.
  bool is_biequivariant_iso(std::vector<Point> const& map,
                            Bibundle const&           from,
                            Bibundle const&           to);

  // Searches for a biequivariant bijection. Each choice of image is
  // propagated along the orbit of the point under both actions.
  std::optional<std::vector<Point>> find_biequivariant_iso(Bibundle const& from,
                                                           Bibundle const& to);

}  // namespace morita
