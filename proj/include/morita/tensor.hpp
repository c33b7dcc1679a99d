#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "morita/action.hpp"
#include "morita/bibundle.hpp"
#include "morita/errors.hpp"
#include "morita/partition.hpp"

namespace morita {

  // X (x)_H Y: the fibred product {(x, y) : r(x) = l(y)} modulo
  // (x, y) ~ (x.h, h^-1.y). Pairs are listed lexicographically and a class is
  // identified by the position of its least pair in that order, so class
  // numbering and representatives are canonical.
  class BalancedTensor {
   public:
    BalancedTensor() = default;

    // right: a right H-action on X; left: a left H-action on Y.
    // Throws GroupoidMismatch.
    BalancedTensor(Action const& right, Action const& left);

    std::size_t size() const noexcept {
      return _classes.size();
    }

    std::size_t left_size() const noexcept {
      return _nx;
    }

    std::size_t right_size() const noexcept {
      return _ny;
    }

    std::vector<std::pair<Point, Point>> const& pairs() const noexcept {
      return _pairs;
    }

    bool in_fibred_product(Point x, Point y) const {
      return x < _nx && y < _ny && _index[x * _ny + y] != kUndefined;
    }

    // Throws DomainMismatch unless r(x) = l(y).
    std::uint32_t class_of(Point x, Point y) const;

    // The least pair of class c.
    std::pair<Point, Point> representative(std::uint32_t c) const {
      return _pairs[_classes.members(c).front()];
    }

    // Every pair in class c.
    std::vector<std::pair<Point, Point>> members(std::uint32_t c) const;

    OrbitPartition const& partition() const noexcept {
      return _classes;
    }

   private:
    std::size_t                          _nx = 0;
    std::size_t                          _ny = 0;
    std::vector<std::pair<Point, Point>> _pairs;
    std::vector<std::uint32_t>           _index;
    OrbitPartition                       _classes;
  };

  // The common value of f(x, y) over the members of class c. Throws
  // IllDefined, naming what, if two members disagree.
  template <typename F>
  std::uint32_t value_on_class(BalancedTensor const& t,
                               std::uint32_t         c,
                               char const*           what,
                               F&&                   f) {
    auto const          all   = t.members(c);
    std::uint32_t const value = f(all.front().first, all.front().second);
    for (auto const& [x, y] : all) {
      if (f(x, y) != value) {
        throw IllDefined(std::string(what) + " depends on the representative of class "
                         + std::to_string(c));
      }
    }
    return value;
  }

  // B1 (x)_H B2 together with the tensor it is built on.
  struct Composite {
    Bibundle       first;
    Bibundle       second;
    BalancedTensor tensor;
    Bibundle       bibundle;
  };

  // The composite (G, K)-bibundle of a (G, H)- and an (H, K)-bibundle, with
  // l(x (x) y) = l(x), r(x (x) y) = r(y), g.(x (x) y) = (g.x) (x) y and
  // (x (x) y).k = x (x) (y.k). Every representative of every class is
  // checked; disagreement throws IllDefined. Throws GroupoidMismatch.
  Composite compose_bibundles(Bibundle const& b1, Bibundle const& b2);

  // The left G-action induced on X (x)_H Y.
  Action induced_left_action(Bibundle const& b, Action const& a);

  // The right K-action induced on X (x)_H Y, for a right H-action on X and a
  // bibundle Y between H and K.
  Action induced_right_action(Action const& a, Bibundle const& b);

  // A map together with its inverse, both given as point indices.
  struct CompositeIso {
    Composite          composite;
    std::vector<Point> forward;
    std::vector<Point> backward;
  };

  // G (x)_G X -> X, g (x) x |-> g.x, inverse x |-> unit(l(x)) (x) x.
  CompositeIso left_unitor(Bibundle const& b);

  // X (x)_H H -> X, x (x) h |-> x.h, inverse x |-> x (x) unit(r(x)).
  CompositeIso right_unitor(Bibundle const& b);

  struct Associator {
    Composite          first_two;   // X (x) Y
    Composite          last_two;    // Y (x) Z
    Composite          left_nested;   // (X (x) Y) (x) Z
    Composite          right_nested;  // X (x) (Y (x) Z)
    std::vector<Point> forward;
    std::vector<Point> backward;
  };

  // (x (x) y) (x) z |-> x (x) (y (x) z) and back.
  Associator associator(Bibundle const& b1, Bibundle const& b2, Bibundle const& b3);

  // id (x) f : X (x) Y -> X (x) Y' for f : Y -> Y'.
  std::vector<Point> whisker_left(Composite const&          from,
                                  Composite const&          to,
                                  std::vector<Point> const& f);

  // f (x) id : X (x) Y -> X' (x) Y for f : X -> X'.
  std::vector<Point> whisker_right(Composite const&          from,
                                   Composite const&          to,
                                   std::vector<Point> const& f);

}  // namespace morita
