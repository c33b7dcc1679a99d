#include "morita/tensor.hpp"

#include "morita/errors.hpp"

namespace morita {

  BalancedTensor::BalancedTensor(Action const& right, Action const& left)
      : _nx(right.size()), _ny(left.size()) {
    if (right.side() != Side::right || left.side() != Side::left) {
      throw std::invalid_argument("a tensor needs a right action and a left action");
    }
    if (!(right.groupoid() == left.groupoid())) {
      throw GroupoidMismatch("the middle groupoids differ");
    }
    auto const& H = right.groupoid();
    _index.assign(_nx * _ny, kUndefined);
    for (Point x = 0; x < _nx; ++x) {
      for (Point y = 0; y < _ny; ++y) {
        if (right.moment(x) == left.moment(y)) {
          _index[x * _ny + y] = static_cast<std::uint32_t>(_pairs.size());
          _pairs.emplace_back(x, y);
        }
      }
    }
    // (x, y) ~ (x.h, h^-1.y)
    std::vector<std::pair<std::uint32_t, std::uint32_t>> related;
    for (std::uint32_t i = 0; i < _pairs.size(); ++i) {
      auto const [x, y] = _pairs[i];
      for (Arrow h : right.acting_on(x)) {
        Point const xh = right.act(h, x);
        Point const hy = left.act(H.inverse(h), y);
        related.emplace_back(i, _index[xh * _ny + hy]);
      }
    }
    _classes = OrbitPartition::from_relation(_pairs.size(), related);
  }

  std::uint32_t BalancedTensor::class_of(Point x, Point y) const {
    if (!in_fibred_product(x, y)) {
      throw DomainMismatch("(" + std::to_string(x) + ", " + std::to_string(y)
                           + ") is not in the fibred product");
    }
    return _classes.class_of(_index[x * _ny + y]);
  }

  std::vector<std::pair<Point, Point>>
  BalancedTensor::members(std::uint32_t c) const {
    std::vector<std::pair<Point, Point>> out;
    for (auto i : _classes.members(c)) {
      out.push_back(_pairs[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Composition
  ////////////////////////////////////////////////////////////////////////


  Composite compose_bibundles(Bibundle const& b1, Bibundle const& b2) {
    if (!(b1.right_groupoid() == b2.left_groupoid())) {
      throw GroupoidMismatch("cannot compose: middle groupoids differ");
    }
    Composite result{b1, b2, BalancedTensor(b1.right(), b2.left()), {}};
    auto const& t = result.tensor;
    auto const& G = b1.left_groupoid();
    auto const& K = b2.right_groupoid();

    RawBibundle raw;
    for (std::uint32_t c = 0; c < t.size(); ++c) {
      auto const [x0, y0] = t.representative(c);
      auto const name = "(" + b1.point_name(x0) + "," + b2.point_name(y0) + ")";
      raw.left.carrier.push_back(name);
      raw.right.carrier.push_back(name);
      raw.left.moment.push_back(
          value_on_class(t, c, "left moment", [&](Point x, Point) { return b1.l(x); }));
      raw.right.moment.push_back(
          value_on_class(t, c, "right moment", [&](Point, Point y) { return b2.r(y); }));
    }
    for (std::uint32_t c = 0; c < t.size(); ++c) {
      for (Arrow g : G.arrows_from(raw.left.moment[c])) {
        raw.left.entries.push_back(
            {g, c, value_on_class(t, c, "left action", [&](Point x, Point y) {
               return t.class_of(b1.act_left(g, x), y);
             })});
      }
      for (Arrow k : K.arrows_into(raw.right.moment[c])) {
        raw.right.entries.push_back(
            {k, c, value_on_class(t, c, "right action", [&](Point x, Point y) {
               return t.class_of(x, b2.act_right(y, k));
             })});
      }
    }
    result.bibundle = Bibundle::make(G, K, std::move(raw));
    return result;
  }

  Action induced_left_action(Bibundle const& b, Action const& a) {
    return compose_bibundles(b, left_action_as_bibundle(a)).bibundle.left();
  }

  Action induced_right_action(Action const& a, Bibundle const& b) {
    return compose_bibundles(right_action_as_bibundle(a), b).bibundle.right();
  }

  ////////////////////////////////////////////////////////////////////////
  // Coherence witnesses
  ////////////////////////////////////////////////////////////////////////

  CompositeIso left_unitor(Bibundle const& b) {
    auto const&  G = b.left_groupoid();
    CompositeIso result{compose_bibundles(identity_bibundle(G), b), {}, {}};
    auto const&  t = result.composite.tensor;
    for (std::uint32_t c = 0; c < t.size(); ++c) {
      result.forward.push_back(value_on_class(
          t, c, "left unitor", [&](Point g, Point x) { return b.act_left(g, x); }));
    }
    for (Point x = 0; x < b.size(); ++x) {
      result.backward.push_back(t.class_of(G.unit(b.l(x)), x));
    }
    return result;
  }

  CompositeIso right_unitor(Bibundle const& b) {
    auto const&  H = b.right_groupoid();
    CompositeIso result{compose_bibundles(b, identity_bibundle(H)), {}, {}};
    auto const&  t = result.composite.tensor;
    for (std::uint32_t c = 0; c < t.size(); ++c) {
      result.forward.push_back(value_on_class(
          t, c, "right unitor", [&](Point x, Point h) { return b.act_right(x, h); }));
    }
    for (Point x = 0; x < b.size(); ++x) {
      result.backward.push_back(t.class_of(x, H.unit(b.r(x))));
    }
    return result;
  }

  Associator associator(Bibundle const& b1, Bibundle const& b2, Bibundle const& b3) {
    Associator a;
    a.first_two    = compose_bibundles(b1, b2);
    a.last_two     = compose_bibundles(b2, b3);
    a.left_nested  = compose_bibundles(a.first_two.bibundle, b3);
    a.right_nested = compose_bibundles(b1, a.last_two.bibundle);
    auto const& t12   = a.first_two.tensor;
    auto const& t23   = a.last_two.tensor;
    auto const& t12_3 = a.left_nested.tensor;
    auto const& t1_23 = a.right_nested.tensor;

    for (std::uint32_t c = 0; c < t12_3.size(); ++c) {
      a.forward.push_back(value_on_class(t12_3, c, "associator", [&](Point xy, Point z) {
        return value_on_class(t12, xy, "associator", [&](Point x, Point y) {
          return t1_23.class_of(x, t23.class_of(y, z));
        });
      }));
    }
    for (std::uint32_t c = 0; c < t1_23.size(); ++c) {
      a.backward.push_back(value_on_class(t1_23, c, "associator", [&](Point x, Point yz) {
        return value_on_class(t23, yz, "associator", [&](Point y, Point z) {
          return t12_3.class_of(t12.class_of(x, y), z);
        });
      }));
    }
    return a;
  }

  std::vector<Point> whisker_left(Composite const&          from,
                                  Composite const&          to,
                                  std::vector<Point> const& f) {
    std::vector<Point> result;
    for (std::uint32_t c = 0; c < from.tensor.size(); ++c) {
      result.push_back(value_on_class(from.tensor, c, "whiskering", [&](Point x, Point y) {
        return to.tensor.class_of(x, f.at(y));
      }));
    }
    return result;
  }

  std::vector<Point> whisker_right(Composite const&          from,
                                   Composite const&          to,
                                   std::vector<Point> const& f) {
    std::vector<Point> result;
    for (std::uint32_t c = 0; c < from.tensor.size(); ++c) {
      result.push_back(value_on_class(from.tensor, c, "whiskering", [&](Point x, Point y) {
        return to.tensor.class_of(f.at(x), y);
      }));
    }
    return result;
  }

}  // namespace morita
