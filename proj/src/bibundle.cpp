#include "morita/bibundle.hpp"

#include <functional>

#include "morita/errors.hpp"
#include "report_builder.hpp"

namespace morita {

  namespace {

    void check_bibundle_laws(Action const&          left,
                             Action const&          right,
                             detail::ReportBuilder& report) {
      if (left.carrier() != right.carrier()) {
        report.add(Law::carrier_mismatch, {std::to_string(left.size()),
                                           std::to_string(right.size())});
        return;
      }
      auto const& G  = left.groupoid();
      auto const& H  = right.groupoid();
      auto const  pt = [&](Point x) { return left.point_name(x); };
      for (Point x = 0; x < left.size(); ++x) {
        for (Arrow h : right.acting_on(x)) {
          if (left.moment(right.act(h, x)) != left.moment(x)) {
            report.add(Law::left_moment_invariance, {pt(x), H.arrow_name(h)});
          }
        }
        for (Arrow g : left.acting_on(x)) {
          if (right.moment(left.act(g, x)) != right.moment(x)) {
            report.add(Law::right_moment_invariance, {G.arrow_name(g), pt(x)});
          }
        }
      }
      for (Point x = 0; x < left.size(); ++x) {
        for (Arrow g : left.acting_on(x)) {
          Point const gx = left.act(g, x);
          for (Arrow h : right.acting_on(x)) {
            Point const xh = right.act(h, x);
            if (!right.defined(h, gx) || !left.defined(g, xh)) {
              continue;  // reported as a moment invariance failure
            }
            if (right.act(h, gx) != left.act(g, xh)) {
              report.add(Law::commutation, {G.arrow_name(g), pt(x), H.arrow_name(h)});
            }
          }
        }
      }
    }

  }  // namespace

  ValidationReport validate_bibundle(FiniteGroupoid const& g,
                                     FiniteGroupoid const& h,
                                     RawBibundle const&    raw) {
    ValidationReport report = validate_left_action(g, raw.left);
    report.append(validate_right_action(h, raw.right));
    if (!report.ok()) {
      return report;
    }
    detail::ReportBuilder laws;
    check_bibundle_laws(Action::make(g, raw.left, Side::left),
                        Action::make(h, raw.right, Side::right),
                        laws);
    return laws.take();
  }

  Bibundle Bibundle::make(FiniteGroupoid g, FiniteGroupoid h, RawBibundle raw) {
    auto report = validate_bibundle(g, h, raw);
    if (!report.ok()) {
      throw ValidationError("invalid bibundle", std::move(report));
    }
    Bibundle b;
    b._left  = Action::make(std::move(g), std::move(raw.left), Side::left);
    b._right = Action::make(std::move(h), std::move(raw.right), Side::right);
    return b;
  }

  Bibundle Bibundle::from_actions(Action left, Action right) {
    if (left.side() != Side::left || right.side() != Side::right) {
      throw std::invalid_argument("expected a left and a right action");
    }
    detail::ReportBuilder laws;
    check_bibundle_laws(left, right, laws);
    if (!laws.ok()) {
      throw ValidationError("invalid bibundle", laws.take());
    }
    Bibundle b;
    b._left  = std::move(left);
    b._right = std::move(right);
    return b;
  }

  bool actions_commute(Action const& left, Action const& right) {
    if (left.size() != right.size()) {
      return false;
    }
    for (Point x = 0; x < left.size(); ++x) {
      for (Arrow h : right.acting_on(x)) {
        if (left.moment(right.act(h, x)) != left.moment(x)) {
          return false;
        }
      }
      for (Arrow g : left.acting_on(x)) {
        if (right.moment(left.act(g, x)) != right.moment(x)) {
          return false;
        }
      }
    }
    for (Point x = 0; x < left.size(); ++x) {
      for (Arrow g : left.acting_on(x)) {
        Point const gx = left.act(g, x);
        for (Arrow h : right.acting_on(x)) {
          if (right.act(h, gx) != left.act(g, right.act(h, x))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Bibundle identity_bibundle(FiniteGroupoid const& g) {
    return Bibundle::from_actions(regular_action(g, Side::left),
                                  regular_action(g, Side::right));
  }

  Bibundle opposite_bibundle(Bibundle const& b) {
    return Bibundle::from_actions(to_left(b.right()), to_right(b.left()));
  }

  FiniteGroupoid point_groupoid() {
    static FiniteGroupoid const point = cyclic_group(1);
    return point;
  }

  Bibundle left_action_as_bibundle(Action const& a) {
    if (a.side() != Side::left) {
      throw std::invalid_argument("expected a left action");
    }
    return Bibundle::from_actions(
        a,
        trivial_action(point_groupoid(),
                       a.carrier(),
                       std::vector<Object>(a.size(), 0),
                       Side::right));
  }

  Bibundle right_action_as_bibundle(Action const& a) {
    if (a.side() != Side::right) {
      throw std::invalid_argument("expected a right action");
    }
    return Bibundle::from_actions(
        trivial_action(point_groupoid(),
                       a.carrier(),
                       std::vector<Object>(a.size(), 0),
                       Side::left),
        a);
  }

  Bundle left_bundle(Bibundle const& b) {
    auto const&              H = b.right_groupoid();
    std::vector<std::string> base;
    for (Object y = 0; y < H.number_of_objects(); ++y) {
      base.push_back(H.object_name(y));
    }
    return Bundle::make(b.left(), std::move(base), b.right().moments());
  }

  Bundle right_bundle(Bibundle const& b) {
    auto const&              G = b.left_groupoid();
    std::vector<std::string> base;
    for (Object x = 0; x < G.number_of_objects(); ++x) {
      base.push_back(G.object_name(x));
    }
    return Bundle::make(b.right(), std::move(base), b.left().moments());
  }

  Principality bibundle_principality(Bibundle const& b) {
    auto const   lb = left_bundle(b);
    auto const   rb = right_bundle(b);
    Principality p;
    p.left_subductive     = is_subductive(lb);
    p.right_subductive    = is_subductive(rb);
    p.left_pre_principal  = is_pre_principal(lb);
    p.right_pre_principal = is_pre_principal(rb);
    return p;
  }

  ValidationReport check_bibundle_division_laws(Bibundle const& b) {
    auto const            d = division_map(left_bundle(b));
    auto const&           G = b.left_groupoid();
    auto const&           H = b.right_groupoid();
    detail::ReportBuilder report;
    for (Point x1 = 0; x1 < b.size(); ++x1) {
      for (Point x2 = 0; x2 < b.size(); ++x2) {
        if (b.r(x1) != b.r(x2)) {
          continue;
        }
        Arrow const q = d(x1, x2);
        for (Arrow h : b.right().acting_on(x1)) {
          Point const y1 = b.act_right(x1, h);
          Point const y2 = b.act_right(x2, h);
          if (!d.defined(y1, y2) || d(y1, y2) != q) {
            report.add(Law::division_right_invariance,
                       {b.point_name(x1), b.point_name(x2), H.arrow_name(h)});
          }
        }
        for (Arrow g : G.arrows_into(b.l(x2))) {
          Point const y2 = b.act_left(G.inverse(g), x2);
          if (!d.defined(x1, y2) || d(x1, y2) != G.compose(q, g)) {
            report.add(Law::division_opposite,
                       {b.point_name(x1), b.point_name(x2), G.arrow_name(g)});
          }
        }
      }
    }
    return report.take();
  }

  bool is_biequivariant(std::vector<Point> const& map,
                        Bibundle const&           from,
                        Bibundle const&           to) {
    return is_equivariant(map, from.left(), to.left())
           && is_equivariant(map, from.right(), to.right());
  }

  bool is_biequivariant_iso(std::vector<Point> const& map,
                            Bibundle const&           from,
                            Bibundle const&           to) {
    if (from.size() != to.size() || !is_biequivariant(map, from, to)) {
      return false;
    }
    std::vector<bool> hit(to.size(), false);
    for (Point y : map) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  std::optional<std::vector<Point>> find_biequivariant_iso(Bibundle const& from,
                                                           Bibundle const& to) {
    auto const n = from.size();
    if (n != to.size() || !(from.left_groupoid() == to.left_groupoid())
        || !(from.right_groupoid() == to.right_groupoid())) {
      return std::nullopt;
    }
    std::vector<Point> f(n, kUndefined);
    std::vector<bool>  used(n, false);
    std::vector<Point> trail;

    auto const fits = [&](Point p, Point q) {
      return !used[q] && from.l(p) == to.l(q) && from.r(p) == to.r(q);
    };
    // Assigns p |-> q and everything it forces. Leaves partial work on the
    // trail for the caller to undo.
    auto const propagate = [&](Point p, Point q) {
      std::vector<std::pair<Point, Point>> stack{{p, q}};
      f[p]    = q;
      used[q] = true;
      trail.push_back(p);
      auto const visit = [&](Point p2, Point q2) {
        if (f[p2] == kUndefined) {
          if (!fits(p2, q2)) {
            return false;
          }
          f[p2]    = q2;
          used[q2] = true;
          trail.push_back(p2);
          stack.emplace_back(p2, q2);
          return true;
        }
        return f[p2] == q2;
      };
      while (!stack.empty()) {
        auto const [a, b] = stack.back();
        stack.pop_back();
        for (Arrow g : from.left().acting_on(a)) {
          if (!visit(from.act_left(g, a), to.act_left(g, b))) {
            return false;
          }
        }
        for (Arrow h : from.right().acting_on(a)) {
          if (!visit(from.act_right(a, h), to.act_right(b, h))) {
            return false;
          }
        }
      }
      return true;
    };

    std::function<bool()> solve = [&]() {
      Point x = 0;
      while (x < n && f[x] != kUndefined) {
        ++x;
      }
      if (x == n) {
        return true;
      }
      for (Point y = 0; y < n; ++y) {
        if (!fits(x, y)) {
          continue;
        }
        auto const mark = trail.size();
        if (propagate(x, y) && solve()) {
          return true;
        }
        while (trail.size() > mark) {
          used[f[trail.back()]] = false;
          f[trail.back()]       = kUndefined;
          trail.pop_back();
        }
      }
      return false;
    };

    if (!solve()) {
      return std::nullopt;
    }
    if (!is_biequivariant_iso(f, from, to)) {
      throw std::logic_error("find_biequivariant_iso produced a non-isomorphism");
    }
    return f;
  }

}  // namespace morita
