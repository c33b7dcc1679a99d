#include "morita/action.hpp"

#include <unordered_map>
#include <unordered_set>

#include "morita/errors.hpp"
#include "report_builder.hpp"

namespace morita {

  namespace {

    using detail::index_name;

    std::span<Arrow const>
    acting_arrows(FiniteGroupoid const& g, Side side, Object moment) {
      return side == Side::left ? g.arrows_from(moment) : g.arrows_into(moment);
    }

    std::uint32_t position(FiniteGroupoid const& g, Side side, Arrow a) {
      return side == Side::left ? g.position_from(a) : g.position_into(a);
    }

    bool admissible(FiniteGroupoid const& g, Side side, Arrow a, Object moment) {
      return side == Side::left ? g.source(a) == moment : g.target(a) == moment;
    }

  }  // namespace

  ValidationReport validate_action(FiniteGroupoid const& G,
                                   RawAction const&      raw,
                                   Side                  side) {
    detail::ReportBuilder report;
    auto const            n  = raw.carrier.size();
    auto const            m  = G.number_of_arrows();
    auto const            no = G.number_of_objects();
    auto const            pt = [&](std::size_t x) { return index_name(raw.carrier, x); };
    auto const            arr = [&](std::size_t a) {
      return a < m ? G.arrow_name(a) : "#" + std::to_string(a);
    };

    if (raw.moment.size() != n) {
      report.add(Law::incomplete_map, {"moment"});
      return report.take();
    }
    std::unordered_set<std::string> seen;
    for (auto const& name : raw.carrier) {
      if (!seen.insert(name).second) {
        report.add(Law::duplicate_identifier, {"point", name});
      }
    }
    for (Point x = 0; x < n; ++x) {
      if (raw.moment[x] >= no) {
        report.add(Law::dangling_identifier,
                   {"moment", pt(x), "#" + std::to_string(raw.moment[x])});
      }
    }
    for (auto const& [a, x, y] : raw.entries) {
      if (a >= m || x >= n || y >= n) {
        report.add(Law::dangling_identifier, {"act", arr(a), pt(x), pt(y)});
      }
    }
    if (!report.ok()) {
      return report.take();
    }

    std::vector<std::vector<Point>> table(n);
    for (Point x = 0; x < n; ++x) {
      table[x].assign(acting_arrows(G, side, raw.moment[x]).size(), kUndefined);
    }
    for (auto const& [a, x, y] : raw.entries) {
      if (!admissible(G, side, a, raw.moment[x])) {
        report.add(Law::action_domain, {arr(a), pt(x)});
        continue;
      }
      auto& slot = table[x][position(G, side, a)];
      if (slot != kUndefined) {
        report.add(Law::duplicate_entry, {arr(a), pt(x)});
        continue;
      }
      slot = y;
    }
    for (Point x = 0; x < n; ++x) {
      for (Arrow a : acting_arrows(G, side, raw.moment[x])) {
        if (table[x][position(G, side, a)] == kUndefined) {
          report.add(Law::action_missing, {arr(a), pt(x)});
        }
      }
    }
    if (!report.ok()) {
      return report.take();
    }

    auto const t = [&](Arrow a, Point x) { return table[x][position(G, side, a)]; };

    for (Point x = 0; x < n; ++x) {
      for (Arrow a : acting_arrows(G, side, raw.moment[x])) {
        Point const  y        = t(a, x);
        Object const expected = side == Side::left ? G.target(a) : G.source(a);
        if (raw.moment[y] != expected) {
          report.add(Law::action_moment, {arr(a), pt(x), pt(y)});
        }
      }
      Arrow const u = G.unit(raw.moment[x]);
      if (t(u, x) != x) {
        report.add(Law::action_unit, {arr(u), pt(x)});
      }
    }
    for (Point x = 0; x < n; ++x) {
      for (Arrow a : acting_arrows(G, side, raw.moment[x])) {
        Point const y = t(a, x);
        if (side == Side::left) {
          if (raw.moment[y] != G.target(a)) {
            continue;
          }
          // h.(a.x) = (h o a).x
          for (Arrow h : G.arrows_from(G.target(a))) {
            if (t(h, y) != t(G.compose(h, a), x)) {
              report.add(Law::action_compatibility, {arr(h), arr(a), pt(x)});
            }
          }
        } else {
          if (raw.moment[y] != G.source(a)) {
            continue;
          }
          // (x.a).h = x.(a o h)
          for (Arrow h : G.arrows_into(G.source(a))) {
            if (t(h, y) != t(G.compose(a, h), x)) {
              report.add(Law::action_compatibility, {pt(x), arr(a), arr(h)});
            }
          }
        }
      }
    }
    return report.take();
  }

  ////////////////////////////////////////////////////////////////////////
  // Action
  ////////////////////////////////////////////////////////////////////////

  struct Action::Data {
    FiniteGroupoid                         groupoid;
    RawAction                              raw;
    Side                                   side = Side::left;
    std::vector<std::vector<Point>>        table;
    std::unordered_map<std::string, Point> index;
  };

  Action::Action() {
    static auto const empty = std::make_shared<Data const>();
    _data                   = empty;
  }

  Action::Action(std::shared_ptr<Data const> data) : _data(std::move(data)) {}

  Action Action::make(FiniteGroupoid g, RawAction raw, Side side) {
    auto report = validate_action(g, raw, side);
    if (!report.ok()) {
      throw ValidationError(
          side == Side::left ? "invalid left action" : "invalid right action",
          std::move(report));
    }
    auto data  = std::make_shared<Data>();
    data->side = side;
    data->table.resize(raw.carrier.size());
    for (Point x = 0; x < raw.carrier.size(); ++x) {
      data->table[x].resize(acting_arrows(g, side, raw.moment[x]).size());
      data->index.emplace(raw.carrier[x], x);
    }
    for (auto const& [a, x, y] : raw.entries) {
      data->table[x][position(g, side, a)] = y;
    }
    data->groupoid = std::move(g);
    data->raw      = std::move(raw);
    return Action(std::move(data));
  }

  Side Action::side() const noexcept {
    return _data->side;
  }

  FiniteGroupoid const& Action::groupoid() const noexcept {
    return _data->groupoid;
  }

  std::size_t Action::size() const noexcept {
    return _data->raw.carrier.size();
  }

  Object Action::moment(Point x) const {
    return _data->raw.moment.at(x);
  }

  std::vector<Object> const& Action::moments() const noexcept {
    return _data->raw.moment;
  }

  bool Action::defined(Arrow g, Point x) const {
    return x < size() && g < groupoid().number_of_arrows()
           && admissible(groupoid(), side(), g, moment(x));
  }

  Point Action::act(Arrow g, Point x) const {
    if (!defined(g, x)) {
      throw DomainMismatch("arrow " + std::to_string(g)
                           + " cannot act on point " + std::to_string(x));
    }
    return _data->table[x][position(groupoid(), side(), g)];
  }

  std::span<Arrow const> Action::acting_on(Point x) const {
    return acting_arrows(groupoid(), side(), moment(x));
  }

  std::string const& Action::point_name(Point x) const {
    return _data->raw.carrier.at(x);
  }

  std::vector<std::string> const& Action::carrier() const noexcept {
    return _data->raw.carrier;
  }

  std::optional<Point> Action::find_point(std::string const& name) const {
    auto it = _data->index.find(name);
    if (it == _data->index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  RawAction const& Action::raw() const noexcept {
    return _data->raw;
  }

  bool Action::operator==(Action const& other) const {
    return _data == other._data
           || (side() == other.side() && groupoid() == other.groupoid()
               && carrier() == other.carrier() && moments() == other.moments()
               && _data->table == other._data->table);
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Reinterprets a on the other side via inverses.
    Action converted(Action const& a) {
      auto const& G     = a.groupoid();
      Side const  other = opposite(a.side());
      RawAction   raw;
      raw.carrier = a.carrier();
      raw.moment  = a.moments();
      for (Point x = 0; x < a.size(); ++x) {
        for (Arrow g : acting_arrows(G, other, a.moment(x))) {
          raw.entries.push_back({g, x, a.act(G.inverse(g), x)});
        }
      }
      return Action::make(G, std::move(raw), other);
    }

  }  // namespace

  Action to_left(Action const& right) {
    if (right.side() != Side::right) {
      throw std::invalid_argument("to_left expects a right action");
    }
    return converted(right);
  }

  Action to_right(Action const& left) {
    if (left.side() != Side::left) {
      throw std::invalid_argument("to_right expects a left action");
    }
    return converted(left);
  }

  Action flip_side(Action const& a) {
    return converted(a);
  }

  Action regular_action(FiniteGroupoid const& g, Side side) {
    RawAction raw;
    raw.carrier.reserve(g.number_of_arrows());
    for (Arrow x = 0; x < g.number_of_arrows(); ++x) {
      raw.carrier.push_back(g.arrow_name(x));
      raw.moment.push_back(side == Side::left ? g.target(x) : g.source(x));
    }
    for (Arrow x = 0; x < g.number_of_arrows(); ++x) {
      for (Arrow a : acting_arrows(g, side, raw.moment[x])) {
        raw.entries.push_back(
            {a, x, side == Side::left ? g.compose(a, x) : g.compose(x, a)});
      }
    }
    return Action::make(g, std::move(raw), side);
  }

  Action trivial_action(FiniteGroupoid const&           g,
                        std::vector<std::string> const& carrier,
                        std::vector<Object> const&      moment,
                        Side                            side) {
    RawAction raw;
    raw.carrier = carrier;
    raw.moment  = moment;
    if (moment.size() == carrier.size()) {
      for (Point x = 0; x < carrier.size(); ++x) {
        if (moment[x] < g.number_of_objects()) {
          for (Arrow a : acting_arrows(g, side, moment[x])) {
            raw.entries.push_back({a, x, x});
          }
        }
      }
    }
    return Action::make(g, std::move(raw), side);
  }

  OrbitPartition action_orbit_space(Action const& a) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> related;
    for (Point x = 0; x < a.size(); ++x) {
      for (Arrow g : a.acting_on(x)) {
        related.emplace_back(x, a.act(g, x));
      }
    }
    return OrbitPartition::from_relation(a.size(), related);
  }

  bool is_equivariant(std::vector<Point> const& map,
                      Action const&             from,
                      Action const&             to) {
    if (from.side() != to.side() || !(from.groupoid() == to.groupoid())
        || map.size() != from.size()) {
      return false;
    }
    for (Point x = 0; x < from.size(); ++x) {
      if (map[x] >= to.size() || to.moment(map[x]) != from.moment(x)) {
        return false;
      }
    }
    for (Point x = 0; x < from.size(); ++x) {
      for (Arrow g : from.acting_on(x)) {
        if (map[from.act(g, x)] != to.act(g, map[x])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_free(Action const& a) {
    for (Point x = 0; x < a.size(); ++x) {
      Arrow const u = a.groupoid().unit(a.moment(x));
      for (Arrow g : a.acting_on(x)) {
        if (g != u && a.act(g, x) == x) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace morita
