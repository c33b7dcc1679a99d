#include "morita/groupoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "morita/errors.hpp"
#include "report_builder.hpp"

namespace morita {

  namespace {

    using detail::index_name;

    struct Fibres {
      std::vector<std::vector<Arrow>> from;
      std::vector<std::vector<Arrow>> into;
      std::vector<std::uint32_t>      position_from;
      std::vector<std::uint32_t>      position_into;
    };

    // Assumes source and target are total and in range.
    Fibres fibres_of(RawGroupoid const& raw) {
      Fibres f;
      auto const n = raw.object_names.size();
      auto const m = raw.arrow_names.size();
      f.from.resize(n);
      f.into.resize(n);
      f.position_from.resize(m);
      f.position_into.resize(m);
      for (Arrow g = 0; g < m; ++g) {
        f.position_from[g] = static_cast<std::uint32_t>(f.from[raw.source[g]].size());
        f.from[raw.source[g]].push_back(g);
        f.position_into[g] = static_cast<std::uint32_t>(f.into[raw.target[g]].size());
        f.into[raw.target[g]].push_back(g);
      }
      return f;
    }

    std::size_t count_composable(Fibres const& f) {
      std::size_t total = 0;
      for (std::size_t x = 0; x < f.from.size(); ++x) {
        total += f.from[x].size() * f.into[x].size();
      }
      return total;
    }

    void check_unique(std::vector<std::string> const& names,
                      char const*                     what,
                      detail::ReportBuilder&          report) {
      std::unordered_set<std::string> seen;
      for (auto const& name : names) {
        if (!seen.insert(name).second) {
          report.add(Law::duplicate_identifier, {what, name});
        }
      }
    }

    std::string pair_name(std::string const& a, std::string const& b) {
      return "(" + a + "," + b + ")";
    }

    std::vector<std::string> numbered(std::size_t n) {
      std::vector<std::string> out;
      out.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  ValidationReport validate_groupoid(RawGroupoid const& raw,
                                     GroupoidLimits     limits) {
    detail::ReportBuilder report;
    auto const            n   = raw.object_names.size();
    auto const            m   = raw.arrow_names.size();
    auto const            obj = [&](std::size_t x) {
      return index_name(raw.object_names, x);
    };
    auto const arr = [&](std::size_t g) {
      return index_name(raw.arrow_names, g);
    };

    if (raw.source.size() != m) {
      report.add(Law::incomplete_map, {"source"});
    }
    if (raw.target.size() != m) {
      report.add(Law::incomplete_map, {"target"});
    }
    if (raw.inverse.size() != m) {
      report.add(Law::incomplete_map, {"inverse"});
    }
    if (raw.unit.size() != n) {
      report.add(Law::incomplete_map, {"unit"});
    }
    if (!report.ok()) {
      return report.take();
    }
    check_unique(raw.object_names, "object", report);
    check_unique(raw.arrow_names, "arrow", report);

    for (Arrow g = 0; g < m; ++g) {
      if (raw.source[g] >= n) {
        report.add(Law::dangling_identifier, {"source", arr(g), obj(raw.source[g])});
      }
      if (raw.target[g] >= n) {
        report.add(Law::dangling_identifier, {"target", arr(g), obj(raw.target[g])});
      }
      if (raw.inverse[g] >= m) {
        report.add(Law::dangling_identifier, {"inverse", arr(g), arr(raw.inverse[g])});
      }
    }
    for (Object x = 0; x < n; ++x) {
      if (raw.unit[x] >= m) {
        report.add(Law::dangling_identifier, {"unit", obj(x), arr(raw.unit[x])});
      }
    }
    for (auto const& [g, h, k] : raw.composition) {
      if (g >= m || h >= m || k >= m) {
        report.add(Law::dangling_identifier, {"composition", arr(g), arr(h), arr(k)});
      }
    }
    if (!report.ok()) {
      return report.take();
    }

    Fibres const f     = fibres_of(raw);
    auto const   pairs = count_composable(f);
    if (pairs > limits.max_composable_pairs) {
      report.add(Law::size_limit,
                 {std::to_string(pairs), std::to_string(limits.max_composable_pairs)});
      return report.take();
    }

    // comp[g][position_into[h]]
    std::vector<std::vector<Arrow>> comp(m);
    for (Arrow g = 0; g < m; ++g) {
      comp[g].assign(f.into[raw.source[g]].size(), kUndefined);
    }
    for (auto const& [g, h, k] : raw.composition) {
      if (raw.source[g] != raw.target[h]) {
        report.add(Law::composition_domain, {arr(g), arr(h)});
        continue;
      }
      auto& slot = comp[g][f.position_into[h]];
      if (slot != kUndefined) {
        report.add(Law::duplicate_entry, {arr(g), arr(h)});
        continue;
      }
      slot = k;
    }
    for (Arrow g = 0; g < m; ++g) {
      for (Arrow h : f.into[raw.source[g]]) {
        if (comp[g][f.position_into[h]] == kUndefined) {
          report.add(Law::missing_composite, {arr(g), arr(h)});
        }
      }
    }
    if (!report.ok()) {
      return report.take();
    }

    auto const c = [&](Arrow g, Arrow h) { return comp[g][f.position_into[h]]; };

    for (Arrow g = 0; g < m; ++g) {
      for (Arrow h : f.into[raw.source[g]]) {
        Arrow const k = c(g, h);
        if (raw.source[k] != raw.source[h] || raw.target[k] != raw.target[g]) {
          report.add(Law::composite_endpoints, {arr(g), arr(h), arr(k)});
        }
      }
    }
    for (Object x = 0; x < n; ++x) {
      Arrow const u = raw.unit[x];
      if (raw.source[u] != x || raw.target[u] != x) {
        report.add(Law::unit_endpoints, {obj(x), arr(u)});
      }
    }
    for (Arrow g = 0; g < m; ++g) {
      Arrow const ut = raw.unit[raw.target[g]];
      if (raw.source[ut] == raw.target[g] && c(ut, g) != g) {
        report.add(Law::left_unit, {arr(ut), arr(g)});
      }
      Arrow const us = raw.unit[raw.source[g]];
      if (raw.target[us] == raw.source[g] && c(g, us) != g) {
        report.add(Law::right_unit, {arr(g), arr(us)});
      }
      Arrow const gi = raw.inverse[g];
      if (raw.source[gi] != raw.target[g] || raw.target[gi] != raw.source[g]) {
        report.add(Law::inverse_endpoints, {arr(g), arr(gi)});
      } else if (c(gi, g) != raw.unit[raw.source[g]]
                 || c(g, gi) != raw.unit[raw.target[g]]) {
        report.add(Law::inverse_law, {arr(g), arr(gi)});
      }
      if (raw.inverse[gi] != g) {
        report.add(Law::inverse_involution, {arr(g), arr(gi)});
      }
    }

    for (Arrow g = 0; g < m; ++g) {
      for (Arrow h : f.into[raw.source[g]]) {
        Arrow const gh = c(g, h);
        for (Arrow k : f.into[raw.source[h]]) {
          Arrow const hk = c(h, k);
          if (raw.source[gh] != raw.target[k] || raw.source[g] != raw.target[hk]) {
            continue;  // already reported as composite-endpoints
          }
          if (c(gh, k) != c(g, hk)) {
            report.add(Law::associativity, {arr(g), arr(h), arr(k)});
          }
        }
      }
    }
    return report.take();
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroupoid
  ////////////////////////////////////////////////////////////////////////

  struct FiniteGroupoid::Data {
    RawGroupoid                             raw;
    Fibres                                  fibres;
    std::vector<std::vector<Arrow>>         comp;
    std::unordered_map<std::string, Object> object_index;
    std::unordered_map<std::string, Arrow>  arrow_index;
    std::size_t                             composable_pairs = 0;
  };

  FiniteGroupoid::FiniteGroupoid() {
    static auto const empty = std::make_shared<Data const>();
    _data                   = empty;
  }

  FiniteGroupoid::FiniteGroupoid(std::shared_ptr<Data const> data)
      : _data(std::move(data)) {}

  FiniteGroupoid FiniteGroupoid::make(RawGroupoid raw, GroupoidLimits limits) {
    auto report = validate_groupoid(raw, limits);
    if (!report.ok()) {
      throw ValidationError("invalid groupoid", std::move(report));
    }
    auto data              = std::make_shared<Data>();
    data->fibres           = fibres_of(raw);
    data->composable_pairs = count_composable(data->fibres);
    data->comp.resize(raw.arrow_names.size());
    for (Arrow g = 0; g < raw.arrow_names.size(); ++g) {
      data->comp[g].assign(data->fibres.into[raw.source[g]].size(), kUndefined);
    }
    for (auto const& [g, h, k] : raw.composition) {
      data->comp[g][data->fibres.position_into[h]] = k;
    }
    for (Object x = 0; x < raw.object_names.size(); ++x) {
      data->object_index.emplace(raw.object_names[x], x);
    }
    for (Arrow g = 0; g < raw.arrow_names.size(); ++g) {
      data->arrow_index.emplace(raw.arrow_names[g], g);
    }
    data->raw = std::move(raw);
    return FiniteGroupoid(std::move(data));
  }

  std::size_t FiniteGroupoid::number_of_objects() const noexcept {
    return _data->raw.object_names.size();
  }

  std::size_t FiniteGroupoid::number_of_arrows() const noexcept {
    return _data->raw.arrow_names.size();
  }

  Object FiniteGroupoid::source(Arrow g) const {
    return _data->raw.source.at(g);
  }

  Object FiniteGroupoid::target(Arrow g) const {
    return _data->raw.target.at(g);
  }

  Arrow FiniteGroupoid::unit(Object x) const {
    return _data->raw.unit.at(x);
  }

  Arrow FiniteGroupoid::inverse(Arrow g) const {
    return _data->raw.inverse.at(g);
  }

  Arrow FiniteGroupoid::compose(Arrow g, Arrow h) const {
    if (source(g) != target(h)) {
      throw DomainMismatch("cannot compose " + arrow_name(g) + " with "
                           + arrow_name(h));
    }
    return _data->comp[g][_data->fibres.position_into[h]];
  }

  std::span<Arrow const> FiniteGroupoid::arrows_from(Object x) const {
    return _data->fibres.from.at(x);
  }

  std::span<Arrow const> FiniteGroupoid::arrows_into(Object x) const {
    return _data->fibres.into.at(x);
  }

  std::uint32_t FiniteGroupoid::position_from(Arrow g) const {
    return _data->fibres.position_from.at(g);
  }

  std::uint32_t FiniteGroupoid::position_into(Arrow g) const {
    return _data->fibres.position_into.at(g);
  }

  std::string const& FiniteGroupoid::object_name(Object x) const {
    return _data->raw.object_names.at(x);
  }

  std::string const& FiniteGroupoid::arrow_name(Arrow g) const {
    return _data->raw.arrow_names.at(g);
  }

  std::optional<Object> FiniteGroupoid::find_object(std::string const& name) const {
    auto it = _data->object_index.find(name);
    if (it == _data->object_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<Arrow> FiniteGroupoid::find_arrow(std::string const& name) const {
    auto it = _data->arrow_index.find(name);
    if (it == _data->arrow_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t FiniteGroupoid::number_of_composable_pairs() const noexcept {
    return _data->composable_pairs;
  }

  RawGroupoid const& FiniteGroupoid::raw() const noexcept {
    return _data->raw;
  }

  bool FiniteGroupoid::operator==(FiniteGroupoid const& other) const {
    if (_data == other._data) {
      return true;
    }
    // Composition entries may be listed in any order.
    auto const& a = _data->raw;
    auto const& b = other._data->raw;
    return a.object_names == b.object_names && a.arrow_names == b.arrow_names
           && a.source == b.source && a.target == b.target && a.unit == b.unit
           && a.inverse == b.inverse && _data->comp == other._data->comp;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  FiniteGroupoid pair_groupoid(std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("pair_groupoid requires at least one object");
    }
    std::vector<std::string> carrier = numbered(n);
    std::vector<std::pair<std::size_t, std::size_t>> full;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        full.emplace_back(i, j);
      }
    }
    return relation_groupoid(carrier, std::move(full));
  }

  FiniteGroupoid unit_groupoid(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> diagonal;
    for (std::size_t i = 0; i < n; ++i) {
      diagonal.emplace_back(i, i);
    }
    return relation_groupoid(numbered(n), std::move(diagonal));
  }

  FiniteGroupoid
  relation_groupoid(std::vector<std::string> const&                  carrier,
                    std::vector<std::pair<std::size_t, std::size_t>> relation) {
    auto const n = carrier.size();
    for (auto const& [a, b] : relation) {
      if (a >= n || b >= n) {
        throw NotAnEquivalence("relation refers to a point outside the carrier");
      }
    }
    std::sort(relation.begin(), relation.end());
    relation.erase(std::unique(relation.begin(), relation.end()), relation.end());
    std::set<std::pair<std::size_t, std::size_t>> const related(relation.cbegin(),
                                                                relation.cend());
    for (std::size_t a = 0; a < n; ++a) {
      if (!related.count({a, a})) {
        throw NotAnEquivalence("not reflexive at " + carrier[a]);
      }
    }
    for (auto const& [a, b] : relation) {
      if (!related.count({b, a})) {
        throw NotAnEquivalence("not symmetric at " + pair_name(carrier[a], carrier[b]));
      }
    }
    for (auto const& [a, b] : relation) {
      for (auto it = related.lower_bound({b, 0}); it != related.end() && it->first == b;
           ++it) {
        if (!related.count({a, it->second})) {
          throw NotAnEquivalence("not transitive at " + carrier[a] + ", " + carrier[b]
                                 + ", " + carrier[it->second]);
        }
      }
    }

    RawGroupoid raw;
    raw.object_names = carrier;
    std::map<std::pair<std::size_t, std::size_t>, Arrow> index;
    for (auto const& [z, y] : relation) {
      index.emplace(std::make_pair(z, y), static_cast<Arrow>(raw.arrow_names.size()));
      raw.arrow_names.push_back(pair_name(carrier[z], carrier[y]));
      raw.source.push_back(static_cast<Object>(y));
      raw.target.push_back(static_cast<Object>(z));
    }
    raw.unit.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      raw.unit[a] = index.at({a, a});
    }
    for (auto const& [z, y] : relation) {
      raw.inverse.push_back(index.at({y, z}));
    }
    for (auto const& [z, y] : relation) {
      for (auto it = related.lower_bound({y, 0}); it != related.end() && it->first == y;
           ++it) {
        raw.composition.push_back(
            {index.at({z, y}), index.at(*it), index.at({z, it->second})});
      }
    }
    return FiniteGroupoid::make(std::move(raw));
  }

  FiniteGroupoid
  group_as_groupoid(std::vector<std::vector<std::uint32_t>> const& table,
                    std::vector<std::string>                       names) {
    auto const n = table.size();
    if (n == 0) {
      throw NotAGroup("a group has at least one element");
    }
    if (names.empty()) {
      names = numbered(n);
    }
    if (names.size() != n) {
      throw NotAGroup("expected one name per element");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw NotAGroup("row " + names[a] + " has the wrong length");
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n) {
          throw NotAGroup("not closed at " + pair_name(names[a], names[b]));
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table[table[a][b]][c] != table[a][table[b][c]]) {
            throw NotAGroup("not associative at " + names[a] + ", " + names[b]
                            + ", " + names[c]);
          }
        }
      }
    }
    std::optional<std::uint32_t> identity;
    for (std::uint32_t e = 0; e < n && !identity; ++e) {
      bool is_identity = true;
      for (std::uint32_t a = 0; a < n && is_identity; ++a) {
        is_identity = table[e][a] == a && table[a][e] == a;
      }
      if (is_identity) {
        identity = e;
      }
    }
    if (!identity) {
      throw NotAGroup("no identity element");
    }

    RawGroupoid raw;
    raw.object_names = {"*"};
    raw.arrow_names  = names;
    raw.source.assign(n, 0);
    raw.target.assign(n, 0);
    raw.unit = {*identity};
    for (std::uint32_t a = 0; a < n; ++a) {
      auto const row = table[a];
      auto const it  = std::find(row.cbegin(), row.cend(), *identity);
      if (it == row.cend() || table[it - row.cbegin()][a] != *identity) {
        throw NotAGroup("no inverse for " + names[a]);
      }
      raw.inverse.push_back(static_cast<Arrow>(it - row.cbegin()));
    }
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        raw.composition.push_back({a, b, table[a][b]});
      }
    }
    return FiniteGroupoid::make(std::move(raw));
  }

  FiniteGroupoid cyclic_group(std::size_t n) {
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a][b] = static_cast<std::uint32_t>((a + b) % n);
      }
    }
    return group_as_groupoid(table);
  }

  FiniteGroupoid disjoint_union(std::vector<FiniteGroupoid> const& parts) {
    if (parts.size() == 1) {
      return parts.front();
    }
    RawGroupoid raw;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto const& p        = parts[i].raw();
      auto const  prefix   = std::to_string(i) + ":";
      auto const  obj_base = static_cast<Object>(raw.object_names.size());
      auto const  arr_base = static_cast<Arrow>(raw.arrow_names.size());
      for (auto const& name : p.object_names) {
        raw.object_names.push_back(prefix + name);
      }
      for (auto const& name : p.arrow_names) {
        raw.arrow_names.push_back(prefix + name);
      }
      for (Arrow g = 0; g < p.arrow_names.size(); ++g) {
        raw.source.push_back(obj_base + p.source[g]);
        raw.target.push_back(obj_base + p.target[g]);
        raw.inverse.push_back(arr_base + p.inverse[g]);
      }
      for (Arrow u : p.unit) {
        raw.unit.push_back(arr_base + u);
      }
      for (auto const& [g, h, k] : p.composition) {
        raw.composition.push_back({arr_base + g, arr_base + h, arr_base + k});
      }
    }
    return FiniteGroupoid::make(std::move(raw));
  }

  FiniteGroupoid product(FiniteGroupoid const& a, FiniteGroupoid const& b) {
    auto const& ra = a.raw();
    auto const& rb = b.raw();
    auto const  nb = rb.object_names.size();
    auto const  mb = rb.arrow_names.size();
    RawGroupoid raw;
    for (auto const& x : ra.object_names) {
      for (auto const& y : rb.object_names) {
        raw.object_names.push_back(pair_name(x, y));
      }
    }
    for (Arrow g = 0; g < ra.arrow_names.size(); ++g) {
      for (Arrow h = 0; h < mb; ++h) {
        raw.arrow_names.push_back(pair_name(ra.arrow_names[g], rb.arrow_names[h]));
        raw.source.push_back(static_cast<Object>(ra.source[g] * nb + rb.source[h]));
        raw.target.push_back(static_cast<Object>(ra.target[g] * nb + rb.target[h]));
        raw.inverse.push_back(static_cast<Arrow>(ra.inverse[g] * mb + rb.inverse[h]));
      }
    }
    for (Object x = 0; x < ra.object_names.size(); ++x) {
      for (Object y = 0; y < nb; ++y) {
        raw.unit.push_back(static_cast<Arrow>(ra.unit[x] * mb + rb.unit[y]));
      }
    }
    for (auto const& [g1, h1, k1] : ra.composition) {
      for (auto const& [g2, h2, k2] : rb.composition) {
        raw.composition.push_back({static_cast<Arrow>(g1 * mb + g2),
                                   static_cast<Arrow>(h1 * mb + h2),
                                   static_cast<Arrow>(k1 * mb + k2)});
      }
    }
    return FiniteGroupoid::make(std::move(raw));
  }

  ////////////////////////////////////////////////////////////////////////
  // Invariants
  ////////////////////////////////////////////////////////////////////////

  std::vector<Arrow> isotropy_group(FiniteGroupoid const& g, Object x) {
    if (x >= g.number_of_objects()) {
      throw UnknownObject("object index " + std::to_string(x) + " out of range");
    }
    std::vector<Arrow> result;
    for (Arrow a : g.arrows_from(x)) {
      if (g.target(a) == x) {
        result.push_back(a);
      }
    }
    for (Arrow a : result) {
      if (!std::binary_search(result.cbegin(), result.cend(), g.inverse(a))) {
        throw std::logic_error("isotropy group not closed under inverse");
      }
      for (Arrow b : result) {
        if (!std::binary_search(result.cbegin(), result.cend(), g.compose(a, b))) {
          throw std::logic_error("isotropy group not closed under composition");
        }
      }
    }
    return result;
  }

  FiniteGroupoid isotropy_groupoid(FiniteGroupoid const& g) {
    auto const&        src = g.raw();
    RawGroupoid        raw;
    std::vector<Arrow> renumber(src.arrow_names.size(), kUndefined);
    raw.object_names = src.object_names;
    for (Arrow a = 0; a < src.arrow_names.size(); ++a) {
      if (src.source[a] == src.target[a]) {
        renumber[a] = static_cast<Arrow>(raw.arrow_names.size());
        raw.arrow_names.push_back(src.arrow_names[a]);
        raw.source.push_back(src.source[a]);
        raw.target.push_back(src.target[a]);
      }
    }
    for (Arrow a = 0; a < src.arrow_names.size(); ++a) {
      if (renumber[a] != kUndefined) {
        raw.inverse.push_back(renumber[src.inverse[a]]);
      }
    }
    for (Arrow u : src.unit) {
      raw.unit.push_back(renumber[u]);
    }
    for (auto const& [a, b, c] : src.composition) {
      if (renumber[a] != kUndefined && renumber[b] != kUndefined) {
        raw.composition.push_back({renumber[a], renumber[b], renumber[c]});
      }
    }
    return FiniteGroupoid::make(std::move(raw));
  }

  OrbitPartition orbit_space(FiniteGroupoid const& g) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> related;
    related.reserve(g.number_of_arrows());
    for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
      related.emplace_back(g.source(a), g.target(a));
    }
    return OrbitPartition::from_relation(g.number_of_objects(), related);
  }

  bool is_fibrating(FiniteGroupoid const& g) {
    auto const                n = g.number_of_objects();
    std::vector<bool>         hit(n * n, false);
    std::size_t               count = 0;
    for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
      auto const i = g.target(a) * n + g.source(a);
      if (!hit[i]) {
        hit[i] = true;
        ++count;
      }
    }
    return count == n * n;
  }

}  // namespace morita
