#include "morita/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "morita/bundle.hpp"
#include "morita/errors.hpp"

namespace morita {

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool partially_associative(GroupTable const& t) {
      auto const n = t.size();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          auto const xy = t[x][y];
          if (xy == kUndefined) {
            continue;
          }
          for (std::size_t z = 0; z < n; ++z) {
            auto const yz = t[y][z];
            if (yz == kUndefined) {
              continue;
            }
            auto const lhs = t[xy][z];
            auto const rhs = t[x][yz];
            if (lhs != kUndefined && rhs != kUndefined && lhs != rhs) {
              return false;
            }
          }
        }
      }
      return true;
    }

    GroupTable least_relabelling(GroupTable const& t) {
      auto const                 n = t.size();
      std::vector<std::uint32_t> p(n);
      std::iota(p.begin(), p.end(), 0u);
      GroupTable best;
      do {
        GroupTable r(n, std::vector<std::uint32_t>(n));
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            r[p[a]][p[b]] = p[t[a][b]];
          }
        }
        if (best.empty() || r < best) {
          best = std::move(r);
        }
      } while (std::next_permutation(p.begin() + 1, p.end()));
      return best;
    }

  }  // namespace

  std::vector<GroupTable> groups_of_order(std::size_t n) {
    if (n == 0) {
      return {};
    }
    if (n > 8) {
      throw BoundsTooLarge(n, 8);
    }
    GroupTable t(n, std::vector<std::uint32_t>(n, kUndefined));
    std::vector<std::vector<bool>> row(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> col(n, std::vector<bool>(n, false));
    for (std::uint32_t a = 0; a < n; ++a) {
      t[0][a] = t[a][0] = a;
      row[0][a] = col[a][a] = row[a][a] = col[0][a] = true;
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
    for (std::uint32_t a = 1; a < n; ++a) {
      for (std::uint32_t b = 1; b < n; ++b) {
        cells.emplace_back(a, b);
      }
    }
    std::set<GroupTable> found;
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
      if (i == cells.size()) {
        found.insert(least_relabelling(t));
        return;
      }
      auto const [a, b] = cells[i];
      for (std::uint32_t v = 0; v < n; ++v) {
        if (row[a][v] || col[b][v]) {
          continue;
        }
        t[a][b] = v;
        row[a][v] = col[b][v] = true;
        if (partially_associative(t)) {
          fill(i + 1);
        }
        row[a][v] = col[b][v] = false;
        t[a][b]               = kUndefined;
      }
    };
    fill(0);
    return {found.begin(), found.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Groupoids
  ////////////////////////////////////////////////////////////////////////

  std::vector<FiniteGroupoid> groupoids_up_to_iso(std::size_t max_objects,
                                                  std::size_t max_arrows) {
    struct Component {
      std::size_t    objects;
      std::size_t    arrows;
      FiniteGroupoid groupoid;
    };
    std::vector<Component> components;
    for (std::size_t k = 1; k <= max_objects && k * k <= max_arrows; ++k) {
      for (std::size_t m = 1; k * k * m <= max_arrows; ++m) {
        for (auto const& table : groups_of_order(m)) {
          auto const group = group_as_groupoid(table);
          FiniteGroupoid c = k == 1   ? group
                             : m == 1 ? pair_groupoid(k)
                                      : product(pair_groupoid(k), group);
          components.push_back({k, k * k * m, std::move(c)});
        }
      }
    }
    std::vector<FiniteGroupoid>                result;
    std::vector<std::size_t>                   chosen;
    std::function<void(std::size_t, std::size_t, std::size_t)> extend
        = [&](std::size_t from, std::size_t objects, std::size_t arrows) {
            if (chosen.empty()) {
              result.emplace_back();
            } else {
              std::vector<FiniteGroupoid> parts;
              for (auto i : chosen) {
                parts.push_back(components[i].groupoid);
              }
              result.push_back(disjoint_union(parts));
            }
            for (std::size_t i = from; i < components.size(); ++i) {
              auto const& c = components[i];
              if (objects + c.objects <= max_objects && arrows + c.arrows <= max_arrows) {
                chosen.push_back(i);
                extend(i, objects + c.objects, arrows + c.arrows);
                chosen.pop_back();
              }
            }
          };
    extend(0, 0, 0);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Actions
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using Perm = std::vector<std::uint32_t>;

    // Permutations p of {0..s-1} with labels[p[i]] == labels[i].
    std::vector<Perm> label_preserving_perms(std::vector<std::uint32_t> const& labels) {
      Perm p(labels.size());
      std::iota(p.begin(), p.end(), 0u);
      std::vector<Perm> out;
      do {
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i) {
          ok = labels[p[i]] == labels[i];
        }
        if (ok) {
          out.push_back(p);
        }
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }

    // Bijections {0..s-1} -> {0..s-1} taking labels a to labels b.
    std::vector<Perm> label_matching_bijections(std::vector<std::uint32_t> const& a,
                                                std::vector<std::uint32_t> const& b) {
      Perm p(a.size());
      std::iota(p.begin(), p.end(), 0u);
      std::vector<Perm> out;
      do {
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i) {
          ok = b[p[i]] == a[i];
        }
        if (ok) {
          out.push_back(p);
        }
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }

    Perm after(Perm const& f, Perm const& g) {
      Perm r(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        r[i] = f[g[i]];
      }
      return r;
    }

    // Homomorphisms from the isotropy group (given by its arrows) into the
    // allowed permutations, by assigning generators and closing up.
    std::vector<std::vector<Perm>> homomorphisms(FiniteGroupoid const&     g,
                                                 std::vector<Arrow> const& group,
                                                 Arrow                     unit,
                                                 std::vector<Perm> const&  allowed,
                                                 std::size_t               s) {
      auto const                    n = group.size();
      std::vector<std::size_t>      local(g.number_of_arrows(), kUndefined);
      for (std::size_t i = 0; i < n; ++i) {
        local[group[i]] = i;
      }
      std::vector<std::vector<Perm>> out;
      std::vector<Perm>              sigma(n);
      Perm                           id(s);
      std::iota(id.begin(), id.end(), 0u);
      sigma[local[unit]] = id;

      // Closes the assignment under products; false on a clash.
      auto const close = [&]() {
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t a = 0; a < n; ++a) {
            if (sigma[a].size() != s) {
              continue;
            }
            for (std::size_t b = 0; b < n; ++b) {
              if (sigma[b].size() != s) {
                continue;
              }
              auto const c   = local[g.compose(group[a], group[b])];
              auto       ab  = after(sigma[a], sigma[b]);
              if (sigma[c].size() != s) {
                sigma[c] = std::move(ab);
                changed  = true;
              } else if (sigma[c] != ab) {
                return false;
              }
            }
          }
        }
        return true;
      };

      std::vector<bool> assigned(n, false);
      assigned[local[unit]] = true;
      std::function<void()> extend = [&]() {
        std::size_t a = 0;
        while (a < n && assigned[a]) {
          ++a;
        }
        if (a == n) {
          out.push_back(sigma);
          return;
        }
        for (auto const& p : allowed) {
          auto const saved_sigma    = sigma;
          auto const saved_assigned = assigned;
          sigma[a]                  = p;
          if (close()) {
            for (std::size_t i = 0; i < n; ++i) {
              assigned[i] = assigned[i] || sigma[i].size() == s;
            }
            extend();
          }
          sigma    = saved_sigma;
          assigned = saved_assigned;
        }
      };
      // With an empty fibre every permutation is the empty one, and the
      // size test above cannot tell assigned from unassigned.
      if (s == 0) {
        out.push_back(std::vector<Perm>(n));
        return out;
      }
      extend();
      return out;
    }

  }  // namespace

  bool for_each_left_action(FiniteGroupoid const&                     g,
                            std::vector<std::string> const&           carrier,
                            std::vector<Object> const&                moment,
                            std::vector<std::uint32_t> const*         labels,
                            std::function<bool(Action const&)> const& f) {
    auto const                      no = g.number_of_objects();
    std::vector<std::vector<Point>> fibre(no);
    for (Point x = 0; x < carrier.size(); ++x) {
      fibre.at(moment[x]).push_back(x);
    }
    auto const label_of = [&](Point x) { return labels ? (*labels)[x] : 0u; };
    auto const fibre_labels = [&](Object o) {
      std::vector<std::uint32_t> out;
      for (Point x : fibre[o]) {
        out.push_back(label_of(x));
      }
      return out;
    };

    struct Part {
      Object                         root;
      std::vector<Arrow>             isotropy;
      std::vector<std::vector<Perm>> homs;
      std::vector<Object>            others;
      std::vector<Arrow>             transport;  // root -> other
      std::vector<std::vector<Perm>> bijections;  // per other
    };
    std::vector<Part> parts;
    std::vector<std::uint32_t> part_of(no);
    std::vector<std::uint32_t> slot_of(no, kUndefined);
    std::vector<Arrow>         transport_to(no, kUndefined);
    auto const orbits = orbit_space(g);
    for (auto const& objects : orbits.classes()) {
      Part p;
      p.root     = objects.front();
      p.isotropy = isotropy_group(g, p.root);
      auto const root_labels = fibre_labels(p.root);
      p.homs = homomorphisms(g, p.isotropy, g.unit(p.root),
                             label_preserving_perms(root_labels), fibre[p.root].size());
      transport_to[p.root] = g.unit(p.root);
      for (Object b : objects) {
        part_of[b] = static_cast<std::uint32_t>(parts.size());
        if (b == p.root) {
          continue;
        }
        if (fibre[b].size() != fibre[p.root].size()) {
          return true;  // no actions at all
        }
        Arrow t = kUndefined;
        for (Arrow a : g.arrows_from(p.root)) {
          if (g.target(a) == b) {
            t = a;
            break;
          }
        }
        slot_of[b]      = static_cast<std::uint32_t>(p.others.size());
        transport_to[b] = t;
        p.others.push_back(b);
        p.transport.push_back(t);
        p.bijections.push_back(label_matching_bijections(root_labels, fibre_labels(b)));
      }
      parts.push_back(std::move(p));
    }

    // Chosen indices: per part, a hom and one bijection per other object.
    std::vector<std::size_t>              hom_choice(parts.size());
    std::vector<std::vector<std::size_t>> bij_choice(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      bij_choice[i].resize(parts[i].others.size());
    }

    std::vector<std::vector<std::size_t>> iso_index(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      iso_index[i].assign(g.number_of_arrows(), kUndefined);
      for (std::size_t j = 0; j < parts[i].isotropy.size(); ++j) {
        iso_index[i][parts[i].isotropy[j]] = j;
      }
    }

    auto const build = [&]() {
      RawAction raw;
      raw.carrier = carrier;
      raw.moment  = moment;
      // tau(b): root fibre position -> fibre(b) position
      auto const tau = [&](Object b) -> Perm const* {
        auto const& p = parts[part_of[b]];
        if (b == p.root) {
          return nullptr;
        }
        return &p.bijections[slot_of[b]][bij_choice[part_of[b]][slot_of[b]]];
      };
      for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
        Object const src  = g.source(a);
        Object const tgt  = g.target(a);
        auto const   pi   = part_of[src];
        auto const&  p    = parts[pi];
        Arrow const  in   = g.compose(g.inverse(transport_to[tgt]),
                                      g.compose(a, transport_to[src]));
        Perm const&  s    = p.homs[hom_choice[pi]][iso_index[pi][in]];
        Perm const*  ta   = tau(src);
        Perm const*  tb   = tau(tgt);
        for (std::size_t i = 0; i < fibre[src].size(); ++i) {
          // fibre(src) position i -> root position j
          std::size_t j = i;
          if (ta) {
            j = static_cast<std::size_t>(std::find(ta->begin(), ta->end(), i) - ta->begin());
          }
          std::size_t k = s[j];
          if (tb) {
            k = (*tb)[k];
          }
          raw.entries.push_back({a, fibre[src][i], fibre[tgt][k]});
        }
      }
      return Action::make(g, std::move(raw), Side::left);
    };

    // Odometer over all choices.
    for (auto const& p : parts) {
      if (p.homs.empty()) {
        return true;
      }
      for (auto const& b : p.bijections) {
        if (b.empty()) {
          return true;
        }
      }
    }
    while (true) {
      if (!f(build())) {
        return false;
      }
      // advance
      std::size_t i = parts.size();
      bool        carried = true;
      while (carried && i > 0) {
        --i;
        auto& bc = bij_choice[i];
        std::size_t j = bc.size();
        while (carried && j > 0) {
          --j;
          if (++bc[j] < parts[i].bijections[j].size()) {
            carried = false;
          } else {
            bc[j] = 0;
          }
        }
        if (carried) {
          if (++hom_choice[i] < parts[i].homs.size()) {
            carried = false;
          } else {
            hom_choice[i] = 0;
          }
        }
      }
      if (carried) {
        return true;
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> sorted_sequences(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t>              seq;
    std::function<void(std::uint32_t)>      extend = [&](std::uint32_t from) {
      if (seq.size() == k) {
        out.push_back(seq);
        return;
      }
      for (std::uint32_t v = from; v < n; ++v) {
        seq.push_back(v);
        extend(v);
        seq.pop_back();
      }
    };
    extend(0);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical forms
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Calls f on every relabelling p that sends the points to positions
    // sorted by block, in any order within a block.
    template <typename F>
    void for_each_block_perm(std::vector<std::uint64_t> const& block, F&& f) {
      auto const               n = block.size();
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), std::size_t(0));
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t x, std::size_t y) { return block[x] < block[y]; });
      std::vector<std::pair<std::size_t, std::size_t>> segments;
      for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && block[order[j]] == block[order[i]]) {
          ++j;
        }
        segments.emplace_back(i, j);
        i = j;
      }
      Perm local(n);
      std::iota(local.begin(), local.end(), 0u);
      Perm p(n);
      while (true) {
        for (std::size_t i = 0; i < n; ++i) {
          p[order[i]] = local[i];
        }
        f(p);
        std::size_t s = 0;
        while (s < segments.size()
               && !std::next_permutation(local.begin() + segments[s].first,
                                         local.begin() + segments[s].second)) {
          ++s;
        }
        if (s == segments.size()) {
          return;
        }
      }
    }

    void encode(Action const& a, Perm const& p, Perm const& inv, std::vector<std::uint32_t>& out) {
      for (Point y = 0; y < a.size(); ++y) {
        Point const x = inv[y];
        out.push_back(a.moment(x));
        for (Arrow g : a.acting_on(x)) {
          out.push_back(p[a.act(g, x)]);
        }
      }
    }

    Perm inverse_perm(Perm const& p) {
      Perm inv(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        inv[p[i]] = static_cast<std::uint32_t>(i);
      }
      return inv;
    }

  }  // namespace

  std::vector<std::uint32_t> canonical_form(Action const& a) {
    std::vector<std::uint64_t> block(a.moments().begin(), a.moments().end());
    std::vector<std::uint32_t> best;
    for_each_block_perm(block, [&](Perm const& p) {
      std::vector<std::uint32_t> code;
      encode(a, p, inverse_perm(p), code);
      if (best.empty() || code < best) {
        best = std::move(code);
      }
    });
    return best;
  }

  std::vector<std::uint32_t> canonical_form(Bibundle const& b) {
    std::vector<std::uint64_t> block;
    for (Point x = 0; x < b.size(); ++x) {
      block.push_back((std::uint64_t(b.l(x)) << 32) | b.r(x));
    }
    std::vector<std::uint32_t> best;
    bool                       first = true;
    for_each_block_perm(block, [&](Perm const& p) {
      std::vector<std::uint32_t> code;
      auto const                 inv = inverse_perm(p);
      encode(b.left(), p, inv, code);
      encode(b.right(), p, inv, code);
      if (first || code < best) {
        best  = std::move(code);
        first = false;
      }
    });
    return best;
  }

  std::vector<Action> left_actions_up_to_iso(FiniteGroupoid const& g,
                                             std::size_t           max_carrier) {
    std::vector<Action> out;
    for (std::size_t k = 0; k <= max_carrier; ++k) {
      std::vector<std::string> carrier;
      for (std::size_t x = 0; x < k; ++x) {
        carrier.push_back(std::to_string(x));
      }
      std::set<std::vector<std::uint32_t>> seen;
      for (auto const& seq : sorted_sequences(g.number_of_objects(), k)) {
        std::vector<Object> moment(seq.begin(), seq.end());
        for_each_left_action(g, carrier, moment, nullptr, [&](Action const& a) {
          if (seen.insert(canonical_form(a)).second) {
            out.push_back(a);
          }
          return true;
        });
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bibundles
  ////////////////////////////////////////////////////////////////////////

  bool for_each_bibundle(FiniteGroupoid const&                       g,
                         FiniteGroupoid const&                       h,
                         std::size_t                                 k,
                         BibundleFilter                              filter,
                         std::function<bool(Bibundle const&)> const& f,
                         std::size_t*                                examined) {
    auto const ng = g.number_of_objects();
    auto const nh = h.number_of_objects();
    std::vector<std::string> carrier;
    for (std::size_t x = 0; x < k; ++x) {
      carrier.push_back(std::to_string(x));
    }
    std::vector<std::string> g_base, h_base;
    for (Object o = 0; o < ng; ++o) {
      g_base.push_back(g.object_name(o));
    }
    for (Object o = 0; o < nh; ++o) {
      h_base.push_back(h.object_name(o));
    }
    for (auto const& seq : sorted_sequences(ng * nh, k)) {
      std::vector<Object> l, r;
      for (auto v : seq) {
        l.push_back(static_cast<Object>(v / nh));
        r.push_back(static_cast<Object>(v % nh));
      }
      if (filter.surjective_moments) {
        std::set<Object> ls(l.begin(), l.end()), rs(r.begin(), r.end());
        if (ls.size() != ng || rs.size() != nh) {
          continue;
        }
      }
      std::vector<Action> lefts;
      for_each_left_action(g, carrier, l, &r, [&](Action const& a) {
        if (!filter.left_pre_principal || is_pre_principal(Bundle::make(a, h_base, r))) {
          lefts.push_back(a);
        }
        return true;
      });
      if (lefts.empty()) {
        continue;
      }
      std::vector<Action> rights;
      for_each_left_action(h, carrier, r, &l, [&](Action const& a) {
        auto right = to_right(a);
        if (!filter.right_pre_principal
            || is_pre_principal(Bundle::make(right, g_base, l))) {
          rights.push_back(std::move(right));
        }
        return true;
      });
      for (auto const& left : lefts) {
        for (auto const& right : rights) {
          if (examined) {
            ++*examined;
          }
          if (actions_commute(left, right)
              && !f(Bibundle::from_actions(left, right))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<Bibundle> bibundles_up_to_iso(FiniteGroupoid const& g,
                                            FiniteGroupoid const& h,
                                            std::size_t           max_carrier,
                                            BibundleFilter        filter) {
    std::vector<Bibundle> out;
    for (std::size_t k = 0; k <= max_carrier; ++k) {
      std::set<std::vector<std::uint32_t>> seen;
      for_each_bibundle(g, h, k, filter, [&](Bibundle const& b) {
        if (seen.insert(canonical_form(b)).second) {
          out.push_back(b);
        }
        return true;
      });
    }
    return out;
  }

  std::uint64_t bibundle_search_estimate(FiniteGroupoid const& g,
                                         FiniteGroupoid const& h,
                                         std::size_t           max_carrier) {
    // sum over k of C(n + k - 1, k), computed incrementally
    std::uint64_t const n     = g.number_of_objects() * h.number_of_objects();
    std::uint64_t       total = 0;
    std::uint64_t       term  = 1;
    for (std::uint64_t k = 0; k <= max_carrier; ++k) {
      if (k > 0) {
        if (n == 0) {
          break;
        }
        term = term * (n + k - 1) / k;
      }
      total += term;
    }
    return total;
  }

}  // namespace morita
