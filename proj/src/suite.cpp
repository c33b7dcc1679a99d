#include "morita/suite.hpp"

#include <set>
#include <sstream>

#include "morita/errors.hpp"
#include "morita/morita.hpp"
#include "morita/tensor.hpp"

namespace morita {

  namespace {

    class Recorder {
     public:
      explicit Recorder(SuiteReport& report) : _report(report) {}

      void instance() {
        ++_report.instances;
      }

      void count(std::string const& key, std::size_t n = 1) {
        _report.counts[key] += n;
      }

      void fail(std::string const& instance, std::string const& law, std::string const& detail) {
        _report.failures.push_back({instance, law, detail});
      }

      void expect(bool ok, std::string const& instance, std::string const& law,
                  std::string const& detail = "") {
        if (!ok) {
          fail(instance, law, detail);
        }
      }

      void report(std::string const& instance, ValidationReport const& r) {
        for (auto const& v : r.violations()) {
          fail(instance, std::string(to_string(v.law)), v.describe());
        }
      }

      // Runs f, recording any exception against the instance.
      template <typename F>
      void guard(std::string const& instance, F&& f) {
        try {
          f();
        } catch (std::exception const& e) {
          fail(instance, "exception", e.what());
        }
      }

     private:
      SuiteReport& _report;
    };

    std::string groupoid_name(std::size_t i) {
      return "groupoid " + std::to_string(i);
    }

    std::string action_name(Corpus const& c, std::size_t k) {
      return "action " + std::to_string(k) + " (groupoid "
             + std::to_string(c.actions[k].groupoid) + ")";
    }

    std::string bundle_name(Corpus const& c, std::size_t k) {
      auto const& b = c.bundles[k];
      return "bundle " + std::to_string(k) + " (groupoid " + std::to_string(b.groupoid) + ", "
             + (b.bundle.side() == Side::left ? "left" : "right") + ")";
    }

    std::string bibundle_name(Corpus const& c, std::size_t k) {
      auto const& b = c.bibundles[k];
      return "bibundle " + std::to_string(k) + " (groupoids " + std::to_string(b.left) + ", "
             + std::to_string(b.right) + ")";
    }

    std::vector<std::size_t> biprincipal_indices(Corpus const& c) {
      std::vector<std::size_t> out;
      for (std::size_t k = 0; k < c.bibundles.size(); ++k) {
        if (is_biprincipal(c.bibundles[k].bibundle)) {
          out.push_back(k);
        }
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // axioms
    ////////////////////////////////////////////////////////////////////////

    void run_axioms(Corpus const& c, Recorder& rec) {
      for (std::size_t i = 0; i < c.groupoids.size(); ++i) {
        rec.instance();
        rec.report(groupoid_name(i), validate_groupoid(c.groupoids[i].raw()));
      }
      for (std::size_t k = 0; k < c.actions.size(); ++k) {
        auto const& [i, a] = c.actions[k];
        auto const& g      = c.groupoids[i];
        rec.instance();
        rec.report(action_name(c, k), validate_left_action(g, a.raw()));
        rec.instance();
        rec.guard(action_name(c, k) + " as right action", [&] {
          rec.report(action_name(c, k) + " as right action",
                     validate_right_action(g, to_right(a).raw()));
        });
      }
      for (std::size_t k = 0; k < c.bundles.size(); ++k) {
        auto const& b = c.bundles[k].bundle;
        rec.instance();
        rec.report(bundle_name(c, k), validate_bundle(b.action(), b.base(), b.projection()));
      }
      for (std::size_t k = 0; k < c.bibundles.size(); ++k) {
        auto const& [i, j, b] = c.bibundles[k];
        rec.instance();
        rec.report(bibundle_name(c, k), validate_bibundle(c.groupoids[i], c.groupoids[j], b.raw()));
      }
      for (auto const& g : c.injected_groupoids) {
        rec.instance();
        rec.report("injected groupoid " + g.name, validate_groupoid(g.raw));
      }
      for (auto const& a : c.injected_actions) {
        rec.instance();
        auto const name = "injected action " + a.name;
        if (a.groupoid >= c.groupoids.size()) {
          rec.fail(name, "unknown-groupoid", std::to_string(a.groupoid));
          continue;
        }
        rec.report(name, validate_action(c.groupoids[a.groupoid], a.raw, a.side));
      }
      for (auto const& m : axiom_mutations()) {
        rec.instance();
        auto const r = m.check();
        if (r.contains(m.law)) {
          rec.count("mutations_detected");
        } else {
          rec.fail("mutation " + m.name, std::string(to_string(m.law)),
                   "not detected; report was: " + r.summary());
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // division
    ////////////////////////////////////////////////////////////////////////

    // d with one defined entry changed to another arrow, if there is one.
    std::optional<DivisionMap> corrupt(Bundle const& b, DivisionMap const& d) {
      auto const         n = b.action().size();
      auto const&        G = b.action().groupoid();
      std::vector<Arrow> table(n * n, kUndefined);
      for (Point x1 = 0; x1 < n; ++x1) {
        for (Point x2 = 0; x2 < n; ++x2) {
          if (d.defined(x1, x2)) {
            table[x1 * n + x2] = d(x1, x2);
          }
        }
      }
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] == kUndefined) {
          continue;
        }
        for (Arrow a = 0; a < G.number_of_arrows(); ++a) {
          if (a != table[i]) {
            table[i] = a;
            return DivisionMap(n, std::move(table));
          }
        }
      }
      return std::nullopt;
    }

    void run_division(Corpus const& c, Recorder& rec) {
      for (std::size_t k = 0; k < c.bundles.size(); ++k) {
        auto const& b    = c.bundles[k].bundle;
        auto const  name = bundle_name(c, k);
        rec.instance();
        rec.guard(name, [&] {
          bool const pp = is_pre_principal(b);
          rec.expect(pp == (is_free(b.action()) && is_fibre_transitive(b)), name,
                     "pre-principal-oracle", "action map test disagrees with free and transitive");
          if (!pp) {
            return;
          }
          rec.count("pre_principal_bundles");
          auto const d = division_map(b);
          rec.report(name, check_division_laws(b, d));
          if (auto bad = corrupt(b, d)) {
            rec.instance();
            rec.expect(!check_division_laws(b, *bad).ok(), name, "division-mutation",
                       "corrupted division map passed");
            rec.count("division_mutations_detected");
          }
        });
      }
      std::vector<bool> left_pp(c.bibundles.size());
      for (std::size_t k = 0; k < c.bibundles.size(); ++k) {
        auto const& b    = c.bibundles[k].bibundle;
        auto const  name = bibundle_name(c, k);
        auto const  p    = bibundle_principality(b);
        left_pp[k]       = p.left_pre_principal;
        rec.guard(name, [&] {
          if (p.left_pre_principal) {
            rec.instance();
            rec.count("left_pre_principal_bibundles");
            rec.report(name, check_bibundle_division_laws(b));
          }
          if (p.right_pre_principal) {
            rec.instance();
            rec.count("right_pre_principal_bibundles");
            rec.report(name + " opposite", check_bibundle_division_laws(opposite_bibundle(b)));
          }
        });
      }
      for (std::size_t k1 = 0; k1 < c.bibundles.size(); ++k1) {
        if (!left_pp[k1]) {
          continue;
        }
        for (std::size_t k2 = 0; k2 < c.bibundles.size(); ++k2) {
          if (!left_pp[k2] || c.bibundles[k1].right != c.bibundles[k2].left) {
            continue;
          }
          auto const name = bibundle_name(c, k1) + " with " + bibundle_name(c, k2);
          rec.instance();
          rec.count("psi_pairs");
          rec.guard(name, [&] {
            auto const t = tensor_action_inverse(c.bibundles[k1].bibundle, c.bibundles[k2].bibundle);
            rec.expect(t.is_left_inverse(), name, "psi-left-inverse", "Psi o Phi != id");
            rec.expect(t.is_right_inverse(), name, "psi-right-inverse", "Phi o Psi != id");
          });
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // coherence
    ////////////////////////////////////////////////////////////////////////

    bool mutually_inverse(std::vector<Point> const& f, std::vector<Point> const& g) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] >= g.size() || g[f[i]] != i) {
          return false;
        }
      }
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] >= f.size() || f[g[i]] != i) {
          return false;
        }
      }
      return true;
    }

    void check_unitors(Bibundle const& b, std::string const& name, Recorder& rec) {
      auto const  lu = left_unitor(b);
      auto const& G  = b.left_groupoid();
      auto const& lt = lu.composite.tensor;
      bool        formula = true;
      for (std::uint32_t c = 0; c < lt.size(); ++c) {
        for (auto const& [g, x] : lt.members(c)) {
          formula = formula && lu.forward[c] == b.act_left(g, x);
        }
      }
      for (Point x = 0; x < b.size(); ++x) {
        formula = formula && lu.backward[x] == lt.class_of(G.unit(b.l(x)), x);
      }
      rec.expect(formula, name, "left-unitor-formula");
      rec.expect(is_biequivariant_iso(lu.forward, lu.composite.bibundle, b)
                     && is_biequivariant_iso(lu.backward, b, lu.composite.bibundle)
                     && mutually_inverse(lu.forward, lu.backward),
                 name, "left-unitor-iso");

      auto const  ru = right_unitor(b);
      auto const& H  = b.right_groupoid();
      auto const& rt = ru.composite.tensor;
      formula        = true;
      for (std::uint32_t c = 0; c < rt.size(); ++c) {
        for (auto const& [x, h] : rt.members(c)) {
          formula = formula && ru.forward[c] == b.act_right(x, h);
        }
      }
      for (Point x = 0; x < b.size(); ++x) {
        formula = formula && ru.backward[x] == rt.class_of(x, H.unit(b.r(x)));
      }
      rec.expect(formula, name, "right-unitor-formula");
      rec.expect(is_biequivariant_iso(ru.forward, ru.composite.bibundle, b)
                     && is_biequivariant_iso(ru.backward, b, ru.composite.bibundle)
                     && mutually_inverse(ru.forward, ru.backward),
                 name, "right-unitor-iso");
    }

    void check_associator(Bibundle const& b1, Bibundle const& b2, Bibundle const& b3,
                          std::string const& name, Recorder& rec) {
      auto const a       = associator(b1, b2, b3);
      bool       formula = true;
      for (std::uint32_t c = 0; c < a.left_nested.tensor.size() && formula; ++c) {
        for (auto const& [xy, z] : a.left_nested.tensor.members(c)) {
          for (auto const& [x, y] : a.first_two.tensor.members(xy)) {
            auto const yz = a.last_two.tensor.class_of(y, z);
            formula = formula && a.forward[c] == a.right_nested.tensor.class_of(x, yz);
          }
        }
      }
      rec.expect(formula, name, "associator-formula");
      rec.expect(is_biequivariant_iso(a.forward, a.left_nested.bibundle, a.right_nested.bibundle)
                     && is_biequivariant_iso(a.backward, a.right_nested.bibundle,
                                             a.left_nested.bibundle)
                     && mutually_inverse(a.forward, a.backward),
                 name, "associator-iso");
    }

    // x1 (x) y = x2 (x) y forces x1 = x2 when the left action on Y is free.
    void check_cancellation(Composite const& comp, std::string const& name, Recorder& rec) {
      auto const& t = comp.tensor;
      for (std::uint32_t c = 0; c < t.size(); ++c) {
        std::map<Point, Point> x_of;
        for (auto const& [x, y] : t.members(c)) {
          auto [it, fresh] = x_of.emplace(y, x);
          if (!fresh && it->second != x) {
            rec.fail(name, "tensor-cancellation",
                     "class " + std::to_string(c) + " identifies distinct x over one y");
            return;
          }
        }
      }
    }

    void run_coherence(Corpus const& c, Recorder& rec) {
      auto const& bs = c.bibundles;
      for (std::size_t k = 0; k < bs.size(); ++k) {
        auto const name = bibundle_name(c, k);
        rec.instance();
        rec.guard(name, [&] { check_unitors(bs[k].bibundle, name, rec); });
      }
      std::vector<std::vector<std::size_t>> starting(c.groupoids.size());
      for (std::size_t k = 0; k < bs.size(); ++k) {
        starting[bs[k].left].push_back(k);
      }
      for (std::size_t k1 = 0; k1 < bs.size(); ++k1) {
        for (std::size_t k2 : starting[bs[k1].right]) {
          auto const name = bibundle_name(c, k1) + " with " + bibundle_name(c, k2);
          rec.instance();
          rec.count("pairs");
          rec.guard(name, [&] {
            auto const comp = compose_bibundles(bs[k1].bibundle, bs[k2].bibundle);
            rec.report(name, validate_bibundle(comp.bibundle.left_groupoid(),
                                               comp.bibundle.right_groupoid(),
                                               comp.bibundle.raw()));
            if (is_free(bs[k2].bibundle.left())) {
              rec.count("cancellation_pairs");
              check_cancellation(comp, name, rec);
            }
          });
          for (std::size_t k3 : starting[bs[k2].right]) {
            auto const triple = name + " with " + bibundle_name(c, k3);
            rec.instance();
            rec.count("triples");
            rec.guard(triple, [&] {
              check_associator(bs[k1].bibundle, bs[k2].bibundle, bs[k3].bibundle, triple, rec);
            });
          }
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // morita
    ////////////////////////////////////////////////////////////////////////

    void run_forward(Corpus const& c, Recorder& rec) {
      std::vector<Bibundle> biprincipal;
      for (std::size_t k : biprincipal_indices(c)) {
        auto const& b    = c.bibundles[k].bibundle;
        auto const  name = bibundle_name(c, k);
        biprincipal.push_back(b);
        rec.instance();
        rec.count("biprincipal");
        rec.guard(name, [&] {
          auto const check = check_certificate(weak_inverse_witness(b));
          rec.report(name, check.report);
          rec.expect(check.ok, name, "certificate", check.reason);
        });
      }
      auto const rel = morita_equivalence_relation_checks(c.groupoids, biprincipal);
      rec.count("reflexive", rel.reflexive);
      rec.count("symmetric", rel.symmetric);
      rec.count("transitive", rel.transitive);
      for (std::size_t i = 0; i < rel.reflexive + rel.symmetric + rel.transitive; ++i) {
        rec.instance();
      }
      for (auto const& f : rel.failures) {
        rec.fail(f, "equivalence-relation", "not biprincipal");
      }
    }

    bool surjective(std::vector<Object> const& image, std::size_t n) {
      std::set<Object> seen(image.begin(), image.end());
      return seen.size() == n;
    }

    void run_converse(Corpus const& c, Recorder& rec) {
      auto const&                                      bs = c.bibundles;
      std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> between;
      for (std::size_t k = 0; k < bs.size(); ++k) {
        between[{bs[k].left, bs[k].right}].push_back(k);
      }
      std::vector<bool> has_inverse(bs.size(), false);
      for (auto const& [ij, forward] : between) {
        auto const  back = between.find({ij.second, ij.first});
        if (back == between.end()) {
          continue;
        }
        auto const& G = c.groupoids[ij.first];
        auto const& H = c.groupoids[ij.second];
        auto const  id_g = identity_bibundle(G);
        auto const  id_h = identity_bibundle(H);
        for (std::size_t kb : forward) {
          for (std::size_t kc : back->second) {
            auto const& B    = bs[kb].bibundle;
            auto const& C    = bs[kc].bibundle;
            auto const  name = bibundle_name(c, kb) + " against " + bibundle_name(c, kc);
            rec.count("pairs_examined");
            rec.guard(name, [&] {
              auto const bc = compose_bibundles(B, C);
              if (bc.bibundle.size() != G.number_of_arrows()) {
                return;
              }
              auto const cb = compose_bibundles(C, B);
              if (cb.bibundle.size() != H.number_of_arrows()) {
                return;
              }
              auto iso_g = find_biequivariant_iso(bc.bibundle, id_g);
              if (!iso_g) {
                return;
              }
              auto iso_h = find_biequivariant_iso(cb.bibundle, id_h);
              if (!iso_h) {
                return;
              }
              rec.instance();
              rec.count("certificates_found");
              MoritaCertificate const cert{G, H, B.raw(), C.raw(), *iso_g, *iso_h};
              auto const              check = check_certificate(cert);
              rec.expect(check.ok, name, "certificate", check.reason);
              has_inverse[kb] = true;
              rec.expect(is_biprincipal(B), name, "converse-biprincipal",
                         "weakly invertible B is not biprincipal");
              rec.expect(is_biprincipal(C), name, "converse-biprincipal",
                         "weak inverse C is not biprincipal");
              rec.expect(surjective(B.left().moments(), G.number_of_objects())
                             && surjective(B.right().moments(), H.number_of_objects())
                             && surjective(C.left().moments(), H.number_of_objects())
                             && surjective(C.right().moments(), G.number_of_objects()),
                         name, "converse-surjective-moments");
              rec.expect(is_free(B.left()) && is_free(B.right()) && is_free(C.left())
                             && is_free(C.right()),
                         name, "converse-free-actions");
            });
          }
        }
      }
      // Within the bounds every biprincipal bibundle has its opposite, up to
      // isomorphism, among the candidates.
      for (std::size_t k : biprincipal_indices(c)) {
        rec.instance();
        rec.expect(has_inverse[k], bibundle_name(c, k), "converse-completeness",
                   "biprincipal bibundle without a certificate in the search");
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // invariants
    ////////////////////////////////////////////////////////////////////////

    void run_orbit(Corpus const& c, Recorder& rec) {
      for (std::size_t k : biprincipal_indices(c)) {
        auto const& b    = c.bibundles[k].bibundle;
        auto const  name = bibundle_name(c, k);
        rec.instance();
        rec.guard(name, [&] {
          auto const ob = orbit_bijection(b);
          rec.expect(ob.is_mutual_inverse(), name, "orbit-bijection");
          for (Point x = 0; x < b.size(); ++x) {
            rec.expect(ob.forward[ob.g_orbits.class_of(b.l(x))] == ob.h_orbits.class_of(b.r(x)),
                       name, "orbit-representative", "point " + b.point_name(x));
          }
        });
      }
    }

    void run_fibrating(Corpus const& c, Recorder& rec) {
      for (std::size_t k : biprincipal_indices(c)) {
        auto const name = bibundle_name(c, k);
        rec.instance();
        rec.guard(name, [&] {
          rec.expect(fibrating_invariance_check(c.bibundles[k].bibundle), name, "fibrating");
        });
      }
    }

    // Every equivariant map between two left actions, by brute force over
    // moment-preserving maps.
    std::vector<std::vector<Point>> equivariant_maps(Action const& from, Action const& to) {
      std::vector<std::vector<Point>> candidates(from.size());
      for (Point x = 0; x < from.size(); ++x) {
        for (Point y = 0; y < to.size(); ++y) {
          if (from.moment(x) == to.moment(y)) {
            candidates[x].push_back(y);
          }
        }
        if (candidates[x].empty()) {
          return {};
        }
      }
      std::vector<std::vector<Point>> out;
      std::vector<std::size_t>        digit(from.size(), 0);
      std::vector<Point>              map(from.size());
      while (true) {
        for (Point x = 0; x < from.size(); ++x) {
          map[x] = candidates[x][digit[x]];
        }
        if (is_equivariant(map, from, to)) {
          out.push_back(map);
        }
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == candidates[i].size()) {
          digit[i++] = 0;
        }
        if (i == digit.size()) {
          return out;
        }
      }
    }

    void run_actions(Corpus const& c, Recorder& rec) {
      std::vector<std::vector<std::size_t>> actions_of(c.groupoids.size());
      for (std::size_t k = 0; k < c.actions.size(); ++k) {
        actions_of[c.actions[k].groupoid].push_back(k);
      }
      for (std::size_t kb : biprincipal_indices(c)) {
        auto const& b     = c.bibundles[kb].bibundle;
        auto const& ys    = actions_of[c.bibundles[kb].right];
        auto const  bname = bibundle_name(c, kb);
        std::map<std::size_t, RoundTrip> trips;
        for (std::size_t ky : ys) {
          auto const& y    = c.actions[ky].action;
          auto const  name = bname + " on " + action_name(c, ky);
          rec.instance();
          rec.guard(name, [&] {
            auto rt = roundtrip_natural_iso(b, y);
            rec.expect(check_roundtrip(rt), name, "roundtrip");
            rec.expect(action_orbit_space(transport_action(b, y)).size()
                           == action_orbit_space(y).size(),
                       name, "transport-orbits");
            trips.emplace(ky, std::move(rt));
          });
        }
        for (auto const& [ky, ry] : trips) {
          for (auto const& [kz, rz] : trips) {
            for (auto const& phi : equivariant_maps(ry.y, rz.y)) {
              auto const name = bname + " on " + action_name(c, ky) + " to " + action_name(c, kz);
              rec.instance();
              rec.count("naturality_squares");
              rec.guard(name, [&] {
                rec.expect(check_naturality(ry, rz, phi), name, "naturality");
              });
            }
          }
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // mutations
    ////////////////////////////////////////////////////////////////////////

    Arrow arrow(FiniteGroupoid const& g, std::string const& name) {
      return *g.find_arrow(name);
    }

    std::size_t entry(RawGroupoid const& raw, Arrow f, Arrow h) {
      for (std::size_t i = 0; i < raw.composition.size(); ++i) {
        if (raw.composition[i][0] == f && raw.composition[i][1] == h) {
          return i;
        }
      }
      throw std::logic_error("no composition entry");
    }

    std::size_t entry(RawAction const& raw, Arrow a, Point x) {
      for (std::size_t i = 0; i < raw.entries.size(); ++i) {
        if (raw.entries[i][0] == a && raw.entries[i][1] == x) {
          return i;
        }
      }
      throw std::logic_error("no action entry");
    }

    // pair_groupoid(2) on {0, 1} by (i,j).j = i
    Action pair_points(Side side) {
      auto      g = pair_groupoid(2);
      RawAction raw{{"0", "1"}, {0, 1}, {}};
      for (Arrow a = 0; a < g.number_of_arrows(); ++a) {
        raw.entries.push_back({a, g.source(a), g.target(a)});
      }
      auto const left = Action::make(g, raw, Side::left);
      return side == Side::left ? left : to_right(left);
    }

    std::function<ValidationReport()> groupoid_check(RawGroupoid raw) {
      return [raw] { return validate_groupoid(raw); };
    }

    std::function<ValidationReport()> action_check(FiniteGroupoid g, RawAction raw, Side side) {
      return [g, raw, side] { return validate_action(g, raw, side); };
    }

  }  // namespace

  std::vector<AxiomMutation> axiom_mutations() {
    std::vector<AxiomMutation> out;
    auto const z2 = cyclic_group(2);
    auto const z3 = cyclic_group(3);
    auto const z4 = cyclic_group(4);
    auto const p2 = pair_groupoid(2);
    auto const a01 = arrow(p2, "(0,1)");
    auto const a00 = arrow(p2, "(0,0)");
    auto const a11 = arrow(p2, "(1,1)");

    auto add = [&](std::string name, Law law, std::function<ValidationReport()> f) {
      out.push_back({std::move(name), law, std::move(f)});
    };

    {
      auto raw = z2.raw();
      raw.unit.clear();
      add("groupoid without units", Law::incomplete_map, groupoid_check(raw));
    }
    {
      auto raw      = z2.raw();
      raw.target[1] = 5;
      add("target out of range", Law::dangling_identifier, groupoid_check(raw));
    }
    {
      auto raw           = z2.raw();
      raw.arrow_names[1] = raw.arrow_names[0];
      add("repeated arrow name", Law::duplicate_identifier, groupoid_check(raw));
    }
    {
      auto raw = p2.raw();
      raw.composition.push_back(raw.composition.front());
      add("repeated composition entry", Law::duplicate_entry, groupoid_check(raw));
    }
    {
      auto raw = p2.raw();
      raw.composition.push_back({a01, a01, a01});
      add("composite of a non-composable pair", Law::composition_domain, groupoid_check(raw));
    }
    {
      auto raw = z3.raw();
      raw.composition.pop_back();
      add("dropped composite", Law::missing_composite, groupoid_check(raw));
    }
    {
      auto raw                                   = p2.raw();
      raw.composition[entry(raw, a00, a00)][2]   = a11;
      add("composite with wrong endpoints", Law::composite_endpoints, groupoid_check(raw));
    }
    {
      // 1 o 1 = 0 keeps units and inverses but (1 o 1) o 2 != 1 o (1 o 2)
      auto raw                               = z3.raw();
      raw.composition[entry(raw, 1, 1)][2]   = 0;
      add("non-associative product", Law::associativity, groupoid_check(raw));
    }
    {
      auto raw    = p2.raw();
      raw.unit[0] = a01;
      add("unit that is not a loop", Law::unit_endpoints, groupoid_check(raw));
    }
    {
      auto raw                               = z2.raw();
      raw.composition[entry(raw, 0, 1)][2]   = 0;
      add("unit fails on the left", Law::left_unit, groupoid_check(raw));
    }
    {
      auto raw                               = z2.raw();
      raw.composition[entry(raw, 1, 0)][2]   = 0;
      add("unit fails on the right", Law::right_unit, groupoid_check(raw));
    }
    {
      auto raw         = p2.raw();
      raw.inverse[a01] = a01;
      add("inverse with wrong endpoints", Law::inverse_endpoints, groupoid_check(raw));
    }
    {
      auto raw       = z3.raw();
      raw.inverse[1] = 1;
      add("inverse that does not invert", Law::inverse_law, groupoid_check(raw));
    }
    {
      auto raw       = z4.raw();
      raw.inverse[2] = 1;
      add("inverse that is not an involution", Law::inverse_involution, groupoid_check(raw));
    }
    add("table over the size limit", Law::size_limit,
        [] { return validate_groupoid(pair_groupoid(3).raw(), {5}); });

    for (Side side : {Side::left, Side::right}) {
      std::string const s = side == Side::left ? "left" : "right";
      {
        auto raw = regular_action(z2, side).raw();
        raw.entries.pop_back();
        add(s + " action with a missing entry", Law::action_missing, action_check(z2, raw, side));
      }
      {
        auto const a   = pair_points(side);
        auto       raw = a.raw();
        for (Arrow g = 0; g < p2.number_of_arrows() && raw == a.raw(); ++g) {
          for (Point x = 0; x < 2; ++x) {
            Object const need = side == Side::left ? p2.source(g) : p2.target(g);
            if (need != raw.moment[x]) {
              raw.entries.push_back({g, x, x});
              break;
            }
          }
        }
        add(s + " action entry outside the domain", Law::action_domain, action_check(p2, raw, side));
      }
      {
        auto raw = pair_points(side).raw();
        for (auto& e : raw.entries) {
          if (p2.source(e[0]) != p2.target(e[0])) {
            e[2] = e[1];
            break;
          }
        }
        add(s + " action landing in the wrong fibre", Law::action_moment, action_check(p2, raw, side));
      }
      {
        auto raw                         = regular_action(z2, side).raw();
        raw.entries[entry(raw, 0, 0)][2] = 1;
        add(s + " action where the unit moves a point", Law::action_unit, action_check(z2, raw, side));
      }
      {
        auto  raw = regular_action(z3, side).raw();
        auto& e   = raw.entries[entry(raw, 1, 0)];
        e[2]      = (e[2] + 1) % 3;
        add(s + " action that is not compatible", Law::action_compatibility,
            action_check(z3, raw, side));
      }
    }

    add("projection not constant on orbits", Law::projection_invariance, [z2] {
      return validate_bundle(regular_action(z2, Side::left), {"p", "q"}, {0, 1});
    });

    add("carriers differ", Law::carrier_mismatch, [z2] {
      auto raw = identity_bibundle(z2).raw();
      raw.right.carrier[0] += "'";
      return validate_bibundle(z2, z2, raw);
    });
    add("left moment not right invariant", Law::left_moment_invariance, [z2] {
      RawBibundle raw{
          RawAction{{"p", "q"}, {0, 1}, {{0, 0, 0}, {1, 1, 1}}},
          RawAction{{"p", "q"}, {0, 0}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}}};
      return validate_bibundle(unit_groupoid(2), z2, raw);
    });
    add("right moment not left invariant", Law::right_moment_invariance, [z2] {
      RawBibundle raw{
          RawAction{{"p", "q"}, {0, 0}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}},
          RawAction{{"p", "q"}, {0, 1}, {{0, 0, 0}, {1, 1, 1}}}};
      return validate_bibundle(z2, unit_groupoid(2), raw);
    });
    add("actions that do not commute", Law::commutation, [z2] {
      // G swaps 0 and 1, H swaps 1 and 2
      RawBibundle raw{
          RawAction{{"0", "1", "2"}, {0, 0, 0},
                    {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}, {1, 1, 0}, {1, 2, 2}}},
          RawAction{{"0", "1", "2"}, {0, 0, 0},
                    {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 0}, {1, 1, 2}, {1, 2, 1}}}};
      return validate_bibundle(z2, z2, raw);
    });
    return out;
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{
        "axioms",          "division",         "coherence",
        "morita-forward",  "morita-converse",  "invariants-orbit",
        "invariants-fibrating", "invariants-actions"};
    return names;
  }

  SuiteReport run_suite(Corpus const& corpus, std::string const& name) {
    SuiteReport report;
    report.suite = name;
    Recorder rec(report);
    if (name == "axioms") {
      run_axioms(corpus, rec);
    } else if (name == "division") {
      run_division(corpus, rec);
    } else if (name == "coherence") {
      run_coherence(corpus, rec);
    } else if (name == "morita-forward") {
      run_forward(corpus, rec);
    } else if (name == "morita-converse") {
      run_converse(corpus, rec);
    } else if (name == "invariants-orbit") {
      run_orbit(corpus, rec);
    } else if (name == "invariants-fibrating") {
      run_fibrating(corpus, rec);
    } else if (name == "invariants-actions") {
      run_actions(corpus, rec);
    } else {
      throw UnknownSuite(name);
    }
    return report;
  }

  nlohmann::json to_json(SuiteReport const& report) {
    nlohmann::json failures = nlohmann::json::array();
    for (auto const& f : report.failures) {
      failures.push_back({{"instance", f.instance}, {"law", f.law}, {"detail", f.detail}});
    }
    return {{"suite", report.suite},
            {"ok", report.ok()},
            {"instances", report.instances},
            {"counts", report.counts},
            {"failures", failures}};
  }

  std::string to_text(SuiteReport const& report) {
    std::ostringstream out;
    out << "suite " << report.suite << ": " << report.instances << " instances, "
        << report.failures.size() << " failures\n";
    for (auto const& [key, n] : report.counts) {
      out << "  " << key << ": " << n << "\n";
    }
    for (auto const& f : report.failures) {
      out << "FAIL " << f.instance << " [" << f.law << "]";
      if (!f.detail.empty()) {
        out << " " << f.detail;
      }
      out << "\n";
    }
    return out.str();
  }

}  // namespace morita
