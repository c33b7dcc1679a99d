#include "morita/morita.hpp"

#include "morita/enumerate.hpp"
#include "morita/errors.hpp"

namespace morita {

  bool is_biprincipal(Bibundle const& b) {
    auto const p = bibundle_principality(b);
    return p.left_subductive && p.right_subductive && p.left_pre_principal
           && p.right_pre_principal;
  }

  ////////////////////////////////////////////////////////////////////////
  // Psi
  ////////////////////////////////////////////////////////////////////////

  bool TensorActionInverse::is_left_inverse() const {
    for (std::size_t i = 0; i < phi.domain.size(); ++i) {
      if (psi[phi.value[i]] != i) {
        return false;
      }
    }
    return true;
  }

  bool TensorActionInverse::is_right_inverse() const {
    for (std::size_t j = 0; j < psi.size(); ++j) {
      if (psi[j] >= phi.value.size() || phi.value[psi[j]] != j) {
        return false;
      }
    }
    return true;
  }

  TensorActionInverse tensor_action_inverse(Bibundle const& b1, Bibundle const& b2) {
    if (!(b1.right_groupoid() == b2.left_groupoid())) {
      throw GroupoidMismatch("cannot compose: middle groupoids differ");
    }
    auto const bx = left_bundle(b1);
    auto const by = left_bundle(b2);
    if (!is_pre_principal(bx) || !is_pre_principal(by)) {
      throw NotPrePrincipal("both factors must be left pre-principal");
    }
    auto const dx = division_map(bx);
    auto const dy = division_map(by);

    TensorActionInverse result{compose_bibundles(b1, b2), {}, {}};
    auto const&         t = result.composite.tensor;
    auto const&         c = result.composite.bibundle;
    auto const&         G = c.left_groupoid();
    result.phi            = action_map(left_bundle(c));

    // domain index of (g, class) as laid out by action_map
    std::vector<std::size_t> offset(c.size() + 1, 0);
    for (Point z = 0; z < c.size(); ++z) {
      offset[z + 1] = offset[z] + c.left().acting_on(z).size();
    }
    for (auto const& [c1, c2] : result.phi.codomain) {
      auto const m1 = t.members(c1);
      std::size_t value = kUndefined;
      for (auto const& [x1, y1] : m1) {
        std::size_t const here = value_on_class(t, c2, "Psi", [&](Point x2, Point y2) {
          Arrow const h = dy(y1, y2);
          Arrow const g = dx(b1.act_right(x1, h), x2);
          return static_cast<std::uint32_t>(offset[c2] + G.position_from(g));
        });
        if (value != kUndefined && here != value) {
          throw IllDefined("Psi depends on the representative of class "
                           + std::to_string(c1));
        }
        value = here;
      }
      result.psi.push_back(value);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  MoritaCertificate weak_inverse_witness(Bibundle const& b) {
    if (!is_biprincipal(b)) {
      throw NotBiprincipal("weak inverse requires a biprincipal bibundle");
    }
    auto const c  = opposite_bibundle(b);
    auto const bc = compose_bibundles(b, c);
    auto const cb = compose_bibundles(c, b);
    auto const dg = division_map(left_bundle(b));
    auto const dh = division_map(right_bundle(b));

    MoritaCertificate cert{
        b.left_groupoid(), b.right_groupoid(), b.raw(), c.raw(), {}, {}};
    for (std::uint32_t k = 0; k < bc.tensor.size(); ++k) {
      cert.iso_g.push_back(value_on_class(
          bc.tensor, k, "phi_G", [&](Point x1, Point x2) { return dg(x1, x2); }));
    }
    for (std::uint32_t k = 0; k < cb.tensor.size(); ++k) {
      cert.iso_h.push_back(value_on_class(
          cb.tensor, k, "phi_H", [&](Point x1, Point x2) { return dh(x1, x2); }));
    }
    auto const check = check_certificate(cert);
    if (!check.ok) {
      throw std::logic_error("weak inverse witness failed verification: " + check.reason);
    }
    return cert;
  }

  CertificateCheck check_certificate(MoritaCertificate const& cert) {
    CertificateCheck result;
    result.report = validate_bibundle(cert.g, cert.h, cert.b);
    result.report.append(validate_bibundle(cert.h, cert.g, cert.c));
    if (!result.report.ok()) {
      result.reason = "invalid bibundle: " + result.report.summary();
      return result;
    }
    try {
      auto const b  = Bibundle::make(cert.g, cert.h, cert.b);
      auto const c  = Bibundle::make(cert.h, cert.g, cert.c);
      auto const bc = compose_bibundles(b, c);
      auto const cb = compose_bibundles(c, b);
      if (!is_biequivariant_iso(cert.iso_g, bc.bibundle, identity_bibundle(cert.g))) {
        result.reason = "iso_g is not a biequivariant bijection onto the identity";
        return result;
      }
      if (!is_biequivariant_iso(cert.iso_h, cb.bibundle, identity_bibundle(cert.h))) {
        result.reason = "iso_h is not a biequivariant bijection onto the identity";
        return result;
      }
    } catch (MoritaError const& e) {
      result.reason = e.what();
      return result;
    }
    result.ok = true;
    return result;
  }

  MoritaSearch decide_morita(FiniteGroupoid const& g,
                             FiniteGroupoid const& h,
                             std::size_t           carrier_budget) {
    MoritaSearch         search;
    BibundleFilter const filter{true, true, true};
    for (std::size_t k = 0; k <= carrier_budget; ++k) {
      for_each_bibundle(
          g, h, k, filter,
          [&](Bibundle const& b) {
            if (is_biprincipal(b)) {
              search.bibundle = b;
              return false;
            }
            return true;
          },
          &search.candidates_examined);
      if (search.bibundle) {
        search.certificate = weak_inverse_witness(*search.bibundle);
        return search;
      }
    }
    search.exhausted = true;
    return search;
  }

  ////////////////////////////////////////////////////////////////////////
  // Invariants
  ////////////////////////////////////////////////////////////////////////

  bool OrbitBijection::is_mutual_inverse() const {
    if (forward.size() != g_orbits.size() || backward.size() != h_orbits.size()) {
      return false;
    }
    for (std::uint32_t c = 0; c < forward.size(); ++c) {
      if (forward[c] >= backward.size() || backward[forward[c]] != c) {
        return false;
      }
    }
    for (std::uint32_t d = 0; d < backward.size(); ++d) {
      if (backward[d] >= forward.size() || forward[backward[d]] != d) {
        return false;
      }
    }
    return true;
  }

  OrbitBijection orbit_bijection(Bibundle const& b) {
    if (!is_biprincipal(b)) {
      throw NotBiprincipal("orbit bijection requires a biprincipal bibundle");
    }
    OrbitBijection ob{orbit_space(b.left_groupoid()), orbit_space(b.right_groupoid()), {}, {}};
    ob.forward.assign(ob.g_orbits.size(), kUndefined);
    ob.backward.assign(ob.h_orbits.size(), kUndefined);
    // every x is a valid choice for the orbit of l(x), and for that of r(x)
    for (Point x = 0; x < b.size(); ++x) {
      auto const c = ob.g_orbits.class_of(b.l(x));
      auto const d = ob.h_orbits.class_of(b.r(x));
      if (ob.forward[c] != kUndefined && ob.forward[c] != d) {
        throw IllDefined("orbit map depends on the chosen point over an orbit");
      }
      if (ob.backward[d] != kUndefined && ob.backward[d] != c) {
        throw IllDefined("inverse orbit map depends on the chosen point");
      }
      ob.forward[c]  = d;
      ob.backward[d] = c;
    }
    return ob;
  }

  bool fibrating_invariance_check(Bibundle const& b) {
    if (!is_biprincipal(b)) {
      throw NotBiprincipal("fibrating invariance requires a biprincipal bibundle");
    }
    return is_fibrating(b.left_groupoid()) == is_fibrating(b.right_groupoid());
  }

  Action transport_action(Bibundle const& b, Action const& a) {
    return induced_left_action(b, a);
  }

  std::vector<Point> transport_map(Bibundle const&           b,
                                   Action const&             y,
                                   Action const&             z,
                                   std::vector<Point> const& f) {
    return whisker_left(compose_bibundles(b, left_action_as_bibundle(y)),
                        compose_bibundles(b, left_action_as_bibundle(z)),
                        f);
  }

  RoundTrip roundtrip_natural_iso(Bibundle const& b, Action const& a) {
    if (!is_biprincipal(b)) {
      throw NotBiprincipal("round trip requires a biprincipal bibundle");
    }
    auto const yb    = left_action_as_bibundle(a);
    auto const xbar  = opposite_bibundle(b);
    auto const assoc = associator(xbar, b, yb);
    auto const dh    = division_map(right_bundle(b));

    // phi_H : Xbar (x) X -> H
    std::vector<Point> phi;
    for (std::uint32_t c = 0; c < assoc.first_two.tensor.size(); ++c) {
      phi.push_back(value_on_class(assoc.first_two.tensor, c, "phi_H",
                                   [&](Point x1, Point x2) { return dh(x1, x2); }));
    }
    auto const unitor = left_unitor(yb);
    auto const middle = whisker_right(assoc.left_nested, unitor.composite, phi);

    RoundTrip rt{b, xbar, a, assoc.last_two, assoc.right_nested, {}};
    for (std::uint32_t c = 0; c < rt.outer.tensor.size(); ++c) {
      rt.mu.push_back(unitor.forward[middle[assoc.backward[c]]]);
    }
    return rt;
  }

  bool check_roundtrip(RoundTrip const& rt) {
    auto const& outer = rt.outer.bibundle;
    if (rt.mu.size() != rt.y.size() || !is_equivariant(rt.mu, outer.left(), rt.y)) {
      return false;
    }
    std::vector<bool> hit(rt.y.size(), false);
    for (Point v : rt.mu) {
      if (hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    auto const dh = division_map(right_bundle(rt.x));
    for (std::uint32_t c = 0; c < rt.outer.tensor.size(); ++c) {
      for (auto const& [x1, inner] : rt.outer.tensor.members(c)) {
        for (auto const& [x2, y] : rt.inner.tensor.members(inner)) {
          if (rt.y.act(dh(x1, x2), y) != rt.mu[c]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool check_naturality(RoundTrip const&          ry,
                        RoundTrip const&          rz,
                        std::vector<Point> const& phi) {
    auto const inner = whisker_left(ry.inner, rz.inner, phi);
    auto const outer = whisker_left(ry.outer, rz.outer, inner);
    for (std::uint32_t c = 0; c < ry.mu.size(); ++c) {
      if (phi.at(ry.mu[c]) != rz.mu.at(outer[c])) {
        return false;
      }
    }
    return true;
  }

  EquivalenceRelationReport
  morita_equivalence_relation_checks(std::vector<FiniteGroupoid> const& groupoids,
                                     std::vector<Bibundle> const&       biprincipal) {
    EquivalenceRelationReport report;
    for (std::size_t i = 0; i < groupoids.size(); ++i) {
      ++report.reflexive;
      if (!is_biprincipal(identity_bibundle(groupoids[i]))) {
        report.failures.push_back("identity bibundle of groupoid " + std::to_string(i));
      }
    }
    for (std::size_t i = 0; i < biprincipal.size(); ++i) {
      if (!is_biprincipal(biprincipal[i])) {
        report.failures.push_back("input bibundle " + std::to_string(i)
                                  + " is not biprincipal");
        continue;
      }
      ++report.symmetric;
      if (!is_biprincipal(opposite_bibundle(biprincipal[i]))) {
        report.failures.push_back("opposite of bibundle " + std::to_string(i));
      }
    }
    for (std::size_t i = 0; i < biprincipal.size(); ++i) {
      for (std::size_t j = 0; j < biprincipal.size(); ++j) {
        if (!(biprincipal[i].right_groupoid() == biprincipal[j].left_groupoid())) {
          continue;
        }
        ++report.transitive;
        if (!is_biprincipal(compose_bibundles(biprincipal[i], biprincipal[j]).bibundle)) {
          report.failures.push_back("composite of bibundles " + std::to_string(i)
                                    + " and " + std::to_string(j));
        }
      }
    }
    return report;
  }

}  // namespace morita
