#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "morita/bibundle.hpp"
#include "morita/bundle.hpp"
#include "morita/partition.hpp"
#include "morita/tensor.hpp"

namespace morita {

  bool is_biprincipal(Bibundle const& b);

  // The left action map Phi of B1 (x)_H B2 and its inverse
  //   Psi(x1 (x) y1, x2 (x) y2) = (d_G(x1 . d_H(y1, y2), x2), x2 (x) y2)
  // built from the division maps of the two factors. Psi is checked on every
  // pair of representatives.
  struct TensorActionInverse {
    Composite composite;
    ActionMap phi;
    // psi[i] is the index in phi.domain of the preimage of phi.codomain[i].
    std::vector<std::size_t> psi;

    // Psi o Phi = id
    bool is_left_inverse() const;
    // Phi o Psi = id
    bool is_right_inverse() const;
  };

  // Throws NotPrePrincipal unless both factors are left pre-principal, and
  // GroupoidMismatch unless they compose.
  TensorActionInverse tensor_action_inverse(Bibundle const& b1, Bibundle const& b2);

  // A claimed weak inverse C of B, with isomorphisms B (x) C -> id(G) and
  // C (x) B -> id(H). The bibundles are kept raw so that a tampered
  // certificate can be detected.
  struct MoritaCertificate {
    FiniteGroupoid     g;
    FiniteGroupoid     h;
    RawBibundle        b;      // between G and H
    RawBibundle        c;      // between H and G
    std::vector<Point> iso_g;  // classes of B (x) C -> arrows of G
    std::vector<Point> iso_h;  // classes of C (x) B -> arrows of H

    bool operator==(MoritaCertificate const&) const = default;
  };

  // C = opposite(B), iso_g(x1 (x) x2) = left division d_G(x1, x2) and
  // iso_h(x1 (x) x2) = the h with x1 . h = x2. Throws NotBiprincipal.
  MoritaCertificate weak_inverse_witness(Bibundle const& b);

  struct CertificateCheck {
    bool             ok = false;
    ValidationReport report;  // bibundle violations, if any
    std::string      reason;  // first failure, empty when ok
  };

  CertificateCheck check_certificate(MoritaCertificate const& cert);

  inline bool verify_certificate(MoritaCertificate const& cert) {
    return check_certificate(cert).ok;
  }

  struct MoritaSearch {
    std::optional<MoritaCertificate> certificate;
    std::optional<Bibundle>          bibundle;
    // Full (moments, left, right) candidates that reached the commutation
    // test.
    std::size_t candidates_examined = 0;
    // Every carrier up to the budget was searched.
    bool exhausted = false;
  };

  // Searches carriers {0..k-1} for k = 0..budget in a fixed order and returns
  // a certificate for the first biprincipal bibundle found.
  MoritaSearch decide_morita(FiniteGroupoid const& g,
                             FiniteGroupoid const& h,
                             std::size_t           carrier_budget);

  struct OrbitBijection {
    OrbitPartition             g_orbits;
    OrbitPartition             h_orbits;
    std::vector<std::uint32_t> forward;
    std::vector<std::uint32_t> backward;

    bool is_mutual_inverse() const;
  };

  // Orb(a) |-> Orb(r(x)) for any x with l(x) = a, checked over every such x.
  // Throws NotBiprincipal, and IllDefined if the choice of x matters.
  OrbitBijection orbit_bijection(Bibundle const& b);

  // is_fibrating(G) == is_fibrating(H). Throws NotBiprincipal.
  bool fibrating_invariance_check(Bibundle const& b);

  // The G-action induced on X (x)_H Y.
  Action transport_action(Bibundle const& b, Action const& a);

  // id (x) f : X (x) Y -> X (x) Z for an H-equivariant f : Y -> Z.
  std::vector<Point> transport_map(Bibundle const&           b,
                                   Action const&             y,
                                   Action const&             z,
                                   std::vector<Point> const& f);

  // mu_Y = M_Y o (phi_H (x) id) o A_Y : Xbar (x)_G (X (x)_H Y) -> Y.
  struct RoundTrip {
    Bibundle           x;
    Bibundle           xbar;
    Action             y;
    Composite          inner;  // X (x) Y
    Composite          outer;  // Xbar (x) (X (x) Y)
    std::vector<Point> mu;
  };

  // Throws NotBiprincipal.
  RoundTrip roundtrip_natural_iso(Bibundle const& b, Action const& a);

  // mu is an H-equivariant bijection onto Y, and agrees elementwise with
  // x1 (x) (x2 (x) y) |-> d_H(x1, x2) . y.
  bool check_roundtrip(RoundTrip const& rt);

  // phi o mu_Y = mu_Z o (id (x) (id (x) phi)).
  bool check_naturality(RoundTrip const&          ry,
                        RoundTrip const&          rz,
                        std::vector<Point> const& phi);

  struct EquivalenceRelationReport {
    std::size_t              reflexive   = 0;
    std::size_t              symmetric   = 0;
    std::size_t              transitive  = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  // Identity bibundles of every groupoid, opposites of every bibundle, and
  // composites of every composable pair are biprincipal.
  EquivalenceRelationReport
  morita_equivalence_relation_checks(std::vector<FiniteGroupoid> const& groupoids,
                                     std::vector<Bibundle> const&       biprincipal);

}  // namespace morita
