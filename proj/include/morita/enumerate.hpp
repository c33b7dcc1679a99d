#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "morita/action.hpp"
#include "morita/bibundle.hpp"
#include "morita/groupoid.hpp"

namespace morita {

  using GroupTable = std::vector<std::vector<std::uint32_t>>;

  // Multiplication tables of the groups of order n up to isomorphism, with
  // the identity as element 0. Each table is the least relabelling of its
  // class, and the list is sorted.
  std::vector<GroupTable> groups_of_order(std::size_t n);

  // Every groupoid with at most the given numbers of objects and arrows, one
  // per isomorphism class, including the empty groupoid. A connected
  // groupoid with k objects and isotropy group K is pair_groupoid(k) x K, so
  // classes are multisets of such components. The order is deterministic.
  std::vector<FiniteGroupoid> groupoids_up_to_iso(std::size_t max_objects,
                                                  std::size_t max_arrows);

  // Calls f on every left action of g on the carrier with the given moments,
  // optionally restricted to actions preserving labels. Enumeration stops
  // once f returns false; the result says whether it ran to completion.
  bool for_each_left_action(FiniteGroupoid const&                    g,
                            std::vector<std::string> const&          carrier,
                            std::vector<Object> const&               moment,
                            std::vector<std::uint32_t> const*        labels,
                            std::function<bool(Action const&)> const& f);

  // Non-decreasing sequences of length k over {0..n-1}.
  std::vector<std::vector<std::uint32_t>> sorted_sequences(std::size_t n, std::size_t k);

  // Left actions of g on carriers of size at most max_carrier, one per
  // isomorphism class, ordered by carrier size then canonical form.
  std::vector<Action> left_actions_up_to_iso(FiniteGroupoid const& g,
                                             std::size_t           max_carrier);

  struct BibundleFilter {
    bool surjective_moments  = false;
    bool left_pre_principal  = false;
    bool right_pre_principal = false;
  };

  // Calls f on every bibundle between g and h on {0..k-1} whose moment pairs
  // (l(x), r(x)) are non-decreasing in x. Every bibundle is isomorphic to at
  // least one of these. Left actions are tried in enumeration order, then
  // right actions, so the order is fixed. examined counts the candidates that
  // reached the commutation test.
  bool for_each_bibundle(FiniteGroupoid const&                       g,
                         FiniteGroupoid const&                       h,
                         std::size_t                                 k,
                         BibundleFilter                              filter,
                         std::function<bool(Bibundle const&)> const& f,
                         std::size_t*                                examined = nullptr);

  // Least encoding of the tables over relabellings of the carrier that sort
  // it by moments. Equal exactly for isomorphic bibundles (actions).
  std::vector<std::uint32_t> canonical_form(Bibundle const& b);
  std::vector<std::uint32_t> canonical_form(Action const& a);

  // Bibundles between g and h with carriers up to max_carrier, one per
  // isomorphism class.
  std::vector<Bibundle> bibundles_up_to_iso(FiniteGroupoid const& g,
                                            FiniteGroupoid const& h,
                                            std::size_t           max_carrier,
                                            BibundleFilter        filter = {});

  // Number of moment-pair sequences the bibundle enumeration visits.
  std::uint64_t bibundle_search_estimate(FiniteGroupoid const& g,
                                         FiniteGroupoid const& h,
                                         std::size_t           max_carrier);

}  // namespace morita
