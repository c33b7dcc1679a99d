#include "morita/partition.hpp"

#include <map>

#include <boost/pending/disjoint_sets.hpp>

#include "morita/types.hpp"

namespace morita {

  OrbitPartition OrbitPartition::from_relation(
      std::size_t                                                  n,
      std::vector<std::pair<std::uint32_t, std::uint32_t>> const& related) {
    boost::disjoint_sets_with_storage<> sets(n);
    for (std::size_t i = 0; i < n; ++i) {
      sets.make_set(i);
    }
    for (auto const& [a, b] : related) {
      sets.union_set(a, b);
    }
    std::vector<std::uint32_t> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
      roots[i] = static_cast<std::uint32_t>(sets.find_set(i));
    }
    return from_labels(roots);
  }

  OrbitPartition
  OrbitPartition::from_labels(std::vector<std::uint32_t> const& labels) {
    OrbitPartition result;
    result._class_of.assign(labels.size(), kUndefined);
    std::map<std::uint32_t, std::uint32_t> seen;
    // Scanning in increasing order numbers classes by their least element.
    for (std::uint32_t i = 0; i < labels.size(); ++i) {
      auto [it, inserted] = seen.try_emplace(
          labels[i], static_cast<std::uint32_t>(result._classes.size()));
      if (inserted) {
        result._classes.emplace_back();
      }
      result._classes[it->second].push_back(i);
      result._class_of[i] = it->second;
    }
    return result;
  }

}  // namespace morita
