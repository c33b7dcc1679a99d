#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace morita {

  // A partition of {0, ..., n - 1}. Classes are sorted internally and
  // ordered by their least element, so equal partitions compare equal.
  class OrbitPartition {
   public:
    OrbitPartition() = default;

    // Builds the finest partition in which every listed pair is merged.
    static OrbitPartition
    from_relation(std::size_t n,
                  std::vector<std::pair<std::uint32_t, std::uint32_t>> const&
                      related);

    // Builds from an arbitrary labelling; points with equal labels share a
    // class.
    static OrbitPartition from_labels(std::vector<std::uint32_t> const& labels);

    std::size_t size() const noexcept {
      return _classes.size();
    }

    std::size_t number_of_elements() const noexcept {
      return _class_of.size();
    }

    std::uint32_t class_of(std::uint32_t element) const {
      return _class_of.at(element);
    }

    std::vector<std::uint32_t> const& members(std::size_t c) const {
      return _classes.at(c);
    }

    std::vector<std::vector<std::uint32_t>> const& classes() const noexcept {
      return _classes;
    }

    bool operator==(OrbitPartition const&) const = default;

   private:
    std::vector<std::vector<std::uint32_t>> _classes;
    std::vector<std::uint32_t>              _class_of;
  };

}  // namespace morita
