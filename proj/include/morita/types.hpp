#pragma once

#include <cstdint>
#include <limits>

namespace morita {

  // Elements of every finite structure are dense indices into the owning
  // structure's tables. Names live alongside and are only used for I/O and
  // witness reporting.
  using Object = std::uint32_t;
  using Arrow  = std::uint32_t;
  using Point  = std::uint32_t;

  inline constexpr std::uint32_t kUndefined
      = std::numeric_limits<std::uint32_t>::max();

  enum class Side { left, right };

  constexpr Side opposite(Side s) noexcept {
    return s == Side::left ? Side::right : Side::left;
  }

}  // namespace morita
