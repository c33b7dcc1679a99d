#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "morita/validation.hpp"

namespace morita::detail {

  // Collects violations, keeping at most a fixed number of witnesses per law
  // so a badly corrupted table still yields a readable report.
  class ReportBuilder {
   public:
    static constexpr std::size_t kMaxWitnessesPerLaw = 32;

    void add(Law law, std::vector<std::string> witness) {
      if (++_counts[law] <= kMaxWitnessesPerLaw) {
        _report.add(law, std::move(witness));
      }
    }

    bool ok() const noexcept {
      return _report.ok();
    }

    ValidationReport take() {
      return std::move(_report);
    }

   private:
    ValidationReport           _report;
    std::map<Law, std::size_t> _counts;
  };

  inline std::string index_name(std::vector<std::string> const& names,
                                std::size_t                     i) {
    return i < names.size() ? names[i] : "#" + std::to_string(i);
  }

}  // namespace morita::detail
