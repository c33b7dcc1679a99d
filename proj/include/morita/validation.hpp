#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace morita {

  // Every law a validator can report. Grouped by the structure that owns it.
  enum class Law {
    // shape of the raw tables
    incomplete_map,
    dangling_identifier,
    duplicate_identifier,
    duplicate_entry,
    size_limit,
    // groupoid axioms
    composition_domain,
    missing_composite,
    composite_endpoints,
    associativity,
    unit_endpoints,
    left_unit,
    right_unit,
    inverse_endpoints,
    inverse_law,
    inverse_involution,
    // group tables
    group_closure,
    group_identity,
    group_inverse,
    // actions (conditions (1), (2), (3) of a groupoid action)
    action_domain,
    action_missing,
    action_moment,
    action_unit,
    action_compatibility,
    // bundles
    projection_invariance,
    // division maps
    division_action,
    division_endpoints,
    division_inverse,
    division_unit,
    division_equivariance,
    division_right_invariance,
    division_opposite,
    // bibundles
    groupoid_mismatch,
    carrier_mismatch,
    left_moment_invariance,
    right_moment_invariance,
    commutation,
  };

  std::string_view to_string(Law law) noexcept;

  struct Violation {
    Law                      law;
    std::vector<std::string> witness;

    std::string describe() const;
  };

  class ValidationReport {
   public:
    bool ok() const noexcept {
      return _violations.empty();
    }

    bool contains(Law law) const noexcept;

    void add(Law law, std::vector<std::string> witness) {
      _violations.push_back({law, std::move(witness)});
    }

    void append(ValidationReport const& other);

    std::vector<Violation> const& violations() const noexcept {
      return _violations;
    }

    // One line per violation, or "ok".
    std::string summary() const;

   private:
    std::vector<Violation> _violations;
  };

}  // namespace morita
