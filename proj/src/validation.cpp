#include "morita/validation.hpp"

#include <algorithm>

namespace morita {

  std::string_view to_string(Law law) noexcept {
    switch (law) {
      case Law::incomplete_map: return "incomplete-map";
      case Law::dangling_identifier: return "dangling-identifier";
      case Law::duplicate_identifier: return "duplicate-identifier";
      case Law::duplicate_entry: return "duplicate-entry";
      case Law::size_limit: return "size-limit";
      case Law::composition_domain: return "composition-domain";
      case Law::missing_composite: return "missing-composite";
      case Law::composite_endpoints: return "composite-endpoints";
      case Law::associativity: return "associativity";
      case Law::unit_endpoints: return "unit-endpoints";
      case Law::left_unit: return "left-unit";
      case Law::right_unit: return "right-unit";
      case Law::inverse_endpoints: return "inverse-endpoints";
      case Law::inverse_law: return "inverse-law";
      case Law::inverse_involution: return "inverse-involution";
      case Law::group_closure: return "group-closure";
      case Law::group_identity: return "group-identity";
      case Law::group_inverse: return "group-inverse";
      case Law::action_domain: return "action-domain";
      case Law::action_missing: return "action-missing";
      case Law::action_moment: return "action-moment";
      case Law::action_unit: return "action-unit";
      case Law::action_compatibility: return "action-compatibility";
      case Law::projection_invariance: return "projection-invariance";
      case Law::division_action: return "division-action";
      case Law::division_endpoints: return "division-endpoints";
      case Law::division_inverse: return "division-inverse";
      case Law::division_unit: return "division-unit";
      case Law::division_equivariance: return "division-equivariance";
      case Law::division_right_invariance: return "division-right-invariance";
      case Law::division_opposite: return "division-opposite";
      case Law::groupoid_mismatch: return "groupoid-mismatch";
      case Law::carrier_mismatch: return "carrier-mismatch";
      case Law::left_moment_invariance: return "left-moment-invariance";
      case Law::right_moment_invariance: return "right-moment-invariance";
      case Law::commutation: return "commutation";
    }
    return "unknown";
  }

  std::string Violation::describe() const {
    std::string out(to_string(law));
    out += " (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += witness[i];
    }
    out += ")";
    return out;
  }

  bool ValidationReport::contains(Law law) const noexcept {
    return std::any_of(_violations.cbegin(),
                       _violations.cend(),
                       [law](Violation const& v) { return v.law == law; });
  }

  void ValidationReport::append(ValidationReport const& other) {
    _violations.insert(
        _violations.end(), other._violations.cbegin(), other._violations.cend());
  }

  std::string ValidationReport::summary() const {
    if (ok()) {
      return "ok";
    }
    std::string out;
    for (auto const& v : _violations) {
      if (!out.empty()) {
        out += "; ";
      }
      out += v.describe();
    }
    return out;
  }

}  // namespace morita
