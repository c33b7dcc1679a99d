#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "morita/corpus.hpp"
#include "morita/validation.hpp"

namespace morita {

  struct SuiteFailure {
    std::string instance;  // e.g. "bibundle 12 (groupoids 1, 4)"
    std::string law;       // a validation law or the name of a check
    std::string detail;
  };

  struct SuiteReport {
    std::string               suite;
    std::size_t               instances = 0;
    std::vector<SuiteFailure> failures;
    // Named tallies, such as certificates found by the converse search.
    std::map<std::string, std::size_t> counts;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  std::vector<std::string> const& suite_names();

  // Throws UnknownSuite.
  SuiteReport run_suite(Corpus const& corpus, std::string const& name);

  nlohmann::json to_json(SuiteReport const& report);
  std::string    to_text(SuiteReport const& report);

  // A table broken in exactly one place, with the law it breaks.
  struct AxiomMutation {
    std::string                       name;
    Law                               law;
    std::function<ValidationReport()> check;
  };

  // One mutation per groupoid, action, bundle and bibundle axiom.
  std::vector<AxiomMutation> axiom_mutations();

}  // namespace morita
