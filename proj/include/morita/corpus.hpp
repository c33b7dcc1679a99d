#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "morita/action.hpp"
#include "morita/bibundle.hpp"
#include "morita/bundle.hpp"
#include "morita/groupoid.hpp"
#include "morita/io.hpp"

namespace morita {

  struct CorpusSpec {
    std::size_t   max_objects = 2;
    std::size_t   max_arrows  = 4;
    std::size_t   max_carrier = 2;
    std::uint64_t seed        = 0;
    // Keep only biprincipal bibundles, which allows larger carriers.
    bool biprincipal_only = false;

    bool operator==(CorpusSpec const&) const = default;
  };

  // "max_objects=3,max_arrows=6,max_carrier=2,seed=7,biprincipal_only=1";
  // omitted keys keep their defaults. Throws std::invalid_argument.
  CorpusSpec parse_corpus_spec(std::string const& text);
  std::string to_string(CorpusSpec const& spec);

  inline constexpr std::uint64_t kCorpusLimit = 10'000'000;

  struct CorpusAction {
    std::size_t groupoid;
    Action      action;
  };

  struct CorpusBundle {
    std::size_t groupoid;
    Bundle      bundle;
  };

  struct CorpusBibundle {
    std::size_t left;
    std::size_t right;
    Bibundle    bibundle;
  };

  // Raw objects validated alongside the corpus, for fault injection.
  struct InjectedGroupoid {
    std::string name;
    RawGroupoid raw;
  };

  struct InjectedAction {
    std::string name;
    std::size_t groupoid;
    RawAction   raw;
    Side        side;
  };

  struct Corpus {
    CorpusSpec                  spec;
    std::vector<FiniteGroupoid> groupoids;
    // left actions up to isomorphism, carriers up to max_carrier
    std::vector<CorpusAction> actions;
    // each action over its orbit space, from both sides
    std::vector<CorpusBundle> bundles;
    // bibundles up to isomorphism between every ordered pair of groupoids
    std::vector<CorpusBibundle>   bibundles;
    std::vector<InjectedGroupoid> injected_groupoids;
    std::vector<InjectedAction>   injected_actions;
  };

  // Number of moment sequences the generator visits.
  std::uint64_t corpus_estimate(CorpusSpec const& spec);

  // Deterministic. Throws BoundsTooLarge when the estimate exceeds
  // kCorpusLimit.
  Corpus generate_corpus(CorpusSpec const& spec);

  // Every corpus object in a fixed order, followed by the certificates of
  // the biprincipal bibundles.
  std::vector<Stored> corpus_objects(Corpus const& corpus);

  // n objects drawn without replacement, seeded by the spec.
  std::vector<Stored> sample_objects(Corpus const& corpus, std::size_t n);

}  // namespace morita
