#include "morita/corpus.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "morita/enumerate.hpp"
#include "morita/errors.hpp"
#include "morita/morita.hpp"

namespace morita {

  CorpusSpec parse_corpus_spec(std::string const& text) {
    CorpusSpec         spec;
    std::istringstream in(text);
    std::string        item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) {
        continue;
      }
      auto const eq = item.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("corpus spec item without '=': " + item);
      }
      auto const key   = item.substr(0, eq);
      auto const value = item.substr(eq + 1);
      std::size_t used = 0;
      unsigned long long v;
      try {
        v = std::stoull(value, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != value.size() || value.empty() || value[0] == '-') {
        throw std::invalid_argument("corpus spec value is not a nonnegative integer: " + item);
      }
      if (key == "max_objects") {
        spec.max_objects = v;
      } else if (key == "max_arrows") {
        spec.max_arrows = v;
      } else if (key == "max_carrier") {
        spec.max_carrier = v;
      } else if (key == "seed") {
        spec.seed = v;
      } else if (key == "biprincipal_only") {
        spec.biprincipal_only = v != 0;
      } else {
        throw std::invalid_argument("unknown corpus spec key: " + key);
      }
    }
    return spec;
  }

  std::string to_string(CorpusSpec const& spec) {
    return "max_objects=" + std::to_string(spec.max_objects)
           + ",max_arrows=" + std::to_string(spec.max_arrows)
           + ",max_carrier=" + std::to_string(spec.max_carrier)
           + ",seed=" + std::to_string(spec.seed)
           + ",biprincipal_only=" + (spec.biprincipal_only ? "1" : "0");
  }

  namespace {

    std::uint64_t sequences_up_to(std::uint64_t n, std::uint64_t max_length) {
      // sum over k of C(n + k - 1, k)
      std::uint64_t total = 0;
      std::uint64_t term  = 1;
      for (std::uint64_t k = 0; k <= max_length; ++k) {
        if (k > 0) {
          if (n == 0) {
            break;
          }
          term = term * (n + k - 1) / k;
        }
        total += term;
        if (total > kCorpusLimit * 16) {
          return total;
        }
      }
      return total;
    }

    std::uint64_t estimate_for(std::vector<FiniteGroupoid> const& gs, CorpusSpec const& spec) {
      std::uint64_t total = 0;
      for (auto const& g : gs) {
        total += sequences_up_to(g.number_of_objects(), spec.max_carrier);
      }
      for (auto const& g : gs) {
        for (auto const& h : gs) {
          total += sequences_up_to(
              std::uint64_t(g.number_of_objects()) * h.number_of_objects(), spec.max_carrier);
          if (total > kCorpusLimit) {
            return total;
          }
        }
      }
      return total;
    }

    Bundle orbit_bundle(Action const& a) {
      auto const               orbits = action_orbit_space(a);
      std::vector<std::string> base;
      for (std::size_t c = 0; c < orbits.size(); ++c) {
        base.push_back("o" + std::to_string(c));
      }
      std::vector<std::uint32_t> projection;
      for (Point x = 0; x < a.size(); ++x) {
        projection.push_back(orbits.class_of(x));
      }
      return Bundle::make(a, std::move(base), std::move(projection));
    }

  }  // namespace

  std::uint64_t corpus_estimate(CorpusSpec const& spec) {
    return estimate_for(groupoids_up_to_iso(spec.max_objects, spec.max_arrows), spec);
  }

  Corpus generate_corpus(CorpusSpec const& spec) {
    Corpus corpus;
    corpus.spec      = spec;
    corpus.groupoids = groupoids_up_to_iso(spec.max_objects, spec.max_arrows);
    auto const estimate = estimate_for(corpus.groupoids, spec);
    if (estimate > kCorpusLimit) {
      throw BoundsTooLarge(estimate, kCorpusLimit);
    }
    auto const& gs = corpus.groupoids;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (auto& a : left_actions_up_to_iso(gs[i], spec.max_carrier)) {
        corpus.actions.push_back({i, std::move(a)});
      }
    }
    for (auto const& [i, a] : corpus.actions) {
      auto b = orbit_bundle(a);
      corpus.bundles.push_back({i, flip_side(b)});
      corpus.bundles.push_back({i, std::move(b)});
    }
    BibundleFilter filter;
    if (spec.biprincipal_only) {
      filter = {true, true, true};
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (std::size_t j = 0; j < gs.size(); ++j) {
        for (auto& b : bibundles_up_to_iso(gs[i], gs[j], spec.max_carrier, filter)) {
          if (!spec.biprincipal_only || is_biprincipal(b)) {
            corpus.bibundles.push_back({i, j, std::move(b)});
          }
        }
      }
    }
    return corpus;
  }

  std::vector<Stored> corpus_objects(Corpus const& corpus) {
    std::vector<Stored> out;
    for (auto const& g : corpus.groupoids) {
      out.emplace_back(g);
    }
    for (auto const& a : corpus.actions) {
      out.emplace_back(a.action);
      out.emplace_back(to_right(a.action));
    }
    for (auto const& b : corpus.bundles) {
      out.emplace_back(b.bundle);
    }
    for (auto const& b : corpus.bibundles) {
      out.emplace_back(b.bibundle);
    }
    for (auto const& b : corpus.bibundles) {
      if (is_biprincipal(b.bibundle)) {
        out.emplace_back(weak_inverse_witness(b.bibundle));
      }
    }
    return out;
  }

  std::vector<Stored> sample_objects(Corpus const& corpus, std::size_t n) {
    auto const          all = corpus_objects(corpus);
    std::vector<Stored> out;
    std::mt19937_64     rng(corpus.spec.seed);
    std::sample(all.begin(), all.end(), std::back_inserter(out), n, rng);
    return out;
  }

}  // namespace morita
