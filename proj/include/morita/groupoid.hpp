#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "morita/partition.hpp"
#include "morita/types.hpp"
#include "morita/validation.hpp"

namespace morita {

  // Unvalidated groupoid tables, as read from a file or produced by a
  // mutation. Indices may dangle and maps may be partial; validate_groupoid
  // reports every problem.
  struct RawGroupoid {
    std::vector<std::string> object_names;
    std::vector<std::string> arrow_names;
    std::vector<Object>      source;   // per arrow
    std::vector<Object>      target;   // per arrow
    std::vector<Arrow>       unit;     // per object
    std::vector<Arrow>       inverse;  // per arrow
    // Entries (g, h, g o h). Defined exactly when source(g) == target(h).
    std::vector<std::array<Arrow, 3>> composition;

    bool operator==(RawGroupoid const&) const = default;
  };

  struct GroupoidLimits {
    std::size_t max_composable_pairs = 1'000'000;
  };

  ValidationReport validate_groupoid(RawGroupoid const& raw,
                                     GroupoidLimits     limits = {});

  // An immutable, validated finite groupoid. Copies share the underlying
  // tables, so passing by value is cheap and thread safe.
  class FiniteGroupoid {
   public:
    // The empty groupoid.
    FiniteGroupoid();

    // Throws ValidationError if the tables violate any groupoid law.
    static FiniteGroupoid make(RawGroupoid raw, GroupoidLimits limits = {});

    std::size_t number_of_objects() const noexcept;
    std::size_t number_of_arrows() const noexcept;

    Object source(Arrow g) const;
    Object target(Arrow g) const;
    Arrow  unit(Object x) const;
    Arrow  inverse(Arrow g) const;

    // g o h; throws DomainMismatch unless source(g) == target(h).
    Arrow compose(Arrow g, Arrow h) const;

    bool composable(Arrow g, Arrow h) const {
      return source(g) == target(h);
    }

    // Arrows with the given source (resp. target), in increasing order.
    std::span<Arrow const> arrows_from(Object x) const;
    std::span<Arrow const> arrows_into(Object x) const;

    // Position of g in arrows_from(source(g)) (resp. arrows_into(target(g))).
    std::uint32_t position_from(Arrow g) const;
    std::uint32_t position_into(Arrow g) const;

    std::string const& object_name(Object x) const;
    std::string const& arrow_name(Arrow g) const;
    std::optional<Object> find_object(std::string const& name) const;
    std::optional<Arrow>  find_arrow(std::string const& name) const;

    std::size_t number_of_composable_pairs() const noexcept;

    RawGroupoid const& raw() const noexcept;

    bool operator==(FiniteGroupoid const& other) const;

   private:
    struct Data;
    explicit FiniteGroupoid(std::shared_ptr<Data const> data);
    std::shared_ptr<Data const> _data;
  };

  // All n * n ordered pairs (i, j), read as arrows j -> i.
  FiniteGroupoid pair_groupoid(std::size_t n);

  // Only identity arrows; identical to the relation groupoid of equality.
  FiniteGroupoid unit_groupoid(std::size_t n);

  // Arrows are the related pairs (z, y), read as y -> z, composed by
  // (z, y) o (y, x) = (z, x). Throws NotAnEquivalence with a witness.
  FiniteGroupoid
  relation_groupoid(std::vector<std::string> const&                  carrier,
                    std::vector<std::pair<std::size_t, std::size_t>> relation);

  // One object; arrows are group elements. The table is indexed by element
  // and need not put the identity first. Throws NotAGroup with a witness.
  FiniteGroupoid
  group_as_groupoid(std::vector<std::vector<std::uint32_t>> const& table,
                    std::vector<std::string>                       names = {});

  // Cyclic group Z/n as a one-object groupoid.
  FiniteGroupoid cyclic_group(std::size_t n);

  // Disjoint union; names are prefixed by the component index when there is
  // more than one component.
  FiniteGroupoid disjoint_union(std::vector<FiniteGroupoid> const& parts);

  // Componentwise product.
  FiniteGroupoid product(FiniteGroupoid const& a, FiniteGroupoid const& b);

  // {g : source(g) = target(g) = x}. Throws UnknownObject.
  std::vector<Arrow> isotropy_group(FiniteGroupoid const& g, Object x);

  // Same objects, arrows restricted to the union of isotropy groups.
  FiniteGroupoid isotropy_groupoid(FiniteGroupoid const& g);

  // Connected components of the objects.
  OrbitPartition orbit_space(FiniteGroupoid const& g);

  // Whether g |-> (target(g), source(g)) hits every pair of objects.
  bool is_fibrating(FiniteGroupoid const& g);

}  // namespace morita
