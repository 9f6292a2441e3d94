#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catcw/fpcat.hpp"

namespace catcw {

using MorId = std::uint32_t;
inline constexpr MorId kNoMorphism = std::numeric_limits<MorId>::max();

struct Morphism {
  std::string name;
  ObjId src;
  ObjId dst;
};

/// A category given by explicit hom-sets and a composition table.
///
/// Composition is diagrammatic: `compose(f, g)` is "f then g" and requires
/// dst(f) == src(g). The table is dense, so this backend is meant for
/// categories with at most a few thousand morphisms.
class FiniteCategory {
 public:
  /// The empty category.
  FiniteCategory() = default;

  /// Throws InvalidTable when sizes or endpoints are inconsistent. The
  /// category laws are not checked here; see `check_laws`.
  FiniteCategory(std::vector<std::string> objects,
                 std::vector<Morphism> morphisms, std::vector<MorId> identities,
                 std::vector<MorId> compose_table);

  /// Fills the composition table from `compose_fn`, called only on
  /// composable pairs.
  static FiniteCategory make(
      std::vector<std::string> objects, std::vector<Morphism> morphisms,
      std::vector<MorId> identities,
      std::function<MorId(MorId, MorId)> const& compose_fn);

  [[nodiscard]] std::size_t num_objects() const noexcept {
    return objects_.size();
  }
  [[nodiscard]] std::size_t num_morphisms() const noexcept {
    return morphisms_.size();
  }
  [[nodiscard]] std::vector<std::string> const& objects() const noexcept {
    return objects_;
  }
  [[nodiscard]] std::vector<Morphism> const& morphisms() const noexcept {
    return morphisms_;
  }
  [[nodiscard]] Morphism const& morphism(MorId m) const {
    return morphisms_.at(m);
  }
  [[nodiscard]] ObjId src(MorId m) const { return morphisms_[m].src; }
  [[nodiscard]] ObjId dst(MorId m) const { return morphisms_[m].dst; }
  [[nodiscard]] MorId identity(ObjId o) const { return identities_.at(o); }
  [[nodiscard]] bool is_identity(MorId m) const {
    return identities_[morphisms_[m].src] == m;
  }
  /// kNoMorphism when not composable.
  [[nodiscard]] MorId compose(MorId first, MorId second) const {
    return table_[static_cast<std::size_t>(first) * morphisms_.size() +
                  second];
  }
  [[nodiscard]] std::vector<MorId> const& hom(ObjId x, ObjId y) const {
    return hom_[static_cast<std::size_t>(x) * objects_.size() + y];
  }
  [[nodiscard]] std::vector<MorId> const& compose_table() const noexcept {
    return table_;
  }
  [[nodiscard]] std::vector<MorId> const& identities() const noexcept {
    return identities_;
  }
  [[nodiscard]] std::optional<ObjId> find_object(std::string_view name) const;
  [[nodiscard]] std::optional<MorId> find_morphism(
      std::string_view name) const;

  /// Two-sided inverse, if any.
  [[nodiscard]] std::optional<MorId> inverse(MorId m) const;

  /// Exhaustive associativity and identity-law check. Returns a description
  /// of the first violation found.
  [[nodiscard]] std::optional<std::string> check_laws() const;

  bool operator==(FiniteCategory const& other) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identities_;
  std::vector<MorId> table_;
  std::vector<std::vector<MorId>> hom_;
};

using FinCatPtr = std::shared_ptr<FiniteCategory const>;

inline FinCatPtr share(FiniteCategory c) {
  return std::make_shared<FiniteCategory const>(std::move(c));
}

namespace finite {
FiniteCategory terminal(std::string object = "*");
FiniteCategory discrete(std::vector<std::string> objects);
/// x --f--> y
FiniteCategory arrow(std::string x = "x", std::string y = "y",
                     std::string f = "f");
/// Exactly one morphism in every hom-set. `objects` must be nonempty.
FiniteCategory chaotic(std::vector<std::string> objects);
/// One-object category of ℤ/n, morphisms named id, a, a^2, ...
FiniteCategory cyclic_group(unsigned n, std::string object = "*",
                            std::string gen = "a");
/// x -> y -> z with the composite.
FiniteCategory composable_pair();
/// Disjoint union; every name is prefixed "<index>.".
FiniteCategory coproduct(std::vector<FiniteCategory> const& parts);
/// The k-fold product A^k; objects and morphisms are tuples, with A^0 the
/// terminal category. A^1 keeps the names of A.
FiniteCategory power(FiniteCategory const& base, std::size_t k);
}  // namespace finite

/// Multiplication-table presentation: one generator per non-identity
/// morphism and one relation per composable pair of them.
FpCategory to_fp(FiniteCategory const& c);

}  // namespace catcw
