#pragma once

#include <map>
#include <variant>

#include "catcw/finite_category.hpp"
#include "catcw/rewriting.hpp"

namespace catcw {

inline constexpr std::size_t kDefaultHomBound = 64;

/// A presentation's normal forms laid out as a finite category. Object ids
/// agree with the presentation's; morphism ids index `normal_forms`.
struct Finitization {
  FinCatPtr category;
  std::vector<Arrow> normal_forms;

  /// Id of an already-normalized arrow.
  [[nodiscard]] std::optional<MorId> locate(Arrow const& normal) const;

  std::map<Arrow, MorId> index;
};

/// Witness that some hom-set has more than `bound` normal forms.
struct NotFinite {
  ObjId src;
  ObjId dst;
  std::size_t bound;
  /// The first bound + 1 normal forms found in hom(src, dst).
  std::vector<Arrow> sample;
};

using FinitizeResult = std::variant<Finitization, NotFinite>;

/// Enumerates normal forms breadth-first by length. Morphisms are ordered
/// by source object, then shortlex. Requires a Complete system (throws
/// IncompleteSystem otherwise).
FinitizeResult to_finite(FpCategory const& cat, RewritingSystem const& rs,
                         std::size_t bound = kDefaultHomBound);

/// Completes with the default budget first.
FinitizeResult to_finite(FpCategory const& cat,
                         std::size_t bound = kDefaultHomBound);

}  // namespace catcw
