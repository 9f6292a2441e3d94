#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catcw/colimits.hpp"
#include "catcw/finite_category.hpp"
#include "catcw/fpcat.hpp"
#include "catcw/rewriting.hpp"

namespace catcw {

/// S⁰ = 1 ⊔ 1, S¹ ≃ ℤ, and Sⁿ for n ≥ 2 by iterated one-sided homotopy
/// pushout of Sⁿ⁻¹ -> 1 along itself.
FpCategory sphere(unsigned n);

struct Attachment {
  unsigned dim;
  /// sphere(dim) -> base.
  Functor map;
};

/// One-sided homotopy pushout of the coproduct of attaching maps along
/// ⊔ Sⁿ -> ⊔ 1. Throws MixedDimensions unless all dims agree.
FpCategory attach_cells(FpCatPtr const& base,
                        std::vector<Attachment> const& cells);

struct OneComplexComponent {
  /// Free generators of the basepoint's automorphism group.
  std::vector<std::string> generators;
  /// Objects besides the basepoint "*".
  std::vector<std::string> extra_objects;
};

/// Per component, the basepoint "*" and the extra objects, with one loop at
/// the basepoint per generator and one isomorphism "*" -> t per extra
/// object t. Components are joined by coproduct when there are several.
FpCategory build_one_complex(std::vector<OneComplexComponent> const& components);

/// A word in generators and their formal inverses ("a", "a^-1").
using SignedWord = std::vector<std::string>;

struct GroupoidComponent {
  std::vector<std::string> extra_objects;
  std::vector<std::string> generators;
  std::vector<SignedWord> relations;

  bool operator==(GroupoidComponent const&) const = default;
};

struct GroupoidPresentation {
  std::vector<GroupoidComponent> components;

  bool operator==(GroupoidPresentation const&) const = default;
};

/// build_one_complex per component, then one 2-cell per relation word.
FpCategory build_two_complex(GroupoidPresentation const& g);

/// Presentation of a finite groupoid: per isomorphism class, the least
/// object as basepoint, every non-identity automorphism as a generator and
/// its multiplication table as relations. Throws InvalidTable if `c` is not
/// a groupoid.
GroupoidPresentation read_off_presentation(FiniteCategory const& c);

enum class CwKind { NotCW, Dim0, Dim1, Dim2 };

std::string to_string(CwKind k);

struct CwVerdict {
  CwKind kind = CwKind::NotCW;
  /// NotCW: a morphism (or generator) without an inverse.
  std::optional<std::string> non_invertible;
  /// Dim1: free generators of each component's basepoint automorphisms.
  std::vector<std::vector<std::string>> free_generators;
  /// Dim2: each generator or morphism with an inverse.
  std::vector<std::pair<std::string, std::string>> inverses;
  /// Whether freeness of automorphism groups was decided.
  Decision freeness = Decision::Unknown;
  std::string note;
};

CwVerdict cw_classify(FiniteCategory const& c);
/// Throws NotDecided when invertibility of some generator is not decided.
CwVerdict cw_classify(FpCategory const& c, RewritingSystem const& rs);

}  // namespace catcw
