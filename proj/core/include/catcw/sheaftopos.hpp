#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "catcw/finite_category.hpp"
#include "catcw/functor.hpp"

namespace catcw {

/// A set of points, bit i standing for point i.
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;

/// A finite topological space given by its opens.
class FiniteSpace {
 public:
  /// Throws InvalidSpace, DuplicateName or UnknownName.
  static FiniteSpace build(std::vector<std::string> points,
                           std::vector<std::vector<std::string>> const& opens);

  [[nodiscard]] std::vector<std::string> const& points() const noexcept {
    return points_;
  }
  [[nodiscard]] std::size_t num_points() const noexcept {
    return points_.size();
  }
  /// Ordered by size, then by bit pattern; the empty open comes first and
  /// the full one last.
  [[nodiscard]] std::vector<PointSet> const& opens() const noexcept {
    return opens_;
  }
  [[nodiscard]] PointSet full() const noexcept { return opens_.back(); }
  [[nodiscard]] bool is_open(PointSet u) const;
  /// Position in `opens()`. Throws NotAnOpen.
  [[nodiscard]] std::size_t index(PointSet u) const;
  /// Throws UnknownName.
  [[nodiscard]] PointSet set(std::vector<std::string> const& names) const;
  [[nodiscard]] std::vector<std::string> names(PointSet u) const;
  /// "{a,b}".
  [[nodiscard]] std::string render(PointSet u) const;

  /// The least open containing point p.
  [[nodiscard]] PointSet minimal_open(std::size_t p) const;
  /// Components of the subspace U, ordered by least point. Throws NotAnOpen.
  [[nodiscard]] std::vector<PointSet> connected_components(PointSet u) const;
  [[nodiscard]] bool is_connected() const;

  bool operator==(FiniteSpace const&) const = default;

 private:
  std::vector<std::string> points_;
  std::vector<PointSet> opens_;
};

namespace spaces {
FiniteSpace point(std::string name = "p");
FiniteSpace discrete(std::vector<std::string> points);
/// {u, v} with opens ∅, {u}, {u, v}.
FiniteSpace sierpinski();
}  // namespace spaces

/// A presheaf of finite categories, sections indexed like `space.opens()`.
struct CatPresheaf {
  FiniteSpace space;
  std::vector<FinCatPtr> sections;
  /// (open index of U, open index of V) for V ⊆ U.
  std::map<std::pair<std::size_t, std::size_t>, FiniteFunctor> restrictions;

  [[nodiscard]] FinCatPtr const& section(PointSet u) const;
  /// F(U) -> F(V). Throws NotAnOpen, or InvalidFunctor if V ⊄ U.
  [[nodiscard]] FiniteFunctor const& restriction(PointSet u, PointSet v) const;
};

/// Reason restrictions fail to be functors or to compose, or nullopt.
std::optional<std::string> presheaf_defect(CatPresheaf const& f);

/// Reason some cover of some open violates the sheaf condition on objects
/// or morphisms, or nullopt. Throws SearchSpaceTooLarge when an open has
/// too many subopens to enumerate covers.
std::optional<std::string> gluing_defect(CatPresheaf const& f);

struct CatSheaf {
  CatPresheaf presheaf;
  /// Gluing verdict: nullopt when every cover glues.
  std::optional<std::string> gluing_failure;
  /// The value A for sheafify_constant(A, X) outputs.
  FinCatPtr constant_value;

  [[nodiscard]] FiniteSpace const& space() const { return presheaf.space; }
};

using SheafPtr = std::shared_ptr<CatSheaf const>;

/// Checks presheaf laws (throws InvalidFunctor) and records the gluing
/// verdict.
CatSheaf make_sheaf(CatPresheaf f);

/// A on nonempty opens, 1 on the empty open.
CatPresheaf constantify(FinCatPtr const& a, FiniteSpace const& x);

/// U -> A^{components of U}, restricting along the refinement of
/// components.
CatSheaf sheafify_constant(FinCatPtr const& a, FiniteSpace const& x);

FinCatPtr global_sections(CatSheaf const& f);

/// Mutually inverse functors between finite categories.
struct FiniteIsoCertificate {
  FiniteFunctor forward;
  FiniteFunctor backward;
};

std::optional<std::string> iso_defect(FiniteIsoCertificate const& cert);

/// First isomorphism a -> b. Throws SearchSpaceTooLarge.
std::optional<FiniteIsoCertificate> find_isomorphism(
    FinCatPtr const& a, FinCatPtr const& b,
    std::size_t product_bound = kDefaultProductBound);

struct UnitFailure {
  std::string reason;
};

using UnitVerdict = std::variant<FiniteIsoCertificate, UnitFailure>;

/// The diagonal A -> Γ(sheafify_constant(A, X)), certified as an
/// isomorphism when it is one.
UnitVerdict unit_check(FinCatPtr const& a, FiniteSpace const& x);

/// Per-open functors, indexed like `space.opens()`.
struct SheafMap {
  SheafPtr source;
  SheafPtr target;
  std::vector<FiniteFunctor> components;
};

std::optional<std::string> naturality_defect(SheafMap const& m);

/// The componentwise power of g between constant sheafifications of its
/// source and target. Throws InvalidFunctor if they are not.
SheafMap sheafify_map(FiniteFunctor const& g, SheafPtr source, SheafPtr target);

/// Extends functors given on some opens to every open by gluing along the
/// given opens contained in it. Throws InvalidFunctor when a section has no
/// unique glued image.
SheafMap glue_map(SheafPtr source, SheafPtr target,
                  std::map<PointSet, FiniteFunctor> const& local);

/// A functor g: A -> B whose sheafification is `m`, found by exhaustive
/// search. Throws InvalidFunctor unless both ends are constant
/// sheafifications.
std::optional<FiniteFunctor> constant_preimage(
    SheafMap const& m, std::size_t product_bound = kDefaultProductBound);
bool is_in_constant_image(SheafMap const& m,
                          std::size_t product_bound = kDefaultProductBound);

enum class ExoticVariant { Exotic, IdentityControl, ConstantControl };

struct ExoticDemo {
  SheafMap xi;
  bool in_constant_image;
};

/// Over the discrete space {u, v}, the endomorphism of sheafify_constant(S⁰)
/// given by the identity on {u} and the constant at the first point on {v}.
/// The controls use the identity, or the same constant, on both.
ExoticDemo exotic_map_demo(ExoticVariant variant = ExoticVariant::Exotic);

struct CwSheafVerdict {
  bool cw = false;
  /// An open where F is not isomorphic to the constant sheafification.
  std::optional<PointSet> failing_open;
  /// A non-invertible global morphism.
  std::optional<std::string> non_invertible;
  std::string note;
};

/// CW when Γ(F) is a groupoid G and F(U) ≅ sheafify_constant(G)(U) on every
/// open. Throws NotConnected unless the space is connected.
CwSheafVerdict classify_cw_sheaf(CatSheaf const& f,
                                 std::size_t product_bound = kDefaultProductBound);

}  // namespace catcw
