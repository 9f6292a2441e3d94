#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catcw/error.hpp"

namespace catcw {

using ObjId = std::uint32_t;
using GenId = std::uint32_t;
using Word = std::vector<GenId>;

/// Suffix appended to a generator name to name its formal inverse.
inline constexpr std::string_view kInverseSuffix = "^-1";

/// A generator as written in an input presentation.
struct GeneratorSpec {
  std::string name;
  std::string src;
  std::string dst;
};

/// A composite of generators, by name, in diagrammatic order. An empty
/// `gens` denotes the identity at `at`. When `gens` is nonempty `at` may be
/// left empty and is then inferred from the first generator.
struct Path {
  std::string at;
  std::vector<std::string> gens;

  bool operator==(Path const&) const = default;
};

struct RelationSpec {
  Path lhs;
  Path rhs;
};

/// A path with ids resolved against a particular presentation.
struct Arrow {
  ObjId src = 0;
  Word word;

  auto operator<=>(Arrow const&) const = default;
};

struct Relation {
  Arrow lhs;
  Arrow rhs;
};

struct GeneratorInfo {
  std::string name;
  ObjId src;
  ObjId dst;
  /// The formal two-sided inverse, when this generator was declared
  /// invertible or is itself such an inverse.
  std::optional<GenId> inverse;
  /// True for inverses synthesised by `FpCategory::build`.
  bool is_mate = false;
};

/// A category presented by a finite quiver and path relations.
///
/// Generators declared invertible get a mate named `<name>^-1`, placed
/// directly after them in generator order, together with the two unit
/// relations. Generator order is the order used by shortlex comparisons.
/// Instances are immutable once built.
class FpCategory {
 public:
  /// The empty category.
  FpCategory() = default;

  static FpCategory build(std::vector<std::string> objects,
                          std::vector<GeneratorSpec> const& generators,
                          std::vector<RelationSpec> const& relations,
                          std::vector<std::string> const& invertible);

  [[nodiscard]] std::size_t num_objects() const noexcept {
    return objects_.size();
  }
  [[nodiscard]] std::size_t num_generators() const noexcept {
    return generators_.size();
  }
  [[nodiscard]] std::vector<std::string> const& objects() const noexcept {
    return objects_;
  }
  [[nodiscard]] std::string const& object_name(ObjId o) const {
    return objects_.at(o);
  }
  [[nodiscard]] std::vector<GeneratorInfo> const& generators() const noexcept {
    return generators_;
  }
  [[nodiscard]] GeneratorInfo const& generator(GenId g) const {
    return generators_.at(g);
  }
  /// Relations as declared, excluding the unit relations of mates.
  [[nodiscard]] std::vector<Relation> const& relations() const noexcept {
    return relations_;
  }
  /// g·g⁻¹ = id and g⁻¹·g = id for every declared-invertible generator g.
  [[nodiscard]] std::vector<Relation> unit_relations() const;
  [[nodiscard]] std::vector<Relation> all_relations() const;

  [[nodiscard]] std::optional<ObjId> find_object(std::string_view name) const;
  [[nodiscard]] std::optional<GenId> find_generator(
      std::string_view name) const;
  /// Throws UnknownName.
  [[nodiscard]] ObjId object(std::string_view name) const;
  [[nodiscard]] GenId generator_id(std::string_view name) const;

  /// Names of generators declared invertible (mates excluded).
  [[nodiscard]] std::vector<std::string> declared_invertible() const;
  /// Generators as declared (mates excluded).
  [[nodiscard]] std::vector<GeneratorSpec> declared_generators() const;
  [[nodiscard]] std::vector<RelationSpec> declared_relations() const;

  [[nodiscard]] Arrow identity(ObjId o) const { return Arrow{o, {}}; }
  [[nodiscard]] Arrow arrow_of(GenId g) const {
    return Arrow{generators_.at(g).src, {g}};
  }
  [[nodiscard]] ObjId target(Arrow const& a) const;
  [[nodiscard]] bool is_valid(Arrow const& a) const;
  /// Concatenation in diagrammatic order. Throws BadPath if not composable.
  [[nodiscard]] Arrow compose(Arrow const& first, Arrow const& second) const;
  /// Reversed word of mates, when every generator in it has one.
  [[nodiscard]] std::optional<Arrow> formal_inverse(Arrow const& a) const;

  /// Throws UnknownName or BadPath.
  [[nodiscard]] Arrow arrow(Path const& p) const;
  [[nodiscard]] Path path(Arrow const& a) const;
  /// "id(x)" for identities, otherwise generator names joined by ';'.
  [[nodiscard]] std::string render(Arrow const& a) const;

  bool operator==(FpCategory const& other) const;

 private:
  std::vector<std::string> objects_;
  std::vector<GeneratorInfo> generators_;
  std::vector<Relation> relations_;
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, GenId> generator_index_;
};

using FpCatPtr = std::shared_ptr<FpCategory const>;

inline FpCatPtr share(FpCategory c) {
  return std::make_shared<FpCategory const>(std::move(c));
}

/// Common small presentations.
namespace presentations {
FpCategory empty();
FpCategory terminal(std::string object = "*");
FpCategory discrete(std::vector<std::string> objects);
/// x --f--> y
FpCategory arrow(std::string x = "x", std::string y = "y",
                 std::string f = "f");
/// One object with a single invertible generator: the integers.
FpCategory integers(std::string object = "*", std::string gen = "a");
/// One object, one invertible generator a, relation aⁿ = id.
FpCategory cyclic(unsigned n, std::string object = "*",
                  std::string gen = "a");
/// One object, invertible generators, no further relations.
FpCategory free_group(std::vector<std::string> gens,
                      std::string object = "*");
}  // namespace presentations

}  // namespace catcw
