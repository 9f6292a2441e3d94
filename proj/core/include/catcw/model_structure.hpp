#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catcw/finite_category.hpp"
#include "catcw/functor.hpp"
#include "catcw/rewriting.hpp"

namespace catcw {

/// hom(x, y) -> hom(Fx, Fy), listed in the order of `hom(x, y)`.
struct HomBijection {
  ObjId x;
  ObjId y;
  std::vector<MorId> image;
};

/// `iso`: F(source) -> target, with `inverse` its two-sided inverse.
struct EssentialPreimage {
  ObjId target;
  ObjId source;
  MorId iso;
  MorId inverse;
};

struct EquivalenceCertificate {
  std::vector<HomBijection> fully_faithful;
  std::vector<EssentialPreimage> essentially_surjective;
};

struct NotEquivalence {
  enum class Kind { NotFaithful, NotFull, NotEssentiallySurjective };
  Kind kind;
  /// The offending hom pair (x, y), or the missed target object in `x`.
  ObjId x = 0;
  ObjId y = 0;
  std::string reason;
};

using EquivalenceVerdict = std::variant<EquivalenceCertificate, NotEquivalence>;

bool is_cofibration(Functor const& f);
bool is_cofibration(FiniteFunctor const& f);

/// Isomorphisms as the first legs of pairs (f, g) with f·g and g·f
/// identities.
std::vector<MorId> isomorphisms_by_pairs(FiniteCategory const& c);
/// Isomorphisms by testing each morphism for an inverse.
std::vector<MorId> isomorphisms_by_scan(FiniteCategory const& c);

/// The wide subcategory of `morphisms`, which must contain the identities
/// and be closed under composition. Names are kept.
FiniteCategory wide_subcategory(FiniteCategory const& c,
                                std::vector<MorId> const& morphisms);

/// Wide subcategory of isomorphisms.
FiniteCategory iso_core(FiniteCategory const& c);

bool is_isofibration(FiniteFunctor const& f);

EquivalenceVerdict is_equivalence(FiniteFunctor const& f);
/// Replays every witness of `cert` against `f`.
bool verify_certificate(EquivalenceCertificate const& cert,
                        FiniteFunctor const& f);

bool is_groupoid(FiniteCategory const& c);
/// Yes when every generator has an inverse, found syntactically or among
/// normal forms of length <= `search_length`; No when a complete system
/// has finite hom-sets and some generator has no inverse.
Decision is_groupoid(FpCategory const& c, RewritingSystem const& rs,
                     std::size_t search_length = 8);

bool is_contractible(FiniteCategory const& c);
/// Throws NotDecided unless `rs` is complete.
bool is_contractible(FpCategory const& c, RewritingSystem const& rs);

/// First functor `c` -> `d` that is an equivalence. Throws
/// SearchSpaceTooLarge past `product_bound` candidates.
std::optional<FiniteFunctor> find_equivalence(
    FinCatPtr const& c, FinCatPtr const& d,
    std::size_t product_bound = kDefaultProductBound);

/// Connected components by isomorphism: `iso_class[x]` is the least object
/// isomorphic to x.
std::vector<ObjId> iso_classes(FiniteCategory const& c);

}  // namespace catcw
