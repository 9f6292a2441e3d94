#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "catcw/finite_category.hpp"
#include "catcw/finitize.hpp"
#include "catcw/fpcat.hpp"
#include "catcw/rewriting.hpp"

namespace catcw {

inline constexpr std::size_t kDefaultProductBound = 1'000'000;

/// A functor between presentations, given on objects and generators.
///
/// A missing generator image (nullopt) makes the functor invalid; this is
/// how an unrealisable image for a formal inverse is represented.
struct Functor {
  FpCatPtr source;
  FpCatPtr target;
  std::vector<ObjId> object_map;
  std::vector<std::optional<Arrow>> generator_map;

  [[nodiscard]] ObjId operator()(ObjId o) const { return object_map.at(o); }
  /// Image of a source arrow. Throws InvalidFunctor on a missing image.
  [[nodiscard]] Arrow apply(Arrow const& a) const;
};

/// Builds a functor from names. Generators left unspecified whose formal
/// inverse is specified get the formal inverse of that image, when it
/// exists. Throws UnknownName, or InvalidFunctor for unmapped objects or
/// unmapped non-mate generators.
Functor make_functor(
    FpCatPtr source, FpCatPtr target,
    std::vector<std::pair<std::string, std::string>> const& objects,
    std::vector<std::pair<std::string, Path>> const& generators);

Functor identity_functor(FpCatPtr cat);
/// `first` then `second`.
Functor compose(Functor const& first, Functor const& second);
/// Everything to the identity of `object`.
Functor constant_functor(FpCatPtr source, FpCatPtr target, ObjId object);

/// Reason the functor is invalid, or nullopt. Relations are compared in the
/// target through `target_rs`, which is sound but only complete when the
/// system is.
std::optional<std::string> functor_defect(Functor const& f,
                                          RewritingSystem const& target_rs);
bool check_functor(Functor const& f, RewritingSystem const& target_rs);
/// Completes the target with the default budget first.
bool check_functor(Functor const& f);

/// Same object map and generator images equal in the target through
/// `target_rs`. Sound for any system; complete for Complete ones.
bool provably_equal(Functor const& a, Functor const& b,
                    RewritingSystem const& target_rs);

/// Fills missing images of formal inverses from their partners.
void fill_formal_inverses(Functor& f);

/// A functor between finite categories, given on every morphism.
struct FiniteFunctor {
  FinCatPtr source;
  FinCatPtr target;
  std::vector<ObjId> object_map;
  std::vector<MorId> morphism_map;
};

std::optional<std::string> functor_defect(FiniteFunctor const& f);
bool check_functor(FiniteFunctor const& f);
FiniteFunctor identity_functor(FinCatPtr cat);
FiniteFunctor compose(FiniteFunctor const& first, FiniteFunctor const& second);
/// The unique functor to a one-object, one-morphism category.
FiniteFunctor to_terminal(FinCatPtr source, FinCatPtr terminal);

/// The finite functor induced by `f` on normal forms. Throws
/// InvalidFunctor if an image does not normalize into `target`.
FiniteFunctor finitize(Functor const& f, Finitization const& source,
                       Finitization const& target,
                       RewritingSystem const& target_rs);

/// A functor from a presentation into a finite category.
struct FiniteModel {
  std::vector<ObjId> object_map;
  std::vector<MorId> generator_images;
};

MorId evaluate(FpCategory const& src, FiniteCategory const& tgt,
               FiniteModel const& m, Arrow const& a);

/// Calls `visit` on every functor from `src` to `tgt` until it returns
/// false. Formal inverses are sent to inverses; relations are checked as
/// soon as all their generators are assigned.
void for_each_model(FpCategory const& src, FiniteCategory const& tgt,
                    std::function<bool(FiniteModel const&)> const& visit);

/// The presentation-level functor of a model whose target is the
/// finitization `target_fin` of `target`.
Functor to_functor(FiniteModel const& m, FpCatPtr source, FpCatPtr target,
                   Finitization const& target_fin);

/// A generating set of a finite category and, for every other morphism,
/// one factorisation through earlier ones. Identities are omitted.
struct Derivation {
  std::vector<MorId> generators;
  /// (morphism, left factor, right factor) in dependency order.
  std::vector<std::tuple<MorId, MorId, MorId>> composites;
};

Derivation derive_generators(FiniteCategory const& c);

/// Calls `visit` on every functor `src` -> `tgt` whose object map passes
/// `object_filter` until `visit` returns false. Throws SearchSpaceTooLarge
/// when the number of candidates exceeds `product_bound`.
void for_each_functor(
    FinCatPtr const& src, FinCatPtr const& tgt,
    std::function<bool(FiniteFunctor const&)> const& visit,
    std::size_t product_bound = kDefaultProductBound,
    std::function<bool(std::vector<ObjId> const&)> const& object_filter = {});

}  // namespace catcw
