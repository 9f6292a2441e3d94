#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catcw/fpcat.hpp"
#include "catcw/functor.hpp"
#include "catcw/rewriting.hpp"

namespace catcw {

/// Disjoint union with its injections. Part i's names are prefixed "<i>.".
struct Coproduct {
  FpCatPtr apex;
  std::vector<Functor> injections;
};

Coproduct coproduct(std::vector<FpCatPtr> const& parts);

/// The functor out of a coproduct restricting to `legs[i]` on part i.
Functor copair(Coproduct const& cp, std::vector<Functor> const& legs,
               FpCatPtr target);

/// The coproduct of functors, between coproducts of their sources and
/// targets.
struct CoproductMap {
  Coproduct source;
  Coproduct target;
  Functor map;
};

CoproductMap coproduct_map(std::vector<Functor> const& maps);

/// Pushout of the span B <-f- A -g-> C. The apex has B's generators (as
/// "L.<name>") followed by C's (as "R.<name>"); each object class is named
/// after its first member, B's objects coming before C's.
struct PushoutResult {
  FpCatPtr apex;
  Functor inj_left;
  Functor inj_right;
  Functor f;
  Functor g;
};

PushoutResult pushout(Functor const& f, Functor const& g);

/// Reason the square fails to be a valid commuting square, or nullopt.
std::optional<std::string> pushout_defect(
    PushoutResult const& p, std::size_t budget = kDefaultRuleBudget);

/// The functor out of the apex induced by a cocone (u on B, v on C).
Functor mediator(PushoutResult const& p, Functor const& u, Functor const& v);

/// One invertible generator "x->y" per pair x before y, with composites
/// along increasing triples identified. Throws EmptySet.
FpCategory chaotic(std::vector<std::string> const& objects);

/// Pushout of f: X -> Z along a cofibration replacing g: X -> Y.
///
/// When g is already injective on objects it is used as is. When X and Y
/// are discrete, Y is replaced by the coproduct of chaotic categories on
/// the fibres of g. Otherwise Y is replaced by the mapping cylinder with an
/// isomorphism from each object of X to its image. `result.g` is the
/// replacing cofibration.
PushoutResult one_sided_homotopy_pushout(Functor const& f, Functor const& g);

/// The replacement of g used by `one_sided_homotopy_pushout`, together with
/// the collapse back onto Y.
struct Factorization {
  Functor cofibration;
  Functor collapse;
};

Factorization cofibrant_replacement(Functor const& g);

}  // namespace catcw
