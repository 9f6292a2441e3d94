#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catcw/colimits.hpp"
#include "catcw/functor.hpp"
#include "catcw/model_structure.hpp"

namespace catcw {

/// Search length for preimages of generators in `find_inverse`.
inline constexpr std::size_t kDefaultInverseSearch = 4;

struct PointedCategory {
  FpCatPtr cat;
  std::string basepoint;

  [[nodiscard]] ObjId base() const { return cat->object(basepoint); }
};

/// Throws UnknownName if `basepoint` is not an object.
PointedCategory pointed(FpCatPtr cat, std::string basepoint);
/// Pointed at the first object. Throws EmptySet for the empty category.
PointedCategory pointed(FpCatPtr cat);

struct Cone {
  PointedCategory cone;
  /// X -> PX, the identity on objects.
  Functor unit;
};

/// PX is the chaotic category on the objects of X.
Cone make_cone(PointedCategory const& x);
PointedCategory cone(PointedCategory const& x);
Functor cone_unit(PointedCategory const& x);

/// P(f): the functor between chaotic categories induced by f's object map.
Functor cone_map(Functor const& f, FpCatPtr px, FpCatPtr py);

/// The chaotic arrow x -> y of a presentation built by `chaotic`.
Arrow chaotic_arrow(FpCategory const& p, ObjId x, ObjId y);

struct Suspension {
  PointedCategory sigma;
  Cone cone;
  /// pushout(cone unit, X -> 1); `sigma.cat` is its apex.
  PushoutResult pushout;
};

Suspension make_suspension(PointedCategory const& x);
PointedCategory suspend(PointedCategory const& x);

/// Two mutually inverse functors, checked up to the relations.
struct IsoCertificate {
  Functor forward;
  Functor backward;
};

/// An inverse of `f`: each target generator is sent to a source path of
/// length <= `search_length` whose image is provably that generator.
/// Equalities are decided by rewriting, so a returned inverse is genuine
/// even when completion stops early.
std::optional<Functor> find_inverse(
    Functor const& f, std::size_t budget = kDefaultRuleBudget,
    std::size_t search_length = kDefaultInverseSearch);

std::optional<IsoCertificate> find_isomorphism(
    Functor const& f, std::size_t budget = kDefaultRuleBudget,
    std::size_t search_length = kDefaultInverseSearch);

/// Reason the certificate does not replay, or nullopt.
std::optional<std::string> iso_defect(IsoCertificate const& cert,
                                      std::size_t budget = kDefaultRuleBudget);

/// A -i-> B -q-> C with i a cofibration and C ≅ B ⊔_A 1.
struct CofiberCertificate {
  Functor i;
  Functor q;
  /// pushout(i, A -> 1).
  PushoutResult cofiber;
  /// cofiber apex -> C induced by q, with its inverse.
  IsoCertificate comparison;
};

struct CofiberFailure {
  enum class Stage { NotComposable, NotCofibration, NotCollapsing, NotIsomorphic };
  Stage stage;
  std::string reason;
};

std::string to_string(CofiberFailure::Stage s);

using CofiberVerdict = std::variant<CofiberCertificate, CofiberFailure>;

CofiberVerdict is_cofiber_sequence(Functor const& i, Functor const& q,
                                   std::size_t budget = kDefaultRuleBudget);
std::optional<std::string> cofiber_defect(
    CofiberCertificate const& cert, std::size_t budget = kDefaultRuleBudget);

/// C -> 1 is an equivalence, witnessed on the finitization of C.
struct ContractibilityCertificate {
  FpCatPtr cat;
  EquivalenceCertificate to_point;
};

/// Throws NotDecided when C has no finitization within the hom bound.
std::optional<ContractibilityCertificate> certify_contractible(
    FpCatPtr const& cat, std::size_t budget = kDefaultRuleBudget);
std::optional<std::string> contractibility_defect(
    ContractibilityCertificate const& cert,
    std::size_t budget = kDefaultRuleBudget);

/// C ≅ 1, with C's finitization having a single morphism.
struct TerminalCertificate {
  FpCatPtr cat;
  IsoCertificate iso;
  /// One object and no generators.
  bool literal;
};

std::optional<TerminalCertificate> certify_terminal(
    FpCatPtr const& cat, std::size_t budget = kDefaultRuleBudget);
std::optional<std::string> terminal_defect(
    TerminalCertificate const& cert, std::size_t budget = kDefaultRuleBudget);

/// Σ²X together with its terminal certificate. Throws CertificateRejected
/// if Σ²X is not terminal.
TerminalCertificate verify_double_suspension(
    PointedCategory const& x, std::size_t budget = kDefaultRuleBudget);

/// The chain X -> PX -> ΣX, ΣX -> PΣX -> Σ²X with PX, PΣX contractible and
/// Σ²X ≅ 1, from which [X] = -[ΣX] = [Σ²X] = 0 in K₀.
struct K0Witness {
  PointedCategory x;
  PointedCategory px;
  PointedCategory sx;
  PointedCategory psx;
  PointedCategory ssx;
  CofiberCertificate first;
  CofiberCertificate second;
  ContractibilityCertificate contract_px;
  ContractibilityCertificate contract_psx;
  TerminalCertificate terminal;
  /// Closure conditions on the ambient subcategory, as checked.
  std::vector<std::string> scope;
};

/// Throws CertificateRejected if some stage fails to certify.
K0Witness k0_vanishing_witness(PointedCategory const& x,
                               std::size_t budget = kDefaultRuleBudget);
std::optional<std::string> k0_defect(K0Witness const& w,
                                     std::size_t budget = kDefaultRuleBudget);

}  // namespace catcw
