#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "catcw/colimits.hpp"
#include "catcw/cw.hpp"
#include "catcw/fpcat.hpp"
#include "catcw/functor.hpp"
#include "catcw/ktheory.hpp"
#include "catcw/model_structure.hpp"
#include "catcw/sheaftopos.hpp"

namespace catcw::io {

/// Keys keep insertion order, so dumps are deterministic.
using Json = nlohmann::ordered_json;

/// Throws ParseError naming `source` and the line and column.
Json parse(std::string const& text, std::string const& source = "<input>");
/// Throws ParseError when the file cannot be read or parsed.
Json read_file(std::filesystem::path const& path);
/// Two-space indent with a trailing newline.
std::string dump(Json const& j);

// Every `*_from_json` throws ParseError naming the offending field, or the
// library's own errors when a well-formed document describes invalid data.

Json to_json(Path const& p);
Path path_from_json(Json const& j, std::string const& where = "path");

Json to_json(FpCategory const& c);
FpCategory presentation_from_json(Json const& j,
                                  std::string const& where = "presentation");

/// Object and generator images by name, every generator included.
Json to_json(Functor const& f);
Functor functor_from_json(Json const& j, FpCatPtr source, FpCatPtr target,
                          std::string const& where = "functor");

Json to_json(PushoutResult const& p);
/// `f` and `g` are the span the pushout was taken of.
PushoutResult pushout_from_json(Json const& j, Functor f, Functor g,
                                std::string const& where = "pushout");

Json to_json(EquivalenceCertificate const& c);
EquivalenceCertificate equivalence_certificate_from_json(
    Json const& j, std::string const& where = "certificate");

Json to_json(GroupoidPresentation const& g);
GroupoidPresentation groupoid_presentation_from_json(
    Json const& j, std::string const& where = "groupoid");

Json to_json(FiniteSpace const& x);
FiniteSpace space_from_json(Json const& j, std::string const& where = "space");

Json to_json(FiniteCategory const& c);
/// Object and morphism images as pairs of names.
Json to_json(FiniteFunctor const& f);
FiniteFunctor finite_functor_from_json(Json const& j, FinCatPtr source,
                                       FinCatPtr target,
                                       std::string const& where = "functor");
Json to_json(FiniteIsoCertificate const& c);
FiniteIsoCertificate finite_iso_from_json(Json const& j, FinCatPtr a,
                                          FinCatPtr b,
                                          std::string const& where = "iso");
/// Per open, the component functor.
Json to_json(SheafMap const& m);

Json to_json(IsoCertificate const& c);
Json to_json(CofiberCertificate const& c);
Json to_json(K0Witness const& w);
/// Rebuilds the witness from its stored parts without checking them; see
/// `k0_defect`.
K0Witness k0_witness_from_json(Json const& j,
                               std::string const& where = "witness");

}  // namespace catcw::io
