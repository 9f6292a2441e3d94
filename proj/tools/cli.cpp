#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "catcw/colimits.hpp"
#include "catcw/cw.hpp"
#include "catcw/finitize.hpp"
#include "catcw/io.hpp"
#include "catcw/ktheory.hpp"
#include "catcw/model_structure.hpp"
#include "catcw/sheaftopos.hpp"

namespace catcw::cli {

namespace {

using io::Json;

inline constexpr std::size_t kListLimit = 256;

struct Options {
  std::size_t bound = kDefaultHomBound;
  std::size_t budget = kDefaultRuleBudget;
  std::size_t product_bound = kDefaultProductBound;
  bool json = false;
  bool to_finite = false;
  std::optional<std::string> verify;
  std::optional<unsigned> seed;
  std::optional<std::string> out;
  std::optional<std::string> basepoint;
  std::optional<std::string> functor;
  std::string variant = "exotic";
  std::string file;
  std::string file2;
  unsigned n = 0;
};

struct Report {
  Json json;
  std::vector<std::string> lines;
  int status = kOk;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

FpCategory random_presentation(unsigned seed) {
  std::mt19937 rng(seed);
  std::size_t const n = 1 + rng() % 3;
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back("x" + std::to_string(i));
  }
  std::vector<GeneratorSpec> gens;
  std::vector<std::string> inv;
  for (std::size_t i = 0, m = rng() % 5; i < m; ++i) {
    std::string name = "g" + std::to_string(i);
    gens.push_back({name, objects[rng() % n], objects[rng() % n]});
    if (rng() % 2 == 0) {
      inv.push_back(name);
    }
  }
  std::vector<RelationSpec> rels;
  for (auto const& g : gens) {
    if (g.src == g.dst && rng() % 3 == 0) {
      rels.push_back({{g.src, {g.name, g.name}}, {g.src, {}}});
    }
  }
  return FpCategory::build(objects, gens, rels, inv);
}

FpCatPtr load_presentation(Options const& opt, std::string const& file) {
  if (file.empty()) {
    if (!opt.seed) {
      throw Error(ErrorCode::ParseError, "an input file or --seed is required");
    }
    return share(random_presentation(*opt.seed));
  }
  return share(io::presentation_from_json(io::read_file(file), file));
}

std::string counts(FpCategory const& c) {
  return std::to_string(c.num_objects()) + " objects, " +
         std::to_string(c.declared_generators().size()) + " generators (" +
         std::to_string(c.declared_invertible().size()) + " invertible), " +
         std::to_string(c.relations().size()) + " relations";
}

FinCatPtr finite_of(FpCategory const& c, Options const& opt) {
  auto rs = complete(c, opt.budget);
  if (!rs.is_complete()) {
    throw Error(ErrorCode::NotDecided, "completion exceeded the rule budget");
  }
  auto r = to_finite(c, rs, opt.bound);
  if (auto const* f = std::get_if<Finitization>(&r)) {
    return f->category;
  }
  throw Error(ErrorCode::NotDecided, "a hom-set exceeds the bound of " +
                                         std::to_string(opt.bound));
}

void describe(FpCategory const& c, Options const& opt, Report& r) {
  auto rs = complete(c, opt.budget);
  r.json["objects"] = c.num_objects();
  r.json["generators"] = c.declared_generators().size();
  r.json["relations"] = c.relations().size();
  r.json["completion"] = rs.is_complete() ? "complete" : "incomplete";
  r.json["rules"] = rs.rules().size();
  r.line(counts(c));
  r.line(std::string("completion: ") +
         (rs.is_complete() ? "complete" : "incomplete") + ", " +
         std::to_string(rs.rules().size()) + " rules");
  if (!opt.to_finite) {
    return;
  }
  if (!rs.is_complete()) {
    r.json["to_finite"] = {{"verdict", "unknown"}};
    r.line("to-finite: unknown (completion incomplete)");
    r.status = kNegative;
    return;
  }
  auto fin = to_finite(c, rs, opt.bound);
  if (auto const* f = std::get_if<Finitization>(&fin)) {
    Json names = Json::array();
    for (auto const& m : f->category->morphisms()) {
      names.push_back(m.name);
    }
    r.json["to_finite"] = {{"verdict", "finite"},
                           {"morphisms", f->category->num_morphisms()},
                           {"names", names}};
    r.line("Finite: " + std::to_string(f->category->num_morphisms()) +
           " morphisms");
    return;
  }
  auto const& nf = std::get<NotFinite>(fin);
  std::vector<Arrow> forms;
  std::size_t length = 0;
  for (std::size_t l = 0; l <= opt.bound; ++l) {
    auto next = enumerate_normal_forms(c, rs, nf.src, nf.dst, l);
    if (next.size() > kListLimit) {
      break;
    }
    forms = std::move(next);
    length = l;
  }
  Json rendered = Json::array();
  for (auto const& a : forms) {
    rendered.push_back(c.render(a));
  }
  r.json["to_finite"] = {
      {"verdict", "NotFinite"},
      {"hom", {c.object_name(nf.src), c.object_name(nf.dst)}},
      {"bound", nf.bound},
      {"length", length},
      {"normal_forms", rendered}};
  r.line("NotFinite: hom(" + c.object_name(nf.src) + ", " +
         c.object_name(nf.dst) + ") has more than " + std::to_string(nf.bound) +
         " morphisms");
  r.line("normal forms of length <= " + std::to_string(length) + " (" +
         std::to_string(forms.size()) + "):");
  for (auto const& a : forms) {
    r.line("  " + c.render(a));
  }
}

Report check(Options const& opt) {
  Report r;
  auto c = load_presentation(opt, opt.file);
  r.json["verb"] = "check";
  describe(*c, opt, r);
  return r;
}

Report sphere_verb(Options const& opt) {
  Report r;
  auto s = sphere(opt.n);
  r.json["verb"] = "sphere";
  r.json["n"] = opt.n;
  r.json["presentation"] = io::to_json(s);
  r.line("S^" + std::to_string(opt.n));
  describe(s, opt, r);
  return r;
}

Report equiv(Options const& opt) {
  Report r;
  r.json["verb"] = "equiv";
  auto a = load_presentation(opt, opt.file);
  auto b = load_presentation(opt, opt.file2);
  auto fa = finite_of(*a, opt);
  auto fb = finite_of(*b, opt);

  if (opt.verify) {
    auto stored = io::read_file(*opt.verify);
    auto f = io::finite_functor_from_json(stored.at("functor"), fa, fb,
                                          "certificate.functor");
    auto cert = io::equivalence_certificate_from_json(stored.at("certificate"),
                                                      "certificate.certificate");
    bool const ok = !functor_defect(f) && verify_certificate(cert, f);
    r.json["verified"] = ok;
    r.line(ok ? "certificate verified" : "certificate rejected");
    r.status = ok ? kOk : kNegative;
    return r;
  }

  std::optional<FiniteFunctor> f;
  if (opt.functor) {
    auto fp = io::functor_from_json(io::read_file(*opt.functor), a, b, *opt.functor);
    auto rs = complete(*b, opt.budget);
    if (auto d = functor_defect(fp, rs)) {
      throw Error(ErrorCode::InvalidFunctor, *d);
    }
    auto sa = std::get<Finitization>(to_finite(*a, complete(*a, opt.budget), opt.bound));
    auto sb = std::get<Finitization>(to_finite(*b, rs, opt.bound));
    f = finitize(fp, sa, sb, rs);
  } else {
    f = find_equivalence(fa, fb, opt.product_bound);
  }
  if (!f) {
    r.json["verdict"] = "not-equivalent";
    r.line("no equivalence found among all functors");
    r.status = kNegative;
    return r;
  }
  auto v = is_equivalence(*f);
  if (auto const* no = std::get_if<NotEquivalence>(&v)) {
    r.json["verdict"] = "not-equivalence";
    r.json["reason"] = no->reason;
    r.line("NotEquivalence: " + no->reason);
    r.status = kNegative;
    return r;
  }
  r.json["verdict"] = "equivalence";
  r.json["functor"] = io::to_json(*f);
  r.json["certificate"] = io::to_json(std::get<EquivalenceCertificate>(v));
  r.line("equivalence found");
  for (ObjId o = 0; o < fa->num_objects(); ++o) {
    r.line("  " + fa->objects()[o] + " -> " + fb->objects()[f->object_map[o]]);
  }
  return r;
}

Report pushout_verb(Options const& opt) {
  Report r;
  r.json["verb"] = "pushout";
  auto span = io::read_file(opt.file);
  auto a = share(io::presentation_from_json(span.at("a"), "span.a"));
  auto b = share(io::presentation_from_json(span.at("b"), "span.b"));
  auto c = share(io::presentation_from_json(span.at("c"), "span.c"));
  auto f = io::functor_from_json(span.at("f"), a, b, "span.f");
  auto g = io::functor_from_json(span.at("g"), a, c, "span.g");
  for (auto const* h : {&f, &g}) {
    if (auto d = functor_defect(*h, complete(*h->target, opt.budget))) {
      throw Error(ErrorCode::InvalidFunctor, *d);
    }
  }
  auto p = pushout(f, g);
  if (opt.verify) {
    auto stored = io::pushout_from_json(io::read_file(*opt.verify), f, g,
                                        *opt.verify);
    bool const ok = *stored.apex == *p.apex &&
                    stored.inj_left.generator_map == p.inj_left.generator_map &&
                    stored.inj_left.object_map == p.inj_left.object_map &&
                    stored.inj_right.generator_map == p.inj_right.generator_map &&
                    stored.inj_right.object_map == p.inj_right.object_map &&
                    !pushout_defect(stored, opt.budget);
    r.json["verified"] = ok;
    r.line(ok ? "pushout verified" : "pushout rejected");
    r.status = ok ? kOk : kNegative;
    return r;
  }
  auto defect = pushout_defect(p, opt.budget);
  r.json["result"] = io::to_json(p);
  r.json["square"] = defect ? *defect : "commutes";
  r.line("apex: " + counts(*p.apex));
  r.line("square: " + (defect ? *defect : std::string("commutes")));
  if (defect) {
    r.status = kNegative;
  }
  return r;
}

PointedCategory load_pointed(Options const& opt) {
  auto c = load_presentation(opt, opt.file);
  return opt.basepoint ? pointed(c, *opt.basepoint) : pointed(c);
}

Report suspend_verb(Options const& opt) {
  Report r;
  r.json["verb"] = "suspend";
  auto s = suspend(load_pointed(opt));
  r.json["basepoint"] = s.basepoint;
  r.json["presentation"] = io::to_json(*s.cat);
  r.line("ΣX: " + counts(*s.cat) + ", basepoint " + s.basepoint);
  return r;
}

Report cone_verb(Options const& opt) {
  Report r;
  r.json["verb"] = "cone";
  auto c = make_cone(load_pointed(opt));
  r.json["basepoint"] = c.cone.basepoint;
  r.json["presentation"] = io::to_json(*c.cone.cat);
  r.json["unit"] = io::to_json(c.unit);
  bool const contractible = is_contractible(*c.cone.cat, complete(*c.cone.cat, opt.budget));
  r.json["contractible"] = contractible;
  r.line("PX: " + counts(*c.cone.cat) + ", basepoint " + c.cone.basepoint);
  r.line(std::string("contractible: ") + (contractible ? "yes" : "no"));
  r.line(std::string("unit is a cofibration: ") +
         (is_cofibration(c.unit) ? "yes" : "no"));
  return r;
}

Report k0_witness(Options const& opt) {
  Report r;
  r.json["verb"] = "k0-witness";
  if (opt.verify) {
    std::ifstream in(*opt.verify);
    if (!in) {
      throw Error(ErrorCode::ParseError, *opt.verify + ": cannot open file");
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    auto w = io::k0_witness_from_json(io::parse(text, *opt.verify));
    auto defect = k0_defect(w, opt.budget);
    bool const identical = io::dump(io::to_json(w)) == text;
    r.json["replays"] = !defect;
    r.json["bit_identical"] = identical;
    r.line(defect ? "witness rejected: " + *defect : "witness replays");
    r.line(std::string("re-serialization ") +
           (identical ? "is bit-identical" : "differs"));
    r.status = !defect && identical ? kOk : kNegative;
    return r;
  }
  auto x = load_pointed(opt);
  auto w = k0_vanishing_witness(x, opt.budget);
  if (auto d = k0_defect(w, opt.budget)) {
    throw Error(ErrorCode::CertificateRejected, *d);
  }
  std::string path = opt.out.value_or(
      opt.file.empty() ? "random-" + std::to_string(*opt.seed) + ".k0.json"
                       : std::filesystem::path(opt.file).stem().string() +
                             ".k0.json");
  std::ofstream file(path);
  if (!file) {
    throw Error(ErrorCode::ParseError, path + ": cannot write file");
  }
  file << io::dump(io::to_json(w));
  r.json["witness"] = path;
  r.json["stages"] = Json::array();
  for (auto const* p : {&w.x, &w.px, &w.sx, &w.psx, &w.ssx}) {
    r.json["stages"].push_back(
        {{"objects", p->cat->num_objects()},
         {"generators", p->cat->declared_generators().size()}});
  }
  r.line("X:   " + counts(*w.x.cat));
  r.line("PX:  " + counts(*w.px.cat) + " (contractible)");
  r.line("ΣX:  " + counts(*w.sx.cat));
  r.line("PΣX: " + counts(*w.psx.cat) + " (contractible)");
  r.line("Σ²X: " + counts(*w.ssx.cat) +
         (w.terminal.literal ? " (literally terminal)" : " (terminal)"));
  r.line("cofiber sequences X -> PX -> ΣX and ΣX -> PΣX -> Σ²X certified");
  r.line("[X] = -[ΣX] = [Σ²X] = 0 in K0");
  for (auto const& s : w.scope) {
    r.line("scope: " + s);
  }
  r.line("witness written to " + path);
  return r;
}

Report cw_classify_verb(Options const& opt) {
  Report r;
  r.json["verb"] = "cw-classify";
  auto c = load_presentation(opt, opt.file);
  auto v = cw_classify(*c, complete(*c, opt.budget));
  r.json["kind"] = to_string(v.kind);
  r.json["freeness"] = std::string(to_string(v.freeness));
  if (v.non_invertible) {
    r.json["non_invertible"] = *v.non_invertible;
  }
  r.json["free_generators"] = v.free_generators;
  r.json["note"] = v.note;
  r.line(to_string(v.kind) + ": " + v.note);
  for (std::size_t i = 0; i < v.free_generators.size(); ++i) {
    std::string gens;
    for (auto const& g : v.free_generators[i]) {
      gens += (gens.empty() ? "" : ", ") + g;
    }
    r.line("component " + std::to_string(i) + " free on {" + gens + "}");
  }
  if (v.kind == CwKind::NotCW) {
    r.status = kNegative;
  }
  return r;
}

Report cw_build(Options const& opt) {
  Report r;
  r.json["verb"] = "cw-build";
  auto g = io::groupoid_presentation_from_json(io::read_file(opt.file), opt.file);
  auto c = build_two_complex(g);
  auto rs = complete(c, opt.budget);
  r.json["presentation"] = io::to_json(c);
  r.json["groupoid"] = std::string(to_string(is_groupoid(c, rs)));
  r.line("two-complex: " + counts(c));
  r.line(std::string("groupoid: ") + std::string(to_string(is_groupoid(c, rs))));
  describe(c, opt, r);
  return r;
}

struct SheafInputs {
  FinCatPtr category;
  FiniteSpace space;
};

SheafInputs load_sheaf_inputs(Options const& opt) {
  auto c = load_presentation(opt, opt.file);
  auto x = io::space_from_json(io::read_file(opt.file2), opt.file2);
  return {finite_of(*c, opt), std::move(x)};
}

Report sheaf_unit(Options const& opt) {
  Report r;
  r.json["verb"] = "sheaf-unit";
  auto in = load_sheaf_inputs(opt);
  auto gamma = global_sections(sheafify_constant(in.category, in.space));
  if (opt.verify) {
    auto cert = io::finite_iso_from_json(io::read_file(*opt.verify), in.category,
                                         gamma, *opt.verify);
    auto defect = iso_defect(cert);
    r.json["verified"] = !defect;
    r.line(defect ? "certificate rejected: " + *defect : "certificate verified");
    r.status = defect ? kNegative : kOk;
    return r;
  }
  auto v = unit_check(in.category, in.space);
  r.json["connected"] = in.space.is_connected();
  if (auto const* fail = std::get_if<UnitFailure>(&v)) {
    r.json["verdict"] = "not-isomorphism";
    r.json["reason"] = fail->reason;
    r.line("unit is not an isomorphism: " + fail->reason);
    r.status = kNegative;
    return r;
  }
  r.json["verdict"] = "isomorphism";
  r.json["certificate"] = io::to_json(std::get<FiniteIsoCertificate>(v));
  r.line("unit A -> Γ(#cA) is an isomorphism (" +
         std::to_string(in.category->num_objects()) + " objects, " +
         std::to_string(in.category->num_morphisms()) + " morphisms)");
  return r;
}

Report sheaf_exotic(Options const& opt) {
  Report r;
  r.json["verb"] = "sheaf-exotic";
  ExoticVariant variant = ExoticVariant::Exotic;
  if (opt.variant == "identity") {
    variant = ExoticVariant::IdentityControl;
  } else if (opt.variant == "constant") {
    variant = ExoticVariant::ConstantControl;
  }
  auto demo = exotic_map_demo(variant);
  auto const& x = demo.xi.source->space();
  r.json["variant"] = opt.variant;
  r.json["xi"] = io::to_json(demo.xi);
  r.json["in_constant_image"] = demo.in_constant_image;
  r.line("X = discrete " + x.render(x.full()) + ", F = #c(S0)");
  for (std::size_t i = 0; i < demo.xi.components.size(); ++i) {
    auto const& comp = demo.xi.components[i];
    std::string map;
    for (ObjId o = 0; o < comp.object_map.size(); ++o) {
      map += (map.empty() ? "" : ", ") + comp.source->objects()[o] + " -> " +
             comp.target->objects()[comp.object_map[o]];
    }
    r.line("xi" + x.render(x.opens()[i]) + ": " + map);
  }
  r.line(demo.in_constant_image ? "in constant image" : "not in constant image");
  return r;
}

Report sheaf_classify(Options const& opt) {
  Report r;
  r.json["verb"] = "sheaf-classify";
  auto in = load_sheaf_inputs(opt);
  auto v = classify_cw_sheaf(sheafify_constant(in.category, in.space),
                             opt.product_bound);
  r.json["verdict"] = v.cw ? "CW" : "NotCW";
  if (v.failing_open) {
    r.json["failing_open"] = in.space.names(*v.failing_open);
  }
  if (v.non_invertible) {
    r.json["non_invertible"] = *v.non_invertible;
  }
  r.json["note"] = v.note;
  r.line(std::string(v.cw ? "CW" : "NotCW") + ": " + v.note);
  r.status = v.cw ? kOk : kNegative;
  return r;
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("--bound", opt.bound, "hom-set enumeration bound")
      ->capture_default_str();
  sub->add_option("--budget", opt.budget, "completion rule budget")
      ->capture_default_str();
  sub->add_flag("--json", opt.json, "print a JSON report");
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"catcw: finitely presented categories, colimits and CW structures"};
  app.require_subcommand(1);

  auto* check_cmd = app.add_subcommand("check", "complete a presentation and report");
  check_cmd->add_option("file", opt.file, "presentation JSON");
  check_cmd->add_flag("--to-finite", opt.to_finite, "enumerate the finite category");
  check_cmd->add_option("--seed", opt.seed, "use a random presentation");

  auto* equiv_cmd = app.add_subcommand("equiv", "decide equivalence of two finite categories");
  equiv_cmd->add_option("a", opt.file, "presentation JSON")->required();
  equiv_cmd->add_option("b", opt.file2, "presentation JSON")->required();
  equiv_cmd->add_option("--functor", opt.functor, "test this functor instead of searching");
  equiv_cmd->add_option("--product-bound", opt.product_bound, "functor search bound")
      ->capture_default_str();
  equiv_cmd->add_option("--verify", opt.verify, "re-check a stored certificate");

  auto* pushout_cmd = app.add_subcommand("pushout", "pushout of a span");
  pushout_cmd->add_option("span", opt.file, "span JSON with a, b, c, f, g")->required();
  pushout_cmd->add_option("--verify", opt.verify, "re-check a stored result");

  auto* sphere_cmd = app.add_subcommand("sphere", "the n-sphere");
  sphere_cmd->add_option("n", opt.n, "dimension")->required();
  sphere_cmd->add_flag("--to-finite", opt.to_finite, "enumerate the finite category");

  auto* suspend_cmd = app.add_subcommand("suspend", "suspension of a pointed category");
  auto* cone_cmd = app.add_subcommand("cone", "cone of a pointed category");
  auto* k0_cmd = app.add_subcommand("k0-witness", "K0 vanishing witness");
  auto* cwc_cmd = app.add_subcommand("cw-classify", "CW classification of a presentation");
  for (auto* sub : {suspend_cmd, cone_cmd, k0_cmd, cwc_cmd}) {
    sub->add_option("file", opt.file, "presentation JSON");
    sub->add_option("--seed", opt.seed, "use a random presentation");
  }
  for (auto* sub : {suspend_cmd, cone_cmd, k0_cmd}) {
    sub->add_option("--basepoint", opt.basepoint, "basepoint object");
  }
  k0_cmd->add_option("--out", opt.out, "witness file to write");
  k0_cmd->add_option("--verify", opt.verify, "re-check a stored witness");

  auto* build_cmd = app.add_subcommand("cw-build", "two-complex of a groupoid presentation");
  build_cmd->add_option("file", opt.file, "groupoid presentation JSON")->required();
  build_cmd->add_flag("--to-finite", opt.to_finite, "enumerate the finite category");

  auto* unit_cmd = app.add_subcommand("sheaf-unit", "unit A -> Γ(#cA) over a finite space");
  auto* classify_cmd = app.add_subcommand("sheaf-classify", "CW test for #cA over a connected space");
  for (auto* sub : {unit_cmd, classify_cmd}) {
    sub->add_option("category", opt.file, "presentation JSON")->required();
    sub->add_option("space", opt.file2, "space JSON")->required();
  }
  unit_cmd->add_option("--verify", opt.verify, "re-check a stored certificate");
  classify_cmd->add_option("--product-bound", opt.product_bound, "isomorphism search bound")
      ->capture_default_str();

  auto* exotic_cmd = app.add_subcommand("sheaf-exotic", "the exotic attaching map");
  exotic_cmd->add_option("--variant", opt.variant, "exotic, identity or constant")
      ->check(CLI::IsMember({"exotic", "identity", "constant"}))
      ->capture_default_str();

  for (auto* sub : app.get_subcommands({})) {
    add_common(sub, opt);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  auto* sub = app.get_subcommands().front();
  std::string const verb = sub->get_name();
  try {
    Report r;
    if (verb == "check") {
      r = check(opt);
    } else if (verb == "equiv") {
      r = equiv(opt);
    } else if (verb == "pushout") {
      r = pushout_verb(opt);
    } else if (verb == "sphere") {
      r = sphere_verb(opt);
    } else if (verb == "suspend") {
      r = suspend_verb(opt);
    } else if (verb == "cone") {
      r = cone_verb(opt);
    } else if (verb == "k0-witness") {
      r = k0_witness(opt);
    } else if (verb == "cw-classify") {
      r = cw_classify_verb(opt);
    } else if (verb == "cw-build") {
      r = cw_build(opt);
    } else if (verb == "sheaf-unit") {
      r = sheaf_unit(opt);
    } else if (verb == "sheaf-exotic") {
      r = sheaf_exotic(opt);
    } else {
      r = sheaf_classify(opt);
    }
    if (opt.json) {
      r.json["status"] = r.status;
      out << io::dump(r.json);
    } else {
      for (auto const& l : r.lines) {
        out << l << "\n";
      }
    }
    return r.status;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (Json::exception const& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace catcw::cli
