#include "catcw/io.hpp"

#include <fstream>
#include <sstream>

namespace catcw::io {

namespace {

[[noreturn]] void fail(std::string const& where, std::string const& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

std::string at(std::string const& where, std::string const& key) {
  return where + "." + key;
}

std::string at(std::string const& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

Json const& field(Json const& j, char const* key, std::string const& where) {
  if (!j.is_object()) {
    fail(where, "expected an object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    fail(where, std::string("missing field '") + key + "'");
  }
  return *it;
}

Json const* optional_field(Json const& j, char const* key,
                           std::string const& where) {
  if (!j.is_object()) {
    fail(where, "expected an object");
  }
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

Json const& array(Json const& j, std::string const& where) {
  if (!j.is_array()) {
    fail(where, "expected an array");
  }
  return j;
}

std::string string(Json const& j, std::string const& where) {
  if (!j.is_string()) {
    fail(where, "expected a string");
  }
  return j.get<std::string>();
}

std::uint32_t index(Json const& j, std::string const& where) {
  if (!j.is_number_unsigned()) {
    fail(where, "expected a non-negative integer");
  }
  return j.get<std::uint32_t>();
}

bool boolean(Json const& j, std::string const& where) {
  if (!j.is_boolean()) {
    fail(where, "expected true or false");
  }
  return j.get<bool>();
}

std::vector<std::string> strings(Json const& j, std::string const& where) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (auto const& e : array(j, where)) {
    out.push_back(string(e, at(where, i++)));
  }
  return out;
}

std::vector<std::uint32_t> indices(Json const& j, std::string const& where) {
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  for (auto const& e : array(j, where)) {
    out.push_back(index(e, at(where, i++)));
  }
  return out;
}

Json pointed_json(char const* name, PointedCategory const& p) {
  Json j;
  j["name"] = name;
  j["basepoint"] = p.basepoint;
  j["presentation"] = to_json(*p.cat);
  return j;
}

PointedCategory pointed_from_json(Json const& j, char const* name,
                                  std::string const& where) {
  if (string(field(j, "name", where), at(where, "name")) != name) {
    fail(at(where, "name"), std::string("expected '") + name + "'");
  }
  auto cat = share(presentation_from_json(field(j, "presentation", where),
                                          at(where, "presentation")));
  auto base = string(field(j, "basepoint", where), at(where, "basepoint"));
  if (!cat->find_object(base)) {
    fail(at(where, "basepoint"), "unknown object '" + base + "'");
  }
  return pointed(std::move(cat), std::move(base));
}

IsoCertificate iso_from_json(Json const& j, FpCatPtr const& a,
                             FpCatPtr const& b, std::string const& where) {
  return {functor_from_json(field(j, "forward", where), a, b,
                            at(where, "forward")),
          functor_from_json(field(j, "backward", where), b, a,
                            at(where, "backward"))};
}

CofiberCertificate cofiber_from_json(Json const& j, PointedCategory const& a,
                                     PointedCategory const& b,
                                     PointedCategory const& c,
                                     std::string const& where) {
  auto i = functor_from_json(field(j, "i", where), a.cat, b.cat, at(where, "i"));
  auto q = functor_from_json(field(j, "q", where), b.cat, c.cat, at(where, "q"));
  auto one = share(presentations::terminal());
  auto cofiber = pushout_from_json(field(j, "cofiber", where), i,
                                   constant_functor(a.cat, one, 0),
                                   at(where, "cofiber"));
  auto comparison = iso_from_json(field(j, "comparison", where), cofiber.apex,
                                  c.cat, at(where, "comparison"));
  return {std::move(i), std::move(q), std::move(cofiber),
          std::move(comparison)};
}

}  // namespace

Json parse(std::string const& text, std::string const& source) {
  try {
    return Json::parse(text);
  } catch (Json::parse_error const& e) {
    fail(source, e.what());
  }
}

Json read_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    fail(path.string(), "cannot open file");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path.string());
}

std::string dump(Json const& j) { return j.dump(2) + "\n"; }

Json to_json(Path const& p) {
  Json j;
  j["at"] = p.at;
  j["gens"] = p.gens;
  return j;
}

Path path_from_json(Json const& j, std::string const& where) {
  Path p;
  p.gens = strings(field(j, "gens", where), at(where, "gens"));
  if (auto const* a = optional_field(j, "at", where)) {
    p.at = string(*a, at(where, "at"));
  } else if (p.gens.empty()) {
    fail(where, "an identity needs 'at'");
  }
  return p;
}

Json to_json(FpCategory const& c) {
  Json j;
  j["objects"] = c.objects();
  j["generators"] = Json::array();
  for (auto const& g : c.declared_generators()) {
    j["generators"].push_back({{"name", g.name}, {"src", g.src}, {"dst", g.dst}});
  }
  j["relations"] = Json::array();
  for (auto const& r : c.declared_relations()) {
    j["relations"].push_back({{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
  }
  j["invertible"] = c.declared_invertible();
  return j;
}

FpCategory presentation_from_json(Json const& j, std::string const& where) {
  auto objects = strings(field(j, "objects", where), at(where, "objects"));
  std::vector<GeneratorSpec> gens;
  std::string const gw = at(where, "generators");
  std::size_t i = 0;
  for (auto const& g : array(field(j, "generators", where), gw)) {
    std::string const w = at(gw, i++);
    gens.push_back({string(field(g, "name", w), at(w, "name")),
                    string(field(g, "src", w), at(w, "src")),
                    string(field(g, "dst", w), at(w, "dst"))});
  }
  std::vector<RelationSpec> rels;
  if (auto const* rj = optional_field(j, "relations", where)) {
    std::string const rw = at(where, "relations");
    i = 0;
    for (auto const& r : array(*rj, rw)) {
      std::string const w = at(rw, i++);
      rels.push_back({path_from_json(field(r, "lhs", w), at(w, "lhs")),
                      path_from_json(field(r, "rhs", w), at(w, "rhs"))});
    }
  }
  std::vector<std::string> inv;
  if (auto const* ij = optional_field(j, "invertible", where)) {
    inv = strings(*ij, at(where, "invertible"));
  }
  return FpCategory::build(std::move(objects), gens, rels, inv);
}

Json to_json(Functor const& f) {
  Json j;
  j["objects"] = Json::object();
  for (ObjId o = 0; o < f.source->num_objects(); ++o) {
    j["objects"][f.source->object_name(o)] = f.target->object_name(f(o));
  }
  j["generators"] = Json::object();
  for (GenId g = 0; g < f.source->num_generators(); ++g) {
    auto const& img = f.generator_map[g];
    j["generators"][f.source->generator(g).name] =
        img ? to_json(f.target->path(*img)) : Json();
  }
  return j;
}

Functor functor_from_json(Json const& j, FpCatPtr source, FpCatPtr target,
                          std::string const& where) {
  Functor f;
  f.source = source;
  f.target = target;
  auto const& objs = field(j, "objects", where);
  std::string const ow = at(where, "objects");
  if (!objs.is_object()) {
    fail(ow, "expected an object");
  }
  for (auto const& [name, _] : objs.items()) {
    if (!source->find_object(name)) {
      fail(ow, "unknown source object '" + name + "'");
    }
  }
  for (ObjId o = 0; o < source->num_objects(); ++o) {
    auto const& name = source->object_name(o);
    auto img = string(field(objs, name.c_str(), ow), at(ow, name));
    auto t = target->find_object(img);
    if (!t) {
      fail(at(ow, name), "unknown target object '" + img + "'");
    }
    f.object_map.push_back(*t);
  }
  auto const& gens = field(j, "generators", where);
  std::string const gw = at(where, "generators");
  if (!gens.is_object()) {
    fail(gw, "expected an object");
  }
  for (auto const& [name, _] : gens.items()) {
    if (!source->find_generator(name)) {
      fail(gw, "unknown source generator '" + name + "'");
    }
  }
  for (auto const& info : source->generators()) {
    auto it = gens.find(info.name);
    if (it == gens.end() || it->is_null()) {
      f.generator_map.emplace_back(std::nullopt);
      continue;
    }
    std::string const w = at(gw, info.name);
    try {
      f.generator_map.emplace_back(target->arrow(path_from_json(*it, w)));
    } catch (Error const& e) {
      if (e.code() == ErrorCode::ParseError) {
        throw;
      }
      fail(w, e.what());
    }
  }
  fill_formal_inverses(f);
  return f;
}

Json to_json(PushoutResult const& p) {
  Json j;
  j["apex"] = to_json(*p.apex);
  j["inj_left"] = to_json(p.inj_left);
  j["inj_right"] = to_json(p.inj_right);
  return j;
}

PushoutResult pushout_from_json(Json const& j, Functor f, Functor g,
                                std::string const& where) {
  auto apex = share(presentation_from_json(field(j, "apex", where),
                                           at(where, "apex")));
  auto left = functor_from_json(field(j, "inj_left", where), f.target, apex,
                                at(where, "inj_left"));
  auto right = functor_from_json(field(j, "inj_right", where), g.target, apex,
                                 at(where, "inj_right"));
  return {apex, std::move(left), std::move(right), std::move(f), std::move(g)};
}

Json to_json(EquivalenceCertificate const& c) {
  Json j;
  j["fully_faithful"] = Json::array();
  for (auto const& h : c.fully_faithful) {
    j["fully_faithful"].push_back({{"x", h.x}, {"y", h.y}, {"image", h.image}});
  }
  j["essentially_surjective"] = Json::array();
  for (auto const& e : c.essentially_surjective) {
    j["essentially_surjective"].push_back({{"target", e.target},
                                           {"source", e.source},
                                           {"iso", e.iso},
                                           {"inverse", e.inverse}});
  }
  return j;
}

EquivalenceCertificate equivalence_certificate_from_json(
    Json const& j, std::string const& where) {
  EquivalenceCertificate c;
  std::string const fw = at(where, "fully_faithful");
  std::size_t i = 0;
  for (auto const& h : array(field(j, "fully_faithful", where), fw)) {
    std::string const w = at(fw, i++);
    c.fully_faithful.push_back({index(field(h, "x", w), at(w, "x")),
                                index(field(h, "y", w), at(w, "y")),
                                indices(field(h, "image", w), at(w, "image"))});
  }
  std::string const ew = at(where, "essentially_surjective");
  i = 0;
  for (auto const& e : array(field(j, "essentially_surjective", where), ew)) {
    std::string const w = at(ew, i++);
    c.essentially_surjective.push_back(
        {index(field(e, "target", w), at(w, "target")),
         index(field(e, "source", w), at(w, "source")),
         index(field(e, "iso", w), at(w, "iso")),
         index(field(e, "inverse", w), at(w, "inverse"))});
  }
  return c;
}

Json to_json(GroupoidPresentation const& g) {
  Json j;
  j["components"] = Json::array();
  for (auto const& c : g.components) {
    j["components"].push_back({{"extra_objects", c.extra_objects},
                               {"generators", c.generators},
                               {"relations", c.relations}});
  }
  return j;
}

GroupoidPresentation groupoid_presentation_from_json(Json const& j,
                                                     std::string const& where) {
  GroupoidPresentation g;
  std::string const cw = at(where, "components");
  std::size_t i = 0;
  for (auto const& c : array(field(j, "components", where), cw)) {
    std::string const w = at(cw, i++);
    GroupoidComponent comp;
    if (auto const* e = optional_field(c, "extra_objects", w)) {
      comp.extra_objects = strings(*e, at(w, "extra_objects"));
    }
    comp.generators = strings(field(c, "generators", w), at(w, "generators"));
    if (auto const* r = optional_field(c, "relations", w)) {
      std::string const rw = at(w, "relations");
      std::size_t k = 0;
      for (auto const& word : array(*r, rw)) {
        comp.relations.push_back(strings(word, at(rw, k++)));
      }
    }
    g.components.push_back(std::move(comp));
  }
  return g;
}

Json to_json(FiniteSpace const& x) {
  Json j;
  j["points"] = x.points();
  j["opens"] = Json::array();
  for (PointSet u : x.opens()) {
    j["opens"].push_back(x.names(u));
  }
  return j;
}

FiniteSpace space_from_json(Json const& j, std::string const& where) {
  auto points = strings(field(j, "points", where), at(where, "points"));
  std::vector<std::vector<std::string>> opens;
  std::string const ow = at(where, "opens");
  std::size_t i = 0;
  for (auto const& u : array(field(j, "opens", where), ow)) {
    opens.push_back(strings(u, at(ow, i++)));
  }
  return FiniteSpace::build(std::move(points), opens);
}

Json to_json(FiniteCategory const& c) {
  Json j;
  j["objects"] = c.objects();
  j["morphisms"] = Json::array();
  for (auto const& m : c.morphisms()) {
    j["morphisms"].push_back({{"name", m.name},
                              {"src", c.objects()[m.src]},
                              {"dst", c.objects()[m.dst]}});
  }
  return j;
}

Json to_json(FiniteFunctor const& f) {
  Json j;
  j["objects"] = Json::array();
  for (ObjId o = 0; o < f.object_map.size(); ++o) {
    j["objects"].push_back(
        {f.source->objects()[o], f.target->objects()[f.object_map[o]]});
  }
  j["morphisms"] = Json::array();
  for (MorId m = 0; m < f.morphism_map.size(); ++m) {
    j["morphisms"].push_back({f.source->morphism(m).name,
                              f.target->morphism(f.morphism_map[m]).name});
  }
  return j;
}

FiniteFunctor finite_functor_from_json(Json const& j, FinCatPtr source,
                                       FinCatPtr target,
                                       std::string const& where) {
  FiniteFunctor f{source, target, {}, {}};
  auto pairs = [&](char const* key, std::size_t count, auto const& find_src,
                   auto const& find_dst, std::vector<std::uint32_t>& map) {
    std::string const w = at(where, key);
    auto const& a = array(field(j, key, where), w);
    if (a.size() != count) {
      fail(w, "expected " + std::to_string(count) + " entries");
    }
    map.assign(count, 0);
    std::vector<bool> seen(count, false);
    std::size_t i = 0;
    for (auto const& e : a) {
      std::string const ew = at(w, i++);
      if (!e.is_array() || e.size() != 2) {
        fail(ew, "expected a pair of names");
      }
      auto s = find_src(string(e[0], at(ew, 0)));
      auto t = find_dst(string(e[1], at(ew, 1)));
      if (!s || !t) {
        fail(ew, "unknown name");
      }
      if (seen[*s]) {
        fail(ew, "mapped twice");
      }
      seen[*s] = true;
      map[*s] = *t;
    }
  };
  pairs(
      "objects", source->num_objects(),
      [&](std::string const& n) { return source->find_object(n); },
      [&](std::string const& n) { return target->find_object(n); },
      f.object_map);
  pairs(
      "morphisms", source->num_morphisms(),
      [&](std::string const& n) { return source->find_morphism(n); },
      [&](std::string const& n) { return target->find_morphism(n); },
      f.morphism_map);
  return f;
}

Json to_json(FiniteIsoCertificate const& c) {
  Json j;
  j["forward"] = to_json(c.forward);
  j["backward"] = to_json(c.backward);
  return j;
}

FiniteIsoCertificate finite_iso_from_json(Json const& j, FinCatPtr a,
                                          FinCatPtr b,
                                          std::string const& where) {
  return {finite_functor_from_json(field(j, "forward", where), a, b,
                                   at(where, "forward")),
          finite_functor_from_json(field(j, "backward", where), b, a,
                                   at(where, "backward"))};
}

Json to_json(SheafMap const& m) {
  auto const& x = m.source->space();
  Json j;
  j["space"] = to_json(x);
  j["components"] = Json::array();
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    j["components"].push_back(
        {{"open", x.names(x.opens()[i])}, {"functor", to_json(m.components[i])}});
  }
  return j;
}

Json to_json(IsoCertificate const& c) {
  Json j;
  j["forward"] = to_json(c.forward);
  j["backward"] = to_json(c.backward);
  return j;
}

Json to_json(CofiberCertificate const& c) {
  Json j;
  j["i"] = to_json(c.i);
  j["q"] = to_json(c.q);
  j["cofiber"] = to_json(c.cofiber);
  j["comparison"] = to_json(c.comparison);
  return j;
}

Json to_json(K0Witness const& w) {
  Json j;
  j["kind"] = "k0-witness";
  j["stages"] = Json::array({pointed_json("X", w.x), pointed_json("PX", w.px),
                             pointed_json("SX", w.sx),
                             pointed_json("PSX", w.psx),
                             pointed_json("SSX", w.ssx)});
  j["first"] = to_json(w.first);
  j["second"] = to_json(w.second);
  j["contract_PX"] = to_json(w.contract_px.to_point);
  j["contract_PSX"] = to_json(w.contract_psx.to_point);
  j["terminal_SSX"] = {{"literal", w.terminal.literal},
                       {"forward", to_json(w.terminal.iso.forward)},
                       {"backward", to_json(w.terminal.iso.backward)}};
  j["scope"] = w.scope;
  return j;
}

K0Witness k0_witness_from_json(Json const& j, std::string const& where) {
  if (string(field(j, "kind", where), at(where, "kind")) != "k0-witness") {
    fail(at(where, "kind"), "expected 'k0-witness'");
  }
  std::string const sw = at(where, "stages");
  auto const& stages = array(field(j, "stages", where), sw);
  if (stages.size() != 5) {
    fail(sw, "expected five stages");
  }
  char const* names[] = {"X", "PX", "SX", "PSX", "SSX"};
  std::vector<PointedCategory> p;
  for (std::size_t i = 0; i < 5; ++i) {
    p.push_back(pointed_from_json(stages[i], names[i], at(sw, i)));
  }
  K0Witness w{p[0], p[1], p[2], p[3], p[4], {}, {}, {}, {}, {}, {}};
  w.first = cofiber_from_json(field(j, "first", where), p[0], p[1], p[2],
                              at(where, "first"));
  w.second = cofiber_from_json(field(j, "second", where), p[2], p[3], p[4],
                               at(where, "second"));
  w.contract_px = {p[1].cat, equivalence_certificate_from_json(
                                 field(j, "contract_PX", where),
                                 at(where, "contract_PX"))};
  w.contract_psx = {p[3].cat, equivalence_certificate_from_json(
                                  field(j, "contract_PSX", where),
                                  at(where, "contract_PSX"))};
  std::string const tw = at(where, "terminal_SSX");
  auto const& t = field(j, "terminal_SSX", where);
  auto one = share(presentations::terminal());
  w.terminal = {p[4].cat, iso_from_json(t, p[4].cat, one, tw),
                boolean(field(t, "literal", tw), at(tw, "literal"))};
  w.scope = strings(field(j, "scope", where), at(where, "scope"));
  return w;
}

}  // namespace catcw::io
