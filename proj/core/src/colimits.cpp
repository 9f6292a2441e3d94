#include "catcw/colimits.hpp"

#include <numeric>
#include <set>

namespace catcw {

namespace {

Path prefixed(Path p, std::string const& prefix) {
  if (!p.at.empty()) {
    p.at = prefix + p.at;
  }
  for (auto& g : p.gens) {
    g = prefix + g;
  }
  return p;
}

// Path in `cat` with object and generator names rewritten.
template <typename ObjName, typename GenName>
Path translate(Arrow const& a, ObjName obj_name, GenName gen_name) {
  Path p{obj_name(a.src), {}};
  for (GenId g : a.word) {
    p.gens.push_back(gen_name(g));
  }
  return p;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Coproduct coproduct(std::vector<FpCatPtr> const& parts) {
  std::vector<std::string> objects;
  std::vector<GeneratorSpec> gens;
  std::vector<RelationSpec> rels;
  std::vector<std::string> inv;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string const pre = std::to_string(i) + ".";
    auto const& c = *parts[i];
    for (auto const& o : c.objects()) {
      objects.push_back(pre + o);
    }
    for (auto const& g : c.declared_generators()) {
      gens.push_back({pre + g.name, pre + g.src, pre + g.dst});
    }
    for (auto const& r : c.declared_relations()) {
      rels.push_back({prefixed(r.lhs, pre), prefixed(r.rhs, pre)});
    }
    for (auto const& name : c.declared_invertible()) {
      inv.push_back(pre + name);
    }
  }
  Coproduct out;
  out.apex = share(FpCategory::build(objects, gens, rels, inv));
  ObjId obj_offset = 0;
  GenId gen_offset = 0;
  for (auto const& part : parts) {
    Functor in;
    in.source = part;
    in.target = out.apex;
    for (ObjId o = 0; o < part->num_objects(); ++o) {
      in.object_map.push_back(obj_offset + o);
    }
    for (GenId g = 0; g < part->num_generators(); ++g) {
      in.generator_map.emplace_back(out.apex->arrow_of(gen_offset + g));
    }
    obj_offset += static_cast<ObjId>(part->num_objects());
    gen_offset += static_cast<GenId>(part->num_generators());
    out.injections.push_back(std::move(in));
  }
  return out;
}

Functor copair(Coproduct const& cp, std::vector<Functor> const& legs,
               FpCatPtr target) {
  if (legs.size() != cp.injections.size()) {
    throw Error(ErrorCode::InvalidFunctor, "copair: wrong number of legs");
  }
  Functor out;
  out.source = cp.apex;
  out.target = std::move(target);
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (legs[i].source != cp.injections[i].source ||
        legs[i].target != out.target) {
      throw Error(ErrorCode::InvalidFunctor, "copair: leg does not match");
    }
    out.object_map.insert(out.object_map.end(), legs[i].object_map.begin(),
                          legs[i].object_map.end());
    out.generator_map.insert(out.generator_map.end(),
                             legs[i].generator_map.begin(),
                             legs[i].generator_map.end());
  }
  return out;
}

CoproductMap coproduct_map(std::vector<Functor> const& maps) {
  std::vector<FpCatPtr> sources;
  std::vector<FpCatPtr> targets;
  for (auto const& m : maps) {
    sources.push_back(m.source);
    targets.push_back(m.target);
  }
  CoproductMap out{coproduct(sources), coproduct(targets), {}};
  std::vector<Functor> legs;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    legs.push_back(compose(maps[i], out.target.injections[i]));
  }
  out.map = copair(out.source, legs, out.target.apex);
  return out;
}

PushoutResult pushout(Functor const& f, Functor const& g) {
  if (f.source != g.source && !(*f.source == *g.source)) {
    throw Error(ErrorCode::InvalidFunctor, "pushout: legs have different sources");
  }
  auto const& a = *f.source;
  auto const& b = *f.target;
  auto const& c = *g.target;
  std::size_t const nb = b.num_objects();
  std::size_t const n = nb + c.num_objects();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (ObjId o = 0; o < a.num_objects(); ++o) {
    std::size_t x = find_root(parent, f(o));
    std::size_t y = find_root(parent, nb + g(o));
    if (x != y) {
      parent[std::max(x, y)] = std::min(x, y);
    }
  }
  // Roots are the least members, so class order is first-member order.
  std::vector<std::string> objects;
  std::vector<ObjId> class_of(n);
  std::vector<ObjId> root_class(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find_root(parent, i);
    if (r == i) {
      root_class[i] = static_cast<ObjId>(objects.size());
      objects.push_back(i < nb ? "L." + b.object_name(static_cast<ObjId>(i))
                               : "R." + c.object_name(
                                            static_cast<ObjId>(i - nb)));
    }
    class_of[i] = root_class[r];
  }
  auto left_obj = [&](ObjId o) { return objects[class_of[o]]; };
  auto right_obj = [&](ObjId o) { return objects[class_of[nb + o]]; };
  auto left_gen = [&](GenId x) { return "L." + b.generator(x).name; };
  auto right_gen = [&](GenId x) { return "R." + c.generator(x).name; };

  std::vector<GeneratorSpec> gens;
  std::vector<RelationSpec> rels;
  std::vector<std::string> inv;
  for (GenId x = 0; x < b.num_generators(); ++x) {
    auto const& info = b.generator(x);
    if (!info.is_mate) {
      gens.push_back({left_gen(x), left_obj(info.src), left_obj(info.dst)});
    }
  }
  for (GenId x = 0; x < c.num_generators(); ++x) {
    auto const& info = c.generator(x);
    if (!info.is_mate) {
      gens.push_back({right_gen(x), right_obj(info.src), right_obj(info.dst)});
    }
  }
  for (auto const& r : b.relations()) {
    rels.push_back({translate(r.lhs, left_obj, left_gen),
                    translate(r.rhs, left_obj, left_gen)});
  }
  for (auto const& r : c.relations()) {
    rels.push_back({translate(r.lhs, right_obj, right_gen),
                    translate(r.rhs, right_obj, right_gen)});
  }
  for (GenId x = 0; x < a.num_generators(); ++x) {
    if (a.generator(x).is_mate) {
      continue;
    }
    if (!f.generator_map[x] || !g.generator_map[x]) {
      throw Error(ErrorCode::InvalidFunctor,
                  "pushout: generator '" + a.generator(x).name +
                      "' has no image");
    }
    Path lhs = translate(*f.generator_map[x], left_obj, left_gen);
    Path rhs = translate(*g.generator_map[x], right_obj, right_gen);
    if (lhs != rhs) {
      rels.push_back({std::move(lhs), std::move(rhs)});
    }
  }
  for (auto const& name : b.declared_invertible()) {
    inv.push_back("L." + name);
  }
  for (auto const& name : c.declared_invertible()) {
    inv.push_back("R." + name);
  }

  PushoutResult out;
  out.apex = share(FpCategory::build(objects, gens, rels, inv));
  out.f = f;
  out.g = g;
  out.inj_left.source = f.target;
  out.inj_left.target = out.apex;
  for (ObjId o = 0; o < nb; ++o) {
    out.inj_left.object_map.push_back(class_of[o]);
  }
  for (GenId x = 0; x < b.num_generators(); ++x) {
    out.inj_left.generator_map.emplace_back(out.apex->arrow_of(x));
  }
  auto const gb = static_cast<GenId>(b.num_generators());
  out.inj_right.source = g.target;
  out.inj_right.target = out.apex;
  for (ObjId o = 0; o < c.num_objects(); ++o) {
    out.inj_right.object_map.push_back(class_of[nb + o]);
  }
  for (GenId x = 0; x < c.num_generators(); ++x) {
    out.inj_right.generator_map.emplace_back(out.apex->arrow_of(gb + x));
  }
  return out;
}

std::optional<std::string> pushout_defect(PushoutResult const& p,
                                          std::size_t budget) {
  auto const rs = complete(*p.apex, budget);
  if (auto d = functor_defect(p.inj_left, rs)) {
    return "left injection: " + *d;
  }
  if (auto d = functor_defect(p.inj_right, rs)) {
    return "right injection: " + *d;
  }
  if (!provably_equal(compose(p.f, p.inj_left), compose(p.g, p.inj_right),
                      rs)) {
    return std::string("square does not commute");
  }
  return std::nullopt;
}

Functor mediator(PushoutResult const& p, Functor const& u, Functor const& v) {
  Functor m;
  m.source = p.apex;
  m.target = u.target;
  m.object_map.assign(p.apex->num_objects(), 0);
  for (ObjId o = 0; o < u.object_map.size(); ++o) {
    m.object_map[p.inj_left(o)] = u(o);
  }
  for (ObjId o = 0; o < v.object_map.size(); ++o) {
    m.object_map[p.inj_right(o)] = v(o);
  }
  m.generator_map = u.generator_map;
  m.generator_map.insert(m.generator_map.end(), v.generator_map.begin(),
                         v.generator_map.end());
  return m;
}

FpCategory chaotic(std::vector<std::string> const& objects) {
  if (objects.empty()) {
    throw Error(ErrorCode::EmptySet, "chaotic category on no objects");
  }
  auto name = [&](std::size_t i, std::size_t j) {
    return objects[i] + "->" + objects[j];
  };
  std::vector<GeneratorSpec> gens;
  std::vector<std::string> inv;
  std::vector<RelationSpec> rels;
  std::size_t const n = objects.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      gens.push_back({name(i, j), objects[i], objects[j]});
      inv.push_back(name(i, j));
      for (std::size_t k = j + 1; k < n; ++k) {
        rels.push_back({{objects[i], {name(i, j), name(j, k)}},
                        {objects[i], {name(i, k)}}});
      }
    }
  }
  return FpCategory::build(objects, gens, rels, inv);
}

Factorization cofibrant_replacement(Functor const& g) {
  auto const& x = *g.source;
  auto const& y = *g.target;
  std::set<ObjId> image(g.object_map.begin(), g.object_map.end());
  if (image.size() == g.object_map.size()) {
    return {g, identity_functor(g.target)};
  }

  if (x.num_generators() == 0 && y.num_generators() == 0) {
    std::vector<FpCatPtr> parts;
    std::vector<std::vector<ObjId>> fibre(y.num_objects());
    for (ObjId o = 0; o < x.num_objects(); ++o) {
      fibre[g(o)].push_back(o);
    }
    for (ObjId t = 0; t < y.num_objects(); ++t) {
      std::vector<std::string> names;
      for (ObjId o : fibre[t]) {
        names.push_back(x.object_name(o));
      }
      parts.push_back(share(names.empty() ? presentations::terminal(
                                                y.object_name(t))
                                          : chaotic(names)));
    }
    if (parts.size() == 1) {
      Functor cof;
      cof.source = g.source;
      cof.target = parts[0];
      for (ObjId k = 0; k < x.num_objects(); ++k) {
        cof.object_map.push_back(k);
      }
      return {std::move(cof), constant_functor(parts[0], g.target, 0)};
    }
    auto cp = coproduct(parts);
    Functor cof;
    cof.source = g.source;
    cof.target = cp.apex;
    cof.object_map.assign(x.num_objects(), 0);
    for (ObjId t = 0; t < y.num_objects(); ++t) {
      for (ObjId k = 0; k < fibre[t].size(); ++k) {
        cof.object_map[fibre[t][k]] = cp.injections[t](k);
      }
    }
    std::vector<Functor> legs;
    for (ObjId t = 0; t < y.num_objects(); ++t) {
      legs.push_back(constant_functor(parts[t], g.target, t));
    }
    return {std::move(cof), copair(cp, legs, g.target)};
  }

  // Mapping cylinder: Y, then X, then an isomorphism x -> g(x) per object.
  std::vector<std::string> objects;
  std::vector<GeneratorSpec> gens;
  std::vector<RelationSpec> rels;
  std::vector<std::string> inv;
  for (auto const& o : y.objects()) {
    objects.push_back("0." + o);
  }
  for (auto const& o : x.objects()) {
    objects.push_back("1." + o);
  }
  for (auto const& [cat, pre] :
       {std::pair{&y, std::string("0.")}, std::pair{&x, std::string("1.")}}) {
    for (auto const& s : cat->declared_generators()) {
      gens.push_back({pre + s.name, pre + s.src, pre + s.dst});
    }
    for (auto const& r : cat->declared_relations()) {
      rels.push_back({prefixed(r.lhs, pre), prefixed(r.rhs, pre)});
    }
    for (auto const& name : cat->declared_invertible()) {
      inv.push_back(pre + name);
    }
  }
  auto link = [&](ObjId o) { return "c." + x.object_name(o); };
  for (ObjId o = 0; o < x.num_objects(); ++o) {
    gens.push_back({link(o), "1." + x.object_name(o),
                    "0." + y.object_name(g(o))});
    inv.push_back(link(o));
  }
  for (GenId a = 0; a < x.num_generators(); ++a) {
    auto const& info = x.generator(a);
    if (info.is_mate) {
      continue;
    }
    if (!g.generator_map[a]) {
      throw Error(ErrorCode::InvalidFunctor,
                  "generator '" + info.name + "' has no image");
    }
    Path rhs = prefixed(y.path(*g.generator_map[a]), "0.");
    rhs.gens.insert(rhs.gens.begin(), link(info.src));
    rhs.at = "1." + x.object_name(info.src);
    rels.push_back(
        {{"1." + x.object_name(info.src), {"1." + info.name, link(info.dst)}},
         rhs});
  }
  auto cyl = share(FpCategory::build(objects, gens, rels, inv));

  auto const ny = static_cast<ObjId>(y.num_objects());
  auto const gy = static_cast<GenId>(y.num_generators());
  auto const gx = static_cast<GenId>(x.num_generators());
  Functor cof;
  cof.source = g.source;
  cof.target = cyl;
  for (ObjId o = 0; o < x.num_objects(); ++o) {
    cof.object_map.push_back(ny + o);
  }
  for (GenId a = 0; a < gx; ++a) {
    cof.generator_map.emplace_back(cyl->arrow_of(gy + a));
  }
  Functor col;
  col.source = cyl;
  col.target = g.target;
  for (ObjId o = 0; o < ny; ++o) {
    col.object_map.push_back(o);
  }
  for (ObjId o = 0; o < x.num_objects(); ++o) {
    col.object_map.push_back(g(o));
  }
  for (GenId a = 0; a < gy; ++a) {
    col.generator_map.emplace_back(y.arrow_of(a));
  }
  for (GenId a = 0; a < gx; ++a) {
    col.generator_map.push_back(g.generator_map[a]);
  }
  for (ObjId o = 0; o < x.num_objects(); ++o) {
    col.generator_map.emplace_back(y.identity(g(o)));
    col.generator_map.emplace_back(y.identity(g(o)));
  }
  return {std::move(cof), std::move(col)};
}

PushoutResult one_sided_homotopy_pushout(Functor const& f, Functor const& g) {
  return pushout(f, cofibrant_replacement(g).cofibration);
}

}  // namespace catcw
