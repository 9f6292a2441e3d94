#include "catcw/functor.hpp"

#include <algorithm>
#include <tuple>

namespace catcw {

Arrow Functor::apply(Arrow const& a) const {
  Arrow out = target->identity(object_map.at(a.src));
  for (GenId g : a.word) {
    auto const& img = generator_map.at(g);
    if (!img) {
      throw Error(ErrorCode::InvalidFunctor,
                  "no image for generator '" + source->generator(g).name + "'");
    }
    out = target->compose(out, *img);
  }
  return out;
}

void fill_formal_inverses(Functor& f) {
  for (GenId g = 0; g < f.source->num_generators(); ++g) {
    auto const& info = f.source->generator(g);
    if (f.generator_map[g] || !info.inverse) {
      continue;
    }
    if (auto const& partner = f.generator_map[*info.inverse]) {
      f.generator_map[g] = f.target->formal_inverse(*partner);
    }
  }
}

Functor make_functor(
    FpCatPtr source, FpCatPtr target,
    std::vector<std::pair<std::string, std::string>> const& objects,
    std::vector<std::pair<std::string, Path>> const& generators) {
  Functor f;
  f.source = std::move(source);
  f.target = std::move(target);
  std::vector<std::optional<ObjId>> obj(f.source->num_objects());
  for (auto const& [from, to] : objects) {
    obj[f.source->object(from)] = f.target->object(to);
  }
  for (ObjId o = 0; o < obj.size(); ++o) {
    if (!obj[o]) {
      throw Error(ErrorCode::InvalidFunctor,
                  "object '" + f.source->object_name(o) + "' is not mapped");
    }
    f.object_map.push_back(*obj[o]);
  }
  f.generator_map.assign(f.source->num_generators(), std::nullopt);
  for (auto const& [name, path] : generators) {
    Path p = path;
    if (p.gens.empty() && p.at.empty()) {
      throw Error(ErrorCode::BadPath, "image of '" + name + "' has no object");
    }
    f.generator_map[f.source->generator_id(name)] = f.target->arrow(p);
  }
  fill_formal_inverses(f);
  for (GenId g = 0; g < f.source->num_generators(); ++g) {
    auto const& info = f.source->generator(g);
    if (!f.generator_map[g] && !info.is_mate) {
      throw Error(ErrorCode::InvalidFunctor,
                  "generator '" + info.name + "' is not mapped");
    }
  }
  return f;
}

Functor identity_functor(FpCatPtr cat) {
  Functor f;
  f.source = cat;
  f.target = cat;
  for (ObjId o = 0; o < cat->num_objects(); ++o) {
    f.object_map.push_back(o);
  }
  for (GenId g = 0; g < cat->num_generators(); ++g) {
    f.generator_map.emplace_back(cat->arrow_of(g));
  }
  return f;
}

Functor compose(Functor const& first, Functor const& second) {
  Functor f;
  f.source = first.source;
  f.target = second.target;
  for (ObjId o : first.object_map) {
    f.object_map.push_back(second(o));
  }
  for (auto const& img : first.generator_map) {
    if (!img) {
      f.generator_map.emplace_back(std::nullopt);
      continue;
    }
    bool missing = std::any_of(img->word.begin(), img->word.end(),
                               [&](GenId g) { return !second.generator_map[g]; });
    if (missing) {
      f.generator_map.emplace_back(std::nullopt);
    } else {
      f.generator_map.emplace_back(second.apply(*img));
    }
  }
  return f;
}

Functor constant_functor(FpCatPtr source, FpCatPtr target, ObjId object) {
  Functor f;
  f.object_map.assign(source->num_objects(), object);
  f.generator_map.assign(source->num_generators(), target->identity(object));
  f.source = std::move(source);
  f.target = std::move(target);
  return f;
}

std::optional<std::string> functor_defect(Functor const& f,
                                          RewritingSystem const& target_rs) {
  auto const& src = *f.source;
  auto const& tgt = *f.target;
  if (f.object_map.size() != src.num_objects() ||
      f.generator_map.size() != src.num_generators()) {
    return "object or generator map has the wrong size";
  }
  for (ObjId o : f.object_map) {
    if (o >= tgt.num_objects()) {
      return "object map leaves the target";
    }
  }
  for (GenId g = 0; g < src.num_generators(); ++g) {
    auto const& info = src.generator(g);
    auto const& img = f.generator_map[g];
    if (!img) {
      return "generator '" + info.name + "' has no image";
    }
    if (!tgt.is_valid(*img) || img->src != f.object_map[info.src] ||
        tgt.target(*img) != f.object_map[info.dst]) {
      return "image of '" + info.name + "' has the wrong endpoints";
    }
  }
  for (auto const& r : src.all_relations()) {
    if (!provably_equal(target_rs, f.apply(r.lhs), f.apply(r.rhs))) {
      return "relation " + src.render(r.lhs) + " = " + src.render(r.rhs) +
             " is not preserved";
    }
  }
  return std::nullopt;
}

bool check_functor(Functor const& f, RewritingSystem const& target_rs) {
  return !functor_defect(f, target_rs).has_value();
}

bool provably_equal(Functor const& a, Functor const& b,
                    RewritingSystem const& target_rs) {
  if (a.object_map != b.object_map ||
      a.generator_map.size() != b.generator_map.size()) {
    return false;
  }
  for (std::size_t g = 0; g < a.generator_map.size(); ++g) {
    auto const& x = a.generator_map[g];
    auto const& y = b.generator_map[g];
    if (!x || !y) {
      if (x.has_value() != y.has_value()) {
        return false;
      }
      continue;
    }
    if (!provably_equal(target_rs, *x, *y)) {
      return false;
    }
  }
  return true;
}

bool check_functor(Functor const& f) {
  return check_functor(f, complete(*f.target));
}

std::optional<std::string> functor_defect(FiniteFunctor const& f) {
  auto const& src = *f.source;
  auto const& tgt = *f.target;
  if (f.object_map.size() != src.num_objects() ||
      f.morphism_map.size() != src.num_morphisms()) {
    return "object or morphism map has the wrong size";
  }
  for (ObjId o = 0; o < src.num_objects(); ++o) {
    if (f.object_map[o] >= tgt.num_objects()) {
      return "object map leaves the target";
    }
    if (f.morphism_map[src.identity(o)] != tgt.identity(f.object_map[o])) {
      return "identity of '" + src.objects()[o] + "' is not preserved";
    }
  }
  for (MorId m = 0; m < src.num_morphisms(); ++m) {
    MorId img = f.morphism_map[m];
    if (img >= tgt.num_morphisms() ||
        tgt.src(img) != f.object_map[src.src(m)] ||
        tgt.dst(img) != f.object_map[src.dst(m)]) {
      return "image of '" + src.morphism(m).name + "' has the wrong endpoints";
    }
  }
  for (MorId a = 0; a < src.num_morphisms(); ++a) {
    for (ObjId z = 0; z < src.num_objects(); ++z) {
      for (MorId b : src.hom(src.dst(a), z)) {
        if (f.morphism_map[src.compose(a, b)] !=
            tgt.compose(f.morphism_map[a], f.morphism_map[b])) {
          return "composite of (" + src.morphism(a).name + ", " +
                 src.morphism(b).name + ") is not preserved";
        }
      }
    }
  }
  return std::nullopt;
}

bool check_functor(FiniteFunctor const& f) {
  return !functor_defect(f).has_value();
}

FiniteFunctor identity_functor(FinCatPtr cat) {
  FiniteFunctor f;
  for (ObjId o = 0; o < cat->num_objects(); ++o) {
    f.object_map.push_back(o);
  }
  for (MorId m = 0; m < cat->num_morphisms(); ++m) {
    f.morphism_map.push_back(m);
  }
  f.source = cat;
  f.target = std::move(cat);
  return f;
}

FiniteFunctor compose(FiniteFunctor const& first, FiniteFunctor const& second) {
  FiniteFunctor f;
  f.source = first.source;
  f.target = second.target;
  for (ObjId o : first.object_map) {
    f.object_map.push_back(second.object_map.at(o));
  }
  for (MorId m : first.morphism_map) {
    f.morphism_map.push_back(second.morphism_map.at(m));
  }
  return f;
}

FiniteFunctor to_terminal(FinCatPtr source, FinCatPtr terminal) {
  if (terminal->num_objects() != 1 || terminal->num_morphisms() != 1) {
    throw Error(ErrorCode::InvalidFunctor, "target is not terminal");
  }
  FiniteFunctor f;
  f.object_map.assign(source->num_objects(), 0);
  f.morphism_map.assign(source->num_morphisms(), 0);
  f.source = std::move(source);
  f.target = std::move(terminal);
  return f;
}

FiniteFunctor finitize(Functor const& f, Finitization const& source,
                       Finitization const& target,
                       RewritingSystem const& target_rs) {
  FiniteFunctor out;
  out.source = source.category;
  out.target = target.category;
  out.object_map = f.object_map;
  for (auto const& nf : source.normal_forms) {
    Arrow img = f.apply(nf);
    img.word = target_rs.reduce(img.word);
    auto id = target.locate(img);
    if (!id) {
      throw Error(ErrorCode::InvalidFunctor,
                  "image " + f.target->render(img) + " is not a normal form");
    }
    out.morphism_map.push_back(*id);
  }
  return out;
}

MorId evaluate(FpCategory const& src, FiniteCategory const& tgt,
               FiniteModel const& m, Arrow const& a) {
  MorId out = tgt.identity(m.object_map.at(a.src));
  for (GenId g : a.word) {
    out = tgt.compose(out, m.generator_images.at(g));
    if (out == kNoMorphism) {
      throw Error(ErrorCode::InvalidFunctor,
                  "image of " + src.render(a) + " does not compose");
    }
  }
  return out;
}

Functor to_functor(FiniteModel const& m, FpCatPtr source, FpCatPtr target,
                   Finitization const& target_fin) {
  Functor f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.object_map = m.object_map;
  for (MorId img : m.generator_images) {
    f.generator_map.emplace_back(target_fin.normal_forms.at(img));
  }
  return f;
}

namespace {

class ModelSearch {
 public:
  ModelSearch(FpCategory const& src, FiniteCategory const& tgt,
              std::function<bool(FiniteModel const&)> const& visit)
      : src_(src), tgt_(tgt), visit_(visit) {
    // Order of assignment: declared generators; a mate is assigned together
    // with its partner.
    std::vector<std::size_t> step(src.num_generators());
    for (GenId g = 0; g < src.num_generators(); ++g) {
      if (src.generator(g).is_mate) {
        continue;
      }
      step[g] = order_.size();
      if (auto inv = src.generator(g).inverse) {
        step[*inv] = order_.size();
      }
      order_.push_back(g);
    }
    ready_.assign(order_.size() + 1, {});
    for (auto const& r : src.all_relations()) {
      std::size_t last = 0;
      bool any = false;
      for (auto const* w : {&r.lhs.word, &r.rhs.word}) {
        for (GenId g : *w) {
          last = std::max(last, step[g]);
          any = true;
        }
      }
      ready_[any ? last + 1 : 0].push_back(r);
    }
    model_.object_map.assign(src.num_objects(), 0);
    model_.generator_images.assign(src.num_generators(), kNoMorphism);
  }

  void run() {
    if (src_.num_objects() > 0 && tgt_.num_objects() == 0) {
      return;
    }
    assign_object(0);
  }

 private:
  bool assign_object(ObjId o) {
    if (o == src_.num_objects()) {
      return relations_hold(0) ? assign_generator(0) : true;
    }
    for (ObjId t = 0; t < tgt_.num_objects(); ++t) {
      model_.object_map[o] = t;
      if (!assign_object(o + 1)) {
        return false;
      }
    }
    return true;
  }

  bool assign_generator(std::size_t i) {
    if (i == order_.size()) {
      return visit_(model_);
    }
    GenId g = order_[i];
    auto const& info = src_.generator(g);
    for (MorId m : tgt_.hom(model_.object_map[info.src],
                            model_.object_map[info.dst])) {
      model_.generator_images[g] = m;
      if (info.inverse) {
        auto inv = tgt_.inverse(m);
        if (!inv) {
          continue;
        }
        model_.generator_images[*info.inverse] = *inv;
      }
      if (relations_hold(i + 1) && !assign_generator(i + 1)) {
        return false;
      }
    }
    return true;
  }

  bool relations_hold(std::size_t stage) const {
    for (auto const& r : ready_[stage]) {
      if (evaluate(src_, tgt_, model_, r.lhs) !=
          evaluate(src_, tgt_, model_, r.rhs)) {
        return false;
      }
    }
    return true;
  }

  FpCategory const& src_;
  FiniteCategory const& tgt_;
  std::function<bool(FiniteModel const&)> const& visit_;
  std::vector<GenId> order_;
  std::vector<std::vector<Relation>> ready_;
  FiniteModel model_;
};

}  // namespace

void for_each_model(FpCategory const& src, FiniteCategory const& tgt,
                    std::function<bool(FiniteModel const&)> const& visit) {
  ModelSearch(src, tgt, visit).run();
}

Derivation derive_generators(FiniteCategory const& c) {
  Derivation d;
  std::size_t const n = c.num_morphisms();
  std::vector<bool> reached(n, false);
  std::vector<MorId> known;
  for (MorId id : c.identities()) {
    reached[id] = true;
  }
  // Saturates `known` under composition starting from index `from`.
  auto saturate = [&](std::size_t from) {
    for (std::size_t i = from; i < known.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (auto [a, b] : {std::pair{known[i], known[j]},
                            std::pair{known[j], known[i]}}) {
          if (c.dst(a) != c.src(b)) {
            continue;
          }
          MorId h = c.compose(a, b);
          if (!reached[h]) {
            reached[h] = true;
            known.push_back(h);
            d.composites.emplace_back(h, a, b);
          }
        }
      }
    }
  };
  for (MorId m = 0; m < n; ++m) {
    if (reached[m]) {
      continue;
    }
    reached[m] = true;
    d.generators.push_back(m);
    std::size_t from = known.size();
    known.push_back(m);
    saturate(from);
  }
  return d;
}

void for_each_functor(
    FinCatPtr const& src, FinCatPtr const& tgt,
    std::function<bool(FiniteFunctor const&)> const& visit,
    std::size_t product_bound,
    std::function<bool(std::vector<ObjId> const&)> const& object_filter) {
  std::size_t const ns = src->num_objects();
  std::size_t const nt = tgt->num_objects();
  if (ns > 0 && nt == 0) {
    return;
  }
  // Object maps are enumerated as base-nt odometers.
  std::size_t num_maps = 1;
  for (std::size_t i = 0; i < ns; ++i) {
    num_maps *= nt;
    if (num_maps > product_bound) {
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  std::to_string(nt) + "^" + std::to_string(ns) +
                      " object maps");
    }
  }
  Derivation const d = derive_generators(*src);

  auto product_for = [&](std::vector<ObjId> const& om) {
    std::size_t p = 1;
    for (MorId g : d.generators) {
      p *= tgt->hom(om[src->src(g)], om[src->dst(g)]).size();
      if (p > product_bound) {
        return p;
      }
    }
    return p;
  };
  auto next_map = [&](std::vector<ObjId>& om) {
    for (std::size_t i = ns; i-- > 0;) {
      if (++om[i] < nt) {
        return true;
      }
      om[i] = 0;
    }
    return false;
  };

  std::vector<ObjId> om(ns, 0);
  std::size_t total = 0;
  do {
    if (object_filter && !object_filter(om)) {
      continue;
    }
    total += product_for(om);
    if (total > product_bound) {
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  "more than " + std::to_string(product_bound) +
                      " candidate functors");
    }
  } while (ns > 0 && next_map(om));

  FiniteFunctor f;
  f.source = src;
  f.target = tgt;
  f.morphism_map.assign(src->num_morphisms(), kNoMorphism);
  std::fill(om.begin(), om.end(), 0);
  do {
    if (object_filter && !object_filter(om)) {
      continue;
    }
    f.object_map = om;
    std::vector<std::vector<MorId> const*> choices;
    bool empty = false;
    for (MorId g : d.generators) {
      choices.push_back(&tgt->hom(om[src->src(g)], om[src->dst(g)]));
      empty = empty || choices.back()->empty();
    }
    if (empty) {
      continue;
    }
    for (ObjId o = 0; o < ns; ++o) {
      f.morphism_map[src->identity(o)] = tgt->identity(om[o]);
    }
    std::vector<std::size_t> pick(d.generators.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < pick.size(); ++i) {
        f.morphism_map[d.generators[i]] = (*choices[i])[pick[i]];
      }
      for (auto const& [h, a, b] : d.composites) {
        f.morphism_map[h] = tgt->compose(f.morphism_map[a], f.morphism_map[b]);
      }
      if (!functor_defect(f) && !visit(f)) {
        return;
      }
      std::size_t i = pick.size();
      while (i-- > 0) {
        if (++pick[i] < choices[i]->size()) {
          break;
        }
        pick[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) {
        break;
      }
    }
  } while (ns > 0 && next_map(om));
}

}  // namespace catcw
