#include "catcw/cw.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "catcw/finitize.hpp"
#include "catcw/model_structure.hpp"

namespace catcw {

namespace {

// Search length for inverses of non-invertible-marked generators.
constexpr std::size_t kInverseSearchLength = 8;

FpCategory one_component(OneComplexComponent const& comp) {
  std::vector<std::string> base_objects{"*"};
  base_objects.insert(base_objects.end(), comp.extra_objects.begin(),
                      comp.extra_objects.end());
  auto base = share(presentations::discrete(base_objects));

  std::vector<std::string> labels = comp.generators;
  labels.insert(labels.end(), comp.extra_objects.begin(),
                comp.extra_objects.end());
  std::vector<std::string> ends;
  std::vector<GeneratorSpec> gens;
  for (auto const& l : labels) {
    ends.push_back(l + ".0");
    ends.push_back(l + ".1");
    gens.push_back({l, l + ".0", l + ".1"});
  }
  auto spheres = share(presentations::discrete(ends));
  auto cells = share(FpCategory::build(ends, gens, {}, labels));

  std::vector<std::pair<std::string, std::string>> p;
  std::vector<std::pair<std::string, std::string>> r;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    bool const loop = i < comp.generators.size();
    p.emplace_back(labels[i] + ".0", "*");
    p.emplace_back(labels[i] + ".1", loop ? "*" : labels[i]);
    r.emplace_back(labels[i] + ".0", labels[i] + ".0");
    r.emplace_back(labels[i] + ".1", labels[i] + ".1");
  }
  return *pushout(make_functor(spheres, base, p, {}),
                  make_functor(spheres, cells, r, {}))
              .apex;
}

FpCategory join(std::vector<FpCategory> parts) {
  if (parts.size() == 1) {
    return std::move(parts[0]);
  }
  std::vector<FpCatPtr> shared;
  for (auto& p : parts) {
    shared.push_back(share(std::move(p)));
  }
  return *coproduct(shared).apex;
}

bool plain_name(std::string const& s) {
  if (s.empty() || s.ends_with(kInverseSuffix)) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](unsigned char ch) {
    return std::isalnum(ch) || ch == '_' || ch == '^' || ch == '.';
  });
}

// Inverse of `a` among short normal forms, if any.
std::optional<Arrow> find_inverse(FpCategory const& c,
                                  RewritingSystem const& rs, Arrow const& a) {
  ObjId const x = a.src;
  ObjId const y = c.target(a);
  for (auto const& h : enumerate_normal_forms(c, rs, y, x, kInverseSearchLength)) {
    if (provably_equal(rs, c.compose(a, h), c.identity(x)) &&
        provably_equal(rs, c.compose(h, a), c.identity(y))) {
      return h;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(CwKind k) {
  switch (k) {
    case CwKind::NotCW:
      return "NotCW";
    case CwKind::Dim0:
      return "Dim0";
    case CwKind::Dim1:
      return "Dim1";
    case CwKind::Dim2:
      return "Dim2";
  }
  return "?";
}

FpCategory sphere(unsigned n) {
  auto one = share(presentations::terminal());
  FpCatPtr s = coproduct({one, one}).apex;
  for (unsigned k = 1; k <= n; ++k) {
    auto collapse = constant_functor(s, one, 0);
    s = one_sided_homotopy_pushout(collapse, collapse).apex;
  }
  return *s;
}

FpCategory attach_cells(FpCatPtr const& base,
                        std::vector<Attachment> const& cells) {
  if (cells.empty()) {
    return *base;
  }
  auto one = share(presentations::terminal());
  std::vector<Functor> maps;
  std::vector<Functor> collapses;
  for (auto const& cell : cells) {
    if (cell.dim != cells.front().dim) {
      throw Error(ErrorCode::MixedDimensions,
                  "cells of dimensions " + std::to_string(cells.front().dim) +
                      " and " + std::to_string(cell.dim));
    }
    if (cell.map.target != base) {
      throw Error(ErrorCode::InvalidFunctor,
                  "attaching map does not land in the base");
    }
    maps.push_back(cell.map);
    collapses.push_back(constant_functor(cell.map.source, one, 0));
  }
  auto cm = coproduct_map(collapses);
  auto phi = copair(cm.source, maps, base);
  return *one_sided_homotopy_pushout(phi, cm.map).apex;
}

FpCategory build_one_complex(
    std::vector<OneComplexComponent> const& components) {
  std::vector<FpCategory> parts;
  for (auto const& comp : components) {
    parts.push_back(one_component(comp));
  }
  return join(std::move(parts));
}

FpCategory build_two_complex(GroupoidPresentation const& g) {
  auto s1 = share(sphere(1));
  std::vector<FpCategory> parts;
  for (auto const& comp : g.components) {
    auto free = share(one_component({comp.generators, comp.extra_objects}));
    ObjId const base = free->object("L.*");
    std::vector<Attachment> cells;
    for (auto const& word : comp.relations) {
      Arrow w = free->identity(base);
      for (auto const& token : word) {
        std::string name = token;
        bool inverse = false;
        if (token.ends_with(kInverseSuffix)) {
          name = token.substr(0, token.size() - kInverseSuffix.size());
          inverse = true;
        }
        if (std::find(comp.generators.begin(), comp.generators.end(), name) ==
            comp.generators.end()) {
          throw Error(ErrorCode::UnknownName,
                      "relation uses unknown generator '" + name + "'");
        }
        w.word.push_back(free->generator_id(
            "R." + name + (inverse ? std::string(kInverseSuffix) : "")));
      }
      Functor attach;
      attach.source = s1;
      attach.target = free;
      attach.object_map = {base};
      attach.generator_map = {w, std::nullopt};
      fill_formal_inverses(attach);
      cells.push_back({1, std::move(attach)});
    }
    parts.push_back(attach_cells(free, cells));
  }
  return join(std::move(parts));
}

GroupoidPresentation read_off_presentation(FiniteCategory const& c) {
  if (!is_groupoid(c)) {
    throw Error(ErrorCode::InvalidTable, "not a groupoid");
  }
  auto const cls = iso_classes(c);
  GroupoidPresentation out;
  for (ObjId b = 0; b < c.num_objects(); ++b) {
    if (cls[b] != b) {
      continue;
    }
    GroupoidComponent comp;
    std::set<std::string> taken{"*"};
    for (ObjId o = b + 1; o < c.num_objects(); ++o) {
      if (cls[o] == b) {
        comp.extra_objects.push_back(c.objects()[o]);
        taken.insert(c.objects()[o]);
      }
    }
    std::vector<MorId> auts;
    std::vector<std::string> names(c.num_morphisms());
    for (MorId m : c.hom(b, b)) {
      if (c.is_identity(m)) {
        continue;
      }
      std::string name = c.morphism(m).name;
      for (std::size_t k = 0; !plain_name(name) || taken.count(name) != 0;
           ++k) {
        name = "g" + std::to_string(k);
      }
      taken.insert(name);
      names[m] = name;
      auts.push_back(m);
      comp.generators.push_back(name);
    }
    for (MorId s : auts) {
      for (MorId t : auts) {
        MorId u = c.compose(s, t);
        SignedWord w{names[s], names[t]};
        if (!c.is_identity(u)) {
          w.push_back(names[u] + std::string(kInverseSuffix));
        }
        comp.relations.push_back(std::move(w));
      }
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

CwVerdict cw_classify(FiniteCategory const& c) {
  CwVerdict v;
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    auto inv = c.inverse(m);
    if (!inv) {
      v.kind = CwKind::NotCW;
      v.non_invertible = c.morphism(m).name;
      v.note = "morphism '" + c.morphism(m).name + "' is not invertible";
      return v;
    }
    v.inverses.emplace_back(c.morphism(m).name, c.morphism(*inv).name);
  }
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    if (c.hom(x, x).size() != 1) {
      v.kind = CwKind::Dim2;
      v.freeness = Decision::No;
      v.note = "object '" + c.objects()[x] +
               "' has a nontrivial finite automorphism group";
      return v;
    }
  }
  v.kind = CwKind::Dim0;
  v.freeness = Decision::Yes;
  v.free_generators.assign(c.num_objects() == 0 ? 0 : 1, {});
  v.note = "every automorphism group is trivial";
  return v;
}

CwVerdict cw_classify(FpCategory const& c, RewritingSystem const& rs) {
  CwVerdict v;
  std::optional<FinitizeResult> fin;
  auto finitized = [&]() -> Finitization const* {
    if (!rs.is_complete()) {
      return nullptr;
    }
    if (!fin) {
      fin = to_finite(c, rs, kDefaultHomBound);
    }
    return std::get_if<Finitization>(&*fin);
  };

  for (GenId g = 0; g < c.num_generators(); ++g) {
    auto const& info = c.generator(g);
    if (info.inverse) {
      v.inverses.emplace_back(info.name, c.generator(*info.inverse).name);
      continue;
    }
    if (auto h = find_inverse(c, rs, c.arrow_of(g))) {
      v.inverses.emplace_back(info.name, c.render(*h));
      continue;
    }
    if (auto const* f = finitized()) {
      auto finite = cw_classify(*f->category);
      if (finite.kind == CwKind::NotCW) {
        v.kind = CwKind::NotCW;
        v.non_invertible = info.name;
        v.note = "generator '" + info.name + "' is not invertible";
        return v;
      }
      v.inverses = std::move(finite.inverses);
      break;
    }
    throw Error(ErrorCode::NotDecided,
                "cannot decide whether '" + info.name + "' is invertible");
  }

  if (rs.is_complete() && c.num_objects() > 0 &&
      std::holds_alternative<Finitization>(to_finite(c, rs, 1))) {
    v.kind = CwKind::Dim0;
    v.freeness = Decision::Yes;
    v.note = "every hom-set has at most one morphism";
    return v;
  }

  bool syntactic = c.relations().empty();
  for (auto const& info : c.generators()) {
    syntactic = syntactic && info.inverse.has_value();
  }
  if (syntactic) {
    // Generators outside a spanning forest freely generate each component's
    // basepoint automorphisms.
    std::vector<ObjId> parent(c.num_objects());
    std::iota(parent.begin(), parent.end(), ObjId{0});
    auto root = [&](ObjId x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    std::vector<GenId> loops;
    for (GenId g = 0; g < c.num_generators(); ++g) {
      auto const& info = c.generator(g);
      if (info.is_mate) {
        continue;
      }
      ObjId a = root(info.src);
      ObjId b = root(info.dst);
      if (a == b) {
        loops.push_back(g);
      } else {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<std::size_t> slot(c.num_objects(), 0);
    for (ObjId x = 0; x < c.num_objects(); ++x) {
      if (root(x) == x) {
        slot[x] = v.free_generators.size();
        v.free_generators.emplace_back();
      }
    }
    bool any = false;
    for (GenId g : loops) {
      v.free_generators[slot[root(c.generator(g).src)]].push_back(
          c.generator(g).name);
      any = true;
    }
    v.kind = any ? CwKind::Dim1 : CwKind::Dim0;
    v.freeness = Decision::Yes;
    v.note = "invertible generators without relations";
    return v;
  }

  if (auto const* f = finitized()) {
    auto finite = cw_classify(*f->category);
    finite.inverses = std::move(v.inverses);
    return finite;
  }
  v.kind = CwKind::Dim2;
  v.freeness = Decision::Unknown;
  v.note = "freeness of automorphism groups not witnessed";
  return v;
}

}  // namespace catcw
