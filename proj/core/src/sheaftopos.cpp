#include "catcw/sheaftopos.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "catcw/model_structure.hpp"

namespace catcw {

namespace {

// Covers are enumerated over subsets of the proper subopens of an open.
constexpr std::size_t kMaxCoverCandidates = 16;

bool contains(PointSet u, PointSet v) { return (v & ~u) == 0; }

std::vector<std::size_t> digits(std::size_t code, std::size_t radix,
                                std::size_t k) {
  std::vector<std::size_t> d(k);
  for (std::size_t i = 0; i < k; ++i) {
    d[i] = code % radix;
    code /= radix;
  }
  return d;
}

// Functor between powers A^k_src -> B^parent.size(): output digit d is
// g applied to input digit parent[d] (the identity when g is null).
FiniteFunctor digitwise(FinCatPtr src, FinCatPtr tgt, FiniteCategory const& a,
                        FiniteCategory const& b, std::size_t k_src,
                        std::vector<std::size_t> const& parent,
                        FiniteFunctor const* g) {
  auto recode = [&](std::size_t code, std::size_t in_radix,
                    std::size_t out_radix, auto const& map) {
    auto in = digits(code, in_radix, k_src);
    std::size_t out = 0;
    std::size_t place = 1;
    for (std::size_t p : parent) {
      out += map(in[p]) * place;
      place *= out_radix;
    }
    return out;
  };
  FiniteFunctor f;
  f.source = src;
  f.target = tgt;
  for (std::size_t c = 0; c < src->num_objects(); ++c) {
    f.object_map.push_back(static_cast<ObjId>(
        recode(c, a.num_objects(), b.num_objects(), [&](std::size_t x) {
          return g ? std::size_t{g->object_map[x]} : x;
        })));
  }
  for (std::size_t c = 0; c < src->num_morphisms(); ++c) {
    f.morphism_map.push_back(static_cast<MorId>(
        recode(c, a.num_morphisms(), b.num_morphisms(), [&](std::size_t m) {
          return g ? std::size_t{g->morphism_map[m]} : m;
        })));
  }
  return f;
}

bool same_maps(FiniteFunctor const& a, FiniteFunctor const& b) {
  return a.object_map == b.object_map && a.morphism_map == b.morphism_map;
}

// Sheaf condition for one cover, on objects or on morphisms.
std::optional<std::string> cover_defect(CatPresheaf const& f, std::size_t ui,
                                        std::vector<std::size_t> const& cover,
                                        bool morphisms) {
  auto const& sp = f.space;
  PointSet const u = sp.opens()[ui];
  auto size = [&](std::size_t oi) {
    auto const& c = *f.sections[oi];
    return morphisms ? c.num_morphisms() : c.num_objects();
  };
  auto image = [&](FiniteFunctor const& r, std::size_t e) -> std::size_t {
    return morphisms ? r.morphism_map[e] : r.object_map[e];
  };
  char const* what = morphisms ? "morphisms" : "objects";

  std::size_t const n = size(ui);
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> family;
    for (std::size_t vi : cover) {
      family.push_back(image(f.restriction(u, sp.opens()[vi]), s));
    }
    if (!seen.insert(family).second) {
      return std::string("two ") + what + " of F(" + sp.render(u) +
             ") agree on a cover";
    }
  }

  std::vector<std::size_t> chosen(cover.size());
  std::size_t families = 0;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (families > n) {
      return;
    }
    if (i == cover.size()) {
      ++families;
      return;
    }
    PointSet const vi = sp.opens()[cover[i]];
    for (std::size_t s = 0; s < size(cover[i]); ++s) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        PointSet const vj = sp.opens()[cover[j]];
        PointSet const w = vi & vj;
        ok = image(f.restriction(vi, w), s) ==
             image(f.restriction(vj, w), chosen[j]);
      }
      if (ok) {
        chosen[i] = s;
        extend(i + 1);
      }
    }
  };
  extend(0);
  if (families != n) {
    std::string names;
    for (std::size_t vi : cover) {
      names += (names.empty() ? "" : " ") + sp.render(sp.opens()[vi]);
    }
    return std::string("compatible families of ") + what + " over {" + names +
           "} do not match F(" + sp.render(u) + ")";
  }
  return std::nullopt;
}

}  // namespace

FiniteSpace FiniteSpace::build(
    std::vector<std::string> points,
    std::vector<std::vector<std::string>> const& opens) {
  if (points.size() > kMaxPoints) {
    throw Error(ErrorCode::InvalidSpace,
                "at most " + std::to_string(kMaxPoints) + " points");
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!index.emplace(points[i], i).second) {
      throw Error(ErrorCode::DuplicateName, "point '" + points[i] + "'");
    }
  }
  PointSet const full =
      points.size() == kMaxPoints ? ~PointSet{0}
                                  : (PointSet{1} << points.size()) - 1;
  std::set<PointSet> sets;
  for (auto const& open : opens) {
    PointSet s = 0;
    for (auto const& name : open) {
      auto it = index.find(name);
      if (it == index.end()) {
        throw Error(ErrorCode::UnknownName, "point '" + name + "'");
      }
      s |= PointSet{1} << it->second;
    }
    sets.insert(s);
  }
  FiniteSpace x;
  x.points_ = std::move(points);
  if (sets.count(0) == 0) {
    throw Error(ErrorCode::InvalidSpace, "the empty set is not open");
  }
  if (sets.count(full) == 0) {
    throw Error(ErrorCode::InvalidSpace, "the whole space is not open");
  }
  for (PointSet a : sets) {
    for (PointSet b : sets) {
      if (sets.count(a | b) == 0 || sets.count(a & b) == 0) {
        x.opens_.assign(sets.begin(), sets.end());
        throw Error(ErrorCode::InvalidSpace,
                    "opens " + x.render(a) + " and " + x.render(b) +
                        " are not closed under union and intersection");
      }
    }
  }
  x.opens_.assign(sets.begin(), sets.end());
  std::stable_sort(x.opens_.begin(), x.opens_.end(),
                   [](PointSet a, PointSet b) {
                     return std::popcount(a) < std::popcount(b);
                   });
  return x;
}

bool FiniteSpace::is_open(PointSet u) const {
  return std::find(opens_.begin(), opens_.end(), u) != opens_.end();
}

std::size_t FiniteSpace::index(PointSet u) const {
  auto it = std::find(opens_.begin(), opens_.end(), u);
  if (it == opens_.end()) {
    throw Error(ErrorCode::NotAnOpen, render(u) + " is not open");
  }
  return static_cast<std::size_t>(it - opens_.begin());
}

PointSet FiniteSpace::set(std::vector<std::string> const& names) const {
  PointSet s = 0;
  for (auto const& name : names) {
    auto it = std::find(points_.begin(), points_.end(), name);
    if (it == points_.end()) {
      throw Error(ErrorCode::UnknownName, "point '" + name + "'");
    }
    s |= PointSet{1} << (it - points_.begin());
  }
  return s;
}

std::vector<std::string> FiniteSpace::names(PointSet u) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if ((u >> i) & 1U) {
      out.push_back(points_[i]);
    }
  }
  return out;
}

std::string FiniteSpace::render(PointSet u) const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < kMaxPoints; ++i) {
    if ((u >> i) & 1U) {
      s += (first ? "" : ",") +
           (i < points_.size() ? points_[i] : "#" + std::to_string(i));
      first = false;
    }
  }
  return s + "}";
}

PointSet FiniteSpace::minimal_open(std::size_t p) const {
  PointSet m = full();
  for (PointSet u : opens_) {
    if ((u >> p) & 1U) {
      m &= u;
    }
  }
  return m;
}

std::vector<PointSet> FiniteSpace::connected_components(PointSet u) const {
  (void)index(u);
  std::vector<std::size_t> parent(points_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (std::size_t p = 0; p < points_.size(); ++p) {
    if (((u >> p) & 1U) == 0) {
      continue;
    }
    PointSet const m = minimal_open(p);
    for (std::size_t q = 0; q < points_.size(); ++q) {
      if ((m >> q) & 1U) {
        parent[root(q)] = root(p);
      }
    }
  }
  std::vector<PointSet> comps;
  std::vector<std::size_t> slot(points_.size(), points_.size());
  for (std::size_t p = 0; p < points_.size(); ++p) {
    if (((u >> p) & 1U) == 0) {
      continue;
    }
    std::size_t const r = root(p);
    if (slot[r] == points_.size()) {
      slot[r] = comps.size();
      comps.push_back(0);
    }
    comps[slot[r]] |= PointSet{1} << p;
  }
  return comps;
}

bool FiniteSpace::is_connected() const {
  return connected_components(full()).size() == 1;
}

namespace spaces {

FiniteSpace point(std::string name) {
  return FiniteSpace::build({name}, {{}, {name}});
}

FiniteSpace discrete(std::vector<std::string> points) {
  std::vector<std::vector<std::string>> opens;
  std::size_t const n = points.size();
  if (n >= 16) {
    throw Error(ErrorCode::InvalidSpace, "too many points for a discrete space");
  }
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
    std::vector<std::string> open;
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i) & 1U) {
        open.push_back(points[i]);
      }
    }
    opens.push_back(std::move(open));
  }
  return FiniteSpace::build(std::move(points), opens);
}

FiniteSpace sierpinski() {
  return FiniteSpace::build({"u", "v"}, {{}, {"u"}, {"u", "v"}});
}

}  // namespace spaces

FinCatPtr const& CatPresheaf::section(PointSet u) const {
  return sections.at(space.index(u));
}

FiniteFunctor const& CatPresheaf::restriction(PointSet u, PointSet v) const {
  std::size_t const ui = space.index(u);
  std::size_t const vi = space.index(v);
  if (!contains(u, v)) {
    throw Error(ErrorCode::InvalidFunctor,
                space.render(v) + " is not contained in " + space.render(u));
  }
  auto it = restrictions.find({ui, vi});
  if (it == restrictions.end()) {
    throw Error(ErrorCode::InvalidFunctor, "no restriction from " +
                                               space.render(u) + " to " +
                                               space.render(v));
  }
  return it->second;
}

std::optional<std::string> presheaf_defect(CatPresheaf const& f) {
  auto const& opens = f.space.opens();
  if (f.sections.size() != opens.size()) {
    return "one section per open is required";
  }
  auto label = [&](PointSet u, PointSet v) {
    return f.space.render(u) + " -> " + f.space.render(v);
  };
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      if (!contains(opens[i], opens[j])) {
        continue;
      }
      auto it = f.restrictions.find({i, j});
      if (it == f.restrictions.end()) {
        return "missing restriction " + label(opens[i], opens[j]);
      }
      auto const& r = it->second;
      if (!(*r.source == *f.sections[i]) || !(*r.target == *f.sections[j])) {
        return "restriction " + label(opens[i], opens[j]) +
               " has the wrong endpoints";
      }
      if (auto d = functor_defect(r)) {
        return "restriction " + label(opens[i], opens[j]) + ": " + *d;
      }
      if (i == j && !same_maps(r, identity_functor(f.sections[i]))) {
        return "restriction to " + f.space.render(opens[i]) +
               " itself is not the identity";
      }
    }
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      for (std::size_t k = 0; k < opens.size(); ++k) {
        if (!contains(opens[i], opens[j]) || !contains(opens[j], opens[k])) {
          continue;
        }
        auto two = compose(f.restrictions.at({i, j}), f.restrictions.at({j, k}));
        if (!same_maps(two, f.restrictions.at({i, k}))) {
          return "restrictions " + label(opens[i], opens[j]) + " -> " +
                 f.space.render(opens[k]) + " do not compose";
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> gluing_defect(CatPresheaf const& f) {
  auto const& opens = f.space.opens();
  for (std::size_t ui = 0; ui < opens.size(); ++ui) {
    PointSet const u = opens[ui];
    std::vector<std::size_t> subs;
    for (std::size_t vi = 0; vi < opens.size(); ++vi) {
      if (vi != ui && contains(u, opens[vi])) {
        subs.push_back(vi);
      }
    }
    if (subs.size() > kMaxCoverCandidates) {
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  f.space.render(u) + " has too many subopens");
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << subs.size()); ++mask) {
      std::vector<std::size_t> cover;
      PointSet covered = 0;
      for (std::size_t b = 0; b < subs.size(); ++b) {
        if ((mask >> b) & 1U) {
          cover.push_back(subs[b]);
          covered |= opens[subs[b]];
        }
      }
      if (covered != u) {
        continue;
      }
      for (bool morphisms : {false, true}) {
        if (auto d = cover_defect(f, ui, cover, morphisms)) {
          return d;
        }
      }
    }
  }
  return std::nullopt;
}

CatSheaf make_sheaf(CatPresheaf f) {
  if (auto d = presheaf_defect(f)) {
    throw Error(ErrorCode::InvalidFunctor, *d);
  }
  CatSheaf s;
  s.gluing_failure = gluing_defect(f);
  s.presheaf = std::move(f);
  return s;
}

CatPresheaf constantify(FinCatPtr const& a, FiniteSpace const& x) {
  CatPresheaf f;
  f.space = x;
  auto one = share(finite::terminal());
  auto const& opens = x.opens();
  for (PointSet u : opens) {
    f.sections.push_back(u == 0 ? one : a);
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      if (!contains(opens[i], opens[j])) {
        continue;
      }
      f.restrictions.emplace(
          std::make_pair(i, j),
          opens[j] == 0 ? to_terminal(f.sections[i], one)
                        : identity_functor(f.sections[i]));
    }
  }
  return f;
}

CatSheaf sheafify_constant(FinCatPtr const& a, FiniteSpace const& x) {
  CatPresheaf f;
  f.space = x;
  auto const& opens = x.opens();
  std::vector<std::vector<PointSet>> comps;
  for (PointSet u : opens) {
    comps.push_back(x.connected_components(u));
    f.sections.push_back(comps.back().size() == 1
                             ? a
                             : share(finite::power(*a, comps.back().size())));
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      if (!contains(opens[i], opens[j])) {
        continue;
      }
      std::vector<std::size_t> parent;
      for (PointSet d : comps[j]) {
        auto it = std::find_if(comps[i].begin(), comps[i].end(),
                               [d](PointSet c) { return contains(c, d); });
        parent.push_back(static_cast<std::size_t>(it - comps[i].begin()));
      }
      f.restrictions.emplace(
          std::make_pair(i, j),
          digitwise(f.sections[i], f.sections[j], *a, *a, comps[i].size(),
                    parent, nullptr));
    }
  }
  CatSheaf s = make_sheaf(std::move(f));
  s.constant_value = a;
  return s;
}

FinCatPtr global_sections(CatSheaf const& f) {
  return f.presheaf.section(f.space().full());
}

std::optional<std::string> iso_defect(FiniteIsoCertificate const& cert) {
  auto const& f = cert.forward;
  auto const& g = cert.backward;
  if (!(*f.source == *g.target) || !(*f.target == *g.source)) {
    return "forward and backward functors are not opposite";
  }
  if (auto d = functor_defect(f)) {
    return "forward: " + *d;
  }
  if (auto d = functor_defect(g)) {
    return "backward: " + *d;
  }
  if (!same_maps(compose(f, g), identity_functor(f.source)) ||
      !same_maps(compose(g, f), identity_functor(f.target))) {
    return "round trip is not the identity";
  }
  return std::nullopt;
}

namespace {

// The inverse of a functor bijective on objects and morphisms.
std::optional<FiniteFunctor> invert(FiniteFunctor const& f) {
  if (f.source->num_objects() != f.target->num_objects() ||
      f.source->num_morphisms() != f.target->num_morphisms()) {
    return std::nullopt;
  }
  FiniteFunctor g;
  g.source = f.target;
  g.target = f.source;
  g.object_map.assign(f.target->num_objects(), kNoMorphism);
  g.morphism_map.assign(f.target->num_morphisms(), kNoMorphism);
  for (ObjId x = 0; x < f.object_map.size(); ++x) {
    if (g.object_map[f.object_map[x]] != kNoMorphism) {
      return std::nullopt;
    }
    g.object_map[f.object_map[x]] = x;
  }
  for (MorId m = 0; m < f.morphism_map.size(); ++m) {
    if (g.morphism_map[f.morphism_map[m]] != kNoMorphism) {
      return std::nullopt;
    }
    g.morphism_map[f.morphism_map[m]] = m;
  }
  return g;
}

}  // namespace

std::optional<FiniteIsoCertificate> find_isomorphism(FinCatPtr const& a,
                                                     FinCatPtr const& b,
                                                     std::size_t product_bound) {
  if (a->num_objects() != b->num_objects() ||
      a->num_morphisms() != b->num_morphisms()) {
    return std::nullopt;
  }
  std::optional<FiniteIsoCertificate> out;
  for_each_functor(
      a, b,
      [&](FiniteFunctor const& f) {
        if (auto g = invert(f)) {
          out = FiniteIsoCertificate{f, std::move(*g)};
          return false;
        }
        return true;
      },
      product_bound,
      [&](std::vector<ObjId> const& objects) {
        std::vector<bool> hit(b->num_objects(), false);
        for (ObjId y : objects) {
          if (hit[y]) {
            return false;
          }
          hit[y] = true;
        }
        return true;
      });
  return out;
}

UnitVerdict unit_check(FinCatPtr const& a, FiniteSpace const& x) {
  auto sheaf = sheafify_constant(a, x);
  auto g = global_sections(sheaf);
  std::size_t const k = x.connected_components(x.full()).size();
  auto diagonal = digitwise(a, g, *a, *a, 1, std::vector<std::size_t>(k, 0),
                            nullptr);
  if (a->num_objects() != g->num_objects()) {
    return UnitFailure{std::to_string(a->num_objects()) + " objects vs " +
                       std::to_string(g->num_objects())};
  }
  if (a->num_morphisms() != g->num_morphisms()) {
    return UnitFailure{std::to_string(a->num_morphisms()) + " morphisms vs " +
                       std::to_string(g->num_morphisms())};
  }
  auto back = invert(diagonal);
  if (!back) {
    return UnitFailure{"the diagonal is not bijective"};
  }
  return FiniteIsoCertificate{std::move(diagonal), std::move(*back)};
}

std::optional<std::string> naturality_defect(SheafMap const& m) {
  auto const& x = m.source->space();
  if (!(x == m.target->space())) {
    return "source and target live over different spaces";
  }
  auto const& opens = x.opens();
  if (m.components.size() != opens.size()) {
    return "one component per open is required";
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    auto const& c = m.components[i];
    if (!(*c.source == *m.source->presheaf.sections[i]) ||
        !(*c.target == *m.target->presheaf.sections[i])) {
      return "component at " + x.render(opens[i]) + " has the wrong endpoints";
    }
    if (auto d = functor_defect(c)) {
      return "component at " + x.render(opens[i]) + ": " + *d;
    }
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      if (!contains(opens[i], opens[j])) {
        continue;
      }
      auto down_then = compose(m.source->presheaf.restriction(opens[i], opens[j]),
                               m.components[j]);
      auto then_down = compose(m.components[i],
                               m.target->presheaf.restriction(opens[i], opens[j]));
      if (!same_maps(down_then, then_down)) {
        return "naturality fails for " + x.render(opens[i]) + " -> " +
               x.render(opens[j]);
      }
    }
  }
  return std::nullopt;
}

SheafMap sheafify_map(FiniteFunctor const& g, SheafPtr source,
                      SheafPtr target) {
  if (!source->constant_value || !target->constant_value ||
      !(*source->constant_value == *g.source) ||
      !(*target->constant_value == *g.target) ||
      !(source->space() == target->space())) {
    throw Error(ErrorCode::InvalidFunctor,
                "ends are not constant sheafifications of g's ends");
  }
  auto const& x = source->space();
  SheafMap m{source, target, {}};
  for (PointSet u : x.opens()) {
    std::size_t const k = x.connected_components(u).size();
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    m.components.push_back(digitwise(source->presheaf.section(u),
                                     target->presheaf.section(u), *g.source,
                                     *g.target, k, parent, &g));
  }
  return m;
}

SheafMap glue_map(SheafPtr source, SheafPtr target,
                  std::map<PointSet, FiniteFunctor> const& local) {
  auto const& x = source->space();
  auto const& sp = source->presheaf;
  auto const& tp = target->presheaf;
  SheafMap m{source, target, {}};
  for (PointSet u : x.opens()) {
    if (auto it = local.find(u); it != local.end()) {
      m.components.push_back(it->second);
      continue;
    }
    std::vector<PointSet> cover;
    PointSet covered = 0;
    for (auto const& [v, fn] : local) {
      if (contains(u, v)) {
        cover.push_back(v);
        covered |= v;
      }
    }
    if (covered != u) {
      throw Error(ErrorCode::InvalidFunctor,
                  x.render(u) + " is not covered by the given opens");
    }
    FiniteFunctor c;
    c.source = sp.section(u);
    c.target = tp.section(u);
    for (bool morphisms : {false, true}) {
      std::size_t const ns =
          morphisms ? c.source->num_morphisms() : c.source->num_objects();
      std::size_t const nt =
          morphisms ? c.target->num_morphisms() : c.target->num_objects();
      auto image = [&](FiniteFunctor const& r, std::size_t e) -> std::size_t {
        return morphisms ? r.morphism_map[e] : r.object_map[e];
      };
      for (std::size_t s = 0; s < ns; ++s) {
        std::vector<std::size_t> want;
        for (PointSet v : cover) {
          want.push_back(image(local.at(v), image(sp.restriction(u, v), s)));
        }
        std::optional<std::size_t> found;
        for (std::size_t t = 0; t < nt; ++t) {
          bool match = true;
          for (std::size_t i = 0; i < cover.size() && match; ++i) {
            match = image(tp.restriction(u, cover[i]), t) == want[i];
          }
          if (match) {
            if (found) {
              throw Error(ErrorCode::InvalidFunctor,
                          "gluing at " + x.render(u) + " is not unique");
            }
            found = t;
          }
        }
        if (!found) {
          throw Error(ErrorCode::InvalidFunctor,
                      "local images do not glue at " + x.render(u));
        }
        if (morphisms) {
          c.morphism_map.push_back(static_cast<MorId>(*found));
        } else {
          c.object_map.push_back(static_cast<ObjId>(*found));
        }
      }
    }
    m.components.push_back(std::move(c));
  }
  return m;
}

std::optional<FiniteFunctor> constant_preimage(SheafMap const& m,
                                               std::size_t product_bound) {
  if (!m.source->constant_value || !m.target->constant_value) {
    throw Error(ErrorCode::InvalidFunctor,
                "ends are not constant sheafifications");
  }
  std::optional<FiniteFunctor> out;
  for_each_functor(
      m.source->constant_value, m.target->constant_value,
      [&](FiniteFunctor const& g) {
        auto s = sheafify_map(g, m.source, m.target);
        for (std::size_t i = 0; i < s.components.size(); ++i) {
          if (!same_maps(s.components[i], m.components[i])) {
            return true;
          }
        }
        out = g;
        return false;
      },
      product_bound);
  return out;
}

bool is_in_constant_image(SheafMap const& m, std::size_t product_bound) {
  return constant_preimage(m, product_bound).has_value();
}

ExoticDemo exotic_map_demo(ExoticVariant variant) {
  auto x = spaces::discrete({"u", "v"});
  auto s0 = share(finite::discrete({"0", "1"}));
  auto f = std::make_shared<CatSheaf const>(sheafify_constant(s0, x));
  auto const& sec = f->presheaf.section(x.set({"u"}));
  FiniteFunctor id = identity_functor(sec);
  FiniteFunctor constant{sec, sec, {0, 0}, {sec->identity(0), sec->identity(0)}};
  FiniteFunctor const& on_u = variant == ExoticVariant::ConstantControl ? constant : id;
  FiniteFunctor const& on_v = variant == ExoticVariant::IdentityControl ? id : constant;
  auto xi = glue_map(f, f, {{x.set({"u"}), on_u}, {x.set({"v"}), on_v}});
  bool const in_image = is_in_constant_image(xi);
  return {std::move(xi), in_image};
}

CwSheafVerdict classify_cw_sheaf(CatSheaf const& f, std::size_t product_bound) {
  auto const& x = f.space();
  if (!x.is_connected()) {
    throw Error(ErrorCode::NotConnected, "the space is not connected");
  }
  CwSheafVerdict v;
  auto g = global_sections(f);
  for (MorId m = 0; m < g->num_morphisms(); ++m) {
    if (!g->inverse(m)) {
      v.non_invertible = g->morphism(m).name;
      v.note = "global morphism '" + g->morphism(m).name +
               "' is not invertible";
      return v;
    }
  }
  auto constant = sheafify_constant(g, x);
  for (PointSet u : x.opens()) {
    if (!find_isomorphism(f.presheaf.section(u), constant.presheaf.section(u),
                          product_bound)) {
      v.failing_open = u;
      v.note = "F" + x.render(u) +
               " is not isomorphic to the constant sheafification there";
      return v;
    }
  }
  v.cw = true;
  v.note = "isomorphic on every open to the sheafification of a constant "
           "groupoid";
  return v;
}

}  // namespace catcw
