#include "catcw/model_structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace catcw {

namespace {

template <typename Map>
bool injective(Map const& m) {
  std::set<ObjId> seen(m.begin(), m.end());
  return seen.size() == m.size();
}

// Some isomorphism a -> b, with its inverse.
std::optional<std::pair<MorId, MorId>> find_iso(FiniteCategory const& c,
                                                ObjId a, ObjId b) {
  for (MorId m : c.hom(a, b)) {
    if (auto inv = c.inverse(m)) {
      return std::pair{m, *inv};
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_cofibration(Functor const& f) { return injective(f.object_map); }
bool is_cofibration(FiniteFunctor const& f) { return injective(f.object_map); }

std::vector<MorId> isomorphisms_by_pairs(FiniteCategory const& c) {
  std::set<MorId> firsts;
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    for (MorId g : c.hom(c.dst(f), c.src(f))) {
      if (c.compose(f, g) == c.identity(c.src(f)) &&
          c.compose(g, f) == c.identity(c.dst(f))) {
        firsts.insert(f);
      }
    }
  }
  return {firsts.begin(), firsts.end()};
}

std::vector<MorId> isomorphisms_by_scan(FiniteCategory const& c) {
  std::vector<MorId> out;
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    if (c.inverse(m)) {
      out.push_back(m);
    }
  }
  return out;
}

FiniteCategory wide_subcategory(FiniteCategory const& c,
                                std::vector<MorId> const& morphisms) {
  std::vector<MorId> index(c.num_morphisms(), kNoMorphism);
  std::vector<Morphism> mors;
  for (MorId m : morphisms) {
    index[m] = static_cast<MorId>(mors.size());
    mors.push_back(c.morphism(m));
  }
  std::vector<MorId> ids;
  for (ObjId o = 0; o < c.num_objects(); ++o) {
    if (index[c.identity(o)] == kNoMorphism) {
      throw Error(ErrorCode::InvalidTable, "subcategory misses an identity");
    }
    ids.push_back(index[c.identity(o)]);
  }
  return FiniteCategory::make(c.objects(), std::move(mors), std::move(ids),
                              [&](MorId f, MorId g) {
                                MorId fg = index[c.compose(morphisms[f],
                                                           morphisms[g])];
                                if (fg == kNoMorphism) {
                                  throw Error(ErrorCode::InvalidTable,
                                              "subcategory not closed");
                                }
                                return fg;
                              });
}

FiniteCategory iso_core(FiniteCategory const& c) {
  auto by_pairs = isomorphisms_by_pairs(c);
  if (by_pairs != isomorphisms_by_scan(c)) {
    throw std::logic_error("iso_core: constructions disagree");
  }
  return wide_subcategory(c, by_pairs);
}

bool is_isofibration(FiniteFunctor const& f) {
  auto const& s = *f.source;
  auto const& t = *f.target;
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    for (ObjId y = 0; y < t.num_objects(); ++y) {
      for (MorId m : t.hom(f.object_map[x], y)) {
        if (!t.inverse(m)) {
          continue;
        }
        bool lifted = false;
        for (ObjId x2 = 0; x2 < s.num_objects() && !lifted; ++x2) {
          if (f.object_map[x2] != y) {
            continue;
          }
          for (MorId u : s.hom(x, x2)) {
            if (f.morphism_map[u] == m && s.inverse(u)) {
              lifted = true;
              break;
            }
          }
        }
        if (!lifted) {
          return false;
        }
      }
    }
  }
  return true;
}

EquivalenceVerdict is_equivalence(FiniteFunctor const& f) {
  auto const& s = *f.source;
  auto const& t = *f.target;
  EquivalenceCertificate cert;
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    for (ObjId y = 0; y < s.num_objects(); ++y) {
      HomBijection b{x, y, {}};
      std::set<MorId> hit;
      for (MorId m : s.hom(x, y)) {
        b.image.push_back(f.morphism_map[m]);
        if (!hit.insert(f.morphism_map[m]).second) {
          return NotEquivalence{NotEquivalence::Kind::NotFaithful, x, y,
                                "two morphisms " + s.objects()[x] +
                                    " -> " + s.objects()[y] +
                                    " have the same image"};
        }
      }
      if (hit.size() != t.hom(f.object_map[x], f.object_map[y]).size()) {
        return NotEquivalence{NotEquivalence::Kind::NotFull, x, y,
                              "hom(" + s.objects()[x] + ", " +
                                  s.objects()[y] + ") is not onto"};
      }
      cert.fully_faithful.push_back(std::move(b));
    }
  }
  for (ObjId y = 0; y < t.num_objects(); ++y) {
    bool found = false;
    for (ObjId x = 0; x < s.num_objects() && !found; ++x) {
      if (auto iso = find_iso(t, f.object_map[x], y)) {
        cert.essentially_surjective.push_back(
            {y, x, iso->first, iso->second});
        found = true;
      }
    }
    if (!found) {
      return NotEquivalence{NotEquivalence::Kind::NotEssentiallySurjective, y,
                            y,
                            "object " + t.objects()[y] +
                                " is not isomorphic to any image"};
    }
  }
  return cert;
}

bool verify_certificate(EquivalenceCertificate const& cert,
                        FiniteFunctor const& f) {
  auto const& s = *f.source;
  auto const& t = *f.target;
  std::size_t const n = s.num_objects();
  if (cert.fully_faithful.size() != n * n ||
      cert.essentially_surjective.size() != t.num_objects()) {
    return false;
  }
  for (auto const& b : cert.fully_faithful) {
    if (b.x >= n || b.y >= n) {
      return false;
    }
    auto const& dom = s.hom(b.x, b.y);
    auto const& cod = t.hom(f.object_map[b.x], f.object_map[b.y]);
    if (b.image.size() != dom.size() || dom.size() != cod.size()) {
      return false;
    }
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (f.morphism_map[dom[i]] != b.image[i]) {
        return false;
      }
    }
    std::set<MorId> img(b.image.begin(), b.image.end());
    std::set<MorId> all(cod.begin(), cod.end());
    if (img != all) {
      return false;
    }
  }
  std::set<ObjId> covered;
  for (auto const& e : cert.essentially_surjective) {
    if (e.source >= n || e.target >= t.num_objects() ||
        e.iso >= t.num_morphisms() || e.inverse >= t.num_morphisms()) {
      return false;
    }
    ObjId const fx = f.object_map[e.source];
    if (t.src(e.iso) != fx || t.dst(e.iso) != e.target ||
        t.compose(e.iso, e.inverse) != t.identity(fx) ||
        t.compose(e.inverse, e.iso) != t.identity(e.target)) {
      return false;
    }
    covered.insert(e.target);
  }
  return covered.size() == t.num_objects();
}

bool is_groupoid(FiniteCategory const& c) {
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    if (!c.inverse(m)) {
      return false;
    }
  }
  return true;
}

Decision is_groupoid(FpCategory const& c, RewritingSystem const& rs,
                     std::size_t search_length) {
  bool all_found = true;
  for (GenId g = 0; g < c.num_generators(); ++g) {
    auto const& info = c.generator(g);
    if (info.inverse) {
      continue;
    }
    Arrow const a = c.arrow_of(g);
    bool found = false;
    for (auto const& h :
         enumerate_normal_forms(c, rs, info.dst, info.src, search_length)) {
      if (provably_equal(rs, c.compose(a, h), c.identity(info.src)) &&
          provably_equal(rs, c.compose(h, a), c.identity(info.dst))) {
        found = true;
        break;
      }
    }
    if (!found) {
      all_found = false;
      break;
    }
  }
  if (all_found) {
    return Decision::Yes;
  }
  if (rs.is_complete()) {
    auto fin = to_finite(c, rs, kDefaultHomBound);
    if (auto const* f = std::get_if<Finitization>(&fin)) {
      return is_groupoid(*f->category) ? Decision::Yes : Decision::No;
    }
  }
  return Decision::Unknown;
}

bool is_contractible(FiniteCategory const& c) {
  if (c.num_objects() == 0) {
    return false;
  }
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      if (c.hom(x, y).size() != 1) {
        return false;
      }
    }
  }
  return true;
}

bool is_contractible(FpCategory const& c, RewritingSystem const& rs) {
  if (!rs.is_complete()) {
    throw Error(ErrorCode::NotDecided,
                "contractibility needs a complete rewriting system");
  }
  if (c.num_objects() == 0) {
    return false;
  }
  auto fin = to_finite(c, rs, 1);
  if (auto const* f = std::get_if<Finitization>(&fin)) {
    return is_contractible(*f->category);
  }
  return false;
}

std::vector<ObjId> iso_classes(FiniteCategory const& c) {
  std::vector<ObjId> cls(c.num_objects());
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    cls[x] = x;
    for (ObjId y = 0; y < x; ++y) {
      if (cls[y] == y && find_iso(c, y, x)) {
        cls[x] = y;
        break;
      }
    }
  }
  return cls;
}

std::optional<FiniteFunctor> find_equivalence(FinCatPtr const& c,
                                              FinCatPtr const& d,
                                              std::size_t product_bound) {
  auto const cls = iso_classes(*d);
  std::set<ObjId> classes(cls.begin(), cls.end());
  auto filter = [&](std::vector<ObjId> const& om) {
    std::set<ObjId> hit;
    for (ObjId o : om) {
      hit.insert(cls[o]);
    }
    if (hit != classes) {
      return false;
    }
    for (ObjId x = 0; x < om.size(); ++x) {
      for (ObjId y = 0; y < om.size(); ++y) {
        if (c->hom(x, y).size() != d->hom(om[x], om[y]).size()) {
          return false;
        }
      }
    }
    return true;
  };
  std::optional<FiniteFunctor> out;
  for_each_functor(
      c, d,
      [&](FiniteFunctor const& f) {
        if (std::holds_alternative<EquivalenceCertificate>(is_equivalence(f))) {
          out = f;
          return false;
        }
        return true;
      },
      product_bound, filter);
  return out;
}

}  // namespace catcw
