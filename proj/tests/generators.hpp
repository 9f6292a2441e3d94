#pragma once

// Hand-rolled random generators for property tests.

#include <random>
#include <string>
#include <vector>

#include "catcw/finite_category.hpp"
#include "catcw/fpcat.hpp"

namespace catcw::gen {

/// Thin category of the reflexive-transitive closure of a random relation
/// on `n` objects.
inline FiniteCategory random_preorder(std::mt19937& rng, std::size_t n) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  std::bernoulli_distribution coin(0.35);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      le[i][j] = i == j || coin(rng);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        le[i][j] = le[i][j] || (le[i][k] && le[k][j]);
      }
    }
  }
  std::vector<std::string> objs;
  for (std::size_t i = 0; i < n; ++i) {
    objs.push_back("o" + std::to_string(i));
  }
  std::vector<Morphism> mors;
  std::vector<MorId> ids(n);
  std::vector<std::vector<MorId>> at(n, std::vector<MorId>(n, kNoMorphism));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (le[i][j]) {
        at[i][j] = static_cast<MorId>(mors.size());
        if (i == j) {
          ids[i] = at[i][j];
        }
        mors.push_back({objs[i] + "<=" + objs[j], static_cast<ObjId>(i),
                        static_cast<ObjId>(j)});
      }
    }
  }
  auto const copy = mors;
  return FiniteCategory::make(objs, std::move(mors), ids,
                              [&](MorId f, MorId g) {
                                return at[copy[f].src][copy[g].dst];
                              });
}

/// Product category A x B.
inline FiniteCategory product(FiniteCategory const& a, FiniteCategory const& b) {
  std::vector<std::string> objs;
  for (auto const& x : a.objects()) {
    for (auto const& y : b.objects()) {
      objs.push_back("(" + x + "," + y + ")");
    }
  }
  auto const nb = static_cast<ObjId>(b.num_objects());
  auto const mb = static_cast<MorId>(b.num_morphisms());
  std::vector<Morphism> mors;
  for (MorId f = 0; f < a.num_morphisms(); ++f) {
    for (MorId g = 0; g < mb; ++g) {
      mors.push_back({"(" + a.morphism(f).name + "," + b.morphism(g).name + ")",
                      a.src(f) * nb + b.src(g), a.dst(f) * nb + b.dst(g)});
    }
  }
  std::vector<MorId> ids;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (ObjId y = 0; y < nb; ++y) {
      ids.push_back(a.identity(x) * mb + b.identity(y));
    }
  }
  return FiniteCategory::make(objs, std::move(mors), ids,
                              [&](MorId f, MorId g) {
                                return a.compose(f / mb, g / mb) * mb +
                                       b.compose(f % mb, g % mb);
                              });
}

/// Small finite categories of assorted shapes: preorders, groups, their
/// products and coproducts. At most `max_objects` objects.
inline FiniteCategory random_finite_category(std::mt19937& rng,
                                             std::size_t max_objects = 4) {
  std::uniform_int_distribution<std::size_t> size(1, max_objects);
  switch (rng() % 5) {
    case 0:
      return random_preorder(rng, size(rng));
    case 1:
      return finite::cyclic_group(1 + rng() % 3);
    case 2:
      return product(random_preorder(rng, 1 + rng() % 2),
                     finite::cyclic_group(2 + rng() % 2));
    case 3: {
      std::size_t k = size(rng);
      std::size_t left = 1 + rng() % k;
      std::vector<FiniteCategory> parts{random_preorder(rng, left)};
      if (k > left) {
        parts.push_back(random_preorder(rng, k - left));
      }
      return finite::coproduct(parts);
    }
    default: {
      std::vector<std::string> objs;
      for (std::size_t i = 0, n = size(rng); i < n; ++i) {
        objs.push_back("c" + std::to_string(i));
      }
      return finite::chaotic(objs);
    }
  }
}

/// A random presentation with at most the given numbers of objects,
/// generators and relations. Relations equate random parallel paths of
/// length <= 2; some generators are declared invertible.
inline FpCategory random_presentation(std::mt19937& rng,
                                      std::size_t max_objects = 4,
                                      std::size_t max_generators = 8,
                                      std::size_t max_relations = 4) {
  std::size_t const n = 1 + rng() % max_objects;
  std::vector<std::string> objs;
  for (std::size_t i = 0; i < n; ++i) {
    objs.push_back("x" + std::to_string(i));
  }
  std::vector<GeneratorSpec> gens;
  std::vector<std::string> inv;
  std::size_t const ng = rng() % (max_generators + 1);
  for (std::size_t i = 0; i < ng; ++i) {
    std::string name = "g" + std::to_string(i);
    gens.push_back({name, objs[rng() % n], objs[rng() % n]});
    if (rng() % 3 == 0) {
      inv.push_back(name);
    }
  }
  auto base = FpCategory::build(objs, gens, {}, inv);
  std::vector<RelationSpec> rels;
  std::size_t const nr = rng() % (max_relations + 1);
  for (std::size_t attempt = 0; attempt < 20 && rels.size() < nr; ++attempt) {
    if (base.num_generators() == 0) {
      break;
    }
    auto walk = [&](ObjId start, std::size_t len) {
      Path p{base.object_name(start), {}};
      ObjId at = start;
      for (std::size_t i = 0; i < len; ++i) {
        std::vector<GenId> out;
        for (GenId g = 0; g < base.num_generators(); ++g) {
          if (base.generator(g).src == at) {
            out.push_back(g);
          }
        }
        if (out.empty()) {
          break;
        }
        GenId g = out[rng() % out.size()];
        p.gens.push_back(base.generator(g).name);
        at = base.generator(g).dst;
      }
      return std::pair{p, at};
    };
    ObjId start = static_cast<ObjId>(rng() % n);
    auto [p, end_p] = walk(start, 1 + rng() % 2);
    auto [q, end_q] = walk(start, rng() % 3);
    if (end_p != end_q || p == q) {
      continue;
    }
    rels.push_back({p, q});
  }
  return FpCategory::build(objs, gens, rels, inv);
}

}  // namespace catcw::gen
