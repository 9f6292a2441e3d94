#pragma once

// Brute-force reference computations used to cross-check the library.
// Nothing here calls into the rewriting or search code it is checking.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "catcw/finite_category.hpp"
#include "catcw/fpcat.hpp"

namespace catcw::oracle {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

/// Every path of length <= max_len, identities included.
inline std::vector<Arrow> all_paths(FpCategory const& c, std::size_t max_len) {
  std::vector<Arrow> out;
  std::vector<Arrow> layer;
  for (ObjId o = 0; o < c.num_objects(); ++o) {
    layer.push_back(c.identity(o));
  }
  for (std::size_t len = 0; len <= max_len; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Arrow> next;
    for (auto const& a : layer) {
      for (GenId g = 0; g < c.num_generators(); ++g) {
        if (c.generator(g).src == c.target(a)) {
          Arrow b = a;
          b.word.push_back(g);
          next.push_back(b);
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Number of relation classes met by paths of length <= count_len, where
/// classes are generated by single relation substitutions among paths of
/// length <= max_len.
inline std::size_t relation_classes(FpCategory const& c, std::size_t max_len,
                                    std::size_t count_len) {
  auto paths = all_paths(c, max_len);
  std::map<Arrow, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    index.emplace(paths[i], i);
  }
  UnionFind uf(paths.size());
  auto const rels = c.all_relations();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto const& w = paths[i].word;
    for (auto const& r : rels) {
      for (auto const* from : {&r.lhs, &r.rhs}) {
        auto const* to = from == &r.lhs ? &r.rhs : &r.lhs;
        auto const& pat = from->word;
        if (pat.empty()) {
          // Insertion of `to` at every position where its source matches.
          for (std::size_t pos = 0; pos <= w.size(); ++pos) {
            ObjId at = pos == 0 ? paths[i].src : c.generator(w[pos - 1]).dst;
            if (at != from->src) {
              continue;
            }
            Arrow b{paths[i].src, {}};
            b.word.insert(b.word.end(), w.begin(), w.begin() + pos);
            b.word.insert(b.word.end(), to->word.begin(), to->word.end());
            b.word.insert(b.word.end(), w.begin() + pos, w.end());
            if (auto it = index.find(b); it != index.end()) {
              uf.unite(i, it->second);
            }
          }
          continue;
        }
        for (std::size_t pos = 0; pos + pat.size() <= w.size(); ++pos) {
          if (!std::equal(pat.begin(), pat.end(), w.begin() + pos)) {
            continue;
          }
          Arrow b{paths[i].src, {}};
          b.word.insert(b.word.end(), w.begin(), w.begin() + pos);
          b.word.insert(b.word.end(), to->word.begin(), to->word.end());
          b.word.insert(b.word.end(), w.begin() + pos + pat.size(), w.end());
          if (auto it = index.find(b); it != index.end()) {
            uf.unite(i, it->second);
          }
        }
      }
    }
  }
  std::size_t classes = 0;
  std::vector<bool> seen(paths.size(), false);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].word.size() <= count_len && !seen[uf.find(i)]) {
      seen[uf.find(i)] = true;
      ++classes;
    }
  }
  return classes;
}

/// Every functor between finite categories, by trying every assignment of
/// objects and morphisms and checking the laws directly.
template <typename Visit>
void all_functors(FiniteCategory const& a, FiniteCategory const& b,
                  Visit&& visit) {
  std::size_t const na = a.num_objects();
  std::size_t const nm = a.num_morphisms();
  std::vector<ObjId> om(na, 0);
  std::vector<MorId> mm(nm, 0);
  auto valid = [&]() {
    for (ObjId o = 0; o < na; ++o) {
      if (mm[a.identity(o)] != b.identity(om[o])) {
        return false;
      }
    }
    for (MorId m = 0; m < nm; ++m) {
      if (b.src(mm[m]) != om[a.src(m)] || b.dst(mm[m]) != om[a.dst(m)]) {
        return false;
      }
    }
    for (MorId f = 0; f < nm; ++f) {
      for (MorId g = 0; g < nm; ++g) {
        if (a.dst(f) == a.src(g) &&
            mm[a.compose(f, g)] != b.compose(mm[f], mm[g])) {
          return false;
        }
      }
    }
    return true;
  };
  auto morphisms = [&](auto&& self, std::size_t i) -> void {
    if (i == nm) {
      if (valid()) {
        visit(om, mm);
      }
      return;
    }
    for (MorId t = 0; t < b.num_morphisms(); ++t) {
      if (b.src(t) == om[a.src(i)] && b.dst(t) == om[a.dst(i)]) {
        mm[i] = t;
        self(self, i + 1);
      }
    }
  };
  auto objects = [&](auto&& self, std::size_t i) -> void {
    if (i == na) {
      morphisms(morphisms, 0);
      return;
    }
    for (ObjId t = 0; t < b.num_objects(); ++t) {
      om[i] = t;
      self(self, i + 1);
    }
  };
  objects(objects, 0);
}

}  // namespace catcw::oracle
