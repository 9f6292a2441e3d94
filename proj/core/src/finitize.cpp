#include "catcw/finitize.hpp"

#include <algorithm>

namespace catcw {

std::optional<MorId> Finitization::locate(Arrow const& normal) const {
  auto it = index.find(normal);
  if (it == index.end()) {
    return std::nullopt;
  }
  return it->second;
}

FinitizeResult to_finite(FpCategory const& cat, RewritingSystem const& rs,
                         std::size_t bound) {
  if (!rs.is_complete()) {
    throw Error(ErrorCode::IncompleteSystem,
                "to_finite needs a complete rewriting system");
  }
  std::size_t const n = cat.num_objects();
  std::vector<std::vector<Arrow>> homs(n * n);
  std::vector<Arrow> frontier;
  for (ObjId o = 0; o < n; ++o) {
    frontier.push_back(cat.identity(o));
  }
  while (!frontier.empty()) {
    for (auto const& a : frontier) {
      auto& bucket = homs[a.src * n + cat.target(a)];
      bucket.push_back(a);
      if (bucket.size() > bound) {
        return NotFinite{a.src, cat.target(a), bound, bucket};
      }
    }
    std::vector<Arrow> next;
    for (auto const& a : frontier) {
      ObjId end = cat.target(a);
      for (GenId g = 0; g < cat.num_generators(); ++g) {
        if (cat.generator(g).src != end) {
          continue;
        }
        Arrow b = a;
        b.word.push_back(g);
        if (!rs.has_reducible_suffix(b.word)) {
          next.push_back(std::move(b));
        }
      }
    }
    frontier = std::move(next);
  }

  Finitization out;
  for (auto& bucket : homs) {
    for (auto& a : bucket) {
      out.normal_forms.push_back(std::move(a));
    }
  }
  std::sort(out.normal_forms.begin(), out.normal_forms.end(),
            [](Arrow const& a, Arrow const& b) {
              if (a.src != b.src) {
                return a.src < b.src;
              }
              return shortlex_less(a.word, b.word);
            });
  std::vector<Morphism> mors;
  std::vector<MorId> ids(n);
  for (MorId m = 0; m < out.normal_forms.size(); ++m) {
    auto const& a = out.normal_forms[m];
    out.index.emplace(a, m);
    mors.push_back({cat.render(a), a.src, cat.target(a)});
    if (a.word.empty()) {
      ids[a.src] = m;
    }
  }
  out.category = share(FiniteCategory::make(
      cat.objects(), std::move(mors), std::move(ids), [&](MorId f, MorId g) {
        Arrow fg = cat.compose(out.normal_forms[f], out.normal_forms[g]);
        fg.word = rs.reduce(fg.word);
        return out.index.at(fg);
      }));
  return out;
}

FinitizeResult to_finite(FpCategory const& cat, std::size_t bound) {
  return to_finite(cat, complete(cat), bound);
}

}  // namespace catcw
