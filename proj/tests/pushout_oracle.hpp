#pragma once

// Brute-force check of the pushout universal property: cocones into a
// finite category are enumerated independently of the apex and matched
// against every functor out of the apex.

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "catcw/colimits.hpp"
#include "catcw/finitize.hpp"
#include "catcw/functor.hpp"

namespace catcw::oracle {

struct PoolEntry {
  std::string name;
  FpCatPtr fp;
  Finitization fin;
};

inline PoolEntry pool_entry(std::string name, FpCategory c) {
  auto fp = share(std::move(c));
  return {std::move(name), fp, std::get<Finitization>(to_finite(*fp, 64))};
}

/// Eight categories with at most three objects.
inline std::vector<PoolEntry> small_pool() {
  return {
      pool_entry("1", presentations::terminal()),
      pool_entry("S0", presentations::discrete({"x", "y"})),
      pool_entry("arrow", presentations::arrow()),
      pool_entry("C2", chaotic({"x", "y"})),
      pool_entry("Z/2", presentations::cyclic(2)),
      pool_entry("Z/3", presentations::cyclic(3)),
      pool_entry("C3", chaotic({"x", "y", "z"})),
      pool_entry("pair",
                 FpCategory::build({"x", "y", "z"},
                                   {{"f", "x", "y"}, {"g", "y", "z"}}, {}, {})),
  };
}

inline std::vector<FiniteModel> all_models(FpCategory const& src,
                                           FiniteCategory const& tgt) {
  std::vector<FiniteModel> out;
  for_each_model(src, tgt, [&](FiniteModel const& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

/// Every functor a -> b as a presentation-level functor, at most `limit`.
inline std::vector<Functor> functors_between(PoolEntry const& a,
                                             PoolEntry const& b,
                                             std::size_t limit) {
  std::vector<Functor> out;
  for_each_model(*a.fp, *b.fin.category, [&](FiniteModel const& m) {
    out.push_back(to_functor(m, a.fp, b.fp, b.fin));
    return out.size() < limit;
  });
  return out;
}

/// `u` after `f`, evaluated on objects and generators of f's source.
inline std::vector<MorId> restrict_model(Functor const& f,
                                         FiniteCategory const& t,
                                         FiniteModel const& u) {
  std::vector<MorId> key;
  for (ObjId o : f.object_map) {
    key.push_back(u.object_map[o]);
  }
  for (auto const& img : f.generator_map) {
    key.push_back(evaluate(*f.target, t, u, *img));
  }
  return key;
}

inline std::vector<MorId> model_key(FiniteModel const& m) {
  std::vector<MorId> key(m.object_map.begin(), m.object_map.end());
  key.insert(key.end(), m.generator_images.begin(), m.generator_images.end());
  return key;
}

struct UniversalCheck {
  std::size_t cocones = 0;
  std::size_t mediators = 0;
  bool unique = true;
};

/// Cocones into `t` versus functors apex -> t restricted along the
/// injections. The property holds iff restriction is a bijection.
inline UniversalCheck check_universal(PushoutResult const& p,
                                      FiniteCategory const& t) {
  UniversalCheck out;
  auto const us = all_models(*p.f.target, t);
  auto const vs = all_models(*p.g.target, t);
  std::set<std::vector<MorId>> cocones;
  for (auto const& u : us) {
    auto const fu = restrict_model(p.f, t, u);
    for (auto const& v : vs) {
      if (fu == restrict_model(p.g, t, v)) {
        auto key = model_key(u);
        auto kv = model_key(v);
        key.push_back(kNoMorphism);
        key.insert(key.end(), kv.begin(), kv.end());
        cocones.insert(std::move(key));
      }
    }
  }
  out.cocones = cocones.size();
  std::map<std::vector<MorId>, std::size_t> hits;
  for_each_model(*p.apex, t, [&](FiniteModel const& m) {
    FiniteModel u{{}, {}};
    for (ObjId o : p.inj_left.object_map) {
      u.object_map.push_back(m.object_map[o]);
    }
    for (auto const& img : p.inj_left.generator_map) {
      u.generator_images.push_back(evaluate(*p.apex, t, m, *img));
    }
    FiniteModel v{{}, {}};
    for (ObjId o : p.inj_right.object_map) {
      v.object_map.push_back(m.object_map[o]);
    }
    for (auto const& img : p.inj_right.generator_map) {
      v.generator_images.push_back(evaluate(*p.apex, t, m, *img));
    }
    auto key = model_key(u);
    auto kv = model_key(v);
    key.push_back(kNoMorphism);
    key.insert(key.end(), kv.begin(), kv.end());
    ++hits[key];
    ++out.mediators;
    return true;
  });
  for (auto const& c : cocones) {
    auto it = hits.find(c);
    if (it == hits.end() || it->second != 1) {
      out.unique = false;
    }
  }
  if (hits.size() != cocones.size()) {
    out.unique = false;
  }
  return out;
}

/// Fully finitized functor, for equivalence checks on finite presentations.
inline FiniteFunctor finite_image(Functor const& f) {
  auto const rs = complete(*f.target);
  auto const src = std::get<Finitization>(to_finite(*f.source, 64));
  auto const tgt = std::get<Finitization>(to_finite(*f.target, rs, 64));
  return finitize(f, src, tgt, rs);
}

/// Ten equivalences out of S0 = {x, y}.
inline std::vector<Functor> s0_equivalences() {
  auto s0 = share(presentations::discrete({"x", "y"}));
  auto c2 = share(chaotic({"x", "y"}));
  auto one = share(presentations::terminal());
  auto c2_one = coproduct({c2, one}).apex;
  auto one_c2 = coproduct({one, c2}).apex;
  auto c2_c2 = coproduct({c2, c2}).apex;
  auto to = [&](FpCatPtr t, std::string x, std::string y) {
    return make_functor(s0, t, {{"x", x}, {"y", y}}, {});
  };
  return {to(s0, "x", "y"),         to(s0, "y", "x"),
          to(c2_one, "0.x", "1.*"), to(c2_one, "0.y", "1.*"),
          to(one_c2, "1.x", "0.*"), to(one_c2, "1.y", "0.*"),
          to(c2_c2, "0.x", "1.x"),  to(c2_c2, "0.x", "1.y"),
          to(c2_c2, "0.y", "1.x"),  to(c2_c2, "0.y", "1.y")};
}

/// Five cofibrations out of S0 = {x, y}.
inline std::vector<Functor> s0_cofibrations() {
  auto s0 = share(presentations::discrete({"x", "y"}));
  auto to = [&](FpCatPtr t, std::string x, std::string y) {
    return make_functor(s0, t, {{"x", x}, {"y", y}}, {});
  };
  auto s0_one = coproduct({s0, share(presentations::terminal())}).apex;
  return {to(share(chaotic({"x", "y"})), "x", "y"),
          to(share(presentations::arrow()), "x", "y"),
          to(share(presentations::arrow()), "y", "x"),
          to(s0_one, "0.x", "0.y"),
          to(share(chaotic({"x", "y", "z"})), "x", "z")};
}

}  // namespace catcw::oracle
