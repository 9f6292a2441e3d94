#include "catcw/finite_category.hpp"

#include <unordered_set>

namespace catcw {

FiniteCategory::FiniteCategory(std::vector<std::string> objects,
                               std::vector<Morphism> morphisms,
                               std::vector<MorId> identities,
                               std::vector<MorId> compose_table)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      table_(std::move(compose_table)) {
  std::size_t const n = morphisms_.size();
  if (identities_.size() != objects_.size()) {
    throw Error(ErrorCode::InvalidTable, "one identity per object required");
  }
  if (table_.size() != n * n) {
    throw Error(ErrorCode::InvalidTable, "composition table has wrong size");
  }
  for (auto const& m : morphisms_) {
    if (m.src >= objects_.size() || m.dst >= objects_.size()) {
      throw Error(ErrorCode::InvalidTable,
                  "morphism '" + m.name + "' has a dangling endpoint");
    }
  }
  for (ObjId o = 0; o < objects_.size(); ++o) {
    MorId id = identities_[o];
    if (id >= n || morphisms_[id].src != o || morphisms_[id].dst != o) {
      throw Error(ErrorCode::InvalidTable,
                  "identity of '" + objects_[o] + "' is not an endomorphism");
    }
  }
  for (MorId f = 0; f < n; ++f) {
    for (MorId g = 0; g < n; ++g) {
      MorId h = compose(f, g);
      bool composable = morphisms_[f].dst == morphisms_[g].src;
      if (!composable) {
        if (h != kNoMorphism) {
          throw Error(ErrorCode::InvalidTable,
                      "entry for non-composable pair (" + morphisms_[f].name +
                          ", " + morphisms_[g].name + ")");
        }
        continue;
      }
      if (h >= n || morphisms_[h].src != morphisms_[f].src ||
          morphisms_[h].dst != morphisms_[g].dst) {
        throw Error(ErrorCode::InvalidTable,
                    "composite of (" + morphisms_[f].name + ", " +
                        morphisms_[g].name + ") has wrong endpoints");
      }
    }
  }
  hom_.assign(objects_.size() * objects_.size(), {});
  for (MorId m = 0; m < n; ++m) {
    hom_[static_cast<std::size_t>(morphisms_[m].src) * objects_.size() +
         morphisms_[m].dst]
        .push_back(m);
  }
}

FiniteCategory FiniteCategory::make(
    std::vector<std::string> objects, std::vector<Morphism> morphisms,
    std::vector<MorId> identities,
    std::function<MorId(MorId, MorId)> const& compose_fn) {
  std::size_t const n = morphisms.size();
  std::vector<MorId> table(n * n, kNoMorphism);
  for (MorId f = 0; f < n; ++f) {
    for (MorId g = 0; g < n; ++g) {
      if (morphisms[f].dst == morphisms[g].src) {
        table[static_cast<std::size_t>(f) * n + g] = compose_fn(f, g);
      }
    }
  }
  return FiniteCategory(std::move(objects), std::move(morphisms),
                        std::move(identities), std::move(table));
}

std::optional<ObjId> FiniteCategory::find_object(std::string_view name) const {
  for (ObjId o = 0; o < objects_.size(); ++o) {
    if (objects_[o] == name) {
      return o;
    }
  }
  return std::nullopt;
}

std::optional<MorId> FiniteCategory::find_morphism(
    std::string_view name) const {
  for (MorId m = 0; m < morphisms_.size(); ++m) {
    if (morphisms_[m].name == name) {
      return m;
    }
  }
  return std::nullopt;
}

std::optional<MorId> FiniteCategory::inverse(MorId m) const {
  ObjId x = src(m);
  ObjId y = dst(m);
  for (MorId g : hom(y, x)) {
    if (compose(m, g) == identity(x) && compose(g, m) == identity(y)) {
      return g;
    }
  }
  return std::nullopt;
}

std::optional<std::string> FiniteCategory::check_laws() const {
  std::size_t const n = morphisms_.size();
  for (MorId f = 0; f < n; ++f) {
    if (compose(identity(src(f)), f) != f ||
        compose(f, identity(dst(f))) != f) {
      return "identity law fails for '" + morphisms_[f].name + "'";
    }
  }
  for (MorId f = 0; f < n; ++f) {
    for (ObjId y = 0; y < objects_.size(); ++y) {
      for (MorId g : hom(dst(f), y)) {
        MorId fg = compose(f, g);
        for (ObjId z = 0; z < objects_.size(); ++z) {
          for (MorId h : hom(y, z)) {
            if (compose(fg, h) != compose(f, compose(g, h))) {
              return "associativity fails for (" + morphisms_[f].name + ", " +
                     morphisms_[g].name + ", " + morphisms_[h].name + ")";
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool FiniteCategory::operator==(FiniteCategory const& other) const {
  if (objects_ != other.objects_ || identities_ != other.identities_ ||
      table_ != other.table_ || morphisms_.size() != other.morphisms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    auto const& a = morphisms_[i];
    auto const& b = other.morphisms_[i];
    if (a.name != b.name || a.src != b.src || a.dst != b.dst) {
      return false;
    }
  }
  return true;
}

namespace finite {

namespace {

std::string identity_name(std::string const& object) {
  return "id(" + object + ")";
}

}  // namespace

FiniteCategory terminal(std::string object) {
  return discrete({std::move(object)});
}

FiniteCategory discrete(std::vector<std::string> objects) {
  std::vector<Morphism> mors;
  std::vector<MorId> ids;
  for (ObjId o = 0; o < objects.size(); ++o) {
    mors.push_back({identity_name(objects[o]), o, o});
    ids.push_back(o);
  }
  return FiniteCategory::make(std::move(objects), std::move(mors),
                              std::move(ids), [](MorId f, MorId) { return f; });
}

FiniteCategory arrow(std::string x, std::string y, std::string f) {
  std::vector<Morphism> mors{
      {identity_name(x), 0, 0}, {identity_name(y), 1, 1}, {std::move(f), 0, 1}};
  return FiniteCategory::make({std::move(x), std::move(y)}, std::move(mors),
                              {0, 1}, [](MorId a, MorId b) {
                                if (a == 2 || b == 2) {
                                  return MorId{2};
                                }
                                return a;
                              });
}

FiniteCategory chaotic(std::vector<std::string> objects) {
  if (objects.empty()) {
    throw Error(ErrorCode::EmptySet, "chaotic category needs an object");
  }
  auto const k = static_cast<ObjId>(objects.size());
  std::vector<Morphism> mors;
  std::vector<MorId> ids(k);
  for (ObjId x = 0; x < k; ++x) {
    for (ObjId y = 0; y < k; ++y) {
      if (x == y) {
        ids[x] = static_cast<MorId>(mors.size());
      }
      mors.push_back({x == y ? identity_name(objects[x])
                             : objects[x] + "->" + objects[y],
                      x, y});
    }
  }
  return FiniteCategory::make(
      std::move(objects), std::move(mors), std::move(ids),
      [k](MorId f, MorId g) { return (f / k) * k + g % k; });
}

FiniteCategory cyclic_group(unsigned n, std::string object, std::string gen) {
  if (n == 0) {
    throw Error(ErrorCode::EmptySet, "cyclic group of order 0");
  }
  std::vector<Morphism> mors;
  for (unsigned i = 0; i < n; ++i) {
    std::string name = i == 0   ? identity_name(object)
                       : i == 1 ? gen
                                : gen + "^" + std::to_string(i);
    mors.push_back({std::move(name), 0, 0});
  }
  return FiniteCategory::make({std::move(object)}, std::move(mors), {0},
                              [n](MorId f, MorId g) { return (f + g) % n; });
}

FiniteCategory composable_pair() {
  std::vector<Morphism> mors{{identity_name("x"), 0, 0},
                             {identity_name("y"), 1, 1},
                             {identity_name("z"), 2, 2},
                             {"f", 0, 1},
                             {"g", 1, 2},
                             {"f;g", 0, 2}};
  return FiniteCategory::make({"x", "y", "z"}, std::move(mors), {0, 1, 2},
                              [](MorId a, MorId b) -> MorId {
                                if (a <= 2) {
                                  return b;
                                }
                                if (b <= 2) {
                                  return a;
                                }
                                return 5;  // f;g is the only nontrivial composite
                              });
}

FiniteCategory coproduct(std::vector<FiniteCategory> const& parts) {
  std::vector<std::string> objects;
  std::vector<Morphism> mors;
  std::vector<MorId> ids;
  std::vector<ObjId> obj_offset;
  std::vector<MorId> mor_offset;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto const& p = parts[i];
    std::string prefix = std::to_string(i) + ".";
    auto oo = static_cast<ObjId>(objects.size());
    auto mo = static_cast<MorId>(mors.size());
    obj_offset.push_back(oo);
    mor_offset.push_back(mo);
    for (auto const& o : p.objects()) {
      objects.push_back(prefix + o);
    }
    for (auto const& m : p.morphisms()) {
      mors.push_back({prefix + m.name, m.src + oo, m.dst + oo});
    }
    for (MorId id : p.identities()) {
      ids.push_back(id + mo);
    }
  }
  // Which part each morphism belongs to.
  std::vector<std::size_t> part_of(mors.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (MorId m = 0; m < parts[i].num_morphisms(); ++m) {
      part_of[mor_offset[i] + m] = i;
    }
  }
  return FiniteCategory::make(
      std::move(objects), std::move(mors), std::move(ids),
      [&](MorId f, MorId g) {
        std::size_t i = part_of[f];
        MorId off = mor_offset[i];
        return parts[i].compose(f - off, g - off) + off;
      });
}

FiniteCategory power(FiniteCategory const& base, std::size_t k) {
  if (k == 1) {
    return base;
  }
  std::size_t const no = base.num_objects();
  std::size_t const nm = base.num_morphisms();
  std::size_t num_obj = 1;
  std::size_t num_mor = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num_obj *= no;
    num_mor *= nm;
  }
  auto digits = [k](std::size_t code, std::size_t radix) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = code % radix;
      code /= radix;
    }
    return d;
  };
  auto tuple_name = [](std::vector<std::string> const& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      s += (i ? "," : "") + parts[i];
    }
    return s + ")";
  };

  std::vector<std::string> objects;
  objects.reserve(num_obj);
  for (std::size_t c = 0; c < num_obj; ++c) {
    std::vector<std::string> names;
    for (std::size_t d : digits(c, no)) {
      names.push_back(base.objects()[d]);
    }
    objects.push_back(tuple_name(names));
  }
  std::vector<Morphism> mors;
  mors.reserve(num_mor);
  for (std::size_t c = 0; c < num_mor; ++c) {
    std::vector<std::string> names;
    std::size_t src = 0;
    std::size_t dst = 0;
    std::size_t place = 1;
    for (std::size_t d : digits(c, nm)) {
      names.push_back(base.morphism(static_cast<MorId>(d)).name);
      src += base.src(static_cast<MorId>(d)) * place;
      dst += base.dst(static_cast<MorId>(d)) * place;
      place *= no;
    }
    mors.push_back({tuple_name(names), static_cast<ObjId>(src),
                    static_cast<ObjId>(dst)});
  }
  std::vector<MorId> ids;
  ids.reserve(num_obj);
  for (std::size_t c = 0; c < num_obj; ++c) {
    std::size_t code = 0;
    std::size_t place = 1;
    for (std::size_t d : digits(c, no)) {
      code += base.identity(static_cast<ObjId>(d)) * place;
      place *= nm;
    }
    ids.push_back(static_cast<MorId>(code));
  }
  return FiniteCategory::make(
      std::move(objects), std::move(mors), std::move(ids),
      [&](MorId f, MorId g) {
        auto df = digits(f, nm);
        auto dg = digits(g, nm);
        std::size_t code = 0;
        std::size_t place = 1;
        for (std::size_t i = 0; i < k; ++i) {
          code += base.compose(static_cast<MorId>(df[i]),
                               static_cast<MorId>(dg[i])) *
                  place;
          place *= nm;
        }
        return static_cast<MorId>(code);
      });
}

}  // namespace finite

FpCategory to_fp(FiniteCategory const& c) {
  std::vector<GeneratorSpec> gens;
  std::vector<RelationSpec> rels;
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    if (!c.is_identity(m)) {
      auto const& info = c.morphism(m);
      gens.push_back({info.name, c.objects()[info.src], c.objects()[info.dst]});
    }
  }
  auto as_path = [&c](MorId m) -> Path {
    if (c.is_identity(m)) {
      return Path{c.objects()[c.src(m)], {}};
    }
    return Path{c.objects()[c.src(m)], {c.morphism(m).name}};
  };
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(f)) {
      continue;
    }
    for (MorId g = 0; g < c.num_morphisms(); ++g) {
      if (c.is_identity(g) || c.dst(f) != c.src(g)) {
        continue;
      }
      rels.push_back({Path{c.objects()[c.src(f)],
                           {c.morphism(f).name, c.morphism(g).name}},
                      as_path(c.compose(f, g))});
    }
  }
  return FpCategory::build(c.objects(), gens, rels, {});
}

}  // namespace catcw
