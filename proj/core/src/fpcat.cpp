#include "catcw/fpcat.hpp"

#include <algorithm>
#include <unordered_set>

namespace catcw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateName:
      return "DuplicateName";
    case ErrorCode::DanglingEndpoint:
      return "DanglingEndpoint";
    case ErrorCode::NonParallelRelation:
      return "NonParallelRelation";
    case ErrorCode::UnknownName:
      return "UnknownName";
    case ErrorCode::BadPath:
      return "BadPath";
    case ErrorCode::EmptySet:
      return "EmptySet";
    case ErrorCode::MixedDimensions:
      return "MixedDimensions";
    case ErrorCode::NotAnOpen:
      return "NotAnOpen";
    case ErrorCode::NotConnected:
      return "NotConnected";
    case ErrorCode::InvalidSpace:
      return "InvalidSpace";
    case ErrorCode::InvalidFunctor:
      return "InvalidFunctor";
    case ErrorCode::InvalidTable:
      return "InvalidTable";
    case ErrorCode::IncompleteSystem:
      return "IncompleteSystem";
    case ErrorCode::NotDecided:
      return "NotDecided";
    case ErrorCode::SearchSpaceTooLarge:
      return "SearchSpaceTooLarge";
    case ErrorCode::CertificateRejected:
      return "CertificateRejected";
    case ErrorCode::ParseError:
      return "ParseError";
  }
  return "Error";
}

FpCategory FpCategory::build(std::vector<std::string> objects,
                             std::vector<GeneratorSpec> const& generators,
                             std::vector<RelationSpec> const& relations,
                             std::vector<std::string> const& invertible) {
  FpCategory c;
  c.objects_ = std::move(objects);
  for (ObjId o = 0; o < c.objects_.size(); ++o) {
    if (!c.object_index_.emplace(c.objects_[o], o).second) {
      throw Error(ErrorCode::DuplicateName, "object '" + c.objects_[o] + "'");
    }
  }

  std::unordered_set<std::string> invertible_set;
  for (auto const& name : invertible) {
    auto it = std::find_if(generators.begin(), generators.end(),
                           [&](auto const& g) { return g.name == name; });
    if (it == generators.end()) {
      throw Error(ErrorCode::UnknownName,
                  "invertible generator '" + name + "' is not declared");
    }
    invertible_set.insert(name);
  }

  auto add = [&c](std::string name, ObjId src, ObjId dst) -> GenId {
    if (c.object_index_.count(name) != 0) {
      throw Error(ErrorCode::DuplicateName,
                  "generator '" + name + "' clashes with an object");
    }
    auto id = static_cast<GenId>(c.generators_.size());
    if (!c.generator_index_.emplace(name, id).second) {
      throw Error(ErrorCode::DuplicateName, "generator '" + name + "'");
    }
    c.generators_.push_back(GeneratorInfo{std::move(name), src, dst, {}, false});
    return id;
  };

  for (auto const& g : generators) {
    auto src = c.find_object(g.src);
    auto dst = c.find_object(g.dst);
    if (!src || !dst) {
      throw Error(ErrorCode::DanglingEndpoint,
                  "generator '" + g.name + "' runs " + g.src + " -> " + g.dst);
    }
    GenId id = add(g.name, *src, *dst);
    if (invertible_set.count(g.name) != 0) {
      GenId mate = add(g.name + std::string(kInverseSuffix), *dst, *src);
      c.generators_[id].inverse = mate;
      c.generators_[mate].inverse = id;
      c.generators_[mate].is_mate = true;
    }
  }

  for (auto const& r : relations) {
    Arrow lhs = c.arrow(r.lhs);
    Arrow rhs = c.arrow(r.rhs);
    if (lhs.src != rhs.src || c.target(lhs) != c.target(rhs)) {
      throw Error(ErrorCode::NonParallelRelation,
                  c.render(lhs) + " = " + c.render(rhs));
    }
    c.relations_.push_back(Relation{std::move(lhs), std::move(rhs)});
  }
  return c;
}

std::vector<Relation> FpCategory::unit_relations() const {
  std::vector<Relation> out;
  for (GenId g = 0; g < generators_.size(); ++g) {
    auto const& info = generators_[g];
    if (!info.inverse || info.is_mate) {
      continue;
    }
    GenId m = *info.inverse;
    out.push_back(Relation{Arrow{info.src, {g, m}}, identity(info.src)});
    out.push_back(Relation{Arrow{info.dst, {m, g}}, identity(info.dst)});
  }
  return out;
}

std::vector<Relation> FpCategory::all_relations() const {
  auto out = unit_relations();
  out.insert(out.end(), relations_.begin(), relations_.end());
  return out;
}

std::optional<ObjId> FpCategory::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<GenId> FpCategory::find_generator(std::string_view name) const {
  auto it = generator_index_.find(std::string(name));
  if (it == generator_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

ObjId FpCategory::object(std::string_view name) const {
  if (auto o = find_object(name)) {
    return *o;
  }
  throw Error(ErrorCode::UnknownName, "object '" + std::string(name) + "'");
}

GenId FpCategory::generator_id(std::string_view name) const {
  if (auto g = find_generator(name)) {
    return *g;
  }
  throw Error(ErrorCode::UnknownName, "generator '" + std::string(name) + "'");
}

std::vector<std::string> FpCategory::declared_invertible() const {
  std::vector<std::string> out;
  for (auto const& g : generators_) {
    if (g.inverse && !g.is_mate) {
      out.push_back(g.name);
    }
  }
  return out;
}

std::vector<GeneratorSpec> FpCategory::declared_generators() const {
  std::vector<GeneratorSpec> out;
  for (auto const& g : generators_) {
    if (!g.is_mate) {
      out.push_back({g.name, objects_[g.src], objects_[g.dst]});
    }
  }
  return out;
}

std::vector<RelationSpec> FpCategory::declared_relations() const {
  std::vector<RelationSpec> out;
  out.reserve(relations_.size());
  for (auto const& r : relations_) {
    out.push_back({path(r.lhs), path(r.rhs)});
  }
  return out;
}

ObjId FpCategory::target(Arrow const& a) const {
  return a.word.empty() ? a.src : generators_.at(a.word.back()).dst;
}

bool FpCategory::is_valid(Arrow const& a) const {
  if (a.src >= objects_.size()) {
    return false;
  }
  ObjId at = a.src;
  for (GenId g : a.word) {
    if (g >= generators_.size() || generators_[g].src != at) {
      return false;
    }
    at = generators_[g].dst;
  }
  return true;
}

Arrow FpCategory::compose(Arrow const& first, Arrow const& second) const {
  if (target(first) != second.src) {
    throw Error(ErrorCode::BadPath,
                "cannot compose " + render(first) + " with " + render(second));
  }
  Arrow out = first;
  out.word.insert(out.word.end(), second.word.begin(), second.word.end());
  return out;
}

std::optional<Arrow> FpCategory::formal_inverse(Arrow const& a) const {
  Arrow out{target(a), {}};
  out.word.reserve(a.word.size());
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) {
    auto const& inv = generators_.at(*it).inverse;
    if (!inv) {
      return std::nullopt;
    }
    out.word.push_back(*inv);
  }
  return out;
}

Arrow FpCategory::arrow(Path const& p) const {
  Arrow out;
  if (p.gens.empty()) {
    out.src = object(p.at);
    return out;
  }
  out.word.reserve(p.gens.size());
  for (auto const& name : p.gens) {
    out.word.push_back(generator_id(name));
  }
  out.src = generators_[out.word.front()].src;
  if (!p.at.empty() && object(p.at) != out.src) {
    throw Error(ErrorCode::BadPath, "path at '" + p.at +
                                        "' starts with generator '" +
                                        p.gens.front() + "'");
  }
  if (!is_valid(out)) {
    throw Error(ErrorCode::BadPath, "generators do not compose in path at '" +
                                        objects_[out.src] + "'");
  }
  return out;
}

Path FpCategory::path(Arrow const& a) const {
  Path p{objects_.at(a.src), {}};
  p.gens.reserve(a.word.size());
  for (GenId g : a.word) {
    p.gens.push_back(generators_.at(g).name);
  }
  return p;
}

std::string FpCategory::render(Arrow const& a) const {
  if (a.word.empty()) {
    return "id(" + objects_.at(a.src) + ")";
  }
  std::string out;
  for (std::size_t i = 0; i < a.word.size(); ++i) {
    if (i != 0) {
      out += ';';
    }
    out += generators_.at(a.word[i]).name;
  }
  return out;
}

bool FpCategory::operator==(FpCategory const& other) const {
  if (objects_ != other.objects_ ||
      generators_.size() != other.generators_.size() ||
      relations_.size() != other.relations_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    auto const& a = generators_[i];
    auto const& b = other.generators_[i];
    if (a.name != b.name || a.src != b.src || a.dst != b.dst ||
        a.inverse != b.inverse || a.is_mate != b.is_mate) {
      return false;
    }
  }
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].lhs != other.relations_[i].lhs ||
        relations_[i].rhs != other.relations_[i].rhs) {
      return false;
    }
  }
  return true;
}

namespace presentations {

FpCategory empty() { return FpCategory{}; }

FpCategory terminal(std::string object) {
  return FpCategory::build({std::move(object)}, {}, {}, {});
}

FpCategory discrete(std::vector<std::string> objects) {
  return FpCategory::build(std::move(objects), {}, {}, {});
}

FpCategory arrow(std::string x, std::string y, std::string f) {
  return FpCategory::build({x, y}, {{std::move(f), x, y}}, {}, {});
}

FpCategory integers(std::string object, std::string gen) {
  return FpCategory::build({object}, {{gen, object, object}}, {}, {gen});
}

FpCategory cyclic(unsigned n, std::string object, std::string gen) {
  RelationSpec power{{object, std::vector<std::string>(n, gen)},
                     {object, {}}};
  return FpCategory::build({object}, {{gen, object, object}}, {power}, {gen});
}

FpCategory free_group(std::vector<std::string> gens, std::string object) {
  std::vector<GeneratorSpec> specs;
  specs.reserve(gens.size());
  for (auto const& g : gens) {
    specs.push_back({g, object, object});
  }
  return FpCategory::build({std::move(object)}, specs, {}, gens);
}

}  // namespace presentations

}  // namespace catcw
