#include "catcw/ktheory.hpp"

#include <limits>
#include <map>

namespace catcw {

namespace {

constexpr ObjId kUnset = std::numeric_limits<ObjId>::max();

bool same_functor(Functor const& a, Functor const& b) {
  return *a.source == *b.source && *a.target == *b.target &&
         a.object_map == b.object_map && a.generator_map == b.generator_map;
}

std::optional<std::string> round_trip_defect(Functor const& there,
                                             Functor const& back,
                                             RewritingSystem const& rs) {
  if (!provably_equal(compose(there, back), identity_functor(there.source),
                      rs)) {
    return "round trip is not the identity";
  }
  return std::nullopt;
}

// Empty when every generator of A lands on the identity of one object.
std::optional<std::string> collapse_defect(Functor const& i, Functor const& q,
                                           RewritingSystem const& c_rs,
                                           ObjId& point) {
  auto const& a = *i.source;
  if (a.num_objects() == 0) {
    return "source of the cofibration is empty";
  }
  point = q(i(0));
  for (ObjId o = 1; o < a.num_objects(); ++o) {
    if (q(i(o)) != point) {
      return "objects '" + a.object_name(0) + "' and '" + a.object_name(o) +
             "' have different images";
    }
  }
  for (GenId g = 0; g < a.num_generators(); ++g) {
    if (!provably_equal(c_rs, q.apply(i.apply(a.arrow_of(g))),
                        q.target->identity(point))) {
      return "generator '" + a.generator(g).name +
             "' is not sent to an identity";
    }
  }
  return std::nullopt;
}

std::string prefixed(std::string const& stage, std::string const& reason) {
  return stage + ": " + reason;
}

}  // namespace

PointedCategory pointed(FpCatPtr cat, std::string basepoint) {
  (void)cat->object(basepoint);
  return {std::move(cat), std::move(basepoint)};
}

PointedCategory pointed(FpCatPtr cat) {
  if (cat->num_objects() == 0) {
    throw Error(ErrorCode::EmptySet, "a pointed category needs an object");
  }
  std::string base = cat->object_name(0);
  return {std::move(cat), std::move(base)};
}

Arrow chaotic_arrow(FpCategory const& p, ObjId x, ObjId y) {
  if (x == y) {
    return p.identity(x);
  }
  ObjId const lo = std::min(x, y);
  ObjId const hi = std::max(x, y);
  GenId g = p.generator_id(p.object_name(lo) + "->" + p.object_name(hi));
  if (x > y) {
    g = *p.generator(g).inverse;
  }
  return p.arrow_of(g);
}

Cone make_cone(PointedCategory const& x) {
  auto px = share(chaotic(x.cat->objects()));
  Functor unit;
  unit.source = x.cat;
  unit.target = px;
  for (ObjId o = 0; o < x.cat->num_objects(); ++o) {
    unit.object_map.push_back(o);
  }
  for (auto const& info : x.cat->generators()) {
    unit.generator_map.emplace_back(chaotic_arrow(*px, info.src, info.dst));
  }
  return {{px, x.basepoint}, std::move(unit)};
}

PointedCategory cone(PointedCategory const& x) { return make_cone(x).cone; }

Functor cone_unit(PointedCategory const& x) { return make_cone(x).unit; }

Functor cone_map(Functor const& f, FpCatPtr px, FpCatPtr py) {
  Functor out;
  out.source = px;
  out.target = py;
  out.object_map = f.object_map;
  for (auto const& info : px->generators()) {
    out.generator_map.emplace_back(chaotic_arrow(*py, f(info.src), f(info.dst)));
  }
  return out;
}

Suspension make_suspension(PointedCategory const& x) {
  auto c = make_cone(x);
  auto one = share(presentations::terminal());
  auto po = pushout(c.unit, constant_functor(x.cat, one, 0));
  ObjId const base = po.inj_left(c.cone.base());
  PointedCategory sigma{po.apex, po.apex->object_name(base)};
  return {std::move(sigma), std::move(c), std::move(po)};
}

PointedCategory suspend(PointedCategory const& x) {
  return make_suspension(x).sigma;
}

std::optional<Functor> find_inverse(Functor const& f, std::size_t budget,
                                    std::size_t search_length) {
  auto const& s = *f.source;
  auto const& t = *f.target;
  if (s.num_objects() != t.num_objects()) {
    return std::nullopt;
  }
  std::vector<ObjId> inv(t.num_objects(), kUnset);
  for (ObjId o = 0; o < s.num_objects(); ++o) {
    if (inv[f(o)] != kUnset) {
      return std::nullopt;
    }
    inv[f(o)] = o;
  }
  auto const srs = complete(s, budget);
  auto const trs = complete(t, budget);

  Functor k;
  k.source = f.target;
  k.target = f.source;
  k.object_map = inv;
  k.generator_map.assign(t.num_generators(), std::nullopt);

  std::map<ObjId, std::vector<Arrow>> out_of;
  auto search = [&](GenId g) {
    auto const& info = t.generator(g);
    ObjId const x = inv[info.src];
    ObjId const y = inv[info.dst];
    auto it = out_of.find(x);
    if (it == out_of.end()) {
      it = out_of
               .emplace(x, enumerate_normal_forms(s, srs, x, std::nullopt,
                                                  search_length))
               .first;
    }
    for (auto const& h : it->second) {
      if (s.target(h) == y &&
          provably_equal(trs, f.apply(h), t.arrow_of(g))) {
        k.generator_map[g] = h;
        return;
      }
    }
  };
  for (GenId g = 0; g < t.num_generators(); ++g) {
    if (!t.generator(g).is_mate) {
      search(g);
    }
  }
  fill_formal_inverses(k);
  for (GenId g = 0; g < t.num_generators(); ++g) {
    if (!k.generator_map[g]) {
      search(g);
      if (!k.generator_map[g]) {
        return std::nullopt;
      }
    }
  }
  if (functor_defect(k, srs) || round_trip_defect(f, k, srs) ||
      round_trip_defect(k, f, trs)) {
    return std::nullopt;
  }
  return k;
}

std::optional<IsoCertificate> find_isomorphism(Functor const& f,
                                               std::size_t budget,
                                               std::size_t search_length) {
  auto k = find_inverse(f, budget, search_length);
  if (!k) {
    return std::nullopt;
  }
  return IsoCertificate{f, std::move(*k)};
}

std::optional<std::string> iso_defect(IsoCertificate const& cert,
                                      std::size_t budget) {
  auto const& f = cert.forward;
  auto const& k = cert.backward;
  if (!(*f.source == *k.target) || !(*f.target == *k.source)) {
    return "forward and backward functors are not opposite";
  }
  auto const srs = complete(*f.source, budget);
  auto const trs = complete(*f.target, budget);
  if (auto d = functor_defect(f, trs)) {
    return prefixed("forward", *d);
  }
  if (auto d = functor_defect(k, srs)) {
    return prefixed("backward", *d);
  }
  if (auto d = round_trip_defect(f, k, srs)) {
    return prefixed("source", *d);
  }
  if (auto d = round_trip_defect(k, f, trs)) {
    return prefixed("target", *d);
  }
  return std::nullopt;
}

std::string to_string(CofiberFailure::Stage s) {
  switch (s) {
    case CofiberFailure::Stage::NotComposable:
      return "NotComposable";
    case CofiberFailure::Stage::NotCofibration:
      return "NotCofibration";
    case CofiberFailure::Stage::NotCollapsing:
      return "NotCollapsing";
    case CofiberFailure::Stage::NotIsomorphic:
      return "NotIsomorphic";
  }
  return "?";
}

CofiberVerdict is_cofiber_sequence(Functor const& i, Functor const& q,
                                   std::size_t budget) {
  using Stage = CofiberFailure::Stage;
  if (!(*i.target == *q.source)) {
    return CofiberFailure{Stage::NotComposable,
                          "target of i is not the source of q"};
  }
  if (!is_cofibration(i)) {
    return CofiberFailure{Stage::NotCofibration,
                          "i is not injective on objects"};
  }
  auto const c_rs = complete(*q.target, budget);
  ObjId point = 0;
  if (auto d = collapse_defect(i, q, c_rs, point)) {
    return CofiberFailure{Stage::NotCollapsing, *d};
  }
  auto one = share(presentations::terminal());
  auto po = pushout(i, constant_functor(i.source, one, 0));
  auto m = mediator(po, q, constant_functor(one, q.target, point));
  auto iso = find_isomorphism(m, budget);
  if (!iso) {
    return CofiberFailure{Stage::NotIsomorphic,
                          "no inverse to the comparison functor found"};
  }
  return CofiberCertificate{i, q, std::move(po), std::move(*iso)};
}

std::optional<std::string> cofiber_defect(CofiberCertificate const& cert,
                                          std::size_t budget) {
  auto const& i = cert.i;
  auto const& q = cert.q;
  if (!(*i.target == *q.source)) {
    return "i and q are not composable";
  }
  if (!is_cofibration(i)) {
    return "i is not a cofibration";
  }
  auto const c_rs = complete(*q.target, budget);
  ObjId point = 0;
  if (auto d = collapse_defect(i, q, c_rs, point)) {
    return *d;
  }
  auto one = share(presentations::terminal());
  auto po = pushout(i, constant_functor(i.source, one, 0));
  if (!(*po.apex == *cert.cofiber.apex)) {
    return "recorded cofiber differs from the pushout";
  }
  if (!same_functor(po.inj_left, cert.cofiber.inj_left) ||
      !same_functor(po.inj_right, cert.cofiber.inj_right)) {
    return "recorded cofiber injections differ from the pushout";
  }
  auto m = mediator(po, q, constant_functor(one, q.target, point));
  if (!(*cert.comparison.forward.source == *po.apex) ||
      !(*cert.comparison.forward.target == *q.target) ||
      !provably_equal(m, cert.comparison.forward, c_rs)) {
    return "comparison is not the functor induced by q";
  }
  if (auto d = iso_defect(cert.comparison, budget)) {
    return prefixed("comparison", *d);
  }
  return std::nullopt;
}

std::optional<ContractibilityCertificate> certify_contractible(
    FpCatPtr const& cat, std::size_t budget) {
  auto const rs = complete(*cat, budget);
  if (!rs.is_complete()) {
    throw Error(ErrorCode::NotDecided, "completion did not finish");
  }
  auto fin = to_finite(*cat, rs);
  auto const* f = std::get_if<Finitization>(&fin);
  if (f == nullptr) {
    return std::nullopt;
  }
  auto to_one = to_terminal(f->category, share(finite::terminal()));
  auto verdict = is_equivalence(to_one);
  auto* cert = std::get_if<EquivalenceCertificate>(&verdict);
  if (cert == nullptr) {
    return std::nullopt;
  }
  return ContractibilityCertificate{cat, std::move(*cert)};
}

std::optional<std::string> contractibility_defect(
    ContractibilityCertificate const& cert, std::size_t budget) {
  auto const rs = complete(*cert.cat, budget);
  if (!rs.is_complete()) {
    return "completion did not finish";
  }
  auto fin = to_finite(*cert.cat, rs);
  auto const* f = std::get_if<Finitization>(&fin);
  if (f == nullptr) {
    return "category is not finite";
  }
  auto to_one = to_terminal(f->category, share(finite::terminal()));
  if (!verify_certificate(cert.to_point, to_one)) {
    return "equivalence to the point does not replay";
  }
  return std::nullopt;
}

std::optional<TerminalCertificate> certify_terminal(FpCatPtr const& cat,
                                                    std::size_t budget) {
  if (cat->num_objects() != 1) {
    return std::nullopt;
  }
  auto one = share(presentations::terminal());
  auto iso = find_isomorphism(constant_functor(cat, one, 0), budget);
  if (!iso) {
    return std::nullopt;
  }
  return TerminalCertificate{cat, std::move(*iso), cat->num_generators() == 0};
}

std::optional<std::string> terminal_defect(TerminalCertificate const& cert,
                                           std::size_t budget) {
  auto const& one = *cert.iso.forward.target;
  if (!(*cert.iso.forward.source == *cert.cat)) {
    return "isomorphism does not start at the category";
  }
  if (one.num_objects() != 1 || one.num_generators() != 0) {
    return "isomorphism does not end at the terminal category";
  }
  if (cert.literal !=
      (cert.cat->num_objects() == 1 && cert.cat->num_generators() == 0)) {
    return "literal flag is wrong";
  }
  return iso_defect(cert.iso, budget);
}

TerminalCertificate verify_double_suspension(PointedCategory const& x,
                                             std::size_t budget) {
  auto ssx = suspend(suspend(x));
  auto cert = certify_terminal(ssx.cat, budget);
  if (!cert) {
    throw Error(ErrorCode::CertificateRejected,
                "double suspension is not terminal");
  }
  return std::move(*cert);
}

K0Witness k0_vanishing_witness(PointedCategory const& x, std::size_t budget) {
  auto reject = [](std::string const& what) {
    return Error(ErrorCode::CertificateRejected, what);
  };
  auto first_susp = make_suspension(x);
  auto second_susp = make_suspension(first_susp.sigma);

  auto first = is_cofiber_sequence(first_susp.cone.unit,
                                   first_susp.pushout.inj_left, budget);
  if (auto const* fail = std::get_if<CofiberFailure>(&first)) {
    throw reject("X -> PX -> ΣX: " + fail->reason);
  }
  auto second = is_cofiber_sequence(second_susp.cone.unit,
                                    second_susp.pushout.inj_left, budget);
  if (auto const* fail = std::get_if<CofiberFailure>(&second)) {
    throw reject("ΣX -> PΣX -> Σ²X: " + fail->reason);
  }
  auto contract_px = certify_contractible(first_susp.cone.cone.cat, budget);
  if (!contract_px) {
    throw reject("PX is not contractible");
  }
  auto contract_psx = certify_contractible(second_susp.cone.cone.cat, budget);
  if (!contract_psx) {
    throw reject("PΣX is not contractible");
  }
  auto terminal = certify_terminal(second_susp.sigma.cat, budget);
  if (!terminal) {
    throw reject("Σ²X is not terminal");
  }
  return K0Witness{
      x,
      first_susp.cone.cone,
      first_susp.sigma,
      second_susp.cone.cone,
      second_susp.sigma,
      std::get<CofiberCertificate>(std::move(first)),
      std::get<CofiberCertificate>(std::move(second)),
      std::move(*contract_px),
      std::move(*contract_psx),
      std::move(*terminal),
      {"PX and PΣX are the chaotic categories on the objects of X and ΣX",
       "ΣX and Σ²X are pushouts along cofibrations computed in pointed small "
       "categories",
       "closure of the ambient subcategory is checked only for the "
       "categories in this witness"}};
}

std::optional<std::string> k0_defect(K0Witness const& w, std::size_t budget) {
  for (auto const* p : {&w.x, &w.px, &w.sx, &w.psx, &w.ssx}) {
    if (!p->cat->find_object(p->basepoint)) {
      return "basepoint '" + p->basepoint + "' is not an object";
    }
  }
  auto first_susp = make_suspension(w.x);
  auto second_susp = make_suspension(w.sx);
  if (!(*first_susp.cone.cone.cat == *w.px.cat) ||
      first_susp.cone.cone.basepoint != w.px.basepoint) {
    return "PX is not the cone on X";
  }
  if (!(*first_susp.sigma.cat == *w.sx.cat) ||
      first_susp.sigma.basepoint != w.sx.basepoint) {
    return "ΣX is not the suspension of X";
  }
  if (!(*second_susp.cone.cone.cat == *w.psx.cat) ||
      second_susp.cone.cone.basepoint != w.psx.basepoint) {
    return "PΣX is not the cone on ΣX";
  }
  if (!(*second_susp.sigma.cat == *w.ssx.cat) ||
      second_susp.sigma.basepoint != w.ssx.basepoint) {
    return "Σ²X is not the suspension of ΣX";
  }
  if (!same_functor(w.first.i, first_susp.cone.unit) ||
      !same_functor(w.first.q, first_susp.pushout.inj_left)) {
    return "first sequence is not X -> PX -> ΣX";
  }
  if (!same_functor(w.second.i, second_susp.cone.unit) ||
      !same_functor(w.second.q, second_susp.pushout.inj_left)) {
    return "second sequence is not ΣX -> PΣX -> Σ²X";
  }
  if (auto d = cofiber_defect(w.first, budget)) {
    return prefixed("first sequence", *d);
  }
  if (auto d = cofiber_defect(w.second, budget)) {
    return prefixed("second sequence", *d);
  }
  if (!(*w.contract_px.cat == *w.px.cat) ||
      !(*w.contract_psx.cat == *w.psx.cat) ||
      !(*w.terminal.cat == *w.ssx.cat)) {
    return "certificates refer to the wrong categories";
  }
  if (auto d = contractibility_defect(w.contract_px, budget)) {
    return prefixed("PX", *d);
  }
  if (auto d = contractibility_defect(w.contract_psx, budget)) {
    return prefixed("PΣX", *d);
  }
  if (auto d = terminal_defect(w.terminal, budget)) {
    return prefixed("Σ²X", *d);
  }
  return std::nullopt;
}

}  // namespace catcw
