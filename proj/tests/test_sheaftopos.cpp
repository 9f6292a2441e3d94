#include <catch2/catch.hpp>

#include <sstream>

#include "catcw/cw.hpp"
#include "catcw/model_structure.hpp"
#include "catcw/sheaftopos.hpp"
#include "oracles.hpp"
#include "pushout_oracle.hpp"

using namespace catcw;

namespace {

FiniteSpace three_point() {
  return FiniteSpace::build({"a", "b", "c"},
                            {{}, {"a"}, {"b"}, {"a", "b"}, {"a", "b", "c"}});
}

std::vector<FiniteSpace> connected_spaces() {
  return {spaces::point(), spaces::sierpinski(), three_point()};
}

std::vector<FinCatPtr> category_pool() {
  return {share(finite::terminal()),   share(finite::discrete({"x", "y"})),
          share(finite::arrow()),      share(finite::chaotic({"x", "y"})),
          share(finite::cyclic_group(2)), share(finite::cyclic_group(3)),
          share(finite::composable_pair())};
}

SheafPtr shared_sheaf(FinCatPtr const& a, FiniteSpace const& x) {
  return std::make_shared<CatSheaf const>(sheafify_constant(a, x));
}

// Tuple names split into component names.
std::vector<std::string> components_of(std::string const& name, std::size_t k) {
  if (k == 1) {
    return {name};
  }
  std::vector<std::string> out;
  std::stringstream in(name.substr(1, name.size() - 2));
  for (std::string part; std::getline(in, part, ',');) {
    out.push_back(part);
  }
  return out;
}

// Whether g, applied name by name to every tuple, reproduces m.
bool matches_by_names(SheafMap const& m, FiniteCategory const& a,
                      FiniteCategory const& b, std::vector<ObjId> const& om,
                      std::vector<MorId> const& mm) {
  auto const& x = m.source->space();
  for (std::size_t i = 0; i < x.opens().size(); ++i) {
    std::size_t const k = x.connected_components(x.opens()[i]).size();
    if (k == 0) {
      continue;
    }
    auto const& c = m.components[i];
    for (ObjId o = 0; o < c.source->num_objects(); ++o) {
      auto in = components_of(c.source->objects()[o], k);
      auto out = components_of(c.target->objects()[c.object_map[o]], k);
      for (std::size_t d = 0; d < k; ++d) {
        if (b.objects()[om[*a.find_object(in[d])]] != out[d]) {
          return false;
        }
      }
    }
    for (MorId f = 0; f < c.source->num_morphisms(); ++f) {
      auto in = components_of(c.source->morphism(f).name, k);
      auto out = components_of(c.target->morphism(c.morphism_map[f]).name, k);
      for (std::size_t d = 0; d < k; ++d) {
        if (b.morphism(mm[*a.find_morphism(in[d])]).name != out[d]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool oracle_in_image(SheafMap const& m) {
  auto const& a = *m.source->constant_value;
  auto const& b = *m.target->constant_value;
  bool found = false;
  oracle::all_functors(a, b, [&](auto const& om, auto const& mm) {
    found = found || matches_by_names(m, a, b, om, mm);
  });
  return found;
}

}  // namespace

TEST_CASE("finite space validation") {
  CHECK_THROWS_AS(FiniteSpace::build({"u"}, {{"u"}}), Error);
  CHECK_THROWS_AS(FiniteSpace::build({"u", "v"}, {{}, {"u", "v"}, {"u"}, {"v"}, {"w"}}),
                  Error);
  CHECK_THROWS_AS(FiniteSpace::build({"u", "u"}, {{}, {"u"}}), Error);
  try {
    (void)FiniteSpace::build({"a", "b", "c"}, {{}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}});
    FAIL("not closed under intersection");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::InvalidSpace);
  }
  auto s = spaces::sierpinski();
  CHECK(s.opens().size() == 3);
  CHECK(s.opens().front() == 0);
  CHECK(s.opens().back() == s.full());
  CHECK_THROWS_AS(s.connected_components(s.set({"v"})), Error);
}

TEST_CASE("connectedness") {
  CHECK(spaces::sierpinski().is_connected());
  CHECK(spaces::point().is_connected());
  CHECK(three_point().is_connected());
  auto d = spaces::discrete({"u", "v"});
  CHECK_FALSE(d.is_connected());
  auto comps = d.connected_components(d.full());
  REQUIRE(comps.size() == 2);
  CHECK(d.names(comps[0]) == std::vector<std::string>{"u"});
  CHECK(d.names(comps[1]) == std::vector<std::string>{"v"});
  auto t = three_point();
  CHECK(t.connected_components(t.set({"a", "b"})).size() == 2);
  CHECK(t.connected_components(0).empty());
  CHECK(t.minimal_open(2) == t.full());
}

TEST_CASE("constant presheaves") {
  auto s0 = share(finite::discrete({"x", "y"}));
  auto c = constantify(s0, spaces::sierpinski());
  CHECK_FALSE(presheaf_defect(c));
  CHECK(c.section(spaces::sierpinski().set({"u"}))->num_objects() == 2);
  CHECK(c.section(0)->num_objects() == 1);
  CHECK_FALSE(gluing_defect(c));
  auto d = constantify(s0, spaces::discrete({"u", "v"}));
  CHECK_FALSE(presheaf_defect(d));
  CHECK(gluing_defect(d));
  auto one = constantify(share(finite::terminal()), three_point());
  for (auto const& s : one.sections) {
    CHECK(s->num_morphisms() == 1);
  }
}

TEST_CASE("constant sheafification") {
  auto s0 = share(finite::discrete({"x", "y"}));
  auto d = sheafify_constant(s0, spaces::discrete({"u", "v"}));
  CHECK_FALSE(d.gluing_failure);
  CHECK(global_sections(d)->num_objects() == 4);
  CHECK(global_sections(d)->num_morphisms() == 4);

  auto c2 = share(finite::chaotic({"x", "y"}));
  CHECK(*global_sections(sheafify_constant(c2, spaces::sierpinski())) == *c2);
  auto one = sheafify_constant(share(finite::terminal()), three_point());
  CHECK(global_sections(one)->num_morphisms() == 1);

  std::vector<FiniteSpace> all = connected_spaces();
  all.push_back(spaces::discrete({"u", "v"}));
  for (auto const& x : all) {
    for (auto const& a : category_pool()) {
      auto f = sheafify_constant(a, x);
      CHECK_FALSE(f.gluing_failure);
      CHECK_FALSE(presheaf_defect(f.presheaf));
    }
  }
}

TEST_CASE("unit check") {
  for (auto const& x : connected_spaces()) {
    for (auto const& a : category_pool()) {
      auto v = unit_check(a, x);
      REQUIRE(std::holds_alternative<FiniteIsoCertificate>(v));
      CHECK_FALSE(iso_defect(std::get<FiniteIsoCertificate>(v)));
    }
  }
  auto fail = unit_check(share(finite::discrete({"x", "y"})),
                         spaces::discrete({"u", "v"}));
  REQUIRE(std::holds_alternative<UnitFailure>(fail));
  CHECK(std::get<UnitFailure>(fail).reason == "2 objects vs 4");
  CHECK(std::holds_alternative<FiniteIsoCertificate>(
      unit_check(share(finite::terminal()), spaces::discrete({"u", "v"}))));
}

TEST_CASE("exotic attaching map") {
  auto demo = exotic_map_demo();
  CHECK_FALSE(demo.in_constant_image);
  CHECK_FALSE(naturality_defect(demo.xi));
  auto const& global = demo.xi.components.back();
  CHECK(global.object_map == std::vector<ObjId>{0, 1, 0, 1});
  CHECK(exotic_map_demo(ExoticVariant::IdentityControl).in_constant_image);
  CHECK(exotic_map_demo(ExoticVariant::ConstantControl).in_constant_image);
}

TEST_CASE("constant image agrees with the name-based oracle") {
  auto d = spaces::discrete({"u", "v"});
  std::vector<FinCatPtr> pool = {share(finite::discrete({"x", "y"})),
                                 share(finite::arrow()),
                                 share(finite::cyclic_group(2)),
                                 share(finite::terminal())};
  int checked = 0;
  for (auto const& a : pool) {
    for (auto const& b : pool) {
      auto fa = shared_sheaf(a, d);
      auto fb = shared_sheaf(b, d);
      std::vector<FiniteFunctor> gs;
      oracle::all_functors(*a, *b, [&](auto const& om, auto const& mm) {
        gs.push_back(FiniteFunctor{a, b, om, mm});
      });
      for (auto const& g : gs) {
        CHECK(is_in_constant_image(sheafify_map(g, fa, fb)));
        for (auto const& h : gs) {
          auto m = glue_map(fa, fb, {{d.set({"u"}), g}, {d.set({"v"}), h}});
          CHECK_FALSE(naturality_defect(m));
          CHECK(is_in_constant_image(m) == oracle_in_image(m));
          CHECK(is_in_constant_image(m) ==
                (g.object_map == h.object_map && g.morphism_map == h.morphism_map));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 20);

  auto p = spaces::point();
  auto c3 = share(finite::cyclic_group(3));
  auto fp = shared_sheaf(c3, p);
  FiniteFunctor square{c3, c3, {0}, {}};
  for (MorId m = 0; m < c3->num_morphisms(); ++m) {
    square.morphism_map.push_back(c3->compose(m, m));
  }
  auto m = glue_map(fp, fp, {{p.full(), square}});
  CHECK(is_in_constant_image(m));
}

TEST_CASE("sheafification preserves equivalences") {
  for (auto const& e : oracle::s0_equivalences()) {
    auto g = oracle::finite_image(e);
    for (auto const& x : {spaces::sierpinski(), three_point(),
                          spaces::discrete({"u", "v"})}) {
      auto m = sheafify_map(g, shared_sheaf(g.source, x), shared_sheaf(g.target, x));
      CHECK_FALSE(naturality_defect(m));
      for (auto const& c : m.components) {
        CHECK(std::holds_alternative<EquivalenceCertificate>(is_equivalence(c)));
      }
    }
  }
}

TEST_CASE("sheafified spheres on connected opens") {
  for (unsigned n : {0U, 2U, 3U}) {
    auto s = share(sphere(n));
    auto fin = std::get<Finitization>(to_finite(*s)).category;
    auto x = three_point();
    auto f = sheafify_constant(fin, x);
    for (PointSet u : x.opens()) {
      auto const& sec = f.presheaf.section(u);
      if (x.connected_components(u).size() == 1) {
        CHECK(find_isomorphism(sec, fin));
      } else if (u != 0 && n == 0) {
        CHECK_FALSE(find_isomorphism(sec, fin));
      }
    }
  }
}

TEST_CASE("cw sheaf classification") {
  auto s = spaces::sierpinski();
  auto t = three_point();
  auto c2 = share(finite::chaotic({"x", "y"}));
  auto arrow = share(finite::arrow());

  CHECK(classify_cw_sheaf(sheafify_constant(c2, s)).cw);
  CHECK(classify_cw_sheaf(sheafify_constant(share(finite::cyclic_group(2)), t)).cw);
  CHECK(classify_cw_sheaf(sheafify_constant(share(finite::discrete({"x", "y"})), s)).cw);

  auto not_groupoid = classify_cw_sheaf(sheafify_constant(arrow, s));
  CHECK_FALSE(not_groupoid.cw);
  CHECK(not_groupoid.non_invertible == "f");
  CHECK_FALSE(classify_cw_sheaf(sheafify_constant(arrow, t)).cw);

  CatPresheaf hand;
  hand.space = s;
  auto one = share(finite::terminal());
  hand.sections = {one, c2, one};
  hand.restrictions.emplace(std::make_pair(0, 0), identity_functor(one));
  hand.restrictions.emplace(std::make_pair(1, 1), identity_functor(c2));
  hand.restrictions.emplace(std::make_pair(2, 2), identity_functor(one));
  hand.restrictions.emplace(std::make_pair(1, 0), to_terminal(c2, one));
  hand.restrictions.emplace(std::make_pair(2, 0), to_terminal(one, one));
  hand.restrictions.emplace(std::make_pair(2, 1),
                            FiniteFunctor{one, c2, {0}, {c2->identity(0)}});
  auto sheaf = make_sheaf(hand);
  CHECK_FALSE(sheaf.gluing_failure);
  auto v = classify_cw_sheaf(sheaf);
  CHECK_FALSE(v.cw);
  CHECK(v.failing_open == s.set({"u"}));

  CHECK_THROWS_AS(
      classify_cw_sheaf(sheafify_constant(c2, spaces::discrete({"u", "v"}))), Error);
}
