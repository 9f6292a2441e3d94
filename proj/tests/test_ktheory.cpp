#include <catch2/catch.hpp>

#include <random>

#include "catcw/ktheory.hpp"
#include "generators.hpp"
#include "pushout_oracle.hpp"

using namespace catcw;

namespace {

PointedCategory point_of(FpCategory c) { return pointed(share(std::move(c))); }

PointedCategory s0() { return point_of(presentations::discrete({"x", "y"})); }

bool contractible(FpCategory const& c) { return is_contractible(c, complete(c)); }

}  // namespace

TEST_CASE("pointed categories") {
  auto z = share(presentations::integers());
  CHECK(pointed(z).basepoint == "*");
  CHECK_THROWS_AS(pointed(z, "nope"), Error);
  CHECK_THROWS_AS(pointed(share(presentations::empty())), Error);
}

TEST_CASE("cone examples") {
  auto c = make_cone(s0());
  CHECK(*c.cone.cat == chaotic({"x", "y"}));
  CHECK(c.cone.basepoint == "x");
  CHECK(is_cofibration(c.unit));
  CHECK(check_functor(c.unit));

  auto one = cone(point_of(presentations::terminal()));
  CHECK(one.cat->num_objects() == 1);
  CHECK(one.cat->num_generators() == 0);

  auto z = cone(point_of(presentations::integers()));
  CHECK(z.cat->num_generators() == 0);

  auto arrow = make_cone(point_of(presentations::arrow()));
  CHECK(check_functor(arrow.unit));
  CHECK(arrow.unit.generator_map[0] ==
        arrow.cone.cat->arrow_of(arrow.cone.cat->generator_id("x->y")));
}

TEST_CASE("suspension examples") {
  auto sz = suspend(s0());
  CHECK(sz.cat->num_objects() == 1);
  CHECK(sz.cat->num_generators() == 2);
  auto rs = complete(*sz.cat);
  REQUIRE(rs.is_complete());
  CHECK(enumerate_normal_forms(*sz.cat, rs, 0, 0, 3).size() == 7);

  CHECK(contractible(*suspend(point_of(presentations::terminal())).cat));
  auto sigma_z = suspend(point_of(presentations::integers()));
  CHECK(sigma_z.cat->num_objects() == 1);
  CHECK(sigma_z.cat->num_generators() == 0);
}

TEST_CASE("double suspensions are terminal") {
  for (auto const& c : {presentations::discrete({"x", "y"}), presentations::arrow(),
                        presentations::terminal(), presentations::cyclic(2)}) {
    auto cert = verify_double_suspension(point_of(c));
    CHECK(cert.literal);
    CHECK_FALSE(terminal_defect(cert));
  }
}

TEST_CASE("inverse search") {
  auto c2 = share(chaotic({"x", "y"}));
  auto swap = make_functor(c2, c2, {{"x", "y"}, {"y", "x"}},
                           {{"x->y", {"", {"x->y^-1"}}}});
  auto iso = find_isomorphism(swap);
  REQUIRE(iso);
  CHECK_FALSE(iso_defect(*iso));

  auto z = share(presentations::integers());
  auto doubling = make_functor(z, z, {{"*", "*"}}, {{"a", {"", {"a", "a"}}}});
  CHECK_FALSE(find_isomorphism(doubling));

  auto tampered = *iso;
  tampered.backward = identity_functor(c2);
  CHECK(iso_defect(tampered));
}

TEST_CASE("cofiber sequence examples") {
  auto x = s0();
  auto susp = make_suspension(x);
  auto v = is_cofiber_sequence(susp.cone.unit, susp.pushout.inj_left);
  auto const* cert = std::get_if<CofiberCertificate>(&v);
  REQUIRE(cert);
  CHECK_FALSE(cofiber_defect(*cert));

  auto one = share(presentations::terminal());
  for (auto const& c : {presentations::terminal(), presentations::discrete({"x", "y"}),
                        presentations::cyclic(3)}) {
    auto a = share(c);
    auto w = is_cofiber_sequence(identity_functor(a), constant_functor(a, one, 0));
    REQUIRE(std::holds_alternative<CofiberCertificate>(w));
    CHECK_FALSE(cofiber_defect(std::get<CofiberCertificate>(w)));
  }

  auto s = share(presentations::discrete({"x", "y"}));
  auto fold = constant_functor(s, one, 0);
  auto bad = is_cofiber_sequence(fold, identity_functor(one));
  REQUIRE(std::holds_alternative<CofiberFailure>(bad));
  CHECK(std::get<CofiberFailure>(bad).stage ==
        CofiberFailure::Stage::NotCofibration);

  auto c2 = susp.cone.cone.cat;
  auto not_collapsing = is_cofiber_sequence(susp.cone.unit, identity_functor(c2));
  REQUIRE(std::holds_alternative<CofiberFailure>(not_collapsing));
  CHECK(std::get<CofiberFailure>(not_collapsing).stage ==
        CofiberFailure::Stage::NotCollapsing);

  auto to_point = is_cofiber_sequence(susp.cone.unit, constant_functor(c2, one, 0));
  REQUIRE(std::holds_alternative<CofiberFailure>(to_point));
  CHECK(std::get<CofiberFailure>(to_point).stage ==
        CofiberFailure::Stage::NotIsomorphic);
}

TEST_CASE("k0 witnesses replay") {
  std::vector<FpCategory> xs = {presentations::discrete({"x", "y"}),
                                presentations::arrow(), presentations::cyclic(2),
                                presentations::integers(),
                                presentations::terminal()};
  for (auto const& c : xs) {
    auto w = k0_vanishing_witness(point_of(c));
    CHECK_FALSE(k0_defect(w));
    CHECK(w.ssx.cat->num_generators() == 0);
    CHECK(w.terminal.literal);
  }
  auto w = k0_vanishing_witness(s0());
  CHECK(w.sx.cat->num_generators() == 2);
  auto tampered = w;
  tampered.sx = pointed(share(presentations::terminal()));
  CHECK(k0_defect(tampered));
}

TEST_CASE("cone and suspension on random pointed categories") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = point_of(gen::random_presentation(rng));
    auto c = make_cone(x);
    CHECK(contractible(*c.cone.cat));
    CHECK(is_cofibration(c.unit));
    CHECK(check_functor(c.unit));
    CHECK(suspend(x).cat->num_objects() == 1);
    auto cert = verify_double_suspension(x);
    CHECK(cert.literal);
    CHECK_FALSE(terminal_defect(cert));
  }
}

TEST_CASE("cone preserves pushouts along cofibrations") {
  auto pool = oracle::small_pool();
  std::mt19937 rng(47);
  int checked = 0;
  for (int attempt = 0; attempt < 400 && checked < 20; ++attempt) {
    auto const& a = pool[rng() % pool.size()];
    auto const& b = pool[rng() % pool.size()];
    auto const& c = pool[rng() % pool.size()];
    auto fs = oracle::functors_between(a, b, 8);
    auto gs = oracle::functors_between(a, c, 8);
    if (fs.empty() || gs.empty()) {
      continue;
    }
    auto const& f = fs[rng() % fs.size()];
    if (!is_cofibration(f)) {
      continue;
    }
    auto const& g = gs[rng() % gs.size()];
    auto p = pushout(f, g);
    auto pa = share(chaotic(a.fp->objects()));
    auto pb = share(chaotic(b.fp->objects()));
    auto pc = share(chaotic(c.fp->objects()));
    auto pp = share(chaotic(p.apex->objects()));
    auto q = pushout(cone_map(f, pa, pb), cone_map(g, pa, pc));
    auto gamma = mediator(q, cone_map(p.inj_left, pb, pp),
                          cone_map(p.inj_right, pc, pp));
    REQUIRE(check_functor(gamma));
    auto iso = find_isomorphism(gamma);
    REQUIRE(iso);
    CHECK_FALSE(iso_defect(*iso));
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("cone maps are equivalences") {
  auto pool = oracle::small_pool();
  for (auto const& a : pool) {
    for (auto const& b : pool) {
      auto pa = share(chaotic(a.fp->objects()));
      auto pb = share(chaotic(b.fp->objects()));
      auto fa = std::get<Finitization>(to_finite(*pa));
      auto fb = std::get<Finitization>(to_finite(*pb));
      for (auto const& f : oracle::functors_between(a, b, 3)) {
        auto pf = cone_map(f, pa, pb);
        REQUIRE(check_functor(pf));
        auto fin = finitize(pf, fa, fb, complete(*pb));
        CHECK(std::holds_alternative<EquivalenceCertificate>(is_equivalence(fin)));
      }
    }
  }
}
