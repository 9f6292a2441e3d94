#include <catch2/catch.hpp>

#include <random>

#include "catcw/model_structure.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace catcw;

namespace {

bool equivalent(FiniteFunctor const& f) {
  return std::holds_alternative<EquivalenceCertificate>(is_equivalence(f));
}

FiniteFunctor make(FinCatPtr s, FinCatPtr t, std::vector<ObjId> om,
                   std::vector<MorId> mm) {
  return {std::move(s), std::move(t), std::move(om), std::move(mm)};
}

}  // namespace

TEST_CASE("cofibrations are injective on objects") {
  auto s0 = share(finite::discrete({"x", "y"}));
  auto c2 = share(finite::chaotic({"x", "y"}));
  auto one = share(finite::terminal());
  auto into_c2 = make(s0, c2, {0, 1}, {c2->identity(0), c2->identity(1)});
  REQUIRE(check_functor(into_c2));
  CHECK(is_cofibration(into_c2));
  CHECK_FALSE(is_cofibration(to_terminal(s0, one)));
  CHECK(is_cofibration(identity_functor(c2)));

  auto z = share(presentations::integers());
  CHECK(is_cofibration(identity_functor(z)));
  CHECK_FALSE(is_cofibration(constant_functor(
      share(presentations::discrete({"p", "q"})), z, 0)));
}

TEST_CASE("iso_core examples") {
  auto arrow = iso_core(finite::arrow());
  CHECK(arrow.num_objects() == 2);
  CHECK(arrow.num_morphisms() == 2);
  auto c2 = finite::chaotic({"x", "y"});
  CHECK(iso_core(c2) == c2);
  auto g = finite::cyclic_group(3);
  CHECK(iso_core(g) == g);
}

TEST_CASE("iso_core constructions agree and yield groupoids") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    auto c = gen::random_finite_category(rng);
    REQUIRE_FALSE(c.check_laws());
    CHECK(isomorphisms_by_pairs(c) == isomorphisms_by_scan(c));
    auto core = iso_core(c);
    CHECK_FALSE(core.check_laws());
    CHECK(is_groupoid(core));
  }
}

TEST_CASE("isofibrations") {
  auto c2 = share(finite::chaotic({"x", "y"}));
  auto one = share(finite::terminal());
  CHECK(is_isofibration(to_terminal(c2, one)));
  CHECK(is_isofibration(identity_functor(c2)));
  auto pick = make(one, c2, {0}, {c2->identity(0)});
  CHECK_FALSE(is_isofibration(pick));
  auto arrow = share(finite::arrow());
  CHECK(is_isofibration(to_terminal(arrow, one)));
}

TEST_CASE("equivalence examples") {
  auto c2 = share(finite::chaotic({"x", "y"}));
  auto one = share(finite::terminal());
  auto s0 = share(finite::discrete({"x", "y"}));
  auto collapse = to_terminal(c2, one);
  auto v = is_equivalence(collapse);
  REQUIRE(std::holds_alternative<EquivalenceCertificate>(v));
  CHECK(verify_certificate(std::get<EquivalenceCertificate>(v), collapse));

  auto incl = make(one, s0, {0}, {s0->identity(0)});
  auto n = is_equivalence(incl);
  REQUIRE(std::holds_alternative<NotEquivalence>(n));
  CHECK(std::get<NotEquivalence>(n).kind ==
        NotEquivalence::Kind::NotEssentiallySurjective);

  auto squash = to_terminal(s0, one);
  CHECK(std::get<NotEquivalence>(is_equivalence(squash)).kind ==
        NotEquivalence::Kind::NotFull);

  auto g2 = share(finite::cyclic_group(2));
  auto trivial = to_terminal(g2, one);
  CHECK(std::get<NotEquivalence>(is_equivalence(trivial)).kind ==
        NotEquivalence::Kind::NotFaithful);
}

TEST_CASE("tampered certificates are rejected") {
  auto c2 = share(finite::chaotic({"x", "y"}));
  auto id = identity_functor(c2);
  auto cert = std::get<EquivalenceCertificate>(is_equivalence(id));
  REQUIRE(verify_certificate(cert, id));
  auto bad = cert;
  bad.essentially_surjective[0].inverse = bad.essentially_surjective[0].iso;
  bad.essentially_surjective[0].iso = c2->hom(0, 1)[0];
  CHECK_FALSE(verify_certificate(bad, id));
  bad = cert;
  bad.fully_faithful.pop_back();
  CHECK_FALSE(verify_certificate(bad, id));
}

TEST_CASE("identity is an equivalence on random categories") {
  std::mt19937 rng(3);
  for (int i = 0; i < 40; ++i) {
    auto c = share(gen::random_finite_category(rng));
    auto id = identity_functor(c);
    auto v = is_equivalence(id);
    REQUIRE(std::holds_alternative<EquivalenceCertificate>(v));
    CHECK(verify_certificate(std::get<EquivalenceCertificate>(v), id));
  }
}

TEST_CASE("equivalences satisfy two-out-of-three") {
  std::vector<FinCatPtr> cats = {
      share(finite::terminal()), share(finite::chaotic({"x", "y"})),
      share(finite::discrete({"p", "q"})), share(finite::arrow()),
      share(finite::cyclic_group(2)),
      share(finite::coproduct({finite::terminal(), finite::chaotic({"u", "v"})}))};
  std::vector<std::vector<std::vector<FiniteFunctor>>> fs(cats.size());
  for (std::size_t i = 0; i < cats.size(); ++i) {
    fs[i].resize(cats.size());
    for (std::size_t j = 0; j < cats.size(); ++j) {
      for_each_functor(cats[i], cats[j], [&](FiniteFunctor const& f) {
        fs[i][j].push_back(f);
        return true;
      });
    }
  }
  std::mt19937 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t a = rng() % cats.size();
    std::size_t b = rng() % cats.size();
    std::size_t c = rng() % cats.size();
    if (fs[a][b].empty() || fs[b][c].empty()) {
      continue;
    }
    auto const& f = fs[a][b][rng() % fs[a][b].size()];
    auto const& g = fs[b][c][rng() % fs[b][c].size()];
    auto gf = compose(f, g);
    REQUIRE(check_functor(gf));
    int count = int(equivalent(f)) + int(equivalent(g)) + int(equivalent(gf));
    CHECK(count != 2);
    ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("groupoid predicates") {
  CHECK(is_groupoid(finite::chaotic({"x", "y"})));
  CHECK_FALSE(is_groupoid(finite::arrow()));
  auto z = presentations::integers();
  CHECK(is_groupoid(z, complete(z)) == Decision::Yes);
  auto arrow = presentations::arrow();
  CHECK(is_groupoid(arrow, complete(arrow)) == Decision::No);
  auto c2 = FpCategory::build(
      {"x", "y"}, {{"u", "x", "y"}, {"v", "y", "x"}},
      {{{"x", {"u", "v"}}, {"x", {}}}, {{"y", {"v", "u"}}, {"y", {}}}}, {});
  CHECK(is_groupoid(c2, complete(c2)) == Decision::Yes);
  auto loop = FpCategory::build({"*"}, {{"e", "*", "*"}}, {}, {});
  CHECK(is_groupoid(loop, complete(loop)) == Decision::Unknown);
}

TEST_CASE("contractibility") {
  CHECK(is_contractible(finite::chaotic({"x", "y"})));
  CHECK_FALSE(is_contractible(FiniteCategory{}));
  CHECK_FALSE(is_contractible(finite::arrow()));
  auto z = presentations::integers();
  CHECK_FALSE(is_contractible(z, complete(z)));
  auto e = presentations::empty();
  CHECK_FALSE(is_contractible(e, complete(e)));
  auto bad = rewriting_system_from_rules({}, CompletionStatus::Incomplete);
  CHECK_THROWS_AS(is_contractible(z, bad), Error);
}

TEST_CASE("find_equivalence examples") {
  auto c2 = share(finite::chaotic({"x", "y"}));
  auto one = share(finite::terminal());
  auto arrow = share(finite::arrow());
  auto f = find_equivalence(c2, one);
  REQUIRE(f);
  CHECK(f->object_map == std::vector<ObjId>{0, 0});
  CHECK_FALSE(find_equivalence(arrow, c2));
  auto g = find_equivalence(arrow, arrow);
  REQUIRE(g);
  CHECK(g->morphism_map == identity_functor(arrow).morphism_map);
  CHECK(find_equivalence(one, c2));
  CHECK_FALSE(find_equivalence(share(FiniteCategory{}), one));
}

TEST_CASE("contractible iff equivalent to the point") {
  std::mt19937 rng(17);
  auto one = share(finite::terminal());
  for (int i = 0; i < 80; ++i) {
    auto c = share(gen::random_finite_category(rng));
    CHECK(is_contractible(*c) == find_equivalence(c, one).has_value());
  }
}

TEST_CASE("find_equivalence respects the search bound") {
  auto big = share(finite::discrete({"a", "b", "c", "d", "e", "f", "g"}));
  CHECK_THROWS_AS(find_equivalence(big, big, 1000), Error);
}
