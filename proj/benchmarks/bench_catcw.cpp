#include <benchmark/benchmark.h>

#include "catcw/colimits.hpp"
#include "catcw/cw.hpp"
#include "catcw/ktheory.hpp"
#include "catcw/model_structure.hpp"
#include "catcw/sheaftopos.hpp"

using namespace catcw;

namespace {

void BM_CompleteCyclic(benchmark::State& state) {
  auto c = presentations::cyclic(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(complete(c));
  }
}
BENCHMARK(BM_CompleteCyclic)->Arg(2)->Arg(8)->Arg(32);

void BM_CompleteSurfaceGroup(benchmark::State& state) {
  auto c = build_two_complex({{{{}, {"a", "b"}, {{"a", "b", "a^-1", "b^-1"}}}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(complete(c));
  }
}
BENCHMARK(BM_CompleteSurfaceGroup);

void BM_ToFiniteChaotic(benchmark::State& state) {
  std::vector<std::string> objs;
  for (int i = 0; i < state.range(0); ++i) {
    objs.push_back("x" + std::to_string(i));
  }
  auto c = chaotic(objs);
  auto rs = complete(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_finite(c, rs));
  }
}
BENCHMARK(BM_ToFiniteChaotic)->Arg(2)->Arg(4)->Arg(6);

void BM_PushoutCircle(benchmark::State& state) {
  auto s0 = share(presentations::discrete({"x", "y"}));
  auto c2 = share(chaotic({"x", "y"}));
  auto f = make_functor(s0, c2, {{"x", "x"}, {"y", "y"}}, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(pushout(f, f));
  }
}
BENCHMARK(BM_PushoutCircle);

void BM_K0Witness(benchmark::State& state) {
  auto x = pointed(share(presentations::cyclic(static_cast<unsigned>(state.range(0)))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(k0_vanishing_witness(x));
  }
}
BENCHMARK(BM_K0Witness)->Arg(2)->Arg(5);

void BM_K0Replay(benchmark::State& state) {
  auto w = k0_vanishing_witness(pointed(share(presentations::arrow())));
  for (auto _ : state) {
    benchmark::DoNotOptimize(k0_defect(w));
  }
}
BENCHMARK(BM_K0Replay);

void BM_SheafifyConstant(benchmark::State& state) {
  auto a = share(finite::cyclic_group(static_cast<unsigned>(state.range(0))));
  auto x = spaces::discrete({"p", "q", "r"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sheafify_constant(a, x));
  }
}
BENCHMARK(BM_SheafifyConstant)->Arg(2)->Arg(4);

void BM_UnitCheck(benchmark::State& state) {
  auto a = share(finite::chaotic({"x", "y", "z"}));
  auto x = spaces::sierpinski();
  for (auto _ : state) {
    benchmark::DoNotOptimize(unit_check(a, x));
  }
}
BENCHMARK(BM_UnitCheck);

}  // namespace

BENCHMARK_MAIN();
