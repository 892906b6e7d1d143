#include <benchmark/benchmark.h>

#include "adelic/cohomology.hpp"
#include "adelic/factor.hpp"
#include "adelic/parse.hpp"
#include "adelic/random.hpp"
#include "adelic/trace.hpp"

using namespace adelic;

namespace {

void BM_Factor(benchmark::State& state) {
  const BaseField k = BaseField::prime(101);
  std::vector<long> c(static_cast<std::size_t>(state.range(0)) + 1, 1);
  c[0] = 3;
  ScalarPoly p = scalar_poly(c, k);
  for (auto _ : state) benchmark::DoNotOptimize(factor_univariate(p));
}
BENCHMARK(BM_Factor)->Arg(8)->Arg(16)->Arg(32);

void BM_LineExpansion(benchmark::State& state) {
  Scheme P1 = Scheme::parse("P1/Q");
  RatFunc f = parse_ratfunc("(t^3-2*t+5)/((t)^2*(t-1)*(t+1))", P1.patch_vars(0), P1.base());
  Point x = Point::parse(P1, "pt(t=1)");
  for (auto _ : state) benchmark::DoNotOptimize(expand_at_place(P1, f, x, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LineExpansion)->Arg(8)->Arg(32)->Arg(128);

void BM_IteratedExpansion(benchmark::State& state) {
  Scheme A2 = Scheme::parse("A2/Q");
  const int n = static_cast<int>(state.range(0));
  PlaneFrame F = make_frame(Point::parse(A2, "curve(x+y)"), Point::parse(A2, "pt(x=0,y=0)"), n, n);
  RatFunc g = parse_ratfunc("1/((x)*(y)*(x+y)*(1-x-y))", A2.patch_vars(0), A2.base());
  for (auto _ : state) benchmark::DoNotOptimize(iter_expand(F, g));
}
BENCHMARK(BM_IteratedExpansion)->Arg(4)->Arg(8)->Arg(16);

void BM_ResidueFormula(benchmark::State& state) {
  const BaseField Q = BaseField::rationals();
  const Vars s{"s1", "s2"};
  Form beta = parse_form("(1+s1*s2)/((s1)^3*(s2)^3*(1-s1-s2)) ds1^ds2", s, Q);
  RatFunc a = parse_ratfunc("2+s1-s2", s, Q);
  for (auto _ : state) benchmark::DoNotOptimize(laurent_residue(beta, a));
}
BENCHMARK(BM_ResidueFormula);

void BM_CoboundaryPlane(benchmark::State& state) {
  Scheme A2 = Scheme::parse("A2/Q");
  ResidueComplexElement w(ResidueElement::generic(A2, parse_form("1/((x)*(y)*(x+y)*(x-1)) dx^dy", A2.patch_vars(0), A2.base())));
  for (auto _ : state) benchmark::DoNotOptimize(coboundary_delta(coboundary_delta(w)));
}
BENCHMARK(BM_CoboundaryPlane);

void BM_Action(benchmark::State& state) {
  Scheme X = Scheme::parse(state.range(0) ? "A2/Q" : "P1/Q");
  InstanceGenerator gen(X, 17);
  ResidueComplexElement phi = gen.residue_element(-X.dim());
  Adele a = gen.adele(1);
  for (auto _ : state) benchmark::DoNotOptimize(act(phi, a));
}
BENCHMARK(BM_Action)->Arg(0)->Arg(1);

void BM_Trace(benchmark::State& state) {
  Scheme P1 = Scheme::parse("P1/F7");
  P1Map f = P1Map::power(P1, 3);
  InstanceGenerator gen(P1, 5);
  ResidueComplexElement phi = gen.residue_element(0);
  for (auto _ : state) benchmark::DoNotOptimize(trace_pushforward(f, phi));
}
BENCHMARK(BM_Trace);

void BM_DualFormDifferential(benchmark::State& state) {
  Scheme P1 = Scheme::parse("P1/Q");
  InstanceGenerator gen(P1, 23);
  DualForm phi = gen.dual_form(-1, -1);
  for (auto _ : state) benchmark::DoNotOptimize(d_total(phi));
}
BENCHMARK(BM_DualFormDifferential);

void BM_Cohomology(benchmark::State& state) {
  Scheme P1 = Scheme::parse("P1/Q");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(line_bundle_cohomology(P1, n));
}
BENCHMARK(BM_Cohomology)->Arg(-4)->Arg(0)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
