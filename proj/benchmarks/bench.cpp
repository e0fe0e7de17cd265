#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "cl3/pattern.hpp"
#include "cl3/quadric.hpp"
#include "cl3/verify.hpp"

namespace {

// q -> (p, h) for the prime powers the benchmarks use.
cl3::Field field_of_order(int q) {
  int p = 2;
  while (q % p) ++p;
  int h = 0;
  for (int v = q; v > 1; v /= p) ++h;
  return cl3::Field(p, h);
}

const cl3::Geometry& geometry(int q) {
  static std::map<int, std::unique_ptr<cl3::Geometry>> cache;
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, std::make_unique<cl3::Geometry>(field_of_order(q))).first;
  return *it->second;
}

const cl3::LineClass& bd_class(int q) {
  static std::map<int, std::unique_ptr<cl3::LineClass>> cache;
  auto it = cache.find(q);
  if (it == cache.end()) {
    const cl3::Geometry& g = geometry(q);
    cl3::EllipticQuadric quad(g, cl3::default_elliptic_form(g.field()));
    it = cache
             .emplace(q, std::make_unique<cl3::LineClass>(
                             quad.bruen_drudge(cl3::BdBase::Secants, 1)))
             .first;
  }
  return *it->second;
}

void BM_GeometryBuild(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    cl3::Geometry g{field_of_order(q)};
    benchmark::DoNotOptimize(g.n_lines());
  }
}
BENCHMARK(BM_GeometryBuild)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PairingSweep(benchmark::State& state) {
  const cl3::Geometry& g = geometry(static_cast<int>(state.range(0)));
  long long hits = 0;
  for (auto _ : state) {
    for (cl3::Id a = 0; a < g.n_lines(); ++a)
      if (g.lines_meet(a, 0)) ++hits;
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(state.iterations() * g.n_lines());
}
BENCHMARK(BM_PairingSweep)->Arg(5)->Arg(9);

void BM_DegreeCheck(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const cl3::LineClass& cls = bd_class(q);
  const long long x =
      (static_cast<long long>(q) * q + 1) / 2;
  for (auto _ : state) {
    auto r = cl3::degree_check(cls, x, static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(r.pass);
  }
}
BENCHMARK(BM_DegreeCheck)->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_Pattern(benchmark::State& state) {
  const cl3::LineClass& cls = bd_class(5);
  cl3::Id line = 0;
  for (auto _ : state) {
    auto t = cl3::pattern(cls, line);
    benchmark::DoNotOptimize(t.entries.data());
    line = (line + 1) % cls.geometry().n_lines();
  }
}
BENCHMARK(BM_Pattern);

void BM_RegularSpread(benchmark::State& state) {
  const cl3::Geometry& g = geometry(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto s = cl3::regular_spread(g);
    benchmark::DoNotOptimize(s.lines.data());
  }
}
BENCHMARK(BM_RegularSpread)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
