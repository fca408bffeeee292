#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "tcat/catalog.hpp"
#include "tcat/closure.hpp"
#include "tcat/crossed.hpp"
#include "tcat/skeletal.hpp"

namespace {

std::vector<tcat::Label> labels_of(const tcat::Category& cat, const std::vector<std::string>& names) {
  std::vector<tcat::Label> out;
  for (const auto& n : names) out.push_back(cat.data.ring.lookup(n));
  return out;
}

void BM_CatalogBuild(benchmark::State& state, const std::string& name) {
  for (auto _ : state) {
    tcat::Category cat = tcat::catalog_get(name);
    benchmark::DoNotOptimize(cat);
  }
}
BENCHMARK_CAPTURE(BM_CatalogBuild, repS3, std::string("repS3"));
BENCHMARK_CAPTURE(BM_CatalogBuild, repD4, std::string("repD4"));
BENCHMARK_CAPTURE(BM_CatalogBuild, ising, std::string("ising"));

void BM_Pentagon(benchmark::State& state, const std::string& name) {
  const tcat::Category cat = tcat::catalog_get(name);
  for (auto _ : state) {
    auto report = tcat::check_pentagon(*cat.skeletal);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK_CAPTURE(BM_Pentagon, repS3, std::string("repS3"));
BENCHMARK_CAPTURE(BM_Pentagon, repD4, std::string("repD4"));
BENCHMARK_CAPTURE(BM_Pentagon, ising, std::string("ising"));

void BM_Hexagon(benchmark::State& state, const std::string& name) {
  const tcat::Category cat = tcat::catalog_get(name);
  for (auto _ : state) {
    auto report = tcat::check_hexagon(*cat.skeletal);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK_CAPTURE(BM_Hexagon, repD4, std::string("repD4"));
BENCHMARK_CAPTURE(BM_Hexagon, ising, std::string("ising"));

void BM_CloseD4(benchmark::State& state) {
  const tcat::Category cat = tcat::catalog_get("repD4");
  const auto S = labels_of(cat, {"a", "b", "c"});
  for (auto _ : state) {
    auto report = tcat::close(cat, S);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_CloseD4);

void BM_CloseAuto(benchmark::State& state, const std::string& name) {
  const tcat::Category cat = tcat::catalog_get(name);
  for (auto _ : state) {
    auto report = tcat::close_auto(cat);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK_CAPTURE(BM_CloseAuto, z4metric, std::string("z4metric"));
BENCHMARK_CAPTURE(BM_CloseAuto, repQ8, std::string("repQ8"));

void BM_GaloisLatticeD4(benchmark::State& state) {
  const tcat::Category cat = tcat::catalog_get("repD4");
  const auto S = labels_of(cat, {"a", "b", "c"});
  for (auto _ : state) {
    auto lattice = tcat::galois_lattice(cat, S);
    benchmark::DoNotOptimize(lattice);
  }
}
BENCHMARK(BM_GaloisLatticeD4);

void BM_CrossedCompose(benchmark::State& state) {
  const tcat::Category cat = tcat::catalog_get("repD4");
  const auto S = labels_of(cat, {"a", "b", "c"});
  const tcat::CrossedCalculus calc(*cat.skeletal, tcat::make_transparent_input(cat.data, S));
  const tcat::Label pi = cat.data.ring.lookup("pi");
  const tcat::CrossedMorphism f = calc.identity(pi);
  for (auto _ : state) {
    auto g = calc.compose(f, f);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_CrossedCompose);

void BM_CrossedTensor(benchmark::State& state) {
  const tcat::Category cat = tcat::catalog_get("repS3");
  const auto S = labels_of(cat, {"z"});
  const tcat::CrossedCalculus calc(*cat.skeletal, tcat::make_transparent_input(cat.data, S));
  const tcat::Label pi = cat.data.ring.lookup("pi");
  const tcat::Label z = cat.data.ring.lookup("z");
  const tcat::CrossedMorphism f = calc.identity(pi);
  const tcat::CrossedMorphism g = calc.basis(z, z);
  for (auto _ : state) {
    auto h = calc.tensor(f, g);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_CrossedTensor);

}  // namespace

BENCHMARK_MAIN();
