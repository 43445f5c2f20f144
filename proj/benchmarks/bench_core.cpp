#include <benchmark/benchmark.h>

#include <random>

#include "wallkit/classifier.hpp"
#include "wallkit/discriminant.hpp"
#include "wallkit/isometry.hpp"
#include "wallkit/nikulin.hpp"
#include "wallkit/short_vectors.hpp"
#include "wallkit/walls.hpp"

using namespace wallkit;

namespace {

LatticeVector random_lambda(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  while (true) {
    IntVector c(16);
    for (auto& x : c) x = coord(rng);
    if (gcd(c) == 1) return LatticeVector(lambda_lattice(), c);
  }
}

void BM_E8Roots(benchmark::State& state) {
  auto gram = make_standard("E8(-1)")->gram();
  for (auto _ : state) benchmark::DoNotOptimize(short_vectors(gram, {Integer(-2)}));
}
BENCHMARK(BM_E8Roots)->Unit(benchmark::kMillisecond);

void BM_DiscriminantGroup(benchmark::State& state) {
  auto lattice = lambda_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_group(lattice));
}
BENCHMARK(BM_DiscriminantGroup)->Unit(benchmark::kMillisecond);

void BM_ClassifyLambda(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<LatticeVector> inputs;
  for (int k = 0; k < 256; ++k) inputs.push_back(random_lambda(rng, static_cast<int>(state.range(0))));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_lambda(inputs[k++ % inputs.size()]));
}
BENCHMARK(BM_ClassifyLambda)->Arg(3)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_EichlerNormalize(benchmark::State& state) {
  auto hat3 = make_standard("LambdaHat3");
  LatticeVector v(hat3, make_vector({7, -3, 5, 11, -2, 4, 3}));
  LatticeVector w(hat3, make_vector({0, 0, 0, 0, 1, 17, 0}));  // both norm 34, div 1
  for (auto _ : state) benchmark::DoNotOptimize(eichler_normalize(v, w));
}
BENCHMARK(BM_EichlerNormalize)->Unit(benchmark::kMicrosecond);

void BM_WallsInPicard(benchmark::State& state) {
  using namespace named;
  PicardEmbedding pic(lambda_lattice(), {e1_lambda(), h1(), h2()});
  for (auto _ : state) benchmark::DoNotOptimize(walls_in_picard(pic));
}
BENCHMARK(BM_WallsInPicard)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
