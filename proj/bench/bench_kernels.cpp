// Parallel kernels against their serial references on fixed inputs.
#include "permlab/antichain.hpp"
#include "permlab/closure.hpp"
#include "permlab/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace permlab;
namespace k = permlab::kernels;

namespace {

AntichainSpec default_spec() {
  return AntichainSpec::from_tau(3, Permutation::parse("2 1"), Permutation::parse("1 2 3 4"));
}

std::vector<Packed> layer_of(int n) {
  std::vector<Packed> out;
  for (const auto &p : all_permutations(n))
    out.push_back(pack(p));
  return out;
}

const std::vector<Permutation> &split_end_family() {
  static const auto fam = elements_up_to(AntichainSpec::split_end_paths(), 40);
  return fam;
}

const k::ClosureProblem &problem() {
  static const auto p = closure_problem(default_spec(), 10, default_cutoff(default_spec(), 10));
  return p;
}

const std::vector<k::SkeletonKey> &keys() {
  static const auto ks = k::skeleton_keys(problem());
  return ks;
}

void BM_comparable_pairs(benchmark::State &state) {
  const auto &fam = split_end_family();
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? k::first_comparable_pair(fam)
                                            : k::first_comparable_pair_serial(fam));
}

void BM_deletion_layer(benchmark::State &state) {
  const auto layer = layer_of(9);
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? k::deletion_layer(layer, 9)
                                            : k::deletion_layer_serial(layer, 9));
}

void BM_extend_avoiders(benchmark::State &state) {
  const std::vector<Permutation> basis{Permutation::parse("1 2 3 4")};
  std::vector<Packed> layer{0};
  for (int n = 0; n < 9; ++n)
    layer = k::extend_avoiders(layer, n, basis);
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? k::extend_avoiders(layer, 9, basis)
                                            : k::extend_avoiders_serial(layer, 9, basis));
}

void BM_skeleton_keys(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? k::skeleton_keys(problem())
                                            : k::skeleton_keys_serial(problem()));
}

void BM_inflate_keys(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? k::inflate_keys(problem(), keys())
                                            : k::inflate_keys_serial(problem(), keys()));
}

} // namespace

// Argument 0 runs the serial reference, 1 the OpenMP kernel.
BENCHMARK(BM_comparable_pairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_deletion_layer)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extend_avoiders)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_skeleton_keys)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_inflate_keys)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
