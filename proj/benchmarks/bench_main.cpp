/* Copyright (C) 2026 the lubin authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include <benchmark/benchmark.h>

#include <random>

#include "lubin/coleman.hpp"
#include "lubin/torsion.hpp"

using namespace lubin;
using PB = PadicBase;

static std::unique_ptr<PadicRing> ring(unsigned p, unsigned N, unsigned h) {
    BaseFieldConfig cfg{FieldKind::PAdic, p, 1, N};
    return make_unramified<PB>(cfg, 1, 0, h);
}

static void BM_SeriesMul(benchmark::State& state) {
    auto R = ring(3, 8, 4);
    unsigned D = static_cast<unsigned>(state.range(0));
    std::mt19937_64 rng(1);
    TruncatedSeries<PB> a(R.get(), 2, D), b(R.get(), 2, D);
    for (auto& c : a.raw()) c = R->random_element(rng);
    for (auto& c : b.raw()) c = R->random_element(rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(8)->Arg(16)->Arg(32);

static void BM_BuildFormalGroup(benchmark::State& state) {
    unsigned D = static_cast<unsigned>(state.range(0));
    auto R = ring(3, 8, D + 2);
    auto f = LTPolynomial<PB>::canonical(R.get(), R->pi());
    for (auto _ : state) benchmark::DoNotOptimize(build_formal_group(f, D));
}
BENCHMARK(BM_BuildFormalGroup)->Arg(8)->Arg(16)->Arg(32);

static void BM_BuildTorsionLevel(benchmark::State& state) {
    unsigned m = static_cast<unsigned>(state.range(0));
    unsigned e = 1u << (m - 1);
    auto R = ring(2, 8, e * 8 + 2);
    auto f = LTPolynomial<PB>::canonical(R.get(), R->pi());
    for (auto _ : state) benchmark::DoNotOptimize(build_level(f, m));
}
BENCHMARK(BM_BuildTorsionLevel)->Arg(1)->Arg(2)->Arg(3);

static void BM_ColemanNorm(benchmark::State& state) {
    auto R = ring(2, 8, 64);
    auto f = LTPolynomial<PB>::canonical(R.get(), R->pi());
    auto ctx = make_coleman_context(f, 6);
    std::mt19937_64 rng(2);
    std::vector<RingElem<PB>> cs;
    for (int i = 0; i <= 6; ++i) cs.push_back(R->random_element(rng));
    Poly<PB> g(R.get(), cs);
    for (auto _ : state) benchmark::DoNotOptimize(coleman_N(g, *ctx));
}
BENCHMARK(BM_ColemanNorm);

BENCHMARK_MAIN();
