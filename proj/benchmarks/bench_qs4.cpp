// PBW and module memos are process-wide, so iterations after the first run
// against warm caches.

#include <benchmark/benchmark.h>

#include "qs4/rmat.hpp"
#include "qs4/shapovalov.hpp"
#include "qs4/sphere.hpp"
#include "qs4/uq.hpp"
#include "qs4/verma.hpp"

using namespace qs4;

static void BM_ScalarArithmetic(benchmark::State& st) {
    const Scalar q = Scalar::q(), mu = Scalar::mu(Mode::special);
    for (auto _ : st) {
        Scalar x = (q + mu) / (q.pow(3) - q.inverse());
        for (int i = 0; i < 10; ++i) x = x * (mu - q) + qint(i + 1);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_ScalarArithmetic);

static void BM_Completion(benchmark::State& st) {
    const int degree = static_cast<int>(st.range(0));
    for (auto _ : st) {
        RewriteSystem s = uq::defining_system();
        s.complete(degree);
        benchmark::DoNotOptimize(s.rules().size());
    }
}
BENCHMARK(BM_Completion)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_NormalFormColdCache(benchmark::State& st) {
    const NCPoly x = uq::parse("Eb*Ea*Eb*Fa*Fb*Fa*Ka*Ea*Fb");
    for (auto _ : st) {
        RewriteSystem s = uq::algebra();
        s.clear_cache();
        benchmark::DoNotOptimize(s.reduce(x).size());
    }
}
BENCHMARK(BM_NormalFormColdCache)->Unit(benchmark::kMillisecond);

static void BM_SingularVectors(benchmark::State& st) {
    for (auto _ : st) {
        verma::Module m(verma::Variant::upper_hat, Mode::special);
        benchmark::DoNotOptimize(verma::singular_vectors(m, 2, 1).size());
    }
}
BENCHMARK(BM_SingularVectors)->Unit(benchmark::kMillisecond);

static void BM_OperatorMatrix(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    for (auto _ : st) {
        rmat::OperatorMatrix Q(verma::Variant::upper_quotient, Mode::special, N);
        benchmark::DoNotOptimize(Q.basis().size());
    }
}
BENCHMARK(BM_OperatorMatrix)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Gram(benchmark::State& st) {
    const int max = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(shapovalov::gram(max).diag.size());
}
BENCHMARK(BM_Gram)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SphereHilbert(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sphere::quantum_filtered_dim(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_SphereHilbert)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
