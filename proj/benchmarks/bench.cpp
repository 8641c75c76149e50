#include <benchmark/benchmark.h>

#include "scalerep/axiom.hpp"
#include "scalerep/gauge.hpp"
#include "scalerep/sampling.hpp"
#include "scalerep/term.hpp"

using namespace scalerep;

namespace {

void BM_rational_mul(benchmark::State& state) {
    Sampler smp(1);
    std::vector<Rational> values;
    for (int i = 0; i < 256; ++i) values.push_back(smp.nonzero_rational(1000));
    std::size_t i = 0;
    for (auto _ : state) {
        const Rational r = values[i % 256] * values[(i + 1) % 256];
        benchmark::DoNotOptimize(r);
        ++i;
    }
}
BENCHMARK(BM_rational_mul);

void BM_term_eval_external(benchmark::State& state) {
    const TermPtr t = parse_term("sum(j=1..3; sum(k=1..3; a^j / b^k)) + (a + b)^4");
    const Environment env{{"a", CRational(Rational(BigInt(2), BigInt(3)))},
                          {"b", CRational(Rational(BigInt(-5), BigInt(4)))}};
    const StructureHandle s =
        make_structure(NumberType::Rational, CRational(Rational(BigInt(3), BigInt(2))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_external(t, env, s));
    }
}
BENCHMARK(BM_term_eval_external);

void BM_field_suite(benchmark::State& state) {
    const StructureHandle s =
        make_structure(NumberType::Complex, CRational(Rational(2), Rational(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_field_suite(s, static_cast<int>(state.range(0)), 42));
    }
}
BENCHMARK(BM_field_suite)->Arg(50)->Arg(200);

void BM_covariant_derivative(benchmark::State& state) {
    using namespace gauge;
    const Lattice lat(1, static_cast<int>(state.range(0)), 0.1);
    const LinkFactor r = link_factor(sine_potential(lat, 0.2, 16.0), lat);
    ComplexField f;
    f.f.resize(lat.volume());
    for (int i = 0; i < lat.volume(); ++i) f.f[i] = Complex(std::sin(0.1 * i), 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(covariant_derivative(f, r, 0, lat));
    }
}
BENCHMARK(BM_covariant_derivative)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
