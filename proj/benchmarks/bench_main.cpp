#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "digitadd/cipher.hpp"
#include "digitadd/combinatorics.hpp"
#include "digitadd/schemes.hpp"
#include "digitadd/verify.hpp"

using namespace digitadd;

namespace {

DigitVector random_vector(const Base& base, std::uint32_t m, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, base.value() - 1);
    std::vector<std::uint64_t> digits(m);
    for (auto& d : digits) d = dist(rng);
    return DigitVector(base, std::move(digits));
}

void BM_scheme_add_xor(benchmark::State& state) {
    const std::uint32_t m = static_cast<std::uint32_t>(state.range(0));
    const Base base(2);
    const AdditionScheme s(base, Composition(std::vector<std::uint32_t>(m, 1)));
    std::mt19937_64 rng(1);
    const DigitVector x = random_vector(base, m, rng);
    const DigitVector y = random_vector(base, m, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scheme_add(s, x, y));
    }
}

void BM_scheme_add_carry(benchmark::State& state) {
    const std::uint32_t m = static_cast<std::uint32_t>(state.range(0));
    const Base base(2);
    const AdditionScheme s(base, Composition({m}));
    std::mt19937_64 rng(2);
    const DigitVector x = random_vector(base, m, rng);
    const DigitVector y = random_vector(base, m, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scheme_add(s, x, y));
    }
}

void BM_scheme_add_twisted_mix(benchmark::State& state) {
    const Base base(2);
    const AdditionScheme s(base, Composition({5, 3, 4, 2, 2}),
                           TwistVector{{7, 3, 11, 1, 3}});
    std::mt19937_64 rng(3);
    const DigitVector x = random_vector(base, 16, rng);
    const DigitVector y = random_vector(base, 16, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scheme_add(s, x, y));
    }
}

void BM_scheme_add_label(benchmark::State& state) {
    const AdditionScheme s(Base(2), Composition({5, 3, 4, 2, 2}),
                           TwistVector{{7, 3, 11, 1, 3}});
    std::uint64_t x = 12345, y = 54321;
    for (auto _ : state) {
        benchmark::DoNotOptimize(scheme_add_label(s, x, y));
        x = (x + 40503) & 0xFFFF;
        y = (y + 9176) & 0xFFFF;
    }
}

void BM_operation_table(benchmark::State& state) {
    const std::uint32_t m = static_cast<std::uint32_t>(state.range(0));
    const AdditionScheme s(Base(2), Composition({m / 2, m - m / 2}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(operation_table(s));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * m)));
}

void BM_check_group_axioms(benchmark::State& state) {
    const std::uint32_t m = static_cast<std::uint32_t>(state.range(0));
    const AdditionScheme s(Base(2), Composition({m / 2, m - m / 2}));
    const OperationTable table = operation_table(s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_group_axioms(table));
    }
}

void BM_census_untwisted(benchmark::State& state) {
    const std::uint32_t m = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(census_distinct_tables(Base(2), m, false));
    }
}

void BM_census_twisted(benchmark::State& state) {
    const std::uint32_t m = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(census_distinct_tables(Base(2), m, true));
    }
}

void BM_enumerate_compositions(benchmark::State& state) {
    const std::uint32_t m = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_compositions(m));
    }
}

void BM_euler_phi(benchmark::State& state) {
    std::uint64_t n = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(euler_phi(n));
        n = n % 1'000'000 + 2;
    }
}

void BM_derive_scheme(benchmark::State& state) {
    std::vector<std::uint8_t> key(33);
    std::mt19937_64 rng(4);
    for (auto& b : key) b = static_cast<std::uint8_t>(rng());
    const KeySpec spec{key, Base(2), 8};
    for (auto _ : state) {
        benchmark::DoNotOptimize(derive_scheme_from_key(spec));
    }
}

void BM_encrypt_stream(benchmark::State& state) {
    std::vector<std::uint8_t> key(33, 0);
    key[0] = 0xD0;
    const SchemeDerivation d = derive_scheme_from_key(KeySpec{key, Base(2), 8});
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> bit(0, 1);
    std::vector<std::uint64_t> data(8 * 1024), pad(8 * 1024);
    for (auto& v : data) v = bit(rng);
    for (auto& v : pad) v = bit(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(encrypt_stream(d, data, pad));
    }
    state.SetBytesProcessed(state.iterations() * 1024);  // one byte per block
}

BENCHMARK(BM_scheme_add_xor)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_scheme_add_carry)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_scheme_add_twisted_mix);
BENCHMARK(BM_scheme_add_label);
BENCHMARK(BM_operation_table)->Arg(6)->Arg(10)->Arg(12);
BENCHMARK(BM_check_group_axioms)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_census_untwisted)->Arg(4)->Arg(8);
BENCHMARK(BM_census_twisted)->Arg(3)->Arg(5);
BENCHMARK(BM_enumerate_compositions)->Arg(10)->Arg(16);
BENCHMARK(BM_euler_phi);
BENCHMARK(BM_derive_scheme);
BENCHMARK(BM_encrypt_stream);

}  // namespace

BENCHMARK_MAIN();
