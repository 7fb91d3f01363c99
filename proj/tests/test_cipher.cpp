#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "digitadd/cipher.hpp"
#include "digitadd/combinatorics.hpp"
#include "oracles.hpp"

using namespace digitadd;

namespace {

std::vector<std::uint8_t> zero_key(std::size_t n) {
    return std::vector<std::uint8_t>(n, 0);
}

std::vector<std::uint64_t> random_digits(const Base& base, std::size_t n,
                                         std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, base.value() - 1);
    std::vector<std::uint64_t> digits(n);
    for (auto& d : digits) d = dist(rng);
    return digits;
}

}  // namespace

TEST_CASE("derivation reads composition bits most significant first") {
    // 0xD0 = 1101 0000; the first seven bits 1101000 give 3,2,1,1,1
    std::vector<std::uint8_t> key = zero_key(21);
    key[0] = 0xD0;
    const SchemeDerivation d = derive_scheme_from_key(KeySpec{key, Base(2), 8});
    CHECK(d.scheme.composition() == Composition({3, 2, 1, 1, 1}));
    CHECK(d.scheme.is_untwisted());
    CHECK(d.transcript.find("bits=1101000\n") != std::string::npos);
    CHECK(d.transcript.find("scheme=b=2 comp=3,2,1,1,1\n") != std::string::npos);
}

TEST_CASE("all-zero bits give pure XOR, all-one bits full integer addition") {
    const SchemeDerivation xor_scheme =
        derive_scheme_from_key(KeySpec{zero_key(33), Base(2), 8});
    CHECK(xor_scheme.scheme.composition() == Composition(std::vector<std::uint32_t>(8, 1)));

    std::vector<std::uint8_t> key = zero_key(5);
    key[0] = 0xFE;  // 1111 1110: seven ones
    const SchemeDerivation full = derive_scheme_from_key(KeySpec{key, Base(2), 8});
    CHECK(full.scheme.composition() == Composition({8}));
}

TEST_CASE("short keys are rejected with the required length") {
    CHECK_THROWS_WITH_AS(derive_scheme_from_key(KeySpec{zero_key(4), Base(2), 8}),
                         doctest::Contains("at least 5"), std::invalid_argument);
    // all-zero bits derive eight components, so 1 + 4*8 = 33 bytes
    CHECK_THROWS_WITH_AS(derive_scheme_from_key(KeySpec{zero_key(20), Base(2), 8}),
                         doctest::Contains("needs 33"), std::invalid_argument);
    CHECK(required_key_bytes(8, 8) == 33);
    CHECK(required_key_bytes(1, 1) == 4);

    // m = 1 consumes no composition bits and always derives one component
    const SchemeDerivation single = derive_scheme_from_key(KeySpec{zero_key(4), Base(2), 1});
    CHECK(single.scheme.composition() == Composition({1}));
    CHECK(single.transcript.find("bits=\n") != std::string::npos);
    CHECK_THROWS_AS(derive_scheme_from_key(KeySpec{zero_key(3), Base(2), 1}),
                    std::invalid_argument);
}

TEST_CASE("derivation is deterministic, transcript included") {
    std::mt19937_64 rng(0x5eed0201);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint8_t> key(33);
        for (auto& byte : key) byte = static_cast<std::uint8_t>(rng());
        const KeySpec spec{key, Base(2), 8};
        const SchemeDerivation first = derive_scheme_from_key(spec);
        const SchemeDerivation second = derive_scheme_from_key(spec);
        CHECK(first.scheme == second.scheme);
        CHECK(first.transcript == second.transcript);
    }
}

TEST_CASE("twist selection indexes the ascending unit list") {
    // Single-component composition for b=2, m=3: bits 11 -> 0xC0, then
    // four big-endian bytes select among the phi(8) = 4 units 1,3,5,7.
    const auto units = enumerate_twist_units(Base(2), 3);
    for (std::uint32_t k = 0; k < 8; ++k) {
        std::vector<std::uint8_t> key = {0xC0, 0, 0, 0, static_cast<std::uint8_t>(k)};
        const SchemeDerivation d = derive_scheme_from_key(KeySpec{key, Base(2), 3});
        CHECK(d.scheme.composition() == Composition({3}));
        CHECK(d.scheme.twist().units[0] == units[k % units.size()]);
    }

    // Composite base: phi(36) = 12 units, closed-form selection must
    // agree with the enumerated ascending list.
    const auto units36 = enumerate_twist_units(Base(6), 2);
    REQUIRE(units36.size() == 12);
    for (std::uint32_t k = 0; k < 24; ++k) {
        std::vector<std::uint8_t> key = {0x80, 0, 0, 0, static_cast<std::uint8_t>(k)};
        const SchemeDerivation d = derive_scheme_from_key(KeySpec{key, Base(6), 2});
        CHECK(d.scheme.twist().units[0] == units36[k % 12]);
    }
}

TEST_CASE("derivation is surjective onto composition and twist tuples") {
    // m = 4, b = 2: enumerate every scheme, then build a key that hits it.
    const Base base(2);
    std::uint64_t derived_count = 0;
    oracles::for_all_schemes(base, 4, true, [&](const AdditionScheme& target) {
        // composition bits: gap j joins iff parts merge at j
        std::uint8_t bits = 0;
        std::uint32_t gap = 0;
        for (std::size_t i = 0; i < target.composition().size(); ++i) {
            const std::uint32_t t = target.composition().parts()[i];
            for (std::uint32_t j = 1; j < t; ++j) bits |= 1 << (7 - gap++);
            if (i + 1 < target.composition().size()) ++gap;  // comma gap, bit stays 0
        }
        std::vector<std::uint8_t> key = {bits};
        for (std::size_t i = 0; i < target.composition().size(); ++i) {
            const auto units = enumerate_twist_units(base, target.composition().parts()[i]);
            std::uint32_t index = 0;
            while (units[index] != target.twist().units[i]) ++index;
            key.push_back(0);
            key.push_back(0);
            key.push_back(static_cast<std::uint8_t>(index >> 8));
            key.push_back(static_cast<std::uint8_t>(index & 0xFF));
        }
        const SchemeDerivation d = derive_scheme_from_key(KeySpec{key, base, 4});
        CHECK(d.scheme == target);
        ++derived_count;
    });
    CHECK(count_additions_prime(2, 4) == static_cast<unsigned long>(derived_count));
}

TEST_CASE("block encryption special cases") {
    std::mt19937_64 rng(0x5eed0202);
    const Base base(2);

    const SchemeDerivation xor_scheme =
        derive_scheme_from_key(KeySpec{zero_key(33), base, 8});
    for (int trial = 0; trial < 50; ++trial) {
        const DigitVector p(base, random_digits(base, 8, rng));
        const DigitVector k(base, random_digits(base, 8, rng));
        std::vector<std::uint64_t> expected(8);
        for (int i = 0; i < 8; ++i) expected[i] = p.digit(i) ^ k.digit(i);
        CHECK(encrypt_block(xor_scheme, p, k).digits() == expected);
        CHECK(decrypt_block(xor_scheme, encrypt_block(xor_scheme, p, k), k) == p);
        CHECK(decrypt_block(xor_scheme, p, k) == encrypt_block(xor_scheme, p, k));
    }

    std::vector<std::uint8_t> all_ones = zero_key(5);
    all_ones[0] = 0xFE;
    const SchemeDerivation full = derive_scheme_from_key(KeySpec{all_ones, base, 8});
    for (int trial = 0; trial < 50; ++trial) {
        const DigitVector p(base, random_digits(base, 8, rng));
        const DigitVector k(base, random_digits(base, 8, rng));
        CHECK(int_radix(encrypt_block(full, p, k)) == (int_radix(p) + int_radix(k)) % 256);
    }

    // untwisted scheme, zero keystream: ciphertext equals plaintext
    std::vector<std::uint8_t> mixed = zero_key(21);
    mixed[0] = 0xD0;
    const SchemeDerivation d = derive_scheme_from_key(KeySpec{mixed, base, 8});
    const DigitVector zero(base, std::vector<std::uint64_t>(8, 0));
    for (int trial = 0; trial < 50; ++trial) {
        const DigitVector p(base, random_digits(base, 8, rng));
        CHECK(encrypt_block(d, p, zero) == p);
    }
}

TEST_CASE("twisted block decryption matches the solve example") {
    // comp=(2) twist=3 for b=2, m=2: bits '1' -> 0x80, index 1 -> unit 3
    std::vector<std::uint8_t> key = {0x80, 0, 0, 0, 1};
    const SchemeDerivation d = derive_scheme_from_key(KeySpec{key, Base(2), 2});
    CHECK(d.scheme.twist().units == std::vector<std::uint64_t>{3});
    CHECK(decrypt_block(d, DigitVector(Base(2), {0, 1}), DigitVector(Base(2), {1, 0})) ==
          DigitVector(Base(2), {1, 0}));
}

TEST_CASE("stream edges") {
    std::vector<std::uint8_t> key = zero_key(21);
    key[0] = 0xD0;
    const SchemeDerivation d = derive_scheme_from_key(KeySpec{key, Base(2), 8});

    CHECK(encrypt_stream(d, {}, {}).empty());

    std::mt19937_64 rng(0x5eed0203);
    const auto block = random_digits(Base(2), 8, rng);
    const auto pad = random_digits(Base(2), 8, rng);
    CHECK(encrypt_stream(d, block, pad) ==
          encrypt_block(d, DigitVector(Base(2), block), DigitVector(Base(2), pad)).digits());

    const auto data = random_digits(Base(2), 24, rng);
    const auto pad3 = random_digits(Base(2), 24, rng);
    CHECK(decrypt_stream(d, encrypt_stream(d, data, pad3), pad3) == data);

    CHECK_THROWS_AS(encrypt_stream(d, random_digits(Base(2), 12, rng), pad3),
                    std::invalid_argument);  // not a multiple of m
    CHECK_THROWS_AS(encrypt_stream(d, data, pad),
                    std::invalid_argument);  // keystream exhausted
}

TEST_CASE("random keys round trip") {
    std::mt19937_64 rng(0x5eed0204);
    const Base base(2);
    for (int key_trial = 0; key_trial < 20; ++key_trial) {
        std::vector<std::uint8_t> key(33);
        for (auto& byte : key) byte = static_cast<std::uint8_t>(rng());
        const SchemeDerivation d = derive_scheme_from_key(KeySpec{key, base, 8});
        for (int trial = 0; trial < 50; ++trial) {
            const auto data = random_digits(base, 40, rng);
            const auto pad = random_digits(base, 40, rng);
            CHECK(decrypt_stream(d, encrypt_stream(d, data, pad), pad) == data);
        }
    }
}
