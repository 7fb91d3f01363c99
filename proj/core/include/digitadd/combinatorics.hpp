#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "digitadd/digits.hpp"
#include "digitadd/schemes.hpp"

namespace digitadd {

/// Default ceiling on enumeration sizes (compositions of m, units below
/// b^t, census scheme counts).
inline constexpr std::size_t kDefaultEnumBudget = std::size_t{1} << 20;

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) noexcept = default;
};

/// n = prod p_i^{a_i} with strictly increasing primes.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> prime_powers;
};

/// Trial-division factorization of n >= 1.
Factorization factorize(std::uint64_t n);

/// All 2^{m-1} compositions of m, generated by the box scheme: in the
/// row of m ones there are m-1 gaps; bit j of a counter c decides gap j
/// (1 = join the neighbouring ones into one part, 0 = cut). Counter
/// order c = 0, 1, ..., 2^{m-1}-1, so the list starts at (1,...,1) and
/// ends at (m). Throws std::length_error when 2^{m-1} exceeds the budget.
std::vector<Composition> enumerate_compositions(std::uint32_t m,
                                                std::size_t budget = kDefaultEnumBudget);

/// C(m) = 2^{m-1}.
mpz_class count_compositions(std::uint32_t m);

/// Partition counting and enumeration; parts weakly decreasing.
/// Enumeration is in reverse lexicographic order, from (m) down to
/// (1,...,1).
mpz_class count_partitions(std::uint32_t m);
std::vector<std::vector<std::uint32_t>> enumerate_partitions(std::uint32_t m);

/// Euler's totient, via trial-division factorization.
std::uint64_t euler_phi(std::uint64_t n);

/// phi(b^t) = phi(b) * b^{t-1}, exact at any size.
mpz_class euler_phi_power(const Base& base, std::uint32_t t);

/// Ascending list of u in [1, b^t) with gcd(u, b^t) = 1; its length is
/// phi(b^t). Throws std::length_error when b^t exceeds the budget.
std::vector<std::uint64_t> enumerate_twist_units(const Base& base, std::uint32_t t,
                                                 std::size_t budget = kDefaultEnumBudget);

/// (p-1)(2p-1)^{m-1}: schemes on A_p^m from compositions and twists,
/// p prime. Throws std::invalid_argument for non-prime p.
mpz_class count_additions_prime(std::uint64_t p, std::uint32_t m);

/// C_b = prod (1 - 1/p) over the distinct primes p dividing b; equals
/// phi(b)/b as an exact rational.
mpq_class c_b(const Base& base);

/// Scheme count for general base, computed in integers as
/// phi(b) * (b + phi(b))^{m-1}, which equals b^m C_b (1 + C_b)^{m-1}.
mpz_class count_additions_general(const Base& base, std::uint32_t m);

/// prod_i phi(b^{t_i}): the number of twist choices for one composition.
mpz_class twist_count_for_composition(const Base& base, const Composition& comp);

struct CountReport {
    std::uint64_t base = 0;
    std::uint32_t m = 0;
    mpz_class closed_form_total;
    mpz_class enumerated_parameter_tuples;
    std::optional<mpz_class> distinct_tables;  // set when a census ran
};

/// Direct enumeration of sum over all compositions of
/// prod_i phi(b^{t_i}), reported beside the closed form. The two must
/// agree exactly.
CountReport sum_over_compositions(const Base& base, std::uint32_t m,
                                  std::size_t budget = kDefaultEnumBudget);

}  // namespace digitadd
