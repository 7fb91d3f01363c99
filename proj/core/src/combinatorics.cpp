#include "digitadd/combinatorics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace digitadd {

Factorization factorize(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("factorize: n must be positive");
    }
    Factorization f;
    f.n = n;
    auto push = [&f](std::uint64_t p, std::uint32_t e) {
        f.prime_powers.push_back(PrimePower{p, e});
    };
    std::uint64_t rest = n;
    for (std::uint64_t d : {std::uint64_t{2}, std::uint64_t{3}}) {
        std::uint32_t e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (e > 0) push(d, e);
    }
    for (std::uint64_t d = 5; d <= rest / d;) {
        for (std::uint64_t cand : {d, d + 2}) {
            std::uint32_t e = 0;
            while (rest % cand == 0) {
                rest /= cand;
                ++e;
            }
            if (e > 0) push(cand, e);
        }
        d += 6;
    }
    if (rest > 1) push(rest, 1);
    return f;
}

std::vector<Composition> enumerate_compositions(std::uint32_t m, std::size_t budget) {
    if (m == 0) {
        throw std::invalid_argument("enumerate_compositions: m must be positive");
    }
    if (m > 63 || (std::uint64_t{1} << (m - 1)) > budget) {
        throw std::length_error("enumerate_compositions: 2^" + std::to_string(m - 1) +
                                " compositions exceed the budget of " + std::to_string(budget));
    }
    const std::uint64_t total = std::uint64_t{1} << (m - 1);
    std::vector<Composition> out;
    out.reserve(total);
    for (std::uint64_t c = 0; c < total; ++c) {
        std::vector<std::uint32_t> parts;
        std::uint32_t current = 1;
        for (std::uint32_t gap = 0; gap + 1 < m; ++gap) {
            if ((c >> gap) & 1) {
                ++current;  // join: the gap becomes a plus sign
            } else {
                parts.push_back(current);  // cut: the gap becomes a comma
                current = 1;
            }
        }
        parts.push_back(current);
        out.emplace_back(std::move(parts));
    }
    return out;
}

mpz_class count_compositions(std::uint32_t m) {
    if (m == 0) {
        throw std::invalid_argument("count_compositions: m must be positive");
    }
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, m - 1);
    return r;
}

mpz_class count_partitions(std::uint32_t m) {
    if (m == 0) {
        throw std::invalid_argument("count_partitions: m must be positive");
    }
    // ways[n] = partitions of n into parts <= k, k growing outer.
    std::vector<mpz_class> ways(m + 1, 0);
    ways[0] = 1;
    for (std::uint32_t k = 1; k <= m; ++k) {
        for (std::uint32_t n = k; n <= m; ++n) {
            ways[n] += ways[n - k];
        }
    }
    return ways[m];
}

namespace {

void partitions_rec(std::uint32_t remaining, std::uint32_t max_part,
                    std::vector<std::uint32_t>& prefix,
                    std::vector<std::vector<std::uint32_t>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_partitions(std::uint32_t m) {
    if (m == 0) {
        throw std::invalid_argument("enumerate_partitions: m must be positive");
    }
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> prefix;
    partitions_rec(m, m, prefix, out);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("euler_phi: n must be positive");
    }
    std::uint64_t phi = n;
    for (const auto& pp : factorize(n).prime_powers) {
        phi -= phi / pp.prime;
    }
    return phi;
}

mpz_class euler_phi_power(const Base& base, std::uint32_t t) {
    if (t == 0) return 1;  // phi(b^0) = phi(1)
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), base.value(), t - 1);
    return power * euler_phi(base.value());
}

std::vector<std::uint64_t> enumerate_twist_units(const Base& base, std::uint32_t t,
                                                 std::size_t budget) {
    if (t == 0) {
        throw std::invalid_argument("enumerate_twist_units: t must be positive");
    }
    unsigned __int128 modulus = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        modulus *= base.value();
        if (modulus > budget) {
            throw std::length_error("enumerate_twist_units: " + std::to_string(base.value()) +
                                    "^" + std::to_string(t) + " exceeds the budget of " +
                                    std::to_string(budget));
        }
    }
    const std::uint64_t m = static_cast<std::uint64_t>(modulus);
    std::vector<std::uint64_t> units;
    for (std::uint64_t u = 1; u < m; ++u) {
        if (std::gcd(u, base.value()) == 1) units.push_back(u);
    }
    return units;
}

mpz_class count_additions_prime(std::uint64_t p, std::uint32_t m) {
    if (!Base(p).is_prime()) {
        throw std::invalid_argument("count_additions_prime: " + std::to_string(p) +
                                    " is not prime");
    }
    if (m == 0) {
        throw std::invalid_argument("count_additions_prime: m must be positive");
    }
    mpz_class factor;
    mpz_class twop1 = mpz_class(2) * mpz_class(static_cast<unsigned long>(p)) - 1;
    mpz_pow_ui(factor.get_mpz_t(), twop1.get_mpz_t(), m - 1);
    return (mpz_class(static_cast<unsigned long>(p)) - 1) * factor;
}

mpq_class c_b(const Base& base) {
    mpq_class c = 1;
    for (const auto& pp : factorize(base.value()).prime_powers) {
        c *= mpq_class(static_cast<unsigned long>(pp.prime - 1),
                       static_cast<unsigned long>(pp.prime));
    }
    c.canonicalize();
    return c;
}

mpz_class count_additions_general(const Base& base, std::uint32_t m) {
    if (m == 0) {
        throw std::invalid_argument("count_additions_general: m must be positive");
    }
    const std::uint64_t phi = euler_phi(base.value());
    const mpz_class inner =
        mpz_class(static_cast<unsigned long>(base.value())) + static_cast<unsigned long>(phi);
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), inner.get_mpz_t(), m - 1);
    return mpz_class(static_cast<unsigned long>(phi)) * power;
}

mpz_class twist_count_for_composition(const Base& base, const Composition& comp) {
    mpz_class total = 1;
    for (std::uint32_t t : comp.parts()) {
        total *= euler_phi_power(base, t);
    }
    return total;
}

CountReport sum_over_compositions(const Base& base, std::uint32_t m, std::size_t budget) {
    CountReport report;
    report.base = base.value();
    report.m = m;
    report.closed_form_total = count_additions_general(base, m);
    report.enumerated_parameter_tuples = 0;
    for (const Composition& comp : enumerate_compositions(m, budget)) {
        report.enumerated_parameter_tuples += twist_count_for_composition(base, comp);
    }
    return report;
}

}  // namespace digitadd
