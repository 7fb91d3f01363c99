#include "digitadd/digits.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace digitadd {

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

}  // namespace

Base::Base(std::uint64_t value) : value_(value), is_prime_(trial_division_prime(value)) {
    if (value < 2) {
        throw std::invalid_argument("base must be at least 2, got " + std::to_string(value));
    }
}

DigitVector::DigitVector(Base base, std::vector<std::uint64_t> digits)
    : base_(base), digits_(std::move(digits)) {
    if (digits_.empty()) {
        throw std::invalid_argument("digit vector must have length at least 1");
    }
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] >= base_.value()) {
            throw std::invalid_argument("digit " + std::to_string(digits_[i]) + " at position " +
                                        std::to_string(i) + " is out of range for base " +
                                        std::to_string(base_.value()));
        }
    }
}

std::uint64_t int_radix(const DigitVector& v) {
    constexpr unsigned __int128 kLimit = static_cast<unsigned __int128>(1) << 64;
    const unsigned __int128 b = v.base().value();
    unsigned __int128 acc = 0;
    for (std::size_t i = v.length(); i-- > 0;) {
        acc = acc * b + v.digit(i);
        if (acc >= kLimit) {
            throw std::overflow_error("int_radix: value does not fit in 64 bits");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

DigitVector dig_radix(std::uint64_t k, Base base, std::size_t length) {
    if (length == 0) {
        throw std::invalid_argument("dig_radix: length must be at least 1");
    }
    // b^length, saturated just above 2^64; k is always in range past that.
    unsigned __int128 range = 1;
    for (std::size_t i = 0; i < length; ++i) {
        range *= base.value();
        if (range > std::numeric_limits<std::uint64_t>::max()) break;
    }
    if (static_cast<unsigned __int128>(k) >= range) {
        throw std::out_of_range("dig_radix: " + std::to_string(k) + " is out of range for " +
                                std::to_string(length) + " base-" +
                                std::to_string(base.value()) + " digits");
    }
    std::vector<std::uint64_t> digits(length);
    for (std::size_t i = 0; i < length; ++i) {
        digits[i] = k % base.value();
        k /= base.value();
    }
    return DigitVector(base, std::move(digits));
}

}  // namespace digitadd
