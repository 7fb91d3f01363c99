#pragma once

#include <cstdint>
#include <vector>

namespace digitadd {

/// Integer base b >= 2 with a cached primality verdict.
class Base {
public:
    explicit Base(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }
    bool is_prime() const noexcept { return is_prime_; }

    friend bool operator==(const Base& a, const Base& b) noexcept {
        return a.value_ == b.value_;
    }

private:
    std::uint64_t value_;
    bool is_prime_;
};

/// Fixed-length vector of base-b digits.
/// Index 0 is the least significant position; every digit lies in [0, b).
class DigitVector {
public:
    DigitVector(Base base, std::vector<std::uint64_t> digits);

    const Base& base() const noexcept { return base_; }
    std::size_t length() const noexcept { return digits_.size(); }
    std::uint64_t digit(std::size_t i) const { return digits_.at(i); }
    const std::vector<std::uint64_t>& digits() const noexcept { return digits_; }

    friend bool operator==(const DigitVector& a, const DigitVector& b) noexcept {
        return a.base_ == b.base_ && a.digits_ == b.digits_;
    }

private:
    Base base_;
    std::vector<std::uint64_t> digits_;
};

/// Positional value x_0 + x_1 b + ... + x_{m-1} b^{m-1}.
/// Throws std::overflow_error if the value does not fit in 64 bits.
std::uint64_t int_radix(const DigitVector& v);

/// Inverse of int_radix: the unique length-m digit vector with value k.
/// Throws std::out_of_range if k >= b^m.
DigitVector dig_radix(std::uint64_t k, Base base, std::size_t length);

}  // namespace digitadd
