#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digitadd/digits.hpp"

namespace digitadd {

/// Default ceiling on the number of elements b^m of a materialized
/// operation table (64 MB worst case at 4-byte entries).
inline constexpr std::size_t kDefaultTableCap = 4096;

/// Ordered sequence of positive parts (t_1,...,t_r) summing to m.
/// Order matters: (3,2,1,1,1) and (1,1,1,2,3) are different compositions.
class Composition {
public:
    explicit Composition(std::vector<std::uint32_t> parts);

    const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
    std::uint32_t sum() const noexcept { return sum_; }
    std::size_t size() const noexcept { return parts_.size(); }

    friend bool operator==(const Composition& a, const Composition& b) noexcept {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<std::uint32_t> parts_;
    std::uint32_t sum_;
};

/// Per-component multiplier units (u_1,...,u_r), u_i paired with part t_i.
/// Each unit must satisfy 1 <= u_i < b^{t_i} and gcd(u_i, b^{t_i}) = 1;
/// this is validated when an AdditionScheme is built.
struct TwistVector {
    std::vector<std::uint64_t> units;

    static TwistVector all_ones(std::size_t r) {
        return TwistVector{std::vector<std::uint64_t>(r, 1)};
    }

    friend bool operator==(const TwistVector& a, const TwistVector& b) noexcept = default;
};

/// One concrete binary operation on A_b^m: component i covers digit
/// positions [o_i, o_i + t_i) with o_1 = 0, and adds its digits as
/// u_i * (x + y) mod b^{t_i} on positional values.
///
/// With all u_i = 1 this is the product group
/// Z/b^{t_1}Z x ... x Z/b^{t_r}Z and hence an abelian group law; with
/// any u_i != 1 the operation is a commutative quasigroup (Latin
/// square) but not associative and has no identity -- see
/// check_group_axioms for the measured verdict.
class AdditionScheme {
public:
    AdditionScheme(Base base, Composition composition, TwistVector twist);
    AdditionScheme(Base base, Composition composition);  // untwisted

    const Base& base() const noexcept { return base_; }
    const Composition& composition() const noexcept { return composition_; }
    const TwistVector& twist() const noexcept { return twist_; }

    std::uint32_t length() const noexcept { return composition_.sum(); }
    std::size_t component_count() const noexcept { return composition_.size(); }
    bool is_untwisted() const noexcept;

    /// Number of elements b^m, or nullopt if it exceeds 2^64 - 1.
    std::optional<std::uint64_t> element_count() const noexcept;

    struct Component {
        std::size_t offset;         // first digit position
        std::uint32_t width;        // t_i
        unsigned __int128 modulus;  // b^{t_i}, at most 2^64
        std::uint64_t unit;         // u_i, coprime to modulus
        std::uint64_t unit_inverse; // u_i^{-1} mod modulus
    };
    const std::vector<Component>& components() const noexcept { return components_; }

    friend bool operator==(const AdditionScheme& a, const AdditionScheme& b) noexcept {
        return a.base_ == b.base_ && a.composition_ == b.composition_ && a.twist_ == b.twist_;
    }

private:
    Base base_;
    Composition composition_;
    TwistVector twist_;
    std::vector<Component> components_;
};

/// Brute-force verdict on one operation table.
struct AxiomReport {
    std::uint64_t element_count = 0;
    bool latin_square = false;
    bool commutative = false;
    bool associative = false;
    /// Lexicographically least labels (x, y, z) with (x+y)+z != x+(y+z).
    std::optional<std::array<std::uint64_t, 3>> associativity_counterexample;
    std::optional<std::uint64_t> identity;
    bool has_inverses = false;

    bool has_identity() const noexcept { return identity.has_value(); }
    bool is_group() const noexcept {
        return latin_square && commutative && associative && identity.has_value() &&
               has_inverses;
    }
};

/// Materialized Cayley table: entry(x, y) is the label of x + y, where
/// labels are the positional values int_radix of the vectors.
struct OperationTable {
    std::uint64_t base = 0;
    std::uint32_t m = 0;
    std::size_t size = 0;                // b^m
    std::vector<std::uint32_t> entries;  // size * size, row-major

    std::uint32_t at(std::size_t x, std::size_t y) const {
        return entries[x * size + y];
    }
    const std::uint32_t* row(std::size_t x) const { return entries.data() + x * size; }
};

/// x + y under the scheme. Throws std::invalid_argument on base or
/// length mismatch.
DigitVector scheme_add(const AdditionScheme& s, const DigitVector& x, const DigitVector& y);

/// The unique x with scheme_add(s, x, y) = z (Latin-square division):
/// per component x = u^{-1} z - y mod b^t.
DigitVector scheme_solve(const AdditionScheme& s, const DigitVector& z, const DigitVector& y);

/// All-zero vector; the identity of scheme_add for untwisted schemes.
DigitVector scheme_zero(const AdditionScheme& s);

/// Group inverse per component, (b^t - x) mod b^t. Untwisted schemes
/// only; throws std::domain_error for twisted schemes, which have no
/// two-sided identity.
DigitVector scheme_negate(const AdditionScheme& s, const DigitVector& x);

/// Full b^m x b^m table. Throws std::length_error when b^m > cap.
OperationTable operation_table(const AdditionScheme& s, std::size_t cap = kDefaultTableCap);

/// Label-level addition: the table entry for labels x, y without
/// materializing the table.
std::uint64_t scheme_add_label(const AdditionScheme& s, std::uint64_t x, std::uint64_t y);

/// One-line text form: `b=<b> comp=<t1>,...,<tr> twist=<u1>,...,<ur>`.
/// The twist field is omitted when all units are 1.
std::string scheme_serialize(const AdditionScheme& s);

/// Parses the scheme-line grammar and validates all invariants;
/// on failure throws std::invalid_argument naming the offending token.
AdditionScheme scheme_parse(std::string_view line);

/// Digit-vector text: one character per digit from 0-9a-z (values
/// 0-35), position 0 leftmost. Bases above 36 are rejected.
std::string format_digits(const DigitVector& v);
DigitVector parse_digits(std::string_view text, Base base);

}  // namespace digitadd
