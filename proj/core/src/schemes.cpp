#include "digitadd/schemes.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace digitadd {

namespace {

constexpr unsigned __int128 kTwoPow64 = static_cast<unsigned __int128>(1) << 64;

// b^t, or nullopt when it exceeds 2^64 (the component arithmetic limit).
std::optional<unsigned __int128> power_to_modulus(std::uint64_t b, std::uint32_t t) {
    unsigned __int128 m = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        if (m > kTwoPow64 / b) return std::nullopt;
        m *= b;
    }
    return m;
}

// Inverse of u modulo m via extended Euclid; requires gcd(u, m) = 1.
std::uint64_t mod_inverse(std::uint64_t u, unsigned __int128 modulus) {
    __int128 r0 = static_cast<__int128>(modulus), r1 = static_cast<__int128>(u);
    __int128 s0 = 0, s1 = 1;
    while (r1 != 0) {
        const __int128 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    __int128 inv = s0 % static_cast<__int128>(modulus);
    if (inv < 0) inv += static_cast<__int128>(modulus);
    return static_cast<std::uint64_t>(inv);
}

std::uint64_t component_value(const DigitVector& v, const AdditionScheme::Component& c,
                              std::uint64_t b) {
    unsigned __int128 acc = 0;
    for (std::size_t j = c.width; j-- > 0;) {
        acc = acc * b + v.digit(c.offset + j);
    }
    return static_cast<std::uint64_t>(acc);
}

void write_component(std::vector<std::uint64_t>& digits, const AdditionScheme::Component& c,
                     std::uint64_t value, std::uint64_t b) {
    for (std::uint32_t j = 0; j < c.width; ++j) {
        digits[c.offset + j] = value % b;
        value /= b;
    }
}

void check_operand(const AdditionScheme& s, const DigitVector& v, const char* name) {
    if (v.base().value() != s.base().value()) {
        throw std::invalid_argument(std::string("scheme operand ") + name + " has base " +
                                    std::to_string(v.base().value()) + ", scheme has base " +
                                    std::to_string(s.base().value()));
    }
    if (v.length() != s.length()) {
        throw std::invalid_argument(std::string("scheme operand ") + name + " has length " +
                                    std::to_string(v.length()) + ", scheme has length " +
                                    std::to_string(s.length()));
    }
}

}  // namespace

Composition::Composition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)), sum_(0) {
    if (parts_.empty()) {
        throw std::invalid_argument("composition must have at least one part");
    }
    for (std::uint32_t t : parts_) {
        if (t == 0) {
            throw std::invalid_argument("composition parts must be positive");
        }
        if (sum_ > std::numeric_limits<std::uint32_t>::max() - t) {
            throw std::overflow_error("composition sum overflows");
        }
        sum_ += t;
    }
}

AdditionScheme::AdditionScheme(Base base, Composition composition)
    : AdditionScheme(base, composition, TwistVector::all_ones(composition.size())) {}

AdditionScheme::AdditionScheme(Base base, Composition composition, TwistVector twist)
    : base_(base), composition_(std::move(composition)), twist_(std::move(twist)) {
    if (twist_.units.size() != composition_.size()) {
        throw std::invalid_argument("twist has " + std::to_string(twist_.units.size()) +
                                    " units for " + std::to_string(composition_.size()) +
                                    " composition parts");
    }
    components_.reserve(composition_.size());
    std::size_t offset = 0;
    for (std::size_t i = 0; i < composition_.size(); ++i) {
        const std::uint32_t t = composition_.parts()[i];
        const std::uint64_t u = twist_.units[i];
        const auto modulus = power_to_modulus(base_.value(), t);
        if (!modulus) {
            throw std::overflow_error("component modulus " + std::to_string(base_.value()) +
                                      "^" + std::to_string(t) + " exceeds 2^64");
        }
        if (u == 0 || static_cast<unsigned __int128>(u) >= *modulus) {
            throw std::invalid_argument("twist unit " + std::to_string(u) +
                                        " is outside [1, b^t) for component " +
                                        std::to_string(i + 1));
        }
        if (std::gcd(u, base_.value()) != 1) {
            throw std::invalid_argument("twist unit " + std::to_string(u) +
                                        " is not coprime to " + std::to_string(base_.value()) +
                                        "^" + std::to_string(t));
        }
        components_.push_back(Component{offset, t, *modulus, u, mod_inverse(u, *modulus)});
        offset += t;
    }
}

bool AdditionScheme::is_untwisted() const noexcept {
    for (std::uint64_t u : twist_.units) {
        if (u != 1) return false;
    }
    return true;
}

std::optional<std::uint64_t> AdditionScheme::element_count() const noexcept {
    unsigned __int128 n = 1;
    for (std::uint32_t i = 0; i < length(); ++i) {
        n *= base_.value();
        if (n > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    }
    return static_cast<std::uint64_t>(n);
}

DigitVector scheme_add(const AdditionScheme& s, const DigitVector& x, const DigitVector& y) {
    check_operand(s, x, "x");
    check_operand(s, y, "y");
    const std::uint64_t b = s.base().value();
    std::vector<std::uint64_t> out(s.length());
    for (const auto& c : s.components()) {
        const unsigned __int128 sum =
            static_cast<unsigned __int128>(component_value(x, c, b)) + component_value(y, c, b);
        const unsigned __int128 reduced = sum % c.modulus;
        const std::uint64_t res = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(c.unit) * reduced) % c.modulus);
        write_component(out, c, res, b);
    }
    return DigitVector(s.base(), std::move(out));
}

DigitVector scheme_solve(const AdditionScheme& s, const DigitVector& z, const DigitVector& y) {
    check_operand(s, z, "z");
    check_operand(s, y, "y");
    const std::uint64_t b = s.base().value();
    std::vector<std::uint64_t> out(s.length());
    for (const auto& c : s.components()) {
        const unsigned __int128 zv = component_value(z, c, b);
        const unsigned __int128 yv = component_value(y, c, b);
        const unsigned __int128 scaled =
            (static_cast<unsigned __int128>(c.unit_inverse) * zv) % c.modulus;
        const std::uint64_t res =
            static_cast<std::uint64_t>((scaled + c.modulus - yv) % c.modulus);
        write_component(out, c, res, b);
    }
    return DigitVector(s.base(), std::move(out));
}

DigitVector scheme_zero(const AdditionScheme& s) {
    return DigitVector(s.base(), std::vector<std::uint64_t>(s.length(), 0));
}

DigitVector scheme_negate(const AdditionScheme& s, const DigitVector& x) {
    if (!s.is_untwisted()) {
        throw std::domain_error(
            "scheme_negate requires an untwisted scheme; twisted schemes have no identity");
    }
    check_operand(s, x, "x");
    const std::uint64_t b = s.base().value();
    std::vector<std::uint64_t> out(s.length());
    for (const auto& c : s.components()) {
        const unsigned __int128 xv = component_value(x, c, b);
        const std::uint64_t res = static_cast<std::uint64_t>((c.modulus - xv) % c.modulus);
        write_component(out, c, res, b);
    }
    return DigitVector(s.base(), std::move(out));
}

namespace {

// Component values of every label, plus the label strides b^{o_i}.
struct LabelLayout {
    std::vector<std::uint64_t> stride;              // per component
    std::vector<std::vector<std::uint32_t>> cvals;  // [component][label]

    LabelLayout(const AdditionScheme& s, std::size_t n) {
        const std::uint64_t b = s.base().value();
        const auto& comps = s.components();
        stride.resize(comps.size());
        cvals.assign(comps.size(), std::vector<std::uint32_t>(n));
        std::uint64_t st = 1;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            stride[i] = st;
            for (std::uint32_t j = 0; j < comps[i].width; ++j) st *= b;
        }
        for (std::size_t l = 0; l < n; ++l) {
            std::uint64_t rest = l;
            for (std::size_t i = 0; i < comps.size(); ++i) {
                const std::uint64_t m = static_cast<std::uint64_t>(comps[i].modulus);
                cvals[i][l] = static_cast<std::uint32_t>(rest % m);
                rest /= m;
            }
        }
    }
};

}  // namespace

std::uint64_t scheme_add_label(const AdditionScheme& s, std::uint64_t x, std::uint64_t y) {
    const auto count = s.element_count();
    if (!count) {
        throw std::overflow_error("scheme_add_label: b^m exceeds the 64-bit label range");
    }
    if (x >= *count || y >= *count) {
        throw std::out_of_range("scheme_add_label: label out of range");
    }
    std::uint64_t acc = 0, stride = 1;
    for (const auto& c : s.components()) {
        const std::uint64_t m = static_cast<std::uint64_t>(c.modulus);
        const std::uint64_t cx = x % m, cy = y % m;
        x /= m;
        y /= m;
        std::uint64_t w = cx + cy >= m ? cx + cy - m : cx + cy;
        if (c.unit != 1) {
            w = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(c.unit) * w) % c.modulus);
        }
        acc += stride * w;
        stride *= m;
    }
    return acc;
}

OperationTable operation_table(const AdditionScheme& s, std::size_t cap) {
    const auto count = s.element_count();
    if (!count || *count > cap) {
        throw std::length_error("operation table for b=" + std::to_string(s.base().value()) +
                                " m=" + std::to_string(s.length()) + " exceeds the cap of " +
                                std::to_string(cap) + " elements");
    }
    const std::size_t n = static_cast<std::size_t>(*count);
    if (n > std::numeric_limits<std::uint32_t>::max()) {
        throw std::length_error("operation table labels do not fit 32 bits");
    }

    OperationTable table;
    table.base = s.base().value();
    table.m = s.length();
    table.size = n;
    table.entries.resize(n * n);

    const LabelLayout layout(s, n);
    const auto& comps = s.components();
    for (std::size_t x = 0; x < n; ++x) {
        std::uint32_t* out = table.entries.data() + x * n;
        for (std::size_t y = 0; y < n; ++y) {
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < comps.size(); ++i) {
                const std::uint64_t m = static_cast<std::uint64_t>(comps[i].modulus);
                std::uint64_t w = static_cast<std::uint64_t>(layout.cvals[i][x]) +
                                  layout.cvals[i][y];
                if (w >= m) w -= m;
                if (comps[i].unit != 1) {
                    w = static_cast<std::uint64_t>(
                        (static_cast<unsigned __int128>(comps[i].unit) * w) % comps[i].modulus);
                }
                acc += layout.stride[i] * w;
            }
            out[y] = static_cast<std::uint32_t>(acc);
        }
    }
    return table;
}

namespace {

std::uint64_t parse_u64_field(std::string_view text, std::string_view token) {
    std::uint64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw std::invalid_argument("scheme parse: bad integer in token '" + std::string(token) +
                                    "'");
    }
    return value;
}

std::vector<std::uint64_t> parse_u64_list(std::string_view text, std::string_view token) {
    std::vector<std::uint64_t> values;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                               : comma - start);
        values.push_back(parse_u64_field(item, token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return values;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}  // namespace

std::string scheme_serialize(const AdditionScheme& s) {
    std::string line = "b=" + std::to_string(s.base().value()) + " comp=";
    const auto& parts = s.composition().parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) line += ',';
        line += std::to_string(parts[i]);
    }
    if (!s.is_untwisted()) {
        line += " twist=";
        const auto& units = s.twist().units;
        for (std::size_t i = 0; i < units.size(); ++i) {
            if (i > 0) line += ',';
            line += std::to_string(units[i]);
        }
    }
    return line;
}

AdditionScheme scheme_parse(std::string_view line) {
    const auto tokens = split_tokens(line);
    if (tokens.size() < 2 || tokens.size() > 3) {
        throw std::invalid_argument(
            "scheme parse: expected 'b=<int> comp=<list> [twist=<list>]'");
    }
    auto field = [](std::string_view token, std::string_view prefix) -> std::string_view {
        if (token.substr(0, prefix.size()) != prefix) {
            throw std::invalid_argument("scheme parse: unexpected token '" + std::string(token) +
                                        "', expected '" + std::string(prefix) + "...'");
        }
        return token.substr(prefix.size());
    };

    const std::uint64_t b = parse_u64_field(field(tokens[0], "b="), tokens[0]);
    const auto parts64 = parse_u64_list(field(tokens[1], "comp="), tokens[1]);
    std::vector<std::uint32_t> parts;
    parts.reserve(parts64.size());
    for (std::uint64_t t : parts64) {
        if (t == 0 || t > std::numeric_limits<std::uint32_t>::max()) {
            throw std::invalid_argument("scheme parse: composition part " + std::to_string(t) +
                                        " out of range");
        }
        parts.push_back(static_cast<std::uint32_t>(t));
    }

    Base base(b);
    Composition comp(std::move(parts));
    if (tokens.size() == 3) {
        TwistVector twist{parse_u64_list(field(tokens[2], "twist="), tokens[2])};
        return AdditionScheme(base, std::move(comp), std::move(twist));
    }
    return AdditionScheme(base, std::move(comp));
}

namespace {

constexpr std::string_view kDigitAlphabet = "0123456789abcdefghijklmnopqrstuvwxyz";

}  // namespace

std::string format_digits(const DigitVector& v) {
    if (v.base().value() > kDigitAlphabet.size()) {
        throw std::invalid_argument("digit text supports bases up to 36, got base " +
                                    std::to_string(v.base().value()));
    }
    std::string text;
    text.reserve(v.length());
    for (std::size_t i = 0; i < v.length(); ++i) {
        text += kDigitAlphabet[static_cast<std::size_t>(v.digit(i))];
    }
    return text;
}

DigitVector parse_digits(std::string_view text, Base base) {
    if (base.value() > kDigitAlphabet.size()) {
        throw std::invalid_argument("digit text supports bases up to 36, got base " +
                                    std::to_string(base.value()));
    }
    if (text.empty()) {
        throw std::invalid_argument("digit text must be non-empty");
    }
    std::vector<std::uint64_t> digits;
    digits.reserve(text.size());
    for (char ch : text) {
        const std::size_t value = kDigitAlphabet.find(ch);
        if (value == std::string_view::npos || value >= base.value()) {
            throw std::invalid_argument(std::string("invalid base-") +
                                        std::to_string(base.value()) + " digit character '" +
                                        ch + "'");
        }
        digits.push_back(value);
    }
    return DigitVector(base, std::move(digits));
}

}  // namespace digitadd
