#include "digitadd/cipher.hpp"

#include <numeric>
#include <stdexcept>

#include "digitadd/combinatorics.hpp"

namespace digitadd {

namespace {

constexpr unsigned __int128 kTwoPow64 = static_cast<unsigned __int128>(1) << 64;

// phi(b^t) for a component whose modulus fits the scheme arithmetic.
std::uint64_t component_phi(std::uint64_t b, std::uint32_t t) {
    unsigned __int128 modulus = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        if (modulus > kTwoPow64 / b) {
            throw std::overflow_error("key derivation: component modulus " + std::to_string(b) +
                                      "^" + std::to_string(t) + " exceeds 2^64");
        }
        modulus *= b;
    }
    const unsigned __int128 phi = modulus / b * euler_phi(b);
    return static_cast<std::uint64_t>(phi);
}

// k-th (0-based) element of the ascending unit list of Z/b^tZ. The
// units of b^t are exactly the values whose residue mod b is a unit of
// b, so the list is phi(b)-periodic with period b and the k-th entry is
// (k / phi(b)) * b + (k % phi(b))-th unit of b. Agrees with
// enumerate_twist_units without materializing the list.
std::uint64_t kth_unit(std::uint64_t b, const std::vector<std::uint64_t>& base_units,
                       std::uint64_t k) {
    const std::uint64_t q = k / base_units.size();
    const std::uint64_t s = k % base_units.size();
    return q * b + base_units[s];
}

std::string to_hex(const std::uint8_t* bytes, std::size_t count) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * count);
    for (std::size_t i = 0; i < count; ++i) {
        out += kHex[bytes[i] >> 4];
        out += kHex[bytes[i] & 0xF];
    }
    return out;
}

}  // namespace

std::size_t required_key_bytes(std::uint32_t block_length, std::size_t component_count) {
    return (static_cast<std::size_t>(block_length) - 1 + 7) / 8 + 4 * component_count;
}

SchemeDerivation derive_scheme_from_key(const KeySpec& key) {
    if (key.block_length == 0) {
        throw std::invalid_argument("key derivation: block length must be positive");
    }
    const std::uint32_t m = key.block_length;
    const std::size_t comp_bytes = (static_cast<std::size_t>(m) - 1 + 7) / 8;
    if (key.key_bytes.size() < comp_bytes + 4) {
        throw std::invalid_argument(
            "key too short: " + std::to_string(key.key_bytes.size()) + " bytes, deriving a "
            "scheme for m=" + std::to_string(m) + " needs at least " +
            std::to_string(comp_bytes + 4));
    }

    // Gap bits, most significant bit of byte 0 first: 1 joins, 0 cuts.
    std::string bits;
    bits.reserve(m - 1);
    std::vector<std::uint32_t> parts;
    std::uint32_t current = 1;
    for (std::uint32_t j = 0; j + 1 < m; ++j) {
        const int bit = (key.key_bytes[j / 8] >> (7 - j % 8)) & 1;
        bits += bit ? '1' : '0';
        if (bit) {
            ++current;
        } else {
            parts.push_back(current);
            current = 1;
        }
    }
    parts.push_back(current);
    Composition comp(std::move(parts));

    const std::size_t required = required_key_bytes(m, comp.size());
    if (key.key_bytes.size() < required) {
        throw std::invalid_argument(
            "key too short: " + std::to_string(key.key_bytes.size()) + " bytes, the derived " +
            std::to_string(comp.size()) + "-component scheme for m=" + std::to_string(m) +
            " needs " + std::to_string(required));
    }

    const std::uint64_t b = key.base.value();
    std::vector<std::uint64_t> base_units;
    for (std::uint64_t u = 1; u < b; ++u) {
        if (std::gcd(u, b) == 1) base_units.push_back(u);
    }

    std::string transcript = "base=" + std::to_string(b) + " m=" + std::to_string(m) + "\n" +
                             "bits=" + bits + "\n";

    TwistVector twist;
    twist.units.reserve(comp.size());
    std::string comp_text;
    for (std::size_t i = 0; i < comp.size(); ++i) {
        if (i > 0) comp_text += ',';
        comp_text += std::to_string(comp.parts()[i]);
    }
    transcript += "comp=" + comp_text + "\n";

    for (std::size_t i = 0; i < comp.size(); ++i) {
        const std::uint32_t t = comp.parts()[i];
        const std::uint8_t* word = key.key_bytes.data() + comp_bytes + 4 * i;
        const std::uint64_t value = (std::uint64_t{word[0]} << 24) |
                                    (std::uint64_t{word[1]} << 16) |
                                    (std::uint64_t{word[2]} << 8) | word[3];
        const std::uint64_t phi = component_phi(b, t);
        const std::uint64_t index = value % phi;
        const std::uint64_t unit = kth_unit(b, base_units, index);
        twist.units.push_back(unit);
        transcript += "twist[" + std::to_string(i + 1) + "]: t=" + std::to_string(t) +
                      " bytes=" + to_hex(word, 4) + " value=" + std::to_string(value) +
                      " phi=" + std::to_string(phi) + " index=" + std::to_string(index) +
                      " unit=" + std::to_string(unit) + "\n";
    }

    AdditionScheme scheme(key.base, std::move(comp), std::move(twist));
    transcript += "scheme=" + scheme_serialize(scheme) + "\n";
    return SchemeDerivation{std::move(scheme), std::move(transcript)};
}

DigitVector encrypt_block(const SchemeDerivation& d, const DigitVector& plain,
                          const DigitVector& keystream) {
    return scheme_add(d.scheme, plain, keystream);
}

DigitVector decrypt_block(const SchemeDerivation& d, const DigitVector& cipher,
                          const DigitVector& keystream) {
    return scheme_solve(d.scheme, cipher, keystream);
}

namespace {

std::vector<std::uint64_t> transform_stream(const SchemeDerivation& d,
                                            std::span<const std::uint64_t> data,
                                            std::span<const std::uint64_t> keystream,
                                            bool decrypt) {
    const std::uint32_t m = d.scheme.length();
    if (data.size() % m != 0) {
        throw std::invalid_argument("stream length " + std::to_string(data.size()) +
                                    " is not a multiple of the block length " +
                                    std::to_string(m));
    }
    if (keystream.size() < data.size()) {
        throw std::invalid_argument("keystream exhausted: " + std::to_string(keystream.size()) +
                                    " digits for " + std::to_string(data.size()) +
                                    " data digits");
    }
    std::vector<std::uint64_t> out;
    out.reserve(data.size());
    for (std::size_t off = 0; off < data.size(); off += m) {
        const DigitVector block(d.scheme.base(),
                                std::vector<std::uint64_t>(data.begin() + off,
                                                           data.begin() + off + m));
        const DigitVector pad(d.scheme.base(),
                              std::vector<std::uint64_t>(keystream.begin() + off,
                                                         keystream.begin() + off + m));
        const DigitVector result =
            decrypt ? scheme_solve(d.scheme, block, pad) : scheme_add(d.scheme, block, pad);
        out.insert(out.end(), result.digits().begin(), result.digits().end());
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> encrypt_stream(const SchemeDerivation& d,
                                          std::span<const std::uint64_t> data,
                                          std::span<const std::uint64_t> keystream) {
    return transform_stream(d, data, keystream, false);
}

std::vector<std::uint64_t> decrypt_stream(const SchemeDerivation& d,
                                          std::span<const std::uint64_t> data,
                                          std::span<const std::uint64_t> keystream) {
    return transform_stream(d, data, keystream, true);
}

}  // namespace digitadd
