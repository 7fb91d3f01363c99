#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "digitadd/digits.hpp"
#include "digitadd/schemes.hpp"

namespace digitadd {

/// Key material plus the block geometry it has to cover.
struct KeySpec {
    std::vector<std::uint8_t> key_bytes;
    Base base;
    std::uint32_t block_length;  // m
};

/// Required key length in bytes: ceil((m-1)/8) composition bytes plus
/// 4 bytes per derived component.
std::size_t required_key_bytes(std::uint32_t block_length, std::size_t component_count);

/// A derived scheme together with a transcript of which key bits and
/// bytes chose what. Re-deriving from the same KeySpec reproduces both
/// byte for byte.
struct SchemeDerivation {
    AdditionScheme scheme;
    std::string transcript;
};

/// Key-to-scheme derivation:
///  - the first m-1 key bits, most significant bit of byte 0 first,
///    fill the gaps of the composition box scheme: bit 1 joins the
///    current part, bit 0 cuts a new one;
///  - then, for each component in order, the next 4 key bytes
///    (big-endian, starting at the byte after the composition bits),
///    reduced modulo phi(b^t), index into the ascending unit list.
/// Throws std::invalid_argument naming the required length when the
/// key is too short.
SchemeDerivation derive_scheme_from_key(const KeySpec& key);

/// Block combiners: encrypt is scheme_add, decrypt the Latin-square
/// division, so decrypt_block(encrypt_block(p, k), k) = p always.
DigitVector encrypt_block(const SchemeDerivation& d, const DigitVector& plain,
                          const DigitVector& keystream);
DigitVector decrypt_block(const SchemeDerivation& d, const DigitVector& cipher,
                          const DigitVector& keystream);

/// Blockwise stream application. data length must be a multiple of m
/// and the keystream at least as long as the data; output length equals
/// input length.
std::vector<std::uint64_t> encrypt_stream(const SchemeDerivation& d,
                                          std::span<const std::uint64_t> data,
                                          std::span<const std::uint64_t> keystream);
std::vector<std::uint64_t> decrypt_stream(const SchemeDerivation& d,
                                          std::span<const std::uint64_t> data,
                                          std::span<const std::uint64_t> keystream);

}  // namespace digitadd
