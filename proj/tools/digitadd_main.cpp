// Command-line surface for the digit-vector addition library. Every
// subcommand is deterministic: identical invocations produce byte-identical
// output. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "digitadd/cipher.hpp"
#include "digitadd/combinatorics.hpp"
#include "digitadd/digits.hpp"
#include "digitadd/schemes.hpp"
#include "digitadd/verify.hpp"

namespace {

using namespace digitadd;

std::vector<std::uint8_t> parse_hex(const std::string& hex) {
    auto nibble = [&](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument(std::string("invalid hex character '") + c + "' in key");
    };
    if (hex.size() % 2 != 0) {
        throw std::invalid_argument("hex key must have an even number of characters");
    }
    std::vector<std::uint8_t> bytes;
    bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
    }
    return bytes;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

// Digit streams for the cipher commands. "digits" is the 0-9a-z text
// form with whitespace ignored; "bytes" (b=2, m=8 only) treats each
// byte as one block, bit 0 = least significant digit.
std::vector<std::uint64_t> decode_stream(const std::string& raw, const Base& base,
                                         bool bytes_mode) {
    if (bytes_mode) {
        std::vector<std::uint64_t> digits;
        digits.reserve(raw.size() * 8);
        for (unsigned char byte : raw) {
            for (int bit = 0; bit < 8; ++bit) {
                digits.push_back((byte >> bit) & 1);
            }
        }
        return digits;
    }
    std::string cleaned;
    cleaned.reserve(raw.size());
    for (char c : raw) {
        if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
        cleaned += c;
    }
    if (cleaned.empty()) return {};
    return parse_digits(cleaned, base).digits();
}

std::string encode_stream(const std::vector<std::uint64_t>& digits, const Base& base,
                          bool bytes_mode) {
    if (bytes_mode) {
        std::string out;
        out.reserve(digits.size() / 8);
        for (std::size_t i = 0; i < digits.size(); i += 8) {
            unsigned byte = 0;
            for (int bit = 0; bit < 8; ++bit) {
                byte |= static_cast<unsigned>(digits[i + bit]) << bit;
            }
            out += static_cast<char>(byte);
        }
        return out;
    }
    if (digits.empty()) return {};
    return format_digits(DigitVector(base, digits));
}

struct CipherArgs {
    std::string key_hex;
    std::uint64_t base = 2;
    std::uint32_t m = 8;
    std::string input;
    std::string keystream;
    std::string output = "-";
    std::string format = "digits";
};

int run_cipher(const CipherArgs& args, bool decrypt) {
    if (args.format != "digits" && args.format != "bytes") {
        throw std::invalid_argument("format must be 'digits' or 'bytes'");
    }
    const bool bytes_mode = args.format == "bytes";
    const Base base(args.base);
    if (bytes_mode && (args.base != 2 || args.m != 8)) {
        throw std::invalid_argument("bytes format requires base 2 and block length 8");
    }
    const KeySpec key{parse_hex(args.key_hex), base, args.m};
    const SchemeDerivation derivation = derive_scheme_from_key(key);

    const auto data = decode_stream(read_file(args.input), base, bytes_mode);
    const auto pad = decode_stream(read_file(args.keystream), base, bytes_mode);
    const auto result = decrypt ? decrypt_stream(derivation, data, pad)
                                : encrypt_stream(derivation, data, pad);
    write_output(args.output, encode_stream(result, base, bytes_mode));
    return 0;
}

std::string composition_text(const Composition& comp) {
    std::string text;
    for (std::size_t i = 0; i < comp.size(); ++i) {
        if (i > 0) text += ',';
        text += std::to_string(comp.parts()[i]);
    }
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Additions on fixed-length digit vectors: composition-indexed mixtures of "
                 "carry and carryless addition, unit twists, exact counting, brute-force "
                 "verification and a key-dependent block combiner."};
    app.require_subcommand(1);

    std::string scheme_line, x_text, y_text, z_text;
    std::uint64_t base_value = 2;
    std::uint32_t m_value = 1, t_value = 1;
    std::size_t cap = kDefaultTableCap;
    std::size_t budget = kDefaultEnumBudget;
    std::size_t axiom_cap = kDefaultCensusAxiomCap;

    auto* add_cmd = app.add_subcommand("add", "Add two digit vectors under a scheme");
    add_cmd->add_option("scheme", scheme_line, "Scheme line, e.g. \"b=2 comp=3,2,1,1,1\"")
        ->required();
    add_cmd->add_option("x", x_text, "First operand, digit text")->required();
    add_cmd->add_option("y", y_text, "Second operand, digit text")->required();

    auto* solve_cmd =
        app.add_subcommand("solve", "Solve x + y = z for x under a scheme");
    solve_cmd->add_option("scheme", scheme_line, "Scheme line")->required();
    solve_cmd->add_option("z", z_text, "Sum, digit text")->required();
    solve_cmd->add_option("y", y_text, "Known operand, digit text")->required();

    auto* table_cmd = app.add_subcommand("table", "Print the full operation table");
    table_cmd->add_option("scheme", scheme_line, "Scheme line")->required();
    table_cmd->add_option("--cap", cap, "Largest allowed element count b^m");

    auto* verify_cmd =
        app.add_subcommand("verify", "Brute-force group-axiom report for a scheme");
    verify_cmd->add_option("scheme", scheme_line, "Scheme line")->required();
    verify_cmd->add_option("--cap", cap, "Largest allowed element count b^m");

    bool count_compositions_flag = false, count_partitions_flag = false,
         count_schemes_flag = false;
    auto* count_cmd = app.add_subcommand("count", "Exact counts from the closed forms");
    count_cmd->add_option("base", base_value, "Digit base b >= 2")->required();
    count_cmd->add_option("m", m_value, "Vector length m >= 1")->required();
    auto* count_what = count_cmd->add_option_group("what", "Quantity to count");
    count_what->add_flag("--compositions", count_compositions_flag,
                         "Compositions of m (2^{m-1})");
    count_what->add_flag("--partitions", count_partitions_flag, "Partitions of m");
    count_what->add_flag("--schemes", count_schemes_flag,
                         "Addition schemes including twists");
    count_what->require_option(1);

    bool census_twists = false;
    auto* census_cmd = app.add_subcommand(
        "census", "Enumerate schemes, deduplicate operation tables, compare to closed forms");
    census_cmd->add_option("base", base_value, "Digit base b >= 2")->required();
    census_cmd->add_option("m", m_value, "Vector length m >= 1")->required();
    census_cmd->add_flag("--twists", census_twists, "Include every twist tuple");
    census_cmd->add_option("--cap", cap, "Largest allowed element count b^m");
    census_cmd->add_option("--budget", budget, "Largest allowed scheme enumeration");
    census_cmd->add_option("--axiom-cap", axiom_cap,
                           "Run the O(n^3) axiom check only when b^m is at most this");

    auto* classify_cmd = app.add_subcommand(
        "classify", "Group compositions by partition and check order-profile fingerprints");
    classify_cmd->add_option("base", base_value, "Digit base b >= 2")->required();
    classify_cmd->add_option("m", m_value, "Vector length m >= 1")->required();
    classify_cmd->add_option("--cap", cap, "Largest table for profile computation");
    classify_cmd->add_option("--budget", budget, "Largest allowed enumeration");

    std::string key_hex;
    bool show_transcript = false;
    auto* derive_cmd =
        app.add_subcommand("derive", "Derive an addition scheme from key bytes");
    derive_cmd->add_option("key", key_hex, "Key as a hex string")->required();
    derive_cmd->add_option("base", base_value, "Digit base b >= 2")->required();
    derive_cmd->add_option("m", m_value, "Block length m >= 1")->required();
    derive_cmd->add_flag("--transcript", show_transcript,
                         "Print the full derivation transcript");

    CipherArgs cipher_args;
    auto add_cipher_options = [&](CLI::App* cmd, const char* data_name) {
        cmd->add_option("key", cipher_args.key_hex, "Key as a hex string")->required();
        cmd->add_option("base", cipher_args.base, "Digit base b >= 2")->required();
        cmd->add_option("m", cipher_args.m, "Block length m >= 1")->required();
        cmd->add_option("input", cipher_args.input, data_name)->required();
        cmd->add_option("keystream", cipher_args.keystream, "Keystream file")->required();
        cmd->add_option("-o,--output", cipher_args.output, "Output file (default stdout)");
        cmd->add_option("--format", cipher_args.format,
                        "Stream format: digits (default) or bytes (b=2, m=8)");
    };
    auto* encrypt_cmd = app.add_subcommand("encrypt", "Combine data with a keystream");
    add_cipher_options(encrypt_cmd, "Plaintext file");
    auto* decrypt_cmd = app.add_subcommand("decrypt", "Invert the keystream combination");
    add_cipher_options(decrypt_cmd, "Ciphertext file");

    auto* list_comp_cmd =
        app.add_subcommand("list-compositions", "Enumerate all compositions of m");
    list_comp_cmd->add_option("m", m_value, "Positive integer")->required();
    list_comp_cmd->add_option("--budget", budget, "Largest allowed enumeration");

    auto* list_units_cmd =
        app.add_subcommand("list-units", "Units of Z/b^tZ in ascending order");
    list_units_cmd->add_option("base", base_value, "Digit base b >= 2")->required();
    list_units_cmd->add_option("t", t_value, "Component width t >= 1")->required();
    list_units_cmd->add_option("--budget", budget, "Largest allowed enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*add_cmd) {
            const AdditionScheme s = scheme_parse(scheme_line);
            const DigitVector x = parse_digits(x_text, s.base());
            const DigitVector y = parse_digits(y_text, s.base());
            std::cout << format_digits(scheme_add(s, x, y)) << "\n";
        } else if (*solve_cmd) {
            const AdditionScheme s = scheme_parse(scheme_line);
            const DigitVector z = parse_digits(z_text, s.base());
            const DigitVector y = parse_digits(y_text, s.base());
            std::cout << format_digits(scheme_solve(s, z, y)) << "\n";
        } else if (*table_cmd) {
            const OperationTable t = operation_table(scheme_parse(scheme_line), cap);
            std::string line;
            for (std::size_t x = 0; x < t.size; ++x) {
                line.clear();
                for (std::size_t y = 0; y < t.size; ++y) {
                    if (y > 0) line += ' ';
                    line += std::to_string(t.at(x, y));
                }
                std::cout << line << "\n";
            }
        } else if (*verify_cmd) {
            std::cout << axiom_report_text(
                check_group_axioms(scheme_parse(scheme_line), cap));
        } else if (*count_cmd) {
            const Base base(base_value);
            if (count_compositions_flag) {
                std::cout << count_compositions(m_value).get_str() << "\n";
            } else if (count_partitions_flag) {
                std::cout << count_partitions(m_value).get_str() << "\n";
            } else {
                std::cout << count_additions_general(base, m_value).get_str() << "\n";
            }
        } else if (*census_cmd) {
            std::cout << census_report_text(census_distinct_tables(
                Base(base_value), m_value, census_twists, cap, budget, axiom_cap));
        } else if (*classify_cmd) {
            const Classification c = classify_all(Base(base_value), m_value, cap, budget);
            for (const auto& cls : c.classes) {
                std::string partition;
                for (std::size_t i = 0; i < cls.partition.size(); ++i) {
                    if (i > 0) partition += '+';
                    partition += std::to_string(cls.partition[i]);
                }
                std::cout << "partition=" << partition << " compositions=";
                for (std::size_t i = 0; i < cls.compositions.size(); ++i) {
                    if (i > 0) std::cout << ',';
                    std::cout << '(' << composition_text(cls.compositions[i]) << ')';
                }
                std::cout << "\n";
            }
            std::cout << "classes=" << c.classes.size()
                      << " expected_partitions=" << count_partitions(m_value).get_str()
                      << " profiles=" << (c.profiles_checked ? "checked" : "skipped") << "\n";
        } else if (*derive_cmd) {
            const KeySpec key{parse_hex(key_hex), Base(base_value), m_value};
            const SchemeDerivation d = derive_scheme_from_key(key);
            if (show_transcript) {
                std::cout << d.transcript;
            } else {
                std::cout << scheme_serialize(d.scheme) << "\n";
            }
        } else if (*encrypt_cmd) {
            return run_cipher(cipher_args, false);
        } else if (*decrypt_cmd) {
            return run_cipher(cipher_args, true);
        } else if (*list_comp_cmd) {
            for (const Composition& comp : enumerate_compositions(m_value, budget)) {
                std::cout << composition_text(comp) << "\n";
            }
        } else if (*list_units_cmd) {
            const auto units = enumerate_twist_units(Base(base_value), t_value, budget);
            std::string line;
            for (std::size_t i = 0; i < units.size(); ++i) {
                if (i > 0) line += ' ';
                line += std::to_string(units[i]);
            }
            std::cout << line << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
