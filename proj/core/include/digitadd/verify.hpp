#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "digitadd/combinatorics.hpp"
#include "digitadd/schemes.hpp"

namespace digitadd {

/// Largest table for which a census still runs the O(n^3) axiom check
/// on every scheme it enumerates.
inline constexpr std::size_t kDefaultCensusAxiomCap = 128;

/// Exhaustive check of the abelian-group axioms on a materialized
/// table: Latin-square property, commutativity, associativity over all
/// triples, identity search, inverse existence. Counterexamples are the
/// lexicographically least failing tuples, so reports are stable.
AxiomReport check_group_axioms(const OperationTable& table);
AxiomReport check_group_axioms(const AdditionScheme& s, std::size_t cap = kDefaultTableCap);

/// Line-oriented report text, stable field order.
std::string axiom_report_text(const AxiomReport& report);

/// Multiset of element orders; a complete isomorphism invariant for
/// the group tables in scope here.
struct OrderProfile {
    std::map<std::uint64_t, std::uint64_t> order_counts;

    friend bool operator==(const OrderProfile&, const OrderProfile&) noexcept = default;
};

/// Order of every element by repeated table application until the
/// identity recurs. Throws std::invalid_argument if the table has no
/// identity or is not associative.
OrderProfile order_profile(const OperationTable& table);

/// Sorted-descending copy of the composition parts: the partition that
/// names the scheme's isomorphism class. Untwisted schemes only.
std::vector<std::uint32_t> partition_of_scheme(const AdditionScheme& s);

struct AxiomTallies {
    bool computed = false;
    std::uint64_t latin_square = 0;
    std::uint64_t commutative = 0;
    std::uint64_t associative = 0;
    std::uint64_t identity = 0;
    std::uint64_t inverses = 0;
    std::uint64_t group = 0;
};

struct CensusReport {
    std::uint64_t base = 0;
    std::uint32_t m = 0;
    bool include_twists = false;
    std::size_t cap = kDefaultTableCap;
    std::uint64_t schemes_enumerated = 0;
    std::uint64_t distinct_tables = 0;
    mpz_class expected_untwisted;    // 2^{m-1}
    mpz_class expected_with_twists;  // phi(b) (b + phi(b))^{m-1}
    AxiomTallies tallies;

    /// The closed-form prediction matching the enumeration mode.
    const mpz_class& expected() const noexcept {
        return include_twists ? expected_with_twists : expected_untwisted;
    }
};

/// Enumerates every composition of m (and every twist tuple when
/// include_twists), materializes the operation tables and deduplicates
/// them by exact entry-wise equality. The distinct count is reported
/// beside the closed-form predictions; axiom tallies are filled in when
/// b^m <= axiom_cap.
CensusReport census_distinct_tables(const Base& base, std::uint32_t m, bool include_twists,
                                    std::size_t cap = kDefaultTableCap,
                                    std::size_t budget = kDefaultEnumBudget,
                                    std::size_t axiom_cap = kDefaultCensusAxiomCap);

/// Line-oriented census text, stable field order (golden-file friendly).
std::string census_report_text(const CensusReport& report);

struct ClassifiedClass {
    std::vector<std::uint32_t> partition;     // sorted descending
    std::vector<Composition> compositions;    // in enumeration order
    std::optional<OrderProfile> profile;      // set when profiles were computed
};

struct Classification {
    std::uint64_t base = 0;
    std::uint32_t m = 0;
    bool profiles_checked = false;
    /// Classes ordered by partition, reverse lexicographic: (m) first.
    std::vector<ClassifiedClass> classes;
};

/// Groups all untwisted compositions of m by partition. When b^m <= cap
/// the order profile of every composition is computed and checked:
/// equal within a class, distinct across classes. A violation throws
/// std::logic_error (it would disprove the classification).
Classification classify_all(const Base& base, std::uint32_t m,
                            std::size_t cap = kDefaultTableCap,
                            std::size_t budget = kDefaultEnumBudget);

}  // namespace digitadd
