#include "digitadd/verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace digitadd {

namespace {

bool rows_and_columns_are_permutations(const OperationTable& t) {
    const std::size_t n = t.size;
    std::vector<bool> seen(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), false);
        const std::uint32_t* row = t.row(x);
        for (std::size_t y = 0; y < n; ++y) {
            if (seen[row[y]]) return false;
            seen[row[y]] = true;
        }
    }
    for (std::size_t y = 0; y < n; ++y) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t x = 0; x < n; ++x) {
            const std::uint32_t v = t.at(x, y);
            if (seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

std::optional<std::uint64_t> find_identity(const OperationTable& t) {
    const std::size_t n = t.size;
    for (std::size_t e = 0; e < n; ++e) {
        const std::uint32_t* row = t.row(e);
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
            ok = row[x] == x && t.at(x, e) == x;
        }
        if (ok) return e;
    }
    return std::nullopt;
}

// b^m, or nullopt when it exceeds 2^64 - 1.
std::optional<std::uint64_t> checked_pow(std::uint64_t b, std::uint32_t m) {
    unsigned __int128 n = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        n *= b;
        if (n > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    }
    return static_cast<std::uint64_t>(n);
}

}  // namespace

AxiomReport check_group_axioms(const OperationTable& t) {
    AxiomReport report;
    const std::size_t n = t.size;
    report.element_count = n;
    report.latin_square = rows_and_columns_are_permutations(t);

    report.commutative = true;
    for (std::size_t x = 0; x < n && report.commutative; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (t.at(x, y) != t.at(y, x)) {
                report.commutative = false;
                break;
            }
        }
    }

    report.associative = true;
    for (std::size_t x = 0; x < n && report.associative; ++x) {
        const std::uint32_t* row_x = t.row(x);
        for (std::size_t y = 0; y < n && report.associative; ++y) {
            const std::uint32_t* row_xy = t.row(row_x[y]);
            const std::uint32_t* row_y = t.row(y);
            for (std::size_t z = 0; z < n; ++z) {
                if (row_xy[z] != row_x[row_y[z]]) {
                    report.associative = false;
                    report.associativity_counterexample = {x, y, z};
                    break;
                }
            }
        }
    }

    report.identity = find_identity(t);
    report.has_inverses = false;
    if (report.identity) {
        const std::uint32_t e = static_cast<std::uint32_t>(*report.identity);
        report.has_inverses = true;
        for (std::size_t x = 0; x < n && report.has_inverses; ++x) {
            bool found = false;
            const std::uint32_t* row = t.row(x);
            for (std::size_t y = 0; y < n; ++y) {
                if (row[y] == e && t.at(y, x) == e) {
                    found = true;
                    break;
                }
            }
            report.has_inverses = found;
        }
    }
    return report;
}

AxiomReport check_group_axioms(const AdditionScheme& s, std::size_t cap) {
    return check_group_axioms(operation_table(s, cap));
}

std::string axiom_report_text(const AxiomReport& r) {
    auto yesno = [](bool v) { return v ? "yes" : "no"; };
    std::string text;
    text += "ELEMENTS: " + std::to_string(r.element_count) + "\n";
    text += std::string("LATIN_SQUARE: ") + yesno(r.latin_square) + "\n";
    text += std::string("COMMUTATIVE: ") + yesno(r.commutative) + "\n";
    if (r.associative) {
        text += "ASSOCIATIVE: yes\n";
    } else {
        text += "ASSOCIATIVE: no";
        if (r.associativity_counterexample) {
            const auto& c = *r.associativity_counterexample;
            text += " (counterexample (" + std::to_string(c[0]) + "," + std::to_string(c[1]) +
                    "," + std::to_string(c[2]) + "))";
        }
        text += "\n";
    }
    text += "IDENTITY: " + (r.identity ? std::to_string(*r.identity) : std::string("none")) +
            "\n";
    text += std::string("INVERSES: ") + yesno(r.has_inverses) + "\n";
    text += std::string("GROUP: ") + yesno(r.is_group()) + "\n";
    return text;
}

OrderProfile order_profile(const OperationTable& t) {
    const auto identity = find_identity(t);
    if (!identity) {
        throw std::invalid_argument("order_profile: table has no identity element");
    }
    const std::size_t n = t.size;
    for (std::size_t x = 0; x < n; ++x) {
        const std::uint32_t* row_x = t.row(x);
        for (std::size_t y = 0; y < n; ++y) {
            const std::uint32_t* row_xy = t.row(row_x[y]);
            const std::uint32_t* row_y = t.row(y);
            for (std::size_t z = 0; z < n; ++z) {
                if (row_xy[z] != row_x[row_y[z]]) {
                    throw std::invalid_argument("order_profile: table is not associative");
                }
            }
        }
    }

    OrderProfile profile;
    const std::uint32_t e = static_cast<std::uint32_t>(*identity);
    for (std::size_t x = 0; x < n; ++x) {
        std::uint64_t order = 1;
        std::uint32_t acc = static_cast<std::uint32_t>(x);
        while (acc != e) {
            acc = t.at(acc, x);
            ++order;
            if (order > n) {
                throw std::invalid_argument("order_profile: element " + std::to_string(x) +
                                            " has no finite order reaching the identity");
            }
        }
        ++profile.order_counts[order];
    }
    return profile;
}

std::vector<std::uint32_t> partition_of_scheme(const AdditionScheme& s) {
    if (!s.is_untwisted()) {
        throw std::invalid_argument("partition_of_scheme applies to untwisted schemes only");
    }
    std::vector<std::uint32_t> parts = s.composition().parts();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

namespace {

std::uint64_t table_hash(const std::vector<std::uint32_t>& entries) {
    std::uint64_t h = entries.size();
    for (std::uint32_t v : entries) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

// Walks every scheme of the census in deterministic order: compositions
// in box-counter order, twist tuples as an odometer with the last
// component fastest.
void for_each_census_scheme(const Base& base, std::uint32_t m, bool include_twists,
                            std::size_t budget,
                            const std::function<void(const AdditionScheme&)>& fn) {
    const auto compositions = enumerate_compositions(m, budget);

    if (include_twists) {
        mpz_class total = 0;
        for (const auto& comp : compositions) {
            total += twist_count_for_composition(base, comp);
        }
        if (total > static_cast<unsigned long>(budget)) {
            throw std::length_error("census: " + total.get_str() +
                                    " schemes exceed the budget of " + std::to_string(budget));
        }
    }

    for (const auto& comp : compositions) {
        if (!include_twists) {
            fn(AdditionScheme(base, comp));
            continue;
        }
        std::vector<std::vector<std::uint64_t>> unit_lists;
        unit_lists.reserve(comp.size());
        for (std::uint32_t t : comp.parts()) {
            unit_lists.push_back(enumerate_twist_units(base, t, budget));
        }
        std::vector<std::size_t> odo(comp.size(), 0);
        bool done = false;
        while (!done) {
            TwistVector twist;
            twist.units.reserve(comp.size());
            for (std::size_t i = 0; i < comp.size(); ++i) {
                twist.units.push_back(unit_lists[i][odo[i]]);
            }
            fn(AdditionScheme(base, comp, std::move(twist)));

            done = true;
            for (std::size_t i = comp.size(); i-- > 0;) {
                if (++odo[i] < unit_lists[i].size()) {
                    done = false;
                    break;
                }
                odo[i] = 0;
            }
        }
    }
}

}  // namespace

CensusReport census_distinct_tables(const Base& base, std::uint32_t m, bool include_twists,
                                    std::size_t cap, std::size_t budget,
                                    std::size_t axiom_cap) {
    CensusReport report;
    report.base = base.value();
    report.m = m;
    report.include_twists = include_twists;
    report.cap = cap;
    report.expected_untwisted = count_compositions(m);
    report.expected_with_twists = count_additions_general(base, m);

    const auto n = checked_pow(base.value(), m);
    if (!n || *n > cap) {
        throw std::length_error("census: table for b=" + std::to_string(base.value()) +
                                " m=" + std::to_string(m) + " exceeds the cap of " +
                                std::to_string(cap) + " elements");
    }
    report.tallies.computed = *n <= axiom_cap;

    std::vector<AdditionScheme> representatives;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;

    for_each_census_scheme(base, m, include_twists, budget, [&](const AdditionScheme& s) {
        ++report.schemes_enumerated;
        const OperationTable table = operation_table(s, cap);

        const std::uint64_t h = table_hash(table.entries);
        bool duplicate = false;
        auto& bucket = buckets[h];
        for (std::size_t rep : bucket) {
            if (operation_table(representatives[rep], cap).entries == table.entries) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            bucket.push_back(representatives.size());
            representatives.push_back(s);
        }

        if (report.tallies.computed) {
            const AxiomReport axioms = check_group_axioms(table);
            report.tallies.latin_square += axioms.latin_square;
            report.tallies.commutative += axioms.commutative;
            report.tallies.associative += axioms.associative;
            report.tallies.identity += axioms.has_identity();
            report.tallies.inverses += axioms.has_inverses;
            report.tallies.group += axioms.is_group();
        }
    });

    report.distinct_tables = representatives.size();
    return report;
}

std::string census_report_text(const CensusReport& r) {
    std::string text;
    text += "census base=" + std::to_string(r.base) + " m=" + std::to_string(r.m) +
            " twists=" + (r.include_twists ? "yes" : "no") + " cap=" + std::to_string(r.cap) +
            "\n";
    text += "schemes=" + std::to_string(r.schemes_enumerated) +
            " distinct=" + std::to_string(r.distinct_tables) + " expected=" +
            r.expected().get_str() + "\n";
    text += "expected_untwisted=" + r.expected_untwisted.get_str() +
            " expected_with_twists=" + r.expected_with_twists.get_str() + "\n";
    if (r.tallies.computed) {
        text += "axioms latin=" + std::to_string(r.tallies.latin_square) +
                " commutative=" + std::to_string(r.tallies.commutative) +
                " associative=" + std::to_string(r.tallies.associative) +
                " identity=" + std::to_string(r.tallies.identity) +
                " inverses=" + std::to_string(r.tallies.inverses) +
                " group=" + std::to_string(r.tallies.group) + "\n";
    } else {
        text += "axioms skipped\n";
    }
    return text;
}

Classification classify_all(const Base& base, std::uint32_t m, std::size_t cap,
                            std::size_t budget) {
    Classification result;
    result.base = base.value();
    result.m = m;

    const auto n = checked_pow(base.value(), m);
    result.profiles_checked = n.has_value() && *n <= cap;

    // Partition order: lexicographically descending, (m) first.
    std::map<std::vector<std::uint32_t>, ClassifiedClass, std::greater<>> classes;
    for (const auto& comp : enumerate_compositions(m, budget)) {
        const AdditionScheme scheme(base, comp);
        auto partition = partition_of_scheme(scheme);
        auto [it, inserted] = classes.try_emplace(partition);
        if (inserted) it->second.partition = partition;
        it->second.compositions.push_back(comp);

        if (result.profiles_checked) {
            OrderProfile profile = order_profile(operation_table(scheme, cap));
            if (it->second.profile && !(*it->second.profile == profile)) {
                throw std::logic_error(
                    "classify_all: order profiles differ within one partition class");
            }
            it->second.profile = std::move(profile);
        }
    }

    if (result.profiles_checked) {
        for (auto a = classes.begin(); a != classes.end(); ++a) {
            for (auto b = std::next(a); b != classes.end(); ++b) {
                if (*a->second.profile == *b->second.profile) {
                    throw std::logic_error(
                        "classify_all: order profile collision across partition classes");
                }
            }
        }
    }

    result.classes.reserve(classes.size());
    for (auto& [partition, cls] : classes) {
        result.classes.push_back(std::move(cls));
    }
    return result;
}

}  // namespace digitadd
