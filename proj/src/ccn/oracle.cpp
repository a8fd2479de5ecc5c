#include "ccn/oracle.hpp"

#include "ccn/counting.hpp"
#include "ccn/equivalence.hpp"
#include "ccn/errors.hpp"
#include "ccn/network_json.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>
#include <unordered_set>

namespace ccn {

namespace {

struct EntriesHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
        return boost::hash_range(v.begin(), v.end());
    }
};

using CanonicalSet = std::unordered_set<std::vector<std::uint32_t>, EntriesHash>;

void validate_nr(std::uint32_t n, std::uint32_t r) {
    if (n == 0) throw DomainError("cell count n must be positive");
    if (r == 0) throw DomainError("degree r must be positive");
}

CanonicalSet collect_chunk(std::uint32_t n, std::uint32_t r, std::uint64_t budget, std::size_t begin, std::size_t end,
                           std::uint32_t size_cap, std::uint64_t& visited) {
    OmegaEnumerator walk(n, r, budget, begin, end);
    Canonicalizer canon(size_cap);
    CanonicalSet seen;
    std::vector<std::uint32_t> entries;
    std::vector<std::uint32_t> canonical;
    visited = 0;
    while (walk.next(entries)) {
        ++visited;
        canon.canonical_entries(Network(n, entries), canonical);
        seen.insert(canonical);
    }
    return seen;
}

// Censuses for degrees 1..r, index s-1.
std::vector<OrbitCensus> censuses_up_to(std::uint32_t n, std::uint32_t r, const CensusOptions& options) {
    // |Omega| grows with the degree, so the top degree bounds them all.
    check_budget(n, r, options.budget);
    std::vector<OrbitCensus> out;
    for (std::uint32_t s = 1; s <= r; ++s) out.push_back(census(n, s, options));
    return out;
}

std::string label(const char* what, std::uint32_t n, std::uint32_t r) {
    return std::string(what) + "(" + std::to_string(n) + "," + std::to_string(r) + ")";
}

VerificationReport class_structure(const std::vector<OrbitCensus>& by_degree, Counter& counter,
                                   std::uint32_t size_cap) {
    const auto& top = by_degree.back();
    const auto n = top.n;
    const auto r = top.r;
    VerificationReport report;
    report.n = n;
    report.r = r;

    auto breakdown_count = [&](const Network& g) -> std::uint64_t {
        auto it = top.class_breakdown.find(g);
        return it == top.class_breakdown.end() ? 0 : it->second;
    };

    for (std::uint32_t s = 1; s <= r; ++s) {
        const std::uint64_t expected_each = s < r ? r / s : 1;
        std::uint64_t minimal = 0;
        std::uint64_t matching = 0;
        VerificationReport itemized;
        for (const auto& cls : by_degree[s - 1].classes) {
            if (!cls.connected || !cls.reduced) continue;
            ++minimal;
            const auto got = breakdown_count(cls.representative);
            if (got == expected_each) {
                ++matching;
            } else {
                itemized.add("expansions_of " + network_to_json(cls.representative), expected_each, got);
            }
        }
        report.add("minimal_degree_" + std::to_string(s) + "_with_" + std::to_string(expected_each) +
                       "_expansions",
                   minimal, matching);
        report.append(itemized);
    }

    BigInt expected_non_minimal = 0;
    for (std::uint32_t s = 1; s < r; ++s) expected_non_minimal += BigInt(r / s) * counter.count_minimal(n, s);

    std::uint64_t non_minimal = 0;
    std::uint64_t degree_zero = 0;
    std::uint64_t not_lower = 0;
    std::uint64_t lost_connectivity = 0;
    for (const auto& cls : top.classes) {
        if (!cls.connected) continue;
        const auto reduced_degree = cls.reduced_form.degree();
        if (!cls.reduced) {
            if (reduced_degree >= r) ++not_lower;
            if (reduced_degree == 0) {
                ++degree_zero;
            } else {
                ++non_minimal;
            }
        }
        if (reduced_degree >= 1 && !is_connected(cls.reduced_form)) ++lost_connectivity;
    }
    report.add("non_minimal_connected_classes", expected_non_minimal, non_minimal);
    report.add("classes_reducing_to_degree_0", n == 1 ? 1 : 0, degree_zero);
    report.add("reductions_of_lower_degree_violations", 0, not_lower);
    report.add("reductions_losing_connectivity", 0, lost_connectivity);

    // One sampled pair per equivalence class: first and last member, plus the
    // first member against the reduced form itself.
    std::map<Network, std::vector<const OrbitClass*>> groups;
    for (const auto& cls : top.classes)
        if (cls.connected) groups[cls.reduced_form].push_back(&cls);
    std::uint64_t confirmed = 0;
    for (const auto& [reduced, members] : groups) {
        const bool pair_ok = linear_equiv_oracle(members.front()->representative, members.back()->representative,
                                                 size_cap);
        const bool to_reduced = linear_equiv_oracle(members.front()->representative, reduced, size_cap);
        if (pair_ok && to_reduced) ++confirmed;
    }
    report.add("linear_oracle_confirms_sampled_pairs", groups.size(), confirmed);
    return report;
}

}  // namespace

BigInt omega_size(std::uint32_t n, std::uint32_t r) {
    validate_nr(n, r);
    return boost::multiprecision::pow(binomial(BigInt(n) + r - 1, r), n);
}

void check_budget(std::uint32_t n, std::uint32_t r, std::uint64_t budget) {
    const auto size = omega_size(n, r);
    if (size > budget) {
        throw BudgetExceeded("|Omega(" + std::to_string(n) + "," + std::to_string(r) + ")| = " + size.str() +
                                 " exceeds the enumeration budget " + std::to_string(budget),
                             size.str());
    }
}

std::vector<std::vector<std::uint32_t>> row_compositions(std::uint32_t n, std::uint32_t r) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> current(n, 0);
    std::function<void(std::uint32_t, std::uint32_t)> fill = [&](std::uint32_t pos, std::uint32_t remaining) {
        if (pos + 1 == n) {
            current[pos] = remaining;
            out.push_back(current);
            return;
        }
        for (std::uint32_t v = 0; v <= remaining; ++v) {
            current[pos] = v;
            fill(pos + 1, remaining - v);
        }
    };
    fill(0, r);
    return out;
}

OmegaEnumerator::OmegaEnumerator(std::uint32_t n, std::uint32_t r, std::uint64_t budget)
    : OmegaEnumerator(n, r, budget, 0, static_cast<std::size_t>(-1)) {}

OmegaEnumerator::OmegaEnumerator(std::uint32_t n, std::uint32_t r, std::uint64_t budget, std::size_t first_row_begin,
                                 std::size_t first_row_end)
    : n_(n), r_(r) {
    check_budget(n, r, budget);
    rows_ = row_compositions(n, r);
    first_end_ = std::min(first_row_end, rows_.size());
    odometer_.assign(n, 0);
    odometer_[0] = first_row_begin;
    done_ = first_row_begin >= first_end_;
}

bool OmegaEnumerator::next(std::vector<std::uint32_t>& entries) {
    if (done_) return false;
    entries.resize(std::size_t{n_} * n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        const auto& row = rows_[odometer_[i]];
        std::copy(row.begin(), row.end(), entries.begin() + std::size_t{i} * n_);
    }
    // Advance: last row fastest.
    std::uint32_t pos = n_;
    while (pos > 0) {
        --pos;
        const std::size_t limit = pos == 0 ? first_end_ : rows_.size();
        if (++odometer_[pos] < limit) break;
        if (pos == 0) {
            done_ = true;
            break;
        }
        odometer_[pos] = 0;
    }
    return true;
}

std::vector<Network> enumerate_omega(std::uint32_t n, std::uint32_t r, std::uint64_t budget) {
    OmegaEnumerator walk(n, r, budget);
    std::vector<Network> out;
    std::vector<std::uint32_t> entries;
    while (walk.next(entries)) out.emplace_back(n, entries);
    return out;
}

OrbitCensus census(std::uint32_t n, std::uint32_t r, const CensusOptions& options) {
    validate_nr(n, r);
    check_budget(n, r, options.budget);
    if (n > options.size_cap) {
        throw UnsupportedSize("census needs n <= " + std::to_string(options.size_cap) + ", got n = " +
                              std::to_string(n));
    }
    const std::size_t choices = row_compositions(n, r).size();
    const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, choices);

    std::vector<CanonicalSet> partial(workers);
    std::vector<std::uint64_t> visited(workers, 0);
    if (workers == 1) {
        partial[0] = collect_chunk(n, r, options.budget, 0, choices, options.size_cap, visited[0]);
    } else {
        std::vector<std::exception_ptr> failures(workers);
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = choices * w / workers;
            const std::size_t end = choices * (w + 1) / workers;
            threads.emplace_back([&, w, begin, end] {
                try {
                    partial[w] = collect_chunk(n, r, options.budget, begin, end, options.size_cap, visited[w]);
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& f : failures)
            if (f) std::rethrow_exception(f);
    }

    std::vector<std::vector<std::uint32_t>> forms;
    for (auto& part : partial) forms.insert(forms.end(), part.begin(), part.end());
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());

    OrbitCensus out;
    out.n = n;
    out.r = r;
    for (auto v : visited) out.labeled_networks += v;
    Canonicalizer canon(options.size_cap);
    for (auto& entries : forms) {
        Network rep(n, std::move(entries));
        auto reduction = reduce(rep);
        OrbitClass cls{rep, is_connected(rep), is_reduced(rep), canon.canonical_form(reduction.network),
                       reduction.trace};
        ++out.total_orbits;
        if (cls.connected) {
            ++out.connected_orbits;
            if (cls.reduced) ++out.minimal_connected_orbits;
            ++out.class_breakdown[cls.reduced_form];
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

VerificationReport verify_counts(const OrbitCensus& c, Counter& counter) {
    VerificationReport report;
    report.n = c.n;
    report.r = c.r;
    report.add(label("omega_size", c.n, c.r), omega_size(c.n, c.r), c.labeled_networks);
    report.add(label("H", c.n, c.r), counter.count_all(c.n, c.r), c.total_orbits);
    report.add(label("K", c.n, c.r), counter.count_connected(c.n, c.r), c.connected_orbits);
    report.add(label("M", c.n, c.r), counter.count_minimal(c.n, c.r), c.minimal_connected_orbits);
    return report;
}

VerificationReport verify_counts(std::uint32_t n, std::uint32_t r, const CensusOptions& options) {
    Counter counter;
    return verify_counts(census(n, r, options), counter);
}

VerificationReport verify_class_structure(std::uint32_t n, std::uint32_t r, const CensusOptions& options) {
    validate_nr(n, r);
    Counter counter;
    return class_structure(censuses_up_to(n, r, options), counter, options.size_cap);
}

VerificationReport verify_all(std::uint32_t n, std::uint32_t r, const CensusOptions& options) {
    validate_nr(n, r);
    Counter counter;
    const auto by_degree = censuses_up_to(n, r, options);
    auto report = verify_counts(by_degree.back(), counter);
    report.append(class_structure(by_degree, counter, options.size_cap));
    return report;
}

}  // namespace ccn
