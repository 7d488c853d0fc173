// Verification reports shared by all checkers.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace bicross {

struct Violation {
    std::vector<std::size_t> index;      // basis indices of the witnessing tuple (sort key)
    std::vector<std::string> tuple;      // their labels
    std::vector<std::string> residual;   // lhs - rhs, rendered
    std::string context;                 // e.g. which map or which side

    friend bool operator<(const Violation& a, const Violation& b) {
        return std::tie(a.index, a.context) < std::tie(b.index, b.context);
    }
};

struct AxiomEntry {
    std::string id;
    std::string name;
    bool holds = true;
    std::size_t checked = 0;
    std::size_t violation_count = 0;
    std::vector<Violation> violations;  // sorted, capped
    std::string note;
};

struct AxiomReport {
    std::vector<AxiomEntry> entries;

    [[nodiscard]] bool all_hold() const {
        return std::all_of(entries.begin(), entries.end(), [](const AxiomEntry& e) { return e.holds; });
    }
    [[nodiscard]] const AxiomEntry* find(const std::string& id) const {
        for (const auto& e : entries)
            if (e.id == id) return &e;
        return nullptr;
    }
    [[nodiscard]] bool holds(const std::string& id) const {
        const auto* e = find(id);
        return e != nullptr && e->holds;
    }
    [[nodiscard]] std::vector<std::string> failing_ids() const {
        std::vector<std::string> out;
        for (const auto& e : entries)
            if (!e.holds) out.push_back(e.id);
        return out;
    }
    void append(const AxiomReport& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }
};

using ConditionReport = AxiomReport;

struct VerifyOptions {
    std::size_t max_violations = 32;
    unsigned jobs = 1;
    bool literal_axioms = false;
};

/// Runs check(t, sink) for t in [0, count), possibly on several threads, and
/// folds the results into one entry. Output does not depend on the job count.
template <class Check>
AxiomEntry sweep(std::string id, std::string name, std::size_t count, const VerifyOptions& opt, Check&& check) {
    struct Chunk {
        std::vector<Violation> kept;
        std::size_t total = 0;
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<Chunk> chunks(jobs);
    auto run = [&](unsigned c) {
        const std::size_t lo = count * c / jobs, hi = count * (c + 1) / jobs;
        std::vector<Violation> found;
        for (std::size_t t = lo; t < hi; ++t) {
            found.clear();
            check(t, found);
            for (auto& v : found) {
                ++chunks[c].total;
                if (chunks[c].kept.size() < opt.max_violations) chunks[c].kept.push_back(std::move(v));
            }
        }
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned c = 0; c < jobs; ++c) pool.emplace_back(run, c);
        for (auto& th : pool) th.join();
    }
    AxiomEntry e;
    e.id = std::move(id);
    e.name = std::move(name);
    e.checked = count;
    for (auto& ch : chunks) {
        e.violation_count += ch.total;
        for (auto& v : ch.kept) e.violations.push_back(std::move(v));
    }
    std::sort(e.violations.begin(), e.violations.end());
    if (e.violations.size() > opt.max_violations) e.violations.resize(opt.max_violations);
    e.holds = e.violation_count == 0;
    return e;
}

}  // namespace bicross
