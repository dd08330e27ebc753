#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "resrun/run_counts.hpp"

namespace resrun {

struct PrimePower {
    u64 q = 0;
    u64 p = 0;
    u32 d = 0;
};

/// All odd prime powers q <= max_q, ascending. Sieve the primes, then take
/// powers.
inline std::vector<PrimePower> odd_prime_powers_upto(u64 max_q) {
    std::vector<PrimePower> out;
    if (max_q < 3) return out;
    std::vector<bool> composite(max_q + 1, false);
    for (u64 i = 2; i * i <= max_q; ++i) {
        if (composite[i]) continue;
        for (u64 j = i * i; j <= max_q; j += i) composite[j] = true;
    }
    for (u64 p = 3; p <= max_q; p += 2) {
        if (composite[p]) continue;
        u64 q = p;
        u32 d = 1;
        while (q <= max_q) {
            out.push_back({q, p, d});
            if (q > max_q / p) break;
            q *= p;
            ++d;
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.q < b.q; });
    return out;
}

struct SweepConfig {
    u64 max_q = 1000;
    std::vector<u32> lengths{3};
    bool include_closed = true;
    u32 jobs = 0; ///< 0 = hardware concurrency
    u64 capacity = kDefaultCapacity;
};

struct SweepRow {
    RunCountReport report;
    std::string error; ///< non-empty when the row failed (e.g. CapacityExceeded)
};

struct SweepSummary {
    u64 total = 0;      ///< rows attempted
    u64 matches = 0;    ///< rows where brute and closed agree
    u64 mismatches = 0; ///< rows where they disagree (a disproof signal)
    u64 brute_only = 0; ///< rows with no applicable closed form
    u64 errors = 0;     ///< rows that failed to compute
    u64 skipped = 0;    ///< (q, len) pairs with len > p
};

struct SweepResult {
    std::vector<SweepRow> rows; ///< ordered by (q, len) regardless of completion order
    SweepSummary summary;
};

/// Run brute (and closed, when enabled and applicable) counts for every odd
/// prime power q <= max_q and every requested length. Jobs are independent;
/// workers share nothing and the row order is restored before returning.
inline SweepResult run_sweep(const SweepConfig& config) {
    struct Task {
        PrimePower pp;
        u32 len = 0;
    };
    std::vector<Task> tasks;
    for (const PrimePower& pp : odd_prime_powers_upto(config.max_q))
        for (u32 len : config.lengths)
            tasks.push_back({pp, len});

    SweepResult result;
    result.rows.resize(tasks.size());
    u64 skipped = 0;
    std::vector<std::size_t> live; // indices of tasks with len <= p
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (tasks[i].len > tasks[i].pp.p || tasks[i].len < 2) {
            ++skipped;
            result.rows[i].report.q = tasks[i].pp.q;
            result.rows[i].report.p = tasks[i].pp.p;
            result.rows[i].report.d = tasks[i].pp.d;
            result.rows[i].report.len = tasks[i].len;
            result.rows[i].error = "skipped: run length exceeds characteristic";
        } else {
            live.push_back(i);
        }
    }

    const CountMode mode = config.include_closed ? CountMode::both : CountMode::brute;
    auto run_one = [&](std::size_t i) {
        const Task& t = tasks[i];
        try {
            result.rows[i].report = count_runs(t.pp.p, t.pp.d, t.len, mode, config.capacity);
        } catch (const Error& e) {
            result.rows[i].report.q = t.pp.q;
            result.rows[i].report.p = t.pp.p;
            result.rows[i].report.d = t.pp.d;
            result.rows[i].report.len = t.len;
            result.rows[i].error = e.what();
        }
    };

    u32 jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<u32>(jobs, static_cast<u32>(std::max<std::size_t>(live.size(), 1)));
    if (jobs <= 1) {
        for (std::size_t i : live) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (u32 w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t k = next.fetch_add(1);
                    if (k >= live.size()) return;
                    run_one(live[k]);
                }
            });
        }
        for (std::thread& t : workers) t.join();
    }

    SweepSummary& s = result.summary;
    s.skipped = skipped;
    for (const SweepRow& row : result.rows) {
        if (!row.error.empty()) {
            if (row.error.rfind("skipped", 0) != 0) ++s.errors, ++s.total;
            continue;
        }
        ++s.total;
        if (row.report.match.has_value())
            *row.report.match ? ++s.matches : ++s.mismatches;
        else
            ++s.brute_only;
    }
    return result;
}

} // namespace resrun
