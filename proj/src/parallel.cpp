#include "strassoc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace strassoc {

namespace {

constexpr std::uint64_t kChunk = 64;

// Runs `worker` on `jobs` threads (inline when jobs <= 1) and rethrows the first
// exception any of them raised.
void run_workers(unsigned jobs, const std::function<void()>& worker) {
    if (jobs <= 1) {
        worker();
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        threads.emplace_back([&] {
            try {
                worker();
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::vacuous: return "vacuous";
    }
    return "?";
}

const Str& Witness::at(const std::string& name) const {
    for (const auto& [key, value] : bindings)
        if (key == name) return value;
    throw std::out_of_range("witness has no binding named " + name);
}

ItemResult scan_first_failure(std::uint64_t n_items, const Exec& exec,
                              const std::function<ItemResult(std::uint64_t)>& item) {
    const std::uint64_t n_chunks = (n_items + kChunk - 1) / kChunk;
    std::vector<ItemResult> chunks(n_chunks);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> first_failed{n_chunks};

    run_workers(exec.jobs, [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            if (c > first_failed.load()) continue;
            ItemResult& out = chunks[c];
            const std::uint64_t end = std::min(n_items, (c + 1) * kChunk);
            for (std::uint64_t i = c * kChunk; i < end; ++i) {
                ItemResult r = item(i);
                out.checked += r.checked;
                out.skipped += r.skipped;
                if (r.witness) {
                    out.witness = std::move(r.witness);
                    std::uint64_t seen = first_failed.load();
                    while (c < seen && !first_failed.compare_exchange_weak(seen, c)) {
                    }
                    break;
                }
            }
        }
    });

    ItemResult merged;
    for (auto& chunk : chunks) {
        merged.checked += chunk.checked;
        merged.skipped += chunk.skipped;
        if (chunk.witness) {
            merged.witness = std::move(chunk.witness);
            break;
        }
    }
    return merged;
}

CheckReport make_report(ItemResult scan, std::string note) {
    CheckReport report;
    report.checked = scan.checked;
    report.skipped = scan.skipped;
    report.note = std::move(note);
    if (scan.witness) {
        report.verdict = Verdict::fails;
        report.witness = std::move(scan.witness);
    } else {
        report.verdict = scan.checked > 0 ? Verdict::holds : Verdict::vacuous;
        report.incomplete = scan.skipped > 0;
    }
    return report;
}

void parallel_for(std::uint64_t n, unsigned jobs, const std::function<void(std::uint64_t)>& body) {
    std::atomic<std::uint64_t> next{0};
    run_workers(jobs, [&] {
        for (;;) {
            const std::uint64_t start = next.fetch_add(kChunk);
            if (start >= n) return;
            const std::uint64_t end = std::min(n, start + kChunk);
            for (std::uint64_t i = start; i < end; ++i) body(i);
        }
    });
}

}  // namespace strassoc
