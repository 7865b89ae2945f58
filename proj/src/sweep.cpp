#include "dsmix/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace dsmix {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

RunResult default_run(const ProblemInstance& problem, const EngineConfig& cfg) {
    return run(problem, cfg);
}

/// Executes tasks 0..n-1 in index order across workers; when
/// abort_on_failure is set, no task starts after a failure has finished.
/// Returns one slot per task, unset if the task never started.
std::vector<std::optional<RunResult>> run_many(int n, int threads, bool abort_on_failure,
                                               const std::function<RunResult(int)>& task) {
    std::vector<std::optional<RunResult>> results(static_cast<std::size_t>(n));
    std::atomic<int> next{0};
    std::atomic<bool> abort{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!abort.load(std::memory_order_relaxed)) {
            const int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n)
                return;
            try {
                RunResult rr = task(i);
                if (abort_on_failure && !rr.success)
                    abort.store(true, std::memory_order_relaxed);
                results[static_cast<std::size_t>(i)] = std::move(rr);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                abort.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    const int workers = std::max(1, std::min(threads, n));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads_;
        threads_.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t)
            threads_.emplace_back(worker);
        for (auto& t : threads_)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);
    return results;
}

struct SizeOutcome {
    int runs = 0;      // sequential-equivalent count
    int successes = 0; // before the first failure
    double mean_nfe = kInf;
    std::uint64_t nfe_executed = 0;
};

SizeOutcome evaluate_size(const ProblemInstance& problem, const SweepConfig& scfg,
                          const EngineConfig& tmpl, int size, int threads,
                          const RunFunction& run_fn, const char* purpose) {
    const std::string instance = problem.name();
    auto task = [&](int i) {
        EngineConfig cfg = tmpl;
        cfg.population_size = size;
        cfg.max_nfe = scfg.run_budget;
        cfg.seed = derive_seed(scfg.master_seed, instance, size, i, purpose);
        return run_fn(problem, cfg);
    };
    auto results = run_many(scfg.hits, threads, true, task);

    SizeOutcome outcome;
    int first_failure = -1;
    for (int i = 0; i < scfg.hits; ++i) {
        const auto& slot = results[static_cast<std::size_t>(i)];
        if (slot)
            outcome.nfe_executed += slot->total_evaluations;
        if (first_failure < 0 && slot && !slot->success)
            first_failure = i;
    }
    if (first_failure < 0) {
        double sum = 0.0;
        for (const auto& slot : results)
            sum += static_cast<double>(slot->nfe);
        outcome.runs = scfg.hits;
        outcome.successes = scfg.hits;
        outcome.mean_nfe = sum / static_cast<double>(scfg.hits);
    } else {
        outcome.runs = first_failure + 1;
        outcome.successes = first_failure;
        outcome.mean_nfe = kInf;
    }
    return outcome;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view instance, int population_size,
                          int run_index, std::string_view purpose) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix_bytes = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    mix_bytes(instance);
    mix_bytes("|");
    mix_bytes(std::to_string(population_size));
    mix_bytes("|");
    mix_bytes(std::to_string(run_index));
    mix_bytes("|");
    mix_bytes(purpose);
    return splitmix64(h ^ splitmix64(master));
}

int resolve_threads(int requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("DSMIX_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

SweepResult sweep(const ProblemInstance& problem, const SweepConfig& scfg,
                  const EngineConfig& tmpl, const RunFunction& run_fn) {
    if (scfg.hits < 1)
        throw std::invalid_argument("sweep: hits must be at least 1");
    if (scfg.initial_population < 2)
        throw std::invalid_argument("sweep: initial_population must be at least 2");
    if (scfg.initial_step < 1)
        throw std::invalid_argument("sweep: initial_step must be at least 1");
    if (scfg.range_fraction <= 0.0 || scfg.range_fraction >= 1.0)
        throw std::invalid_argument("sweep: range_fraction must lie in (0,1)");
    if (scfg.run_budget == 0)
        throw std::invalid_argument("sweep: run_budget must be finite");
    if (!problem.optimum())
        throw std::invalid_argument("sweep: problem needs a known optimum");

    const int threads = resolve_threads(scfg.threads);
    const RunFunction& fn = run_fn ? run_fn : RunFunction(default_run);

    std::map<int, SizeOutcome> cache;
    int best_size = 0;
    double best_nfe = kInf;

    auto try_size = [&](int size) {
        auto it = cache.find(size);
        if (it == cache.end())
            it = cache.emplace(size,
                               evaluate_size(problem, scfg, tmpl, size, threads, fn, "sweep"))
                     .first;
        const SizeOutcome& oc = it->second;
        if (oc.mean_nfe < best_nfe || (oc.mean_nfe == best_nfe && oc.mean_nfe < kInf && size < best_size)) {
            best_nfe = oc.mean_nfe;
            best_size = size;
        }
        return oc.mean_nfe;
    };

    // Expansion: march upward until the curve has turned.
    int worse_streak = 0;
    for (int size = scfg.initial_population; size <= scfg.max_population; size += scfg.initial_step) {
        const double nfe = try_size(size);
        if (best_nfe == kInf)
            continue;
        if (nfe > best_nfe)
            ++worse_streak;
        else
            worse_streak = 0;
        if (worse_streak >= 2)
            break;
    }

    SweepResult result;
    auto record_trace = [&] {
        for (const auto& [size, oc] : cache) {
            result.trace.push_back({size, oc.runs, oc.successes, oc.mean_nfe});
            result.total_runs += static_cast<std::uint64_t>(oc.runs);
            result.total_nfe += oc.nfe_executed;
        }
    };

    if (best_nfe == kInf) {
        record_trace();
        return result;
    }

    // Refinement: halve the step inside a window around the best size.
    // The window never drops below the configured starting size.
    const int domain_floor = std::max(2, scfg.initial_population);
    int step = scfg.initial_step;
    while (true) {
        const int lo = std::max(domain_floor, best_size - step);
        const int hi = best_size + step;
        if (static_cast<double>(hi - lo) <= scfg.range_fraction * static_cast<double>(best_size))
            break;
        const bool last = step == 1;
        if (!last)
            step /= 2;
        for (int p = lo; p < hi; p += step)
            try_size(p);
        try_size(hi);
        if (last)
            break;
    }

    // Confirmation: the reported size must also pass the required hits on
    // the verification seed stream, so a size that squeaked through the
    // sweep phase by luck is never returned. Candidates are tried in
    // ascending mean-NFE order.
    std::vector<std::pair<double, int>> candidates;
    for (const auto& [size, oc] : cache)
        if (oc.mean_nfe < kInf)
            candidates.emplace_back(oc.mean_nfe, size);
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [mean, size] : candidates) {
        const SizeOutcome confirm =
            evaluate_size(problem, scfg, tmpl, size, threads, fn, "verify");
        result.total_runs += static_cast<std::uint64_t>(confirm.runs);
        result.total_nfe += confirm.nfe_executed;
        if (confirm.successes == scfg.hits) {
            result.any_success = true;
            result.best_size = size;
            result.best_mean_nfe = mean;
            break;
        }
    }
    record_trace();
    return result;
}

std::vector<BatchResult> run_batch(const std::vector<const ProblemInstance*>& problems,
                                   const SweepConfig& scfg, const EngineConfig& tmpl, int repeats,
                                   const RunFunction& run_fn) {
    if (repeats < 1)
        throw std::invalid_argument("run_batch: repeats must be at least 1");
    const int threads = resolve_threads(scfg.threads);
    const RunFunction& fn = run_fn ? run_fn : RunFunction(default_run);

    std::vector<BatchResult> results;
    results.reserve(problems.size());
    for (const ProblemInstance* problem : problems) {
        BatchResult entry;
        entry.family = problem->family();
        entry.instance = problem->name();
        entry.ell = problem->size();
        entry.hits = scfg.hits;
        entry.repeats = repeats;
        entry.master_seed = scfg.master_seed;
        entry.sweep = sweep(*problem, scfg, tmpl, fn);

        entry.verify.runs = repeats;
        if (entry.sweep.any_success) {
            const int size = entry.sweep.best_size;
            auto task = [&](int i) {
                EngineConfig cfg = tmpl;
                cfg.population_size = size;
                cfg.max_nfe = scfg.run_budget;
                cfg.seed = derive_seed(scfg.master_seed, entry.instance, size, i, "verify");
                return fn(*problem, cfg);
            };
            auto runs = run_many(repeats, threads, false, task);
            std::vector<double> nfes;
            for (const auto& slot : runs) {
                if (slot && slot->success) {
                    ++entry.verify.successes;
                    nfes.push_back(static_cast<double>(slot->nfe));
                }
            }
            if (!nfes.empty()) {
                std::sort(nfes.begin(), nfes.end());
                double sum = 0.0;
                for (double v : nfes)
                    sum += v;
                entry.verify.mean_nfe = sum / static_cast<double>(nfes.size());
                const std::size_t mid = nfes.size() / 2;
                entry.verify.median_nfe =
                    nfes.size() % 2 ? nfes[mid] : (nfes[mid - 1] + nfes[mid]) / 2.0;
                entry.verify.min_nfe = nfes.front();
                entry.verify.max_nfe = nfes.back();
            } else {
                entry.verify.mean_nfe = entry.verify.median_nfe = kInf;
                entry.verify.min_nfe = entry.verify.max_nfe = kInf;
            }
        } else {
            entry.verify.mean_nfe = entry.verify.median_nfe = kInf;
            entry.verify.min_nfe = entry.verify.max_nfe = kInf;
        }
        results.push_back(std::move(entry));
    }
    return results;
}

std::string emit_csv(const std::vector<BatchResult>& results) {
    std::string out = "problem,ell,instance,pop_size,hits,mean_nfe,success_rate,seed\n";
    char buf[64];
    auto number = [&buf](double v) -> std::string {
        if (v == kInf)
            return "inf";
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return buf;
    };
    auto rate = [&buf](double v) -> std::string {
        std::snprintf(buf, sizeof buf, "%.4f", v);
        return buf;
    };

    for (const BatchResult& r : results) {
        for (const SizeRecord& rec : r.sweep.trace) {
            out += r.family;
            out += ',' + std::to_string(r.ell);
            out += ',' + r.instance;
            out += ',' + std::to_string(rec.population_size);
            out += ',' + std::to_string(r.hits);
            out += ',' + number(rec.mean_nfe);
            out += ',' + rate(rec.mean_nfe == kInf ? 0.0 : 1.0);
            out += ',' + std::to_string(r.master_seed);
            out += '\n';
        }
        out += r.family;
        out += ',' + std::to_string(r.ell);
        out += ',' + r.instance;
        out += ',' + std::to_string(r.sweep.best_size);
        out += ',' + std::to_string(r.repeats);
        out += ',' + number(r.verify.mean_nfe);
        out += ',' + rate(static_cast<double>(r.verify.successes) /
                          static_cast<double>(r.verify.runs));
        out += ',' + std::to_string(r.master_seed);
        out += '\n';
    }
    return out;
}

} // namespace dsmix
