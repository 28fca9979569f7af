#include "featbench/cli_api.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "featbench/errors.hpp"
#include "featbench/manifest.hpp"

namespace featbench {

namespace fs = std::filesystem;

SyntheticDataset cmd_generate_synthetic(const SyntheticConfig& config) {
    return generate_synthetic(config);
}

std::vector<CombinationResult> cmd_run(const RunConfig& config) {
    config.validate();
    if (config.manifest_path.empty()) {
        throw ConfigError("run: a dataset manifest path is required");
    }

    const DatasetManifest manifest = load_manifest(config.manifest_path);
    const EvalPlan plan = build_eval_plan(manifest, config);
    const std::vector<CombinationId> combos = config.selected_combinations();
    const std::uint64_t config_digest = config_hash(config);
    const std::string cache_dir =
        config.cache_dir.empty() ? (fs::path(config.output_dir) / "cache").string()
                                 : config.cache_dir;

    std::vector<CombinationResult> results(combos.size());
    DetectorMemo memo;
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    // Combinations are independent given the shared plan and detector memo,
    // so the worker pool hands them out by index; results land in matrix
    // order regardless of completion order.
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= combos.size()) {
                return;
            }
            try {
                CombinationResult result;
                const std::string cache_path = cache_file_path(
                    cache_dir, combos[i], config_digest, plan.dataset_digest);
                const bool hit = config.use_cache &&
                                 load_cached_result(cache_path, combos[i], config_digest,
                                                    plan.dataset_digest, result);
                if (!hit) {
                    result = run_combination(combos[i], plan, config, &memo);
                    if (config.use_cache) {
                        store_cached_result(cache_path, result, config_digest,
                                            plan.dataset_digest);
                    }
                }
                results[i] = std::move(result);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
                return;
            }
        }
    };

    const std::size_t n_workers =
        std::min<std::size_t>(std::max(config.workers, 1), combos.size());
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (std::size_t i = 0; i < n_workers; ++i) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }

    write_run_reports(config.output_dir, config, plan, results);
    return results;
}

void cmd_report(const ReportOptions& options) {
    write_plot_data(options);
}

}  // namespace featbench
