#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crowdex {

// One responses file plus the label it carries in report artifacts.
struct DatasetInput {
    std::string label;
    std::string path;
};

// "label=path" or a bare path, which is labeled by its filename stem.
DatasetInput parseDatasetArg(const std::string& arg);

// Everything a subcommand needs, already parsed. The driver stays free of
// argv handling so tests can call it directly.
struct RunConfig {
    enum class Command { Score, Filter, Aggregate, Report, Simulate, Sweep };

    Command command = Command::Score;
    std::string config_path;              // campaign config JSON
    std::vector<DatasetInput> responses;  // one entry except for report
    std::string scores_path;              // filter input
    std::string spec_path;                // simulate input
    std::optional<std::uint64_t> seed_override; // simulate
    std::vector<double> thresholds;       // one entry except for sweep
    std::string out_path;                 // single-file outputs
    std::string out_dir;                  // report and sweep outputs
    std::string breakdown_path;           // score, optional
    std::string pooled_path;              // score, optional
};

// Runs one subcommand. Returns the process exit code: 0 on success, 2 for
// diagnosed input or domain errors (reported on stderr), 1 for anything
// unexpected. Never throws. Progress lines go to stderr when the
// CROWDEX_LOG environment variable is set; artifacts carry no timestamps,
// so identical inputs write identical bytes.
int run(const RunConfig& config);

} // namespace crowdex
