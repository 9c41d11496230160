#include "crowdex/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crowdex/format.hpp"
#include "crowdex/serialize.hpp"
#include "crowdex/simulator.hpp"
#include "crowdex/svg.hpp"

namespace crowdex {

namespace {

void logProgress(const std::string& message) {
    if (std::getenv("CROWDEX_LOG")) {
        std::cerr << "crowdex: " << message << '\n';
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << content;
    if (!out.good()) {
        throw IoError("short write to " + path);
    }
}

CampaignConfig loadConfig(const std::string& path) {
    return CampaignConfig::fromJson(slurp(path));
}

ResponseStore loadResponses(const std::string& path, const CampaignConfig& config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    return ingestResponses(in, config);
}

std::string requireSingleResponses(const RunConfig& config) {
    if (config.responses.size() != 1) {
        throw Error("expected exactly one responses file");
    }
    return config.responses.front().path;
}

double requireSingleThreshold(const RunConfig& config) {
    if (config.thresholds.size() != 1) {
        throw Error("expected exactly one threshold");
    }
    return config.thresholds.front();
}

void writePooledCsv(const std::string& path, const ScoreTable& table) {
    std::ostringstream out;
    out << "participant_id,hit_count,mean_degree\n";
    for (const ParticipantPool& pool : poolByParticipant(table)) {
        out << pool.participant_id << ',' << pool.hit_count << ','
            << formatFixed(pool.mean_degree, 6) << '\n';
    }
    writeFile(path, out.str());
}

int runScore(const RunConfig& config) {
    const auto campaign = loadConfig(config.config_path);
    const auto store = loadResponses(requireSingleResponses(config), campaign);
    const auto table = scoreCampaign(store);
    logProgress("scored " + std::to_string(table.rows.size()) + " hits, " +
                std::to_string(table.unscorable_count) + " unscorable");

    std::ostringstream scores;
    writeScoresCsv(scores, table);
    writeFile(config.out_path, scores.str());

    if (!config.breakdown_path.empty()) {
        auto rows = nlohmann::json::array();
        for (const ScoreRow& row : table.rows) {
            nlohmann::json entry;
            entry["participant_id"] = row.participant_id;
            entry["hit_id"] = row.hit_id;
            entry["expertise"] = toJson(*row.breakdown);
            rows.push_back(std::move(entry));
        }
        nlohmann::json doc;
        doc["rows"] = std::move(rows);
        doc["unscorable_hits"] = table.unscorable_count;
        writeFile(config.breakdown_path, dumpJson(doc));
    }
    if (!config.pooled_path.empty()) {
        writePooledCsv(config.pooled_path, table);
    }
    std::cout << "scored " << table.rows.size() << " hits (" << table.unscorable_count
              << " unscorable)\n";
    return 0;
}

int runFilter(const RunConfig& config) {
    std::ifstream in(config.scores_path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + config.scores_path);
    }
    const auto table = readScoresCsv(in);
    const auto retained = filterExperts(table, requireSingleThreshold(config));
    std::ostringstream out;
    writeRetainedCsv(out, retained);
    writeFile(config.out_path, out.str());
    std::cout << "retained " << retained.size() << " of " << table.rows.size() << " hits\n";
    return 0;
}

int runAggregate(const RunConfig& config) {
    const auto campaign = loadConfig(config.config_path);
    const auto store = loadResponses(requireSingleResponses(config), campaign);
    const auto table = scoreCampaign(store);
    const double threshold = requireSingleThreshold(config);
    const auto retained = filterExperts(table, threshold);
    const auto conditions = aggregateConditions(store, retained);
    writeFile(config.out_path,
              dumpJson(aggregateToJson(threshold, table, retained.size(), conditions)));
    std::cout << "aggregated " << conditions.size() << " conditions over " << retained.size()
              << " retained hits\n";
    return 0;
}

int runReport(const RunConfig& config) {
    if (config.responses.empty()) {
        throw Error("report needs at least one responses file");
    }
    const auto campaign = loadConfig(config.config_path);
    const double threshold = requireSingleThreshold(config);
    std::filesystem::create_directories(config.out_dir);
    const auto out_path = [&](const std::string& name) {
        return (std::filesystem::path(config.out_dir) / name).string();
    };

    auto datasets = nlohmann::json::array();
    std::vector<CurveSeries> curves;
    for (const DatasetInput& input : config.responses) {
        const auto store = loadResponses(input.path, campaign);
        const auto table = scoreCampaign(store);
        const auto retained = filterExperts(table, threshold);
        const auto conditions = aggregateConditions(store, retained);
        const auto histogram = degreeHistogram(table);
        logProgress("dataset " + input.label + ": " + std::to_string(table.rows.size()) +
                    " hits scored, " + std::to_string(retained.size()) + " retained");

        datasets.push_back(
            reportDatasetToJson(input.label, table, retained.size(), conditions, histogram));
        writeFile(out_path("histogram_" + input.label + ".svg"),
                  renderHistogramSvg(histogram, "Degree distribution: " + input.label));
        curves.push_back(CurveSeries{input.label, conditions});
    }

    nlohmann::json doc;
    doc["threshold"] = roundForArtifact(threshold);
    doc["datasets"] = std::move(datasets);
    writeFile(out_path("report.json"), dumpJson(doc));
    writeFile(out_path("curves.svg"),
              renderConditionCurvesSvg(curves, "Mean rating per condition"));
    std::cout << "wrote report for " << config.responses.size() << " dataset(s) to "
              << config.out_dir << "\n";
    return 0;
}

int runSimulate(const RunConfig& config) {
    const auto campaign = loadConfig(config.config_path);
    auto spec = PopulationSpec::fromJson(slurp(config.spec_path));
    if (config.seed_override) {
        spec.seed = *config.seed_override;
    }
    const auto records = generatePopulation(spec, campaign);
    std::ostringstream out;
    writeResponsesCsv(out, records);
    writeFile(config.out_path, out.str());
    const int participants = spec.perfect + spec.noisy + spec.spammer + spec.inverted;
    std::cout << "generated " << records.size() << " responses for " << participants
              << " participants\n";
    return 0;
}

int runSweep(const RunConfig& config) {
    if (config.thresholds.empty()) {
        throw Error("sweep needs at least one threshold");
    }
    const auto campaign = loadConfig(config.config_path);
    const auto store = loadResponses(requireSingleResponses(config), campaign);
    const auto table = scoreCampaign(store);
    std::filesystem::create_directories(config.out_dir);
    for (double threshold : config.thresholds) {
        const auto retained = filterExperts(table, threshold);
        const auto conditions = aggregateConditions(store, retained);
        const auto name = "aggregate_" + formatFixed(threshold, 2) + ".json";
        writeFile((std::filesystem::path(config.out_dir) / name).string(),
                  dumpJson(aggregateToJson(threshold, table, retained.size(), conditions)));
        logProgress("threshold " + formatFixed(threshold, 2) + ": " +
                    std::to_string(retained.size()) + " retained");
    }
    std::cout << "swept " << config.thresholds.size() << " thresholds into " << config.out_dir
              << "\n";
    return 0;
}

} // namespace

DatasetInput parseDatasetArg(const std::string& arg) {
    const auto eq = arg.find('=');
    if (eq != std::string::npos && eq > 0) {
        return DatasetInput{arg.substr(0, eq), arg.substr(eq + 1)};
    }
    return DatasetInput{std::filesystem::path(arg).stem().string(), arg};
}

int run(const RunConfig& config) {
    try {
        switch (config.command) {
            case RunConfig::Command::Score: return runScore(config);
            case RunConfig::Command::Filter: return runFilter(config);
            case RunConfig::Command::Aggregate: return runAggregate(config);
            case RunConfig::Command::Report: return runReport(config);
            case RunConfig::Command::Simulate: return runSimulate(config);
            case RunConfig::Command::Sweep: return runSweep(config);
        }
        std::cerr << "error: unknown command\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace crowdex
