#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crowdex/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"belief-based expertise scoring for rating campaigns"};
    app.require_subcommand(1);

    crowdex::RunConfig cfg;
    std::vector<std::string> response_args;
    double threshold = 0.0;

    auto* simulate = app.add_subcommand("simulate", "generate a synthetic responses CSV");
    simulate->add_option("--spec", cfg.spec_path, "population spec JSON")->required();
    simulate->add_option("--config", cfg.config_path, "campaign config JSON")->required();
    simulate->add_option("--out", cfg.out_path, "responses CSV to write")->required();
    simulate->add_option("--seed", cfg.seed_override, "override the spec's seed");
    simulate->callback([&] { cfg.command = crowdex::RunConfig::Command::Simulate; });

    auto* score = app.add_subcommand("score", "score every (participant, hit) pair");
    score->add_option("--responses", response_args, "responses CSV")->required()->expected(1);
    score->add_option("--config", cfg.config_path, "campaign config JSON")->required();
    score->add_option("--out", cfg.out_path, "scores CSV to write")->required();
    score->add_option("--breakdown", cfg.breakdown_path, "also write the full evidence JSON");
    score->add_option("--pool-by-participant", cfg.pooled_path,
                      "also write per-participant mean degrees CSV");
    score->callback([&] { cfg.command = crowdex::RunConfig::Command::Score; });

    auto* filter = app.add_subcommand("filter", "keep hits above a degree threshold");
    filter->add_option("--scores", cfg.scores_path, "scores CSV from `score`")->required();
    filter->add_option("--threshold", threshold, "retain degrees strictly above this")
        ->required();
    filter->add_option("--out", cfg.out_path, "retained pairs CSV to write")->required();
    filter->callback([&] { cfg.command = crowdex::RunConfig::Command::Filter; });

    auto* aggregate = app.add_subcommand("aggregate", "per-condition means over retained hits");
    aggregate->add_option("--responses", response_args, "responses CSV")->required()->expected(1);
    aggregate->add_option("--config", cfg.config_path, "campaign config JSON")->required();
    aggregate->add_option("--threshold", threshold, "retain degrees strictly above this")
        ->required();
    aggregate->add_option("--out", cfg.out_path, "aggregation JSON to write")->required();
    aggregate->callback([&] { cfg.command = crowdex::RunConfig::Command::Aggregate; });

    auto* report = app.add_subcommand("report", "full report over one or more datasets");
    report->add_option("--responses", response_args,
                       "label=path (repeatable; bare paths are labeled by stem)")
        ->required();
    report->add_option("--config", cfg.config_path, "campaign config JSON")->required();
    report->add_option("--threshold", threshold, "retain degrees strictly above this")
        ->default_val(0.4);
    report->add_option("--out-dir", cfg.out_dir, "directory for report.json and charts")
        ->required();
    report->callback([&] { cfg.command = crowdex::RunConfig::Command::Report; });

    auto* sweep = app.add_subcommand("sweep", "aggregate at several thresholds");
    sweep->add_option("--responses", response_args, "responses CSV")->required()->expected(1);
    sweep->add_option("--config", cfg.config_path, "campaign config JSON")->required();
    sweep->add_option("--thresholds", cfg.thresholds, "comma-separated thresholds")
        ->required()
        ->delimiter(',');
    sweep->add_option("--out-dir", cfg.out_dir, "directory for aggregate_<t>.json files")
        ->required();
    sweep->callback([&] { cfg.command = crowdex::RunConfig::Command::Sweep; });

    CLI11_PARSE(app, argc, argv);

    for (const std::string& arg : response_args) {
        cfg.responses.push_back(crowdex::parseDatasetArg(arg));
    }
    if (filter->parsed() || aggregate->parsed() || report->parsed()) {
        cfg.thresholds = {threshold};
    }
    return crowdex::run(cfg);
}
