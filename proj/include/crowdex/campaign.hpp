#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crowdex/expertise.hpp"

namespace crowdex {

enum class ConditionKind { Gold, Test };

struct Condition {
    std::string id;
    ConditionKind kind;
    int expected_note; // gold conditions only; 0 for test conditions
};

// Campaign setup: which conditions exist and what the anchor items' expected
// notes are. Canonical condition order is gold by ascending expected note,
// then test conditions in configured order; every artifact uses it.
class CampaignConfig {
public:
    // Accepts {"gold": {id: expected_note, ...}, "test_conditions": [id, ...]}.
    // Gold notes must cover the rating scale exactly once; at least one test
    // condition; ids unique across both groups. Violations throw ConfigError.
    static CampaignConfig fromJson(const std::string& json_text);

    const std::vector<Condition>& conditions() const { return conditions_; }

    // Gold condition ids by ascending expected note; item i of a sheet is
    // the response to goldOrder()[i-1].
    const std::vector<std::string>& goldOrder() const { return gold_order_; }
    const std::vector<std::string>& testConditions() const { return test_ids_; }

    bool isCondition(const std::string& id) const { return known_.count(id) != 0; }
    int itemCount() const { return int(gold_order_.size()); }

    // Expected notes as a sheet: item i was designed to earn note i.
    const GoldSheet& referenceSheet() const { return reference_; }

private:
    CampaignConfig(std::vector<Condition> conditions, std::vector<std::string> gold_order,
                   std::vector<std::string> test_ids);

    std::vector<Condition> conditions_;
    std::vector<std::string> gold_order_;
    std::vector<std::string> test_ids_;
    std::set<std::string> known_;
    GoldSheet reference_;
};

// One CSV row: a participant's rating of one condition inside one hit.
struct ResponseRecord {
    std::string participant_id;
    std::string panel_id;
    std::string hit_id;
    std::string condition_id;
    int rating;
};

inline constexpr const char* kResponsesHeader = "participant_id,panel_id,hit_id,condition_id,rating";

// A unit of scorable work: one participant's pass over one hit.
using HitKey = std::pair<std::string, std::string>; // participant_id, hit_id

// All ingested responses plus the per-hit rating index.
class ResponseStore {
public:
    explicit ResponseStore(CampaignConfig config);

    // Validates condition, rating range, and (participant, hit, condition)
    // uniqueness. Throws UnknownCondition, RatingOutOfRange, DuplicateResponse.
    void add(const ResponseRecord& record);

    const CampaignConfig& config() const { return config_; }
    const std::vector<ResponseRecord>& records() const { return records_; }

    // Distinct (participant, hit) pairs, sorted.
    std::vector<HitKey> hits() const;

    // A hit is scorable when every gold condition got a rating.
    bool scorable(const HitKey& hit) const;

    // The participant's gold ratings as a sheet, item order = goldOrder().
    // Throws Error when the hit is not scorable.
    GoldSheet goldSheet(const HitKey& hit) const;

    std::optional<int> ratingFor(const HitKey& hit, const std::string& condition_id) const;

private:
    CampaignConfig config_;
    std::vector<ResponseRecord> records_;
    std::map<HitKey, std::map<std::string, int>> by_hit_;
};

// Strict CSV ingestion: exact header, five unquoted fields per line, integer
// rating. The first offending line aborts with its line number in the error.
// An empty stream (or header only) is a valid empty store. CRLF is tolerated,
// blank lines are skipped, fields are taken verbatim (no trimming, no quotes).
ResponseStore ingestResponses(std::istream& in, const CampaignConfig& config);

void writeResponsesCsv(std::ostream& out, const std::vector<ResponseRecord>& records);

// Scoring output. The breakdown is shared, not copied: rows are value types
// but the full evidence trail can be big.
struct ScoreRow {
    std::string participant_id;
    std::string hit_id;
    double degree;
    std::shared_ptr<const ExpertiseBreakdown> breakdown; // null when read back from CSV
};

struct ScoreTable {
    std::vector<ScoreRow> rows; // sorted by (participant_id, hit_id)
    std::size_t unscorable_count = 0;
};

// Scores every scorable hit against the reference sheet; hits missing gold
// responses are skipped and counted.
ScoreTable scoreCampaign(const ResponseStore& store);

// Keeps hits with degree strictly above the threshold. The threshold must
// lie in [0, 1]; at 1.0 nothing survives, including perfect sheets.
std::set<HitKey> filterExperts(const ScoreTable& table, double threshold);

struct ConditionMean {
    std::string condition_id;
    ConditionKind kind;
    std::size_t count;          // retained ratings for this condition
    std::optional<double> mean; // absent when count is 0, never 0.0
};

// Mean rating per condition over the retained hits, in canonical condition
// order. Every configured condition is reported, with or without data.
std::vector<ConditionMean> aggregateConditions(const ResponseStore& store,
                                               const std::set<HitKey>& retained);

// Degree histogram over [0, 1]: ten bins of width 0.1, the last bin closed
// at 1.0.
struct Histogram {
    static constexpr double kBinWidth = 0.1;
    std::array<std::size_t, 10> counts{};
    std::size_t total() const;
};

int histogramBin(double degree);
Histogram degreeHistogram(const ScoreTable& table);

// Secondary view: one row per participant, averaging their hit degrees.
struct ParticipantPool {
    std::string participant_id;
    std::size_t hit_count;
    double mean_degree;
};

std::vector<ParticipantPool> poolByParticipant(const ScoreTable& table);

// Scores CSV: "participant_id,hit_id,degree" with six-decimal degrees.
void writeScoresCsv(std::ostream& out, const ScoreTable& table);
ScoreTable readScoresCsv(std::istream& in);

// Retained-pairs CSV: "participant_id,hit_id".
void writeRetainedCsv(std::ostream& out, const std::set<HitKey>& retained);

} // namespace crowdex
