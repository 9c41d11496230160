#include "crowdex/campaign.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "crowdex/format.hpp"

namespace crowdex {

namespace {

std::vector<Rating> ascendingScale() {
    std::vector<Rating> notes;
    for (int v = kRatingMin; v <= kRatingMax; ++v) {
        notes.emplace_back(v);
    }
    return notes;
}

} // namespace

CampaignConfig::CampaignConfig(std::vector<Condition> conditions,
                               std::vector<std::string> gold_order,
                               std::vector<std::string> test_ids)
    : conditions_(std::move(conditions)),
      gold_order_(std::move(gold_order)),
      test_ids_(std::move(test_ids)),
      reference_(ascendingScale()) {
    for (const Condition& c : conditions_) {
        known_.insert(c.id);
    }
}

CampaignConfig CampaignConfig::fromJson(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("gold") || !doc.contains("test_conditions")) {
        throw ConfigError("config needs a \"gold\" object and a \"test_conditions\" array");
    }
    const auto& gold = doc["gold"];
    const auto& tests = doc["test_conditions"];
    if (!gold.is_object() || !tests.is_array()) {
        throw ConfigError("\"gold\" must be an object of {condition: expected_note}, "
                          "\"test_conditions\" an array of ids");
    }

    // Gold conditions must cover each note of the scale exactly once.
    std::map<int, std::string> by_note;
    for (const auto& [id, value] : gold.items()) {
        if (id.empty()) {
            throw ConfigError("empty gold condition id");
        }
        if (!value.is_number_integer()) {
            throw ConfigError("expected note of \"" + id + "\" is not an integer");
        }
        const int note = value.get<int>();
        if (note < kRatingMin || note > kRatingMax) {
            throw ConfigError("expected note of \"" + id + "\" outside the rating scale");
        }
        if (!by_note.emplace(note, id).second) {
            throw ConfigError("two gold conditions share expected note " + std::to_string(note));
        }
    }
    if (int(by_note.size()) != kRatingMax - kRatingMin + 1) {
        throw ConfigError("gold conditions must cover every note from " +
                          std::to_string(kRatingMin) + " to " + std::to_string(kRatingMax));
    }

    std::set<std::string> seen;
    std::vector<Condition> conditions;
    std::vector<std::string> gold_order;
    for (const auto& [note, id] : by_note) {
        seen.insert(id);
        conditions.push_back(Condition{id, ConditionKind::Gold, note});
        gold_order.push_back(id);
    }
    if (seen.size() != by_note.size()) {
        throw ConfigError("duplicate gold condition id");
    }

    std::vector<std::string> test_ids;
    for (const auto& entry : tests) {
        if (!entry.is_string() || entry.get<std::string>().empty()) {
            throw ConfigError("test condition ids must be non-empty strings");
        }
        const auto id = entry.get<std::string>();
        if (!seen.insert(id).second) {
            throw ConfigError("duplicate condition id: " + id);
        }
        conditions.push_back(Condition{id, ConditionKind::Test, 0});
        test_ids.push_back(id);
    }
    if (test_ids.empty()) {
        throw ConfigError("at least one test condition is required");
    }

    return CampaignConfig(std::move(conditions), std::move(gold_order), std::move(test_ids));
}

ResponseStore::ResponseStore(CampaignConfig config) : config_(std::move(config)) {}

void ResponseStore::add(const ResponseRecord& record) {
    if (!config_.isCondition(record.condition_id)) {
        throw UnknownCondition("condition \"" + record.condition_id + "\" not in the campaign");
    }
    Rating checked(record.rating);
    const HitKey key{record.participant_id, record.hit_id};
    auto& ratings = by_hit_[key];
    if (!ratings.emplace(record.condition_id, checked.value()).second) {
        throw DuplicateResponse("repeated response for participant \"" + record.participant_id +
                                "\", hit \"" + record.hit_id + "\", condition \"" +
                                record.condition_id + "\"");
    }
    records_.push_back(record);
}

std::vector<HitKey> ResponseStore::hits() const {
    std::vector<HitKey> out;
    out.reserve(by_hit_.size());
    for (const auto& [key, ratings] : by_hit_) {
        out.push_back(key);
    }
    return out; // map order is already (participant, hit) sorted
}

bool ResponseStore::scorable(const HitKey& hit) const {
    const auto it = by_hit_.find(hit);
    if (it == by_hit_.end()) {
        return false;
    }
    for (const std::string& gold_id : config_.goldOrder()) {
        if (!it->second.count(gold_id)) {
            return false;
        }
    }
    return true;
}

GoldSheet ResponseStore::goldSheet(const HitKey& hit) const {
    if (!scorable(hit)) {
        throw Error("hit is missing gold responses and cannot be scored");
    }
    const auto& ratings = by_hit_.at(hit);
    std::vector<Rating> notes;
    notes.reserve(config_.goldOrder().size());
    for (const std::string& gold_id : config_.goldOrder()) {
        notes.emplace_back(ratings.at(gold_id));
    }
    return GoldSheet(std::move(notes));
}

std::optional<int> ResponseStore::ratingFor(const HitKey& hit,
                                            const std::string& condition_id) const {
    const auto it = by_hit_.find(hit);
    if (it == by_hit_.end()) {
        return std::nullopt;
    }
    const auto rating = it->second.find(condition_id);
    if (rating == it->second.end()) {
        return std::nullopt;
    }
    return rating->second;
}

namespace {

std::vector<std::string> splitCsv(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

int parseIntField(const std::string& field, std::size_t line_no, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": " + what + " \"" + field +
                         "\" is not an integer");
    }
    return value;
}

std::string linePrefix(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

} // namespace

ResponseStore ingestResponses(std::istream& in, const CampaignConfig& config) {
    ResponseStore store(config);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != kResponsesHeader) {
                throw ParseError(linePrefix(line_no) + "expected header \"" +
                                 kResponsesHeader + "\"");
            }
            header_seen = true;
            continue;
        }
        const auto fields = splitCsv(line);
        if (fields.size() != 5) {
            throw ParseError(linePrefix(line_no) + "expected 5 fields, got " +
                             std::to_string(fields.size()));
        }
        for (std::size_t i = 0; i < 4; ++i) {
            if (fields[i].empty()) {
                throw ParseError(linePrefix(line_no) + "empty field " + std::to_string(i + 1));
            }
        }
        const int rating = parseIntField(fields[4], line_no, "rating");
        const ResponseRecord record{fields[0], fields[1], fields[2], fields[3], rating};
        try {
            store.add(record);
        } catch (const UnknownCondition& e) {
            throw UnknownCondition(linePrefix(line_no) + e.what());
        } catch (const RatingOutOfRange& e) {
            throw RatingOutOfRange(linePrefix(line_no) + e.what());
        } catch (const DuplicateResponse& e) {
            throw DuplicateResponse(linePrefix(line_no) + e.what());
        }
    }
    return store;
}

void writeResponsesCsv(std::ostream& out, const std::vector<ResponseRecord>& records) {
    out << kResponsesHeader << '\n';
    for (const ResponseRecord& r : records) {
        out << r.participant_id << ',' << r.panel_id << ',' << r.hit_id << ','
            << r.condition_id << ',' << r.rating << '\n';
    }
}

ScoreTable scoreCampaign(const ResponseStore& store) {
    ScoreTable table;
    const GoldSheet& reference = store.config().referenceSheet();
    for (const HitKey& hit : store.hits()) {
        if (!store.scorable(hit)) {
            ++table.unscorable_count;
            continue;
        }
        auto breakdown = std::make_shared<ExpertiseBreakdown>(
            computeExpertiseBreakdown(reference, store.goldSheet(hit)));
        const double degree = breakdown->degree;
        table.rows.push_back(ScoreRow{hit.first, hit.second, degree, std::move(breakdown)});
    }
    return table; // store.hits() is sorted, so rows are too
}

std::set<HitKey> filterExperts(const ScoreTable& table, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw ThresholdOutOfRange("threshold " + formatFixed(threshold, 6) + " outside [0, 1]");
    }
    std::set<HitKey> retained;
    for (const ScoreRow& row : table.rows) {
        if (row.degree > threshold) {
            retained.emplace(row.participant_id, row.hit_id);
        }
    }
    return retained;
}

std::vector<ConditionMean> aggregateConditions(const ResponseStore& store,
                                               const std::set<HitKey>& retained) {
    std::map<std::string, std::pair<long long, std::size_t>> sums; // condition -> (sum, count)
    for (const ResponseRecord& r : store.records()) {
        if (retained.count(HitKey{r.participant_id, r.hit_id})) {
            auto& [sum, count] = sums[r.condition_id];
            sum += r.rating;
            ++count;
        }
    }
    std::vector<ConditionMean> out;
    for (const Condition& c : store.config().conditions()) {
        const auto it = sums.find(c.id);
        if (it == sums.end() || it->second.second == 0) {
            out.push_back(ConditionMean{c.id, c.kind, 0, std::nullopt});
        } else {
            const auto& [sum, count] = it->second;
            out.push_back(ConditionMean{c.id, c.kind, count, double(sum) / double(count)});
        }
    }
    return out;
}

std::size_t Histogram::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

int histogramBin(double degree) {
    if (degree <= 0.0) {
        return 0;
    }
    if (degree >= 1.0) {
        return 9; // the last bin is closed at 1.0
    }
    // The nudge keeps exactly-representable boundaries like 0.7 in the bin
    // they open rather than one below (0.7 * 10 rounds to 6.999...).
    const int bin = int(std::floor(degree * 10.0 + 1e-12));
    return std::min(bin, 9);
}

Histogram degreeHistogram(const ScoreTable& table) {
    Histogram h;
    for (const ScoreRow& row : table.rows) {
        ++h.counts[std::size_t(histogramBin(row.degree))];
    }
    return h;
}

std::vector<ParticipantPool> poolByParticipant(const ScoreTable& table) {
    std::map<std::string, std::pair<double, std::size_t>> sums;
    for (const ScoreRow& row : table.rows) {
        auto& [sum, count] = sums[row.participant_id];
        sum += row.degree;
        ++count;
    }
    std::vector<ParticipantPool> out;
    out.reserve(sums.size());
    for (const auto& [id, acc] : sums) {
        out.push_back(ParticipantPool{id, acc.second, acc.first / double(acc.second)});
    }
    return out;
}

void writeScoresCsv(std::ostream& out, const ScoreTable& table) {
    out << "participant_id,hit_id,degree\n";
    for (const ScoreRow& row : table.rows) {
        out << row.participant_id << ',' << row.hit_id << ',' << formatFixed(row.degree, 6)
            << '\n';
    }
}

ScoreTable readScoresCsv(std::istream& in) {
    ScoreTable table;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != "participant_id,hit_id,degree") {
                throw ParseError(linePrefix(line_no) +
                                 "expected header \"participant_id,hit_id,degree\"");
            }
            header_seen = true;
            continue;
        }
        const auto fields = splitCsv(line);
        if (fields.size() != 3) {
            throw ParseError(linePrefix(line_no) + "expected 3 fields, got " +
                             std::to_string(fields.size()));
        }
        double degree = 0.0;
        const auto [ptr, ec] =
            std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), degree);
        if (ec != std::errc{} || ptr != fields[2].data() + fields[2].size()) {
            throw ParseError(linePrefix(line_no) + "degree \"" + fields[2] +
                             "\" is not a number");
        }
        if (!(degree >= 0.0 && degree <= 1.0)) {
            throw ParseError(linePrefix(line_no) + "degree outside [0, 1]");
        }
        table.rows.push_back(ScoreRow{fields[0], fields[1], degree, nullptr});
    }
    return table;
}

void writeRetainedCsv(std::ostream& out, const std::set<HitKey>& retained) {
    out << "participant_id,hit_id\n";
    for (const auto& [participant, hit] : retained) {
        out << participant << ',' << hit << '\n';
    }
}

} // namespace crowdex
