#pragma once
// Theory files (JSON, validated on load), report serialization (JSON and
// CSV with a mandatory header row) and static SVG rendering of binary
// statistics sets. Identical inputs produce byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "opuc/measures.hpp"
#include "opuc/relations.hpp"
#include "opuc/theory.hpp"

namespace opuc {

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Schema: { "observables": [{"name", "outcomes", "flags"?}],
//           "preparations": [{"name", "stats": {obs: [probs]}}],
//           "decompositions"?: {obs: [[{"weight", "observable"}]]} }
Theory theory_from_json(const nlohmann::json& doc);
Theory load_theory(const std::string& path);
nlohmann::json theory_to_json(const Theory& t);

nlohmann::json to_json(const MeasureReport& r);
nlohmann::json to_json(const RelationReport& r);
nlohmann::json to_json(const RescalingPurReport& r);
nlohmann::json to_json(const ChshResult& r);

// rows of (label -> value); the header is the union of keys in order of
// first appearance
std::string csv_table(const std::vector<std::vector<std::pair<std::string, double>>>& rows);

// Ambient square, the set polygon, the inscribed scaled-square witness
// and corner markers; probability coordinates; SVG 1.1.
std::string svg_statistics_set(const StatisticsSet& s, bool draw_inscribed = true);

void write_file(const std::string& path, const std::string& content);

}  // namespace opuc
