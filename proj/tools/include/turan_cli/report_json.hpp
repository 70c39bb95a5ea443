#pragma once

#include <json.hpp>

#include "turan/blocks.hpp"
#include "turan/bounds.hpp"
#include "turan/search.hpp"

namespace turan::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Edge& e);
Json to_json(const Triangle& t);
Json to_json(const SuspensionWitness& w);
Json to_json(const BlockDecomposition& d);
Json block_summary(const BlockDecomposition& d);

/// `timing` adds elapsed_seconds, which breaks byte-for-byte reproducibility.
Json to_json(const SearchReport& r, bool timing);
Json to_json(const ExtremalResult& r, bool timing);

Json to_json(const K4NeighborhoodReport& r);
Json to_json(const FloorAuditResult& r);
Json to_json(const ThresholdAuditResult& r);

}  // namespace turan::cli
