#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tfespec/filterbank.hpp"

namespace tfespec {

using nlohmann::json;

BandPlanSpec parse_band_plan_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("band plan JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string()) {
        throw std::invalid_argument("band plan JSON: expected an object with a string \"type\"");
    }
    const std::string type = doc["type"].get<std::string>();
    if (type == "uniform") {
        if (!doc.contains("bands") || !doc["bands"].is_number_integer() || doc["bands"].get<long long>() < 1) {
            throw std::invalid_argument("band plan JSON: uniform plan needs integer \"bands\" >= 1");
        }
        return BandPlanSpec::uniform(doc["bands"].get<std::size_t>());
    }
    if (type == "custom") {
        if (!doc.contains("cutoffs_hz") || !doc["cutoffs_hz"].is_array() || doc["cutoffs_hz"].empty()) {
            throw std::invalid_argument("band plan JSON: custom plan needs a non-empty \"cutoffs_hz\" array");
        }
        std::vector<double> cutoffs;
        for (const auto& v : doc["cutoffs_hz"]) {
            if (!v.is_number()) throw std::invalid_argument("band plan JSON: cutoffs_hz must be numbers");
            cutoffs.push_back(v.get<double>());
        }
        return BandPlanSpec::custom(std::move(cutoffs));
    }
    throw std::invalid_argument("band plan JSON: unknown type \"" + type + "\"");
}

BandPlanSpec load_band_plan(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path.string() + ": cannot open band plan");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_band_plan_json(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

std::string to_json(const BandPlanSpec& spec) {
    json doc;
    if (spec.kind == BandPlanSpec::Kind::uniform) {
        doc["type"] = "uniform";
        doc["bands"] = spec.bands;
    } else {
        doc["type"] = "custom";
        doc["cutoffs_hz"] = spec.cutoffs_hz;
    }
    return doc.dump();
}

}  // namespace tfespec
