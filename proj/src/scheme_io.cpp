#include <json.hpp>

#include "bcast/scheme.hpp"

namespace bcast {

using nlohmann::json;

std::string to_json(const BroadcastScheme& s, int indent) {
    json j;
    j["origins"] = json::array();
    for (const auto& o : s.origins) j["origins"].push_back(o.str());
    j["rounds"] = json::array();
    for (const auto& r : s.rounds) {
        json calls = json::array();
        for (const auto& c : r) calls.push_back({{"from", c.from.str()}, {"to", c.to.str()}});
        j["rounds"].push_back(std::move(calls));
    }
    return j.dump(indent);
}

BroadcastScheme scheme_from_json(const std::string& text) {
    BroadcastScheme s;
    try {
        json j = json::parse(text);
        for (const auto& o : j.at("origins")) s.origins.push_back(VertexLabel::parse(o.get<std::string>()));
        std::size_t r = 0;
        for (const auto& round : j.at("rounds")) {
            ++r;
            if (!round.is_array()) throw FormatError("scheme document: round " + std::to_string(r) + " is not an array");
            std::vector<Call> calls;
            for (const auto& c : round)
                calls.push_back({VertexLabel::parse(c.at("from").get<std::string>()), VertexLabel::parse(c.at("to").get<std::string>())});
            s.rounds.push_back(std::move(calls));
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("scheme document: ") + e.what());
    }
    return s;
}

}  // namespace bcast
