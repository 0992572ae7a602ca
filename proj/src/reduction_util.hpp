#pragma once

#include <map>

#include "bcast/scheme.hpp"

namespace bcast::detail {

// Renames vertices in every call and origin.
inline BroadcastScheme relabeled(BroadcastScheme s, const std::map<VertexLabel, VertexLabel>& rename) {
    auto fix = [&](VertexLabel& v) {
        auto it = rename.find(v);
        if (it != rename.end()) v = it->second;
    };
    for (auto& o : s.origins) fix(o);
    for (auto& round : s.rounds)
        for (auto& c : round) {
            fix(c.from);
            fix(c.to);
        }
    return s;
}

// Drops calls whose receiver is not a vertex of g.
inline BroadcastScheme restricted(BroadcastScheme s, const Graph& g) {
    for (auto& round : s.rounds) std::erase_if(round, [&](const Call& c) { return !g.contains(c.to); });
    return s;
}

// A scheme holding the single call from -> to in round `round` (1-based).
inline BroadcastScheme single_call(const VertexLabel& from, const VertexLabel& to, int round) {
    BroadcastScheme s;
    s.rounds.resize(static_cast<std::size_t>(round));
    s.rounds.back().push_back({from, to});
    return s;
}

}  // namespace bcast::detail
