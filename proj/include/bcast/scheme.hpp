#pragma once

#include <map>
#include <string>
#include <vector>

#include "bcast/families.hpp"
#include "bcast/graph.hpp"

namespace bcast {

struct Call {
    VertexLabel from;
    VertexLabel to;
    auto operator<=>(const Call&) const = default;
};

// rounds[i] holds the calls made in time unit i+1. Empty rounds are idle
// time units and still count toward completion.
struct BroadcastScheme {
    std::vector<VertexLabel> origins;
    std::vector<std::vector<Call>> rounds;

    std::size_t call_count() const;
};

struct BroadcastTree {
    std::vector<VertexLabel> origins;
    std::map<VertexLabel, VertexLabel> parent;
    std::map<VertexLabel, int> informed_at;  // origins at 0
};

enum class Violation {
    EmptyOrigins,
    UnknownVertex,
    DuplicateOrigin,
    SenderUninformed,
    ReceiverInformed,
    NonEdge,
    DuplicateSender,
    DuplicateReceiver,
    Incomplete,
};

class SchemeError : public Error {
public:
    SchemeError(Violation kind, int round, std::string detail, std::vector<VertexLabel> uninformed = {});
    Violation kind() const { return kind_; }
    int round() const { return round_; }  // 1-based; 0 when not tied to a round
    const std::vector<VertexLabel>& uninformed() const { return uninformed_; }

private:
    Violation kind_;
    int round_;
    std::vector<VertexLabel> uninformed_;
};

// Replays the rounds and returns the time each vertex became informed
// (indexed like g.labels(), -1 if never). Per-round rules are enforced;
// coverage is not.
std::vector<int> replay_scheme(const Graph& g, const BroadcastScheme& s);

// Completion round (= number of rounds) of a scheme that informs every vertex.
int validate_scheme(const Graph& g, const BroadcastScheme& s);

// Vertices informed before `round` (1-based) that make no call in it.
std::vector<VertexLabel> idle_in_round(const Graph& g, const BroadcastScheme& s, int round);

// Shifts every call by `offset` rounds, padding with empty rounds in front.
BroadcastScheme shifted(const BroadcastScheme& s, int offset);

// Merges the rounds of several schemes over the same time axis. Calls whose
// receiver is informed earlier (by an origin or by an earlier round of the
// merged scheme) are dropped.
BroadcastScheme overlay(std::vector<VertexLabel> origins, const std::vector<BroadcastScheme>& parts);

BroadcastScheme binomial_scheme(int k, const std::string& ns = "bt");
BroadcastScheme knodel_scheme(const KnodelGraph& kg, const VertexLabel& origin);

// Exact broadcast time of a tree from `root`: children sorted by their own
// times, descending, and the i-th (1-based) finishes at i + time.
int tree_broadcast_time(const Graph& t, const VertexLabel& root);

// Whether the tree rooted at `root` is a rooted subtree of BT_budget, decided
// by matching children onto root branches of decreasing order.
bool embeds_in_binomial(const Graph& t, const VertexLabel& root, int budget);

BroadcastScheme scheme_from_tree(const BroadcastTree& bt);
BroadcastTree tree_from_scheme(const BroadcastScheme& s);

std::string to_json(const BroadcastScheme& s, int indent = 1);
BroadcastScheme scheme_from_json(const std::string& text);

}  // namespace bcast
