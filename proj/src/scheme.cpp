#include "bcast/scheme.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace bcast {

std::size_t BroadcastScheme::call_count() const {
    std::size_t n = 0;
    for (const auto& r : rounds) n += r.size();
    return n;
}

SchemeError::SchemeError(Violation kind, int round, std::string detail, std::vector<VertexLabel> uninformed)
    : Error(round > 0 ? "round " + std::to_string(round) + ": " + detail : detail),
      kind_(kind),
      round_(round),
      uninformed_(std::move(uninformed)) {}

namespace {

std::string describe(const Call& c) { return c.from.str() + " -> " + c.to.str(); }

int lookup(const Graph& g, const VertexLabel& l, int round) {
    auto v = g.find(l);
    if (!v) throw SchemeError(Violation::UnknownVertex, round, "unknown vertex " + l.str());
    return *v;
}

}  // namespace

std::vector<int> replay_scheme(const Graph& g, const BroadcastScheme& s) {
    if (s.origins.empty()) throw SchemeError(Violation::EmptyOrigins, 0, "scheme has no origins");
    std::vector<int> informed(g.vertex_count(), -1);
    for (const auto& o : s.origins) {
        int v = lookup(g, o, 0);
        if (informed[static_cast<std::size_t>(v)] == 0)
            throw SchemeError(Violation::DuplicateOrigin, 0, "origin listed twice: " + o.str());
        informed[static_cast<std::size_t>(v)] = 0;
    }
    for (std::size_t r = 0; r < s.rounds.size(); ++r) {
        const int round = static_cast<int>(r) + 1;
        std::set<int> senders, receivers;
        for (const auto& call : s.rounds[r]) {
            int from = lookup(g, call.from, round);
            int to = lookup(g, call.to, round);
            if (!g.has_edge(from, to))
                throw SchemeError(Violation::NonEdge, round, "call " + describe(call) + " does not use an edge");
            int tf = informed[static_cast<std::size_t>(from)];
            if (tf < 0 || tf >= round)
                throw SchemeError(Violation::SenderUninformed, round, "sender of " + describe(call) + " is not informed");
            int tt = informed[static_cast<std::size_t>(to)];
            if (tt >= 0 && tt < round)
                throw SchemeError(Violation::ReceiverInformed, round, "receiver of " + describe(call) + " is already informed");
            if (!senders.insert(from).second)
                throw SchemeError(Violation::DuplicateSender, round, "sender of " + describe(call) + " calls twice");
            if (!receivers.insert(to).second)
                throw SchemeError(Violation::DuplicateReceiver, round, "receiver of " + describe(call) + " is called twice");
        }
        for (int to : receivers) informed[static_cast<std::size_t>(to)] = round;
    }
    return informed;
}

int validate_scheme(const Graph& g, const BroadcastScheme& s) {
    auto informed = replay_scheme(g, s);
    std::vector<VertexLabel> missing;
    for (std::size_t v = 0; v < informed.size(); ++v)
        if (informed[v] < 0) missing.push_back(g.label(static_cast<int>(v)));
    if (!missing.empty()) {
        std::string detail = std::to_string(missing.size()) + " vertices uninformed after the last round:";
        for (std::size_t i = 0; i < missing.size() && i < 8; ++i) detail += " " + missing[i].str();
        if (missing.size() > 8) detail += " ...";
        throw SchemeError(Violation::Incomplete, 0, detail, std::move(missing));
    }
    return static_cast<int>(s.rounds.size());
}

std::vector<VertexLabel> idle_in_round(const Graph& g, const BroadcastScheme& s, int round) {
    auto informed = replay_scheme(g, s);
    std::set<VertexLabel> busy;
    if (round >= 1 && round <= static_cast<int>(s.rounds.size()))
        for (const auto& c : s.rounds[static_cast<std::size_t>(round - 1)]) busy.insert(c.from);
    std::vector<VertexLabel> idle;
    for (std::size_t v = 0; v < informed.size(); ++v) {
        int t = informed[v];
        const auto& l = g.label(static_cast<int>(v));
        if (t >= 0 && t < round && !busy.contains(l)) idle.push_back(l);
    }
    return idle;
}

BroadcastScheme shifted(const BroadcastScheme& s, int offset) {
    BroadcastScheme out;
    out.origins = s.origins;
    out.rounds.assign(static_cast<std::size_t>(offset), {});
    out.rounds.insert(out.rounds.end(), s.rounds.begin(), s.rounds.end());
    return out;
}

BroadcastScheme overlay(std::vector<VertexLabel> origins, const std::vector<BroadcastScheme>& parts) {
    BroadcastScheme out;
    out.origins = std::move(origins);
    std::size_t length = 0;
    for (const auto& p : parts) length = std::max(length, p.rounds.size());
    out.rounds.resize(length);
    std::set<VertexLabel> informed(out.origins.begin(), out.origins.end());
    for (std::size_t r = 0; r < length; ++r) {
        std::set<VertexLabel> fresh;
        for (const auto& p : parts) {
            if (r >= p.rounds.size()) continue;
            for (const auto& c : p.rounds[r])
                if (!informed.contains(c.to) && fresh.insert(c.to).second) out.rounds[r].push_back(c);
        }
        informed.insert(fresh.begin(), fresh.end());
    }
    return out;
}

BroadcastScheme binomial_scheme(int k, const std::string& ns) {
    if (k < 0) throw GraphError("binomial scheme needs k >= 0");
    const unsigned long long all = (1ULL << k) - 1;
    BroadcastScheme s;
    s.origins.push_back({ns, binary_label(all, k)});
    // After round i the informed vertices are the strings ending in 1^{k-i};
    // in round i each of them clears bit k-i.
    for (int i = 1; i <= k; ++i) {
        std::vector<Call> calls;
        const unsigned long long tail = (1ULL << (k - i + 1)) - 1;
        for (unsigned long long x = all + 1; x-- > 0;)
            if ((x & tail) == tail)
                calls.push_back({{ns, binary_label(x, k)}, {ns, binary_label(x ^ (1ULL << (k - i)), k)}});
        s.rounds.push_back(std::move(calls));
    }
    return s;
}

BroadcastScheme knodel_scheme(const KnodelGraph& kg, const VertexLabel& origin) {
    const int n = kg.n;
    const int start = kg.graph.index_of(origin);
    const int rounds = ceil_log2(n);
    const bool power_of_two = (1 << rounds) == n;

    // Dimension used in each round: 1, 2, ..., then the last round reuses
    // dimension 1 unless n is a power of two.
    std::vector<int> dims;
    for (int r = 1; r <= rounds; ++r) dims.push_back(power_of_two || r < rounds ? r : 1);

    std::vector<int> informed_at(static_cast<std::size_t>(n), -1);
    std::vector<int> order{start};
    informed_at[static_cast<std::size_t>(start)] = 0;
    auto informed = [&](int v) { return informed_at[static_cast<std::size_t>(v)] >= 0; };

    BroadcastScheme s;
    s.origins.push_back(origin);
    for (int r = 1; r <= rounds; ++r) {
        const int d = dims[static_cast<std::size_t>(r - 1)];
        // In the round before the final dimension-1 round, skip a call when the
        // receiver's dimension-1 partner is already covered: the partner will
        // reach it in the last round and the sender is spared a wasted call.
        const bool thin = !power_of_two && r == rounds - 1;
        std::vector<Call> calls;
        std::vector<int> fresh;
        std::set<int> receiving;
        for (int x : order) {
            int y = kg.neighbor(x, d);
            if (informed(y) || receiving.contains(y)) continue;
            if (thin) {
                int partner = kg.neighbor(y, 1);
                if (informed(partner) || receiving.contains(partner)) continue;
            }
            receiving.insert(y);
            fresh.push_back(y);
            calls.push_back({kg.vertex(x), kg.vertex(y)});
        }
        for (int y : fresh) {
            informed_at[static_cast<std::size_t>(y)] = r;
            order.push_back(y);
        }
        s.rounds.push_back(std::move(calls));
    }
    return s;
}

namespace {

struct RootedTree {
    std::vector<std::vector<int>> children;
    std::vector<int> postorder;
};

RootedTree orient(const Graph& t, const VertexLabel& root) {
    if (!is_tree(t)) throw GraphError("input is not a tree");
    int r = t.index_of(root);
    RootedTree out;
    out.children.resize(t.vertex_count());
    std::vector<int> parent(t.vertex_count(), -1), stack{r}, order;
    parent[static_cast<std::size_t>(r)] = r;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : t.neighbors(v)) {
            if (parent[static_cast<std::size_t>(u)] >= 0) continue;
            parent[static_cast<std::size_t>(u)] = v;
            out.children[static_cast<std::size_t>(v)].push_back(u);
            stack.push_back(u);
        }
    }
    out.postorder.assign(order.rbegin(), order.rend());
    return out;
}

// Kuhn's augmenting path for children -> branch orders.
bool augment(int child, const std::vector<std::vector<int>>& options, std::vector<int>& owner, std::vector<char>& seen) {
    for (int o : options[static_cast<std::size_t>(child)]) {
        if (seen[static_cast<std::size_t>(o)]) continue;
        seen[static_cast<std::size_t>(o)] = 1;
        int holder = owner[static_cast<std::size_t>(o)];
        if (holder < 0 || augment(holder, options, owner, seen)) {
            owner[static_cast<std::size_t>(o)] = child;
            return true;
        }
    }
    return false;
}

}  // namespace

int tree_broadcast_time(const Graph& t, const VertexLabel& root) {
    auto rt = orient(t, root);
    std::vector<int> time(t.vertex_count(), 0);
    for (int v : rt.postorder) {
        std::vector<int> ts;
        for (int c : rt.children[static_cast<std::size_t>(v)]) ts.push_back(time[static_cast<std::size_t>(c)]);
        std::sort(ts.begin(), ts.end(), std::greater<>());
        int best = 0;
        for (std::size_t i = 0; i < ts.size(); ++i) best = std::max(best, static_cast<int>(i) + 1 + ts[i]);
        time[static_cast<std::size_t>(v)] = best;
    }
    return time[static_cast<std::size_t>(t.index_of(root))];
}

bool embeds_in_binomial(const Graph& t, const VertexLabel& root, int budget) {
    auto rt = orient(t, root);
    if (budget < 0) return false;
    // A tree on n vertices always fits in BT_{n-1}; larger budgets add nothing.
    const int cap = std::min(budget, static_cast<int>(t.vertex_count()));
    // fits[v][j]: subtree of v embeds in BT_j with v on the root. BT_j's root
    // branches are BT_0 .. BT_{j-1}.
    std::vector<std::vector<char>> fits(t.vertex_count(), std::vector<char>(static_cast<std::size_t>(cap) + 1, 0));
    for (int v : rt.postorder) {
        const auto& kids = rt.children[static_cast<std::size_t>(v)];
        for (int j = 0; j <= cap; ++j) {
            if (static_cast<int>(kids.size()) > j) continue;
            std::vector<std::vector<int>> options(kids.size());
            for (std::size_t c = 0; c < kids.size(); ++c)
                for (int o = 0; o < j; ++o)
                    if (fits[static_cast<std::size_t>(kids[c])][static_cast<std::size_t>(o)]) options[c].push_back(o);
            std::vector<int> owner(static_cast<std::size_t>(j), -1);
            bool all = true;
            for (std::size_t c = 0; c < kids.size() && all; ++c) {
                std::vector<char> seen(static_cast<std::size_t>(j), 0);
                all = augment(static_cast<int>(c), options, owner, seen);
            }
            fits[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] = all ? 1 : 0;
        }
    }
    return fits[static_cast<std::size_t>(t.index_of(root))][static_cast<std::size_t>(cap)] != 0;
}

BroadcastScheme scheme_from_tree(const BroadcastTree& bt) {
    BroadcastScheme s;
    s.origins = bt.origins;
    std::set<VertexLabel> roots(bt.origins.begin(), bt.origins.end());
    // Walk parents to reject cycles and dangling parents before emitting calls.
    for (const auto& [child, _] : bt.parent) {
        std::set<VertexLabel> seen{child};
        VertexLabel cur = child;
        while (!roots.contains(cur)) {
            auto it = bt.parent.find(cur);
            if (it == bt.parent.end()) throw GraphError("broadcast tree: " + cur.str() + " has no parent and is not an origin");
            cur = it->second;
            if (!seen.insert(cur).second) throw GraphError("broadcast tree: parent cycle through " + cur.str());
        }
    }
    int last = 0;
    for (const auto& [child, _] : bt.parent) {
        auto it = bt.informed_at.find(child);
        if (it == bt.informed_at.end() || it->second < 1)
            throw GraphError("broadcast tree: missing or invalid time for " + child.str());
        last = std::max(last, it->second);
    }
    s.rounds.resize(static_cast<std::size_t>(last));
    for (const auto& [child, par] : bt.parent)
        s.rounds[static_cast<std::size_t>(bt.informed_at.at(child) - 1)].push_back({par, child});
    for (auto& r : s.rounds) std::sort(r.begin(), r.end());
    return s;
}

BroadcastTree tree_from_scheme(const BroadcastScheme& s) {
    BroadcastTree bt;
    bt.origins = s.origins;
    for (const auto& o : s.origins) bt.informed_at[o] = 0;
    for (std::size_t r = 0; r < s.rounds.size(); ++r)
        for (const auto& c : s.rounds[r]) {
            if (bt.informed_at.contains(c.to)) throw GraphError("scheme informs " + c.to.str() + " twice");
            bt.parent[c.to] = c.from;
            bt.informed_at[c.to] = static_cast<int>(r) + 1;
        }
    return bt;
}

}  // namespace bcast
