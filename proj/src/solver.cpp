#include "bcast/solver.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "bits.hpp"

namespace bcast {

namespace {

using Clock = std::chrono::steady_clock;
using detail::Bits;

struct OutOfBudget {};

struct RawCall {
    int round;
    int from;
    int to;
};

// Equivalence classes of vertices with equal open or equal closed
// neighbourhoods; swapping two members is an automorphism.
std::vector<int> twin_classes(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    std::map<std::vector<int>, std::vector<int>> open, closed;
    for (int v = 0; v < n; ++v) {
        open[g.neighbors(v)].push_back(v);
        auto c = g.neighbors(v);
        c.insert(std::lower_bound(c.begin(), c.end(), v), v);
        closed[c].push_back(v);
    }
    int next = 0;
    for (const auto* groups : {&open, &closed})
        for (const auto& [key, members] : *groups) {
            if (members.size() < 2) continue;
            for (int v : members) cls[static_cast<std::size_t>(v)] = next;
            ++next;
        }
    for (auto& c : cls)
        if (c < 0) c = next++;
    return cls;
}

template <int W>
class Search {
public:
    using B = Bits<W>;

    Search(const Graph& g, const SolverConfig& cfg, Clock::time_point deadline)
        : n_(static_cast<int>(g.vertex_count())), cfg_(cfg), deadline_(deadline) {
        adj_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            for (int u : g.neighbors(v)) adj_[static_cast<std::size_t>(v)].set(u);
        for (int v = 0; v < n_; ++v) all_.set(v);
        twin_ = cfg.twin_symmetry ? twin_classes(g) : std::vector<int>();
        if (twin_.empty())
            for (int v = 0; v < n_; ++v) twin_.push_back(v);
    }

    // Throws OutOfBudget.
    bool run(const std::vector<int>& origins, int rounds) {
        calls_.clear();
        B informed;
        for (int o : origins) informed.set(o);
        return feasible(informed, all_, rounds, 0);
    }

    const std::vector<RawCall>& calls() const { return calls_; }
    long long nodes() const { return nodes_; }

private:
    struct Key {
        B comp;
        B informed;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return k.comp.hash() * 31 + k.informed.hash(); }
    };

    const B& adj(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    void tick() {
        ++nodes_;
        if (cfg_.node_budget > 0 && nodes_ > cfg_.node_budget) throw OutOfBudget{};
        if ((nodes_ & 255) == 0 && cfg_.time_budget.count() > 0 && Clock::now() > deadline_) throw OutOfBudget{};
    }

    // Connected pieces of the scope once informed-informed edges are ignored.
    // Only pieces holding an uninformed vertex are returned.
    std::vector<B> split(const B& informed, const B& scope) const {
        std::vector<B> out;
        B left = scope.without(informed);
        const B uninf = left;
        while (left.any()) {
            B comp, frontier;
            left.for_each([&](int v) {
                if (comp.none()) {
                    comp.set(v);
                    frontier.set(v);
                }
            });
            while (frontier.any()) {
                B next;
                frontier.for_each([&](int x) { next |= informed.test(x) ? (adj(x) & uninf) : (adj(x) & scope); });
                frontier = next.without(comp);
                comp |= frontier;
            }
            left = left.without(comp);
            out.push_back(comp);
        }
        return out;
    }

    bool feasible(const B& informed, const B& scope, int r, int t) {
        const B uninf = scope.without(informed);
        if (uninf.none()) return true;
        if (r == 0) return false;
        if (!cfg_.decompose) return solve(scope, informed & scope, r, t);

        auto comps = split(informed, scope);
        if (comps.size() == 1) return solve(comps[0], informed & comps[0], r, t);
        // Tightest component first: it is the likeliest to fail.
        auto slack = [&](const B& c) {
            const long long cap = r >= 40 ? (1LL << 40) : (1LL << r) - 1;
            return (c & informed).count() * cap - c.without(informed).count();
        };
        std::stable_sort(comps.begin(), comps.end(), [&](const B& a, const B& b) { return slack(a) < slack(b); });
        const std::size_t mark = calls_.size();
        for (const auto& c : comps)
            if (!solve(c, informed & c, r, t)) {
                calls_.resize(mark);
                return false;
            }
        return true;
    }

    bool refuted_by_bounds(const B& informed, const B& uninf, const std::vector<int>& senders, int r) const {
        if (cfg_.prune_doubling && r < 40) {
            long long cap = static_cast<long long>(senders.size()) * ((1LL << r) - 1);
            if (uninf.count() > cap) return true;
        }
        if (cfg_.prune_distance) {
            B reached, frontier;
            for (int s : senders) frontier |= adj(s) & uninf;
            reached = frontier;
            for (int d = 1; d < r && frontier.any(); ++d) {
                B next;
                frontier.for_each([&](int x) { next |= adj(x) & uninf; });
                frontier = next.without(reached);
                reached |= frontier;
            }
            if (!(uninf.without(reached)).none()) return true;
        }
        if (cfg_.prune_flow && flow_refutes(uninf, senders, r)) return true;
        (void)informed;
        return false;
    }

    // A vertex called now only ever informs vertices of its own component of
    // the uninformed subgraph. A sender with m neighbours in a component can
    // seed it at most 2^r - 2^(r-m) vertices, and 2^r - 1 over all components.
    bool flow_refutes(const B& uninf, const std::vector<int>& senders, int r) const {
        std::vector<B> parts;
        B left = uninf;
        while (left.any()) {
            B comp, frontier;
            left.for_each([&](int v) {
                if (comp.none()) comp.set(v);
            });
            frontier = comp;
            while (frontier.any()) {
                B next;
                frontier.for_each([&](int x) { next |= adj(x) & uninf; });
                frontier = next.without(comp);
                comp |= frontier;
            }
            left = left.without(comp);
            parts.push_back(comp);
        }
        const int total = uninf.count();
        auto worth = [&](int m, long long cap) {
            if (r >= 40) return cap;
            long long v = (1LL << r) - (m >= r ? 1LL : (1LL << (r - m)));
            return std::min(v, cap);
        };
        const int p = static_cast<int>(senders.size());
        const int q = static_cast<int>(parts.size());
        detail::MaxFlow net(2 + p + q);
        const int src = 0, sink = 1;
        for (int i = 0; i < p; ++i) {
            net.add(src, 2 + i, worth(r, total));
            for (int k = 0; k < q; ++k) {
                int m = (adj(senders[static_cast<std::size_t>(i)]) & parts[static_cast<std::size_t>(k)]).count();
                if (m > 0) net.add(2 + i, 2 + p + k, worth(m, parts[static_cast<std::size_t>(k)].count()));
            }
        }
        for (int k = 0; k < q; ++k) net.add(2 + p + k, sink, parts[static_cast<std::size_t>(k)].count());
        return net.run(src, sink) < total;
    }

    bool solve(const B& comp, const B& informed, int r, int t) {
        tick();
        const B uninf = comp.without(informed);
        Key key{comp, informed};
        if (cfg_.prune_dominance) {
            auto it = memo_.find(key);
            if (it != memo_.end() && it->second >= r) return false;
        }

        std::vector<int> senders;
        informed.for_each([&](int v) {
            if (adj(v).intersects(uninf)) senders.push_back(v);
        });
        bool ok = !refuted_by_bounds(informed, uninf, senders, r) && branch(comp, informed, uninf, senders, r, t);
        if (!ok && cfg_.prune_dominance) {
            auto it = memo_.find(key);
            if (it != memo_.end())
                it->second = std::max(it->second, r);
            else if (memo_.size() < cfg_.memo_cap)
                memo_.emplace(key, r);
        }
        return ok;
    }

    // Walks the maximum-size receiver sets of this round (each with one
    // sender assignment) and recurses on each.
    bool branch(const B& comp, const B& informed, const B& uninf, const std::vector<int>& senders, int r, int t) {
        B reachable;
        for (int s : senders) reachable |= adj(s) & uninf;
        struct Cand {
            int v;
            int key;
        };
        std::vector<Cand> cand;
        reachable.for_each([&](int v) { cand.push_back({v, (adj(v) & uninf).count()}); });
        std::sort(cand.begin(), cand.end(), [&](const Cand& a, const Cand& b) {
            if (a.key != b.key) return a.key > b.key;
            if (twin_[static_cast<std::size_t>(a.v)] != twin_[static_cast<std::size_t>(b.v)])
                return twin_[static_cast<std::size_t>(a.v)] < twin_[static_cast<std::size_t>(b.v)];
            return a.v < b.v;
        });

        const int p = static_cast<int>(senders.size());
        const int q = static_cast<int>(cand.size());
        std::vector<std::vector<int>> radj(static_cast<std::size_t>(q));
        for (int j = 0; j < q; ++j)
            for (int i = 0; i < p; ++i)
                if (adj(senders[static_cast<std::size_t>(i)]).test(cand[static_cast<std::size_t>(j)].v))
                    radj[static_cast<std::size_t>(j)].push_back(i);

        std::vector<int> match(static_cast<std::size_t>(p), -1);  // sender -> receiver slot
        std::vector<char> seen;
        auto augment = [&](auto&& self, int j) -> bool {
            for (int i : radj[static_cast<std::size_t>(j)]) {
                if (seen[static_cast<std::size_t>(i)]) continue;
                seen[static_cast<std::size_t>(i)] = 1;
                int other = match[static_cast<std::size_t>(i)];
                if (other < 0 || self(self, other)) {
                    match[static_cast<std::size_t>(i)] = j;
                    return true;
                }
            }
            return false;
        };
        auto try_add = [&](std::vector<int>& m, int j) {
            std::swap(m, match);
            seen.assign(static_cast<std::size_t>(p), 0);
            bool ok = augment(augment, j);
            std::swap(m, match);
            return ok;
        };

        int target = 0;
        {
            std::vector<int> m(static_cast<std::size_t>(p), -1);
            for (int j = 0; j < q; ++j) target += try_add(m, j) ? 1 : 0;
        }

        std::vector<int> excluded_class;  // twin classes with an excluded member
        auto class_excluded = [&](int j) {
            int c = twin_[static_cast<std::size_t>(cand[static_cast<std::size_t>(j)].v)];
            return std::find(excluded_class.begin(), excluded_class.end(), c) != excluded_class.end();
        };

        auto recurse = [&](const std::vector<int>& m) {
            B next = informed;
            const std::size_t mark = calls_.size();
            for (int i = 0; i < p; ++i) {
                int j = m[static_cast<std::size_t>(i)];
                if (j < 0) continue;
                int v = cand[static_cast<std::size_t>(j)].v;
                next.set(v);
                calls_.push_back({t, senders[static_cast<std::size_t>(i)], v});
            }
            if (feasible(next, comp, r - 1, t + 1)) return true;
            calls_.resize(mark);
            return false;
        };

        auto walk = [&](auto&& self, int j, int size, const std::vector<int>& m) -> bool {
            if (size == target) return recurse(m);
            if (j == q || size + (q - j) < target) return false;
            if (!cfg_.twin_symmetry || !class_excluded(j)) {
                std::vector<int> with = m;
                if (try_add(with, j)) {
                    if (self(self, j + 1, size + 1, with)) return true;
                }
            }
            // Leave j out, provided the rest can still complete a basis.
            std::vector<int> probe = m;
            int reach = size;
            for (int k = j + 1; k < q && reach < target; ++k) reach += try_add(probe, k) ? 1 : 0;
            if (reach < target) return false;
            excluded_class.push_back(twin_[static_cast<std::size_t>(cand[static_cast<std::size_t>(j)].v)]);
            bool found = self(self, j + 1, size, m);
            excluded_class.pop_back();
            return found;
        };
        return walk(walk, 0, 0, std::vector<int>(static_cast<std::size_t>(p), -1));
    }

    int n_;
    SolverConfig cfg_;
    Clock::time_point deadline_;
    std::vector<B> adj_;
    B all_;
    std::vector<int> twin_;
    std::vector<RawCall> calls_;
    long long nodes_ = 0;
    std::unordered_map<Key, int, KeyHash> memo_;
};

constexpr int kMaxVertices = 512;

void require_connected(const Graph& g) {
    if (g.vertex_count() == 0) throw SolverError("solver: empty graph");
    if (!is_connected(g)) throw SolverError("solver: graph is disconnected");
}

BroadcastScheme to_scheme(const Graph& g, const std::vector<int>& origins, const std::vector<RawCall>& calls) {
    BroadcastScheme s;
    for (int o : origins) s.origins.push_back(g.label(o));
    int last = 0;
    for (const auto& c : calls) last = std::max(last, c.round + 1);
    s.rounds.resize(static_cast<std::size_t>(last));
    for (const auto& c : calls) s.rounds[static_cast<std::size_t>(c.round)].push_back({g.label(c.from), g.label(c.to)});
    for (auto& round : s.rounds) std::sort(round.begin(), round.end());
    return s;
}

// Runs `body` with a Search sized for the graph, or returns false if too big.
template <class Body>
bool with_search(const Graph& g, const SolverConfig& cfg, Clock::time_point deadline, Body&& body) {
    const int n = static_cast<int>(g.vertex_count());
    if (n <= 64) {
        Search<1> s(g, cfg, deadline);
        body(s);
    } else if (n <= 128) {
        Search<2> s(g, cfg, deadline);
        body(s);
    } else if (n <= 256) {
        Search<4> s(g, cfg, deadline);
        body(s);
    } else if (n <= kMaxVertices) {
        Search<8> s(g, cfg, deadline);
        body(s);
    } else {
        return false;
    }
    return true;
}

Clock::time_point deadline_for(const SolverConfig& cfg) {
    return cfg.time_budget.count() > 0 ? Clock::now() + cfg.time_budget : Clock::time_point::max();
}

// Parallel map over indices 0..count-1 with a fixed result slot per index.
template <class F>
void parallel_for(int count, int workers, F&& f) {
    workers = std::max(1, std::min(workers, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_lock);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

int lower_bound(const Graph& g, const VertexLabel& v) {
    require_connected(g);
    return std::max(ceil_log2(static_cast<long long>(g.vertex_count())), eccentricity(g, v));
}

Decision decide_within(const Graph& g, const std::vector<VertexLabel>& origins, int rounds, const SolverConfig& cfg) {
    require_connected(g);
    if (origins.empty()) throw SolverError("solver: no origins");
    std::vector<int> idx;
    for (const auto& o : origins) idx.push_back(g.index_of(o));
    Decision d;
    bool sized = with_search(g, cfg, deadline_for(cfg), [&](auto& search) {
        try {
            bool ok = search.run(idx, rounds);
            d.verdict = ok ? Feasibility::Feasible : Feasibility::Infeasible;
            if (ok) d.witness = to_scheme(g, idx, search.calls());
        } catch (const OutOfBudget&) {
            d.verdict = Feasibility::Unknown;
        }
        d.nodes = search.nodes();
    });
    if (!sized) d.verdict = Feasibility::Unknown;
    return d;
}

SolveResult broadcast_time_from(const Graph& g, const VertexLabel& v, const SolverConfig& cfg) {
    const int lb = lower_bound(g, v);
    const std::vector<int> origin{g.index_of(v)};
    SolveResult res;
    res.proven_lower = res.time = lb;
    with_search(g, cfg, deadline_for(cfg), [&](auto& search) {
        try {
            for (int t = lb;; ++t) {
                if (search.run(origin, t)) {
                    res.status = SolveResult::Status::Exact;
                    res.time = res.proven_lower = t;
                    res.witness = to_scheme(g, origin, search.calls());
                    break;
                }
                res.time = res.proven_lower = t + 1;
            }
        } catch (const OutOfBudget&) {
        }
        res.nodes = search.nodes();
    });
    if (res.exact()) {
        // Never report an exact value whose witness does not replay.
        if (validate_scheme(g, *res.witness) != res.time) throw SolverError("solver: internal witness mismatch");
    }
    return res;
}

std::vector<SolveResult> broadcast_times(const Graph& g, const SolverConfig& cfg) {
    require_connected(g);
    const int n = static_cast<int>(g.vertex_count());
    std::vector<SolveResult> out(static_cast<std::size_t>(n));
    parallel_for(n, cfg.workers, [&](int v) { out[static_cast<std::size_t>(v)] = broadcast_time_from(g, g.label(v), cfg); });
    return out;
}

int broadcast_time(const Graph& g, const SolverConfig& cfg) {
    int best = 0;
    const auto all = broadcast_times(g, cfg);
    for (std::size_t v = 0; v < all.size(); ++v) {
        if (!all[v].exact())
            throw SolverError("solver: budget exhausted at origin " + g.label(static_cast<int>(v)).str() +
                              " (b >= " + std::to_string(all[v].proven_lower) + ")");
        best = std::max(best, all[v].time);
    }
    return best;
}

bool is_broadcast_graph(const Graph& g, const SolverConfig& cfg) {
    require_connected(g);
    const int n = static_cast<int>(g.vertex_count());
    const int target = ceil_log2(n);
    std::vector<Feasibility> verdict(static_cast<std::size_t>(n));
    parallel_for(n, cfg.workers, [&](int v) {
        verdict[static_cast<std::size_t>(v)] = eccentricity(g, g.label(v)) > target
                                                   ? Feasibility::Infeasible
                                                   : decide_within(g, {g.label(v)}, target, cfg).verdict;
    });
    for (auto f : verdict)
        if (f == Feasibility::Infeasible) return false;
    for (int v = 0; v < n; ++v)
        if (verdict[static_cast<std::size_t>(v)] == Feasibility::Unknown)
            throw SolverError("solver: budget exhausted deciding origin " + g.label(v).str());
    return true;
}

BroadcastCenter broadcast_center(const Graph& g, const SolverConfig& cfg) {
    require_connected(g);
    const int n = static_cast<int>(g.vertex_count());
    std::vector<int> lb(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) lb[static_cast<std::size_t>(v)] = lower_bound(g, g.label(v));
    for (int i = ceil_log2(n); i <= n; ++i) {
        std::vector<Feasibility> verdict(static_cast<std::size_t>(n), Feasibility::Infeasible);
        parallel_for(n, cfg.workers, [&](int v) {
            if (lb[static_cast<std::size_t>(v)] <= i)
                verdict[static_cast<std::size_t>(v)] = decide_within(g, {g.label(v)}, i, cfg).verdict;
        });
        BroadcastCenter c;
        c.min_time = i;
        for (int v = 0; v < n; ++v) {
            if (verdict[static_cast<std::size_t>(v)] == Feasibility::Unknown)
                throw SolverError("solver: budget exhausted deciding origin " + g.label(v).str() + " at time " +
                                  std::to_string(i));
            if (verdict[static_cast<std::size_t>(v)] == Feasibility::Feasible) c.members.push_back(g.label(v));
        }
        if (!c.members.empty()) {
            std::sort(c.members.begin(), c.members.end());
            return c;
        }
    }
    throw SolverError("solver: no vertex broadcasts within n rounds");
}

bool bc_size_decision(const Graph& g, int x, const SolverConfig& cfg) {
    return static_cast<int>(broadcast_center(g, cfg).members.size()) == x;
}

}  // namespace bcast
