#include "phylogf/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace phylogf {

// ---- standalone predicates

bool is_tree_child(const NetworkGraph& g) {
    for (int u = 0; u < g.n; ++u) {
        if (g.role[u] == Role::leaf) continue;
        if (g.role[u] == Role::retic) {
            for (int w : g.children[u])
                if (g.role[w] == Role::retic) return false;
            continue;
        }
        bool has_non_retic = false;
        for (int w : g.children[u])
            if (g.role[w] != Role::retic) has_non_retic = true;
        if (!has_non_retic) return false;
    }
    return true;
}

// descendant bitmasks by depth-first memoization
static std::uint32_t desc_mask(const NetworkGraph& g, int u, std::vector<std::uint32_t>& memo,
                               std::vector<char>& done) {
    if (done[u]) return memo[u];
    std::uint32_t m = 0;
    for (int w : g.children[u]) m |= (1u << w) | desc_mask(g, w, memo, done);
    done[u] = 1;
    memo[u] = m;
    return m;
}

bool is_normal(const NetworkGraph& g) {
    if (!is_tree_child(g)) return false;
    std::vector<std::uint32_t> memo(g.n, 0);
    std::vector<char> done(g.n, 0);
    // edge (u,v) is a shortcut iff v is reachable through a sibling subtree
    for (int u = 0; u < g.n; ++u)
        for (int v : g.children[u])
            for (int w : g.children[u]) {
                if (w == v) continue;
                std::uint32_t below = (1u << w) | desc_mask(g, w, memo, done);
                if (below & (1u << v)) return false;
            }
    return true;
}

// ---- backtracking enumeration over one fixed role assignment

namespace {

constexpr int kMaxN = 30;  // bitmask width guard; practical n is far smaller

struct Snapshot {
    std::array<std::uint32_t, kMaxN> anc, desc, ch;
    std::array<std::int8_t, kMaxN> cap;
};

struct MapSearch {
    int n = 0;
    Klass klass = Klass::all;
    bool allow_double = false;
    int root = 0;
    std::array<Role, kMaxN> role{};
    std::uint32_t retic_mask = 0;
    std::array<std::int8_t, kMaxN> cap{};   // remaining out-degree
    std::array<std::uint32_t, kMaxN> anc{};  // proper ancestors
    std::array<std::uint32_t, kMaxN> desc{};  // proper descendants
    std::array<std::uint32_t, kMaxN> ch{};   // children (as a set)
    std::vector<int> order;                  // non-root vertices, label order
    std::vector<Snapshot> snap;
    const std::function<void(const NetworkGraph&)>* emit = nullptr;
    std::vector<std::array<int, 2>> parent;  // chosen parents, for emit only
    std::uint64_t found = 0;

    void save(int depth) {
        Snapshot& s = snap[depth];
        s.anc = anc;
        s.desc = desc;
        s.ch = ch;
        s.cap = cap;
    }
    void restore(int depth) {
        const Snapshot& s = snap[depth];
        anc = s.anc;
        desc = s.desc;
        ch = s.ch;
        cap = s.cap;
    }

    // try edge u -> v; returns false (leaving state half-updated, the caller
    // restores from its snapshot) when the edge closes a cycle, duplicates
    // an existing edge impermissibly, or violates the class incrementally
    bool add_edge(int u, int v) {
        const std::uint32_t bu = 1u << u, bv = 1u << v;
        if (u == v || (anc[u] & bv)) return false;  // self-loop or cycle
        const bool tc = (klass != Klass::all);
        if (ch[u] & bv) {
            // parallel edge
            if (tc || !allow_double) return false;
        } else if (klass == Klass::normal) {
            // the new edge must not duplicate an existing path, and the new
            // path segment must not turn any existing edge into a shortcut
            if (desc[u] & bv) return false;
            std::uint32_t above = anc[u] | bu;
            std::uint32_t below = desc[v] | bv;
            for (std::uint32_t m = above; m;) {
                int a = __builtin_ctz(m);
                m &= m - 1;
                if (ch[a] & below) return false;
            }
        }
        if (tc && role[u] == Role::retic && role[v] == Role::retic) return false;
        // propagate reachability to both cones
        const std::uint32_t above = anc[u] | bu;
        const std::uint32_t below = desc[v] | bv;
        for (std::uint32_t m = below; m;) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            anc[w] |= above;
        }
        for (std::uint32_t m = above; m;) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            desc[w] |= below;
        }
        ch[u] |= bv;
        if (--cap[u] == 0 && tc && role[u] != Role::retic) {
            // out-degree exhausted: a non-reticulation child must be present
            if ((ch[u] & ~retic_mask) == 0) return false;
        }
        return true;
    }

    void emit_current() {
        NetworkGraph g;
        g.n = n;
        g.children.assign(n, {});
        g.role.assign(n, Role::leaf);
        for (int v = 0; v < n; ++v) g.role[v] = role[v];
        for (int v : order) {
            g.children[parent[v][0]].push_back(v);
            if (parent[v][1] >= 0) g.children[parent[v][1]].push_back(v);
        }
        (*emit)(g);
    }

    void rec(std::size_t i) {
        if (i == order.size()) {
            // degree bookkeeping guarantees all capacities are consumed;
            // connectivity is the one remaining global condition
            if ((desc[root] | (1u << root)) == (1u << n) - 1) {
                ++found;
                if (emit) emit_current();
            }
            return;
        }
        const int v = order[i];
        const int need = role[v] == Role::retic ? 2 : 1;
        save(int(i));
        if (need == 1) {
            for (int u = 0; u < n; ++u) {
                if (cap[u] <= 0 || u == v) continue;
                if (add_edge(u, v)) {
                    if (emit) parent[v] = {u, -1};
                    rec(i + 1);
                }
                restore(int(i));
            }
            return;
        }
        for (int u1 = 0; u1 < n; ++u1) {
            if (cap[u1] <= 0 || u1 == v) continue;
            for (int u2 = u1; u2 < n; ++u2) {
                if (u2 == v) continue;
                if (u2 == u1) {
                    if (!allow_double || klass != Klass::all || cap[u1] < 2) continue;
                } else if (cap[u2] <= 0) {
                    continue;
                }
                if (add_edge(u1, v) && add_edge(u2, v)) {
                    if (emit) parent[v] = {u1, u2};
                    rec(i + 1);
                }
                restore(int(i));
            }
        }
    }
};

struct RoleMap {
    int root;
    std::uint32_t retics;
    std::uint32_t trees;
};

std::uint64_t count_one_map(int n, Klass klass, const RoleMap& rm, bool allow_double,
                            const std::function<void(const NetworkGraph&)>* emit) {
    MapSearch s;
    s.n = n;
    s.klass = klass;
    s.allow_double = allow_double;
    s.root = rm.root;
    s.retic_mask = rm.retics;
    for (int v = 0; v < n; ++v) {
        if (v == rm.root) {
            s.role[v] = Role::root;
            s.cap[v] = 2;
        } else if (rm.retics & (1u << v)) {
            s.role[v] = Role::retic;
            s.cap[v] = 1;
        } else if (rm.trees & (1u << v)) {
            s.role[v] = Role::tree;
            s.cap[v] = 2;
        } else {
            s.role[v] = Role::leaf;
            s.cap[v] = 0;
        }
        if (v != rm.root) s.order.push_back(v);
    }
    s.snap.resize(s.order.size() + 1);
    if (emit && *emit) {
        s.emit = emit;
        s.parent.assign(n, {-1, -1});
    }
    s.rec(0);
    return s.found;
}

// all ways to pick `count` set bits out of `pool`, ascending
void subsets_of(std::uint32_t pool, int count, std::uint32_t cur, std::vector<std::uint32_t>& out) {
    if (count == 0) {
        out.push_back(cur);
        return;
    }
    while (pool) {
        std::uint32_t low = pool & -pool;
        pool &= pool - 1;
        if (__builtin_popcount(pool) + 1 >= count)
            subsets_of(pool, count - 1, cur | low, out);
    }
}

}  // namespace

mpz_class enumerate_count(int n, int k, Klass klass, const OracleOptions& opts) {
    if (n < 1 || k < 0) throw std::invalid_argument("need n >= 1 and k >= 0");
    if (n == 1) return (k == 0) ? 1 : 0;
    if (n % 2 == 0) return 0;
    const int t = (n - 3) / 2;
    const int l = (n + 1) / 2 - k;
    if (l < 1 || t < 0) return 0;
    if (n > opts.cap) throw std::invalid_argument("n exceeds the enumeration cap");
    if (n > kMaxN) throw std::invalid_argument("n exceeds the bitmask width");
    if (n >= 11)
        std::fprintf(stderr, "enumerate_count: n=%d is large; expect a long run\n", n);
    const bool allow_double = opts.allow_double_edges && klass == Klass::all;

    if (opts.symmetric) {
        // one canonical assignment, times the number of ways to hand out roles
        RoleMap rm;
        rm.root = 0;
        rm.retics = ((1u << k) - 1) << 1;
        rm.trees = ((1u << t) - 1) << (1 + k);
        std::uint64_t one = count_one_map(n, klass, rm, allow_double, &opts.emit);
        mpz_class ways_r, ways_t;
        mpz_bin_uiui(ways_r.get_mpz_t(), static_cast<unsigned long>(n - 1),
                     static_cast<unsigned long>(k));
        mpz_bin_uiui(ways_t.get_mpz_t(), static_cast<unsigned long>(n - 1 - k),
                     static_cast<unsigned long>(t));
        return mpz_class(one) * n * ways_r * ways_t;
    }

    // explicit sweep over every role assignment
    std::vector<RoleMap> maps;
    const std::uint32_t all_mask = (1u << n) - 1;
    for (int root = 0; root < n; ++root) {
        std::vector<std::uint32_t> retic_sets;
        subsets_of(all_mask & ~(1u << root), k, 0, retic_sets);
        for (std::uint32_t rs : retic_sets) {
            std::vector<std::uint32_t> tree_sets;
            subsets_of(all_mask & ~(1u << root) & ~rs, t, 0, tree_sets);
            for (std::uint32_t ts : tree_sets) maps.push_back({root, rs, ts});
        }
    }
    std::vector<std::uint64_t> per_map(maps.size(), 0);
    if (opts.emit) {
        // callbacks see networks in a deterministic order
        for (std::size_t i = 0; i < maps.size(); ++i)
            per_map[i] = count_one_map(n, klass, maps[i], allow_double, &opts.emit);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < long(maps.size()); ++i)
            per_map[i] = count_one_map(n, klass, maps[i], allow_double, &opts.emit);
    }
    mpz_class total = 0;
    for (std::uint64_t c : per_map) total += mpz_class(static_cast<unsigned long>(c));
    return total;
}

}  // namespace phylogf
