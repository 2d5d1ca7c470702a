#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "phylogf/gf.hpp"

namespace phylogf {

enum class Role : unsigned char { root, tree, retic, leaf };

// A small labeled directed graph with degree roles.  Vertex i carries label
// i+1; `children[i]` lists its out-neighbors.  Valid networks have one root
// (in 0 / out 2), tree vertices (in 1 / out 2), reticulations (in 2 / out 1)
// and leaves (in 1 / out 0), are acyclic and reachable from the root.
struct NetworkGraph {
    int n = 0;
    std::vector<std::vector<int>> children;
    std::vector<Role> role;
};

// true iff the root and every tree vertex have at least one
// non-reticulation child, and no reticulation's child is a reticulation
bool is_tree_child(const NetworkGraph& g);

// true iff tree-child and no edge (u,v) coexists with a u->v path of
// length >= 2
bool is_normal(const NetworkGraph& g);

struct OracleOptions {
    // refuse n above this; n >= 11 additionally warns about runtime
    int cap = 9;
    // count one canonical role assignment and multiply by its orbit size
    // instead of enumerating every assignment of roles to labels
    bool symmetric = false;
    // permit a reticulation to take the same parent twice; only honored for
    // klass all (the tree-child condition excludes parallel edges anyway)
    bool allow_double_edges = false;
    // optional callback invoked on every enumerated network (only the
    // canonical role assignment is seen when `symmetric` is set)
    std::function<void(const NetworkGraph&)> emit;
};

// Exhaustive count of vertex-labeled networks on {1..n} with k reticulations
// satisfying the class predicate.  Independent of the series machinery: roles
// are assigned to labels, then parent sets are backtracked in label order
// with incremental acyclicity and class pruning.  Even n returns 0; the
// single-vertex network counts as 1 for k=0.
mpz_class enumerate_count(int n, int k, Klass klass, const OracleOptions& opts = {});

}  // namespace phylogf
