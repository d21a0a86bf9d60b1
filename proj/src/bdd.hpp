#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "symset.hpp"

namespace pg {

// Hash-consed ROBDD manager with an unbounded apply cache.
class Bdd {
public:
    using Ref = int32_t;
    static constexpr Ref kFalse = 0;
    static constexpr Ref kTrue = 1;
    enum Op { And, Or, Diff, Shift, RelProd };

    struct Node {
        int var;
        Ref lo, hi;
    };

    Bdd();

    Ref mk(int var, Ref lo, Ref hi);
    Ref apply(Op op, Ref a, Ref b);
    // renames every variable v to v + delta; delta must keep the order
    Ref shift(Ref a, int delta);
    Ref and_exists_odd(Ref a, Ref b);

    bool eval(Ref a, const std::vector<bool> &assignment) const;
    double sat_count(Ref a, int nvars) const;
    bool ordered_and_reduced() const;
    size_t node_count() const { return nodes_.size(); }
    const Node &node(Ref r) const { return nodes_[r]; }

private:
    struct NodeKey {
        int var;
        Ref lo, hi;
        bool operator==(const NodeKey &) const = default;
    };
    struct NodeKeyHash {
        size_t operator()(const NodeKey &k) const
        {
            uint64_t h = (uint64_t)(uint32_t)k.var * 0x9E3779B97F4A7C15ull;
            h ^= ((uint64_t)(uint32_t)k.lo << 32 | (uint32_t)k.hi) + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
            return (size_t)h;
        }
    };
    using CacheKey = NodeKey;

    std::vector<Node> nodes_;
    std::unordered_map<NodeKey, Ref, NodeKeyHash> unique_;
    std::unordered_map<CacheKey, Ref, NodeKeyHash> cache_;
};

struct BddInspect {
    Bdd *manager = nullptr;
    Bdd::Ref relation = Bdd::kFalse;
    int bits = 0;
    std::function<Bdd::Ref(SetBackend::H)> root;
};

// empty result when b is not a BDD backend
BddInspect inspect_bdd(SetBackend &b);

}
