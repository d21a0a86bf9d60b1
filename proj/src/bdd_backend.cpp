#include "bdd.hpp"

#include <algorithm>
#include <climits>

namespace pg {

Bdd::Bdd()
{
    nodes_.push_back({INT_MAX, 0, 0});
    nodes_.push_back({INT_MAX, 1, 1});
}

Bdd::Ref Bdd::mk(int var, Ref lo, Ref hi)
{
    if (lo == hi) return lo;
    NodeKey k{var, lo, hi};
    auto it = unique_.find(k);
    if (it != unique_.end()) return it->second;
    Ref r = (Ref)nodes_.size();
    nodes_.push_back({var, lo, hi});
    unique_.emplace(k, r);
    return r;
}

Bdd::Ref Bdd::apply(Op op, Ref a, Ref b)
{
    switch (op) {
    case And:
        if (a == kFalse || b == kFalse) return kFalse;
        if (a == kTrue) return b;
        if (b == kTrue || a == b) return a;
        if (a > b) std::swap(a, b);
        break;
    case Or:
        if (a == kTrue || b == kTrue) return kTrue;
        if (a == kFalse) return b;
        if (b == kFalse || a == b) return a;
        if (a > b) std::swap(a, b);
        break;
    case Diff:
        if (a == kFalse || b == kTrue || a == b) return kFalse;
        if (b == kFalse) return a;
        break;
    default: break;
    }
    CacheKey k{(int)op, a, b};
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    int va = nodes_[a].var, vb = nodes_[b].var;
    int v = std::min(va, vb);
    Ref a0 = va == v ? nodes_[a].lo : a, a1 = va == v ? nodes_[a].hi : a;
    Ref b0 = vb == v ? nodes_[b].lo : b, b1 = vb == v ? nodes_[b].hi : b;
    Ref lo = apply(op, a0, b0);
    Ref hi = apply(op, a1, b1);
    Ref r = mk(v, lo, hi);
    cache_.emplace(k, r);
    return r;
}

Bdd::Ref Bdd::shift(Ref a, int delta)
{
    if (a <= kTrue) return a;
    CacheKey k{(int)Shift + delta * 16, a, 0};
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    Node n = nodes_[a];
    Ref lo = shift(n.lo, delta);
    Ref hi = shift(n.hi, delta);
    Ref r = mk(n.var + delta, lo, hi);
    cache_.emplace(k, r);
    return r;
}

// exists over odd variables of (a and b)
Bdd::Ref Bdd::and_exists_odd(Ref a, Ref b)
{
    if (a == kFalse || b == kFalse) return kFalse;
    if (a == kTrue && b == kTrue) return kTrue;
    if (a > b) std::swap(a, b);
    CacheKey k{(int)RelProd, a, b};
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    int va = nodes_[a].var, vb = nodes_[b].var;
    int v = std::min(va, vb);
    Ref a0 = va == v ? nodes_[a].lo : a, a1 = va == v ? nodes_[a].hi : a;
    Ref b0 = vb == v ? nodes_[b].lo : b, b1 = vb == v ? nodes_[b].hi : b;
    Ref r;
    if (v & 1) {
        Ref lo = and_exists_odd(a0, b0);
        r = lo == kTrue ? kTrue : apply(Or, lo, and_exists_odd(a1, b1));
    } else {
        Ref lo = and_exists_odd(a0, b0);
        Ref hi = and_exists_odd(a1, b1);
        r = mk(v, lo, hi);
    }
    cache_.emplace(k, r);
    return r;
}

bool Bdd::eval(Ref a, const std::vector<bool> &assignment) const
{
    while (a > kTrue) {
        const Node &n = nodes_[a];
        a = assignment[n.var] ? n.hi : n.lo;
    }
    return a == kTrue;
}

double Bdd::sat_count(Ref a, int nvars) const
{
    std::unordered_map<Ref, double> memo;
    auto level = [&](Ref r) { return r <= kTrue ? nvars : nodes_[r].var; };
    auto rec = [&](auto &self, Ref r) -> double {
        if (r == kFalse) return 0;
        if (r == kTrue) return 1;
        auto it = memo.find(r);
        if (it != memo.end()) return it->second;
        const Node &n = nodes_[r];
        double lo = self(self, n.lo) * (double)(1ull << (level(n.lo) - n.var - 1));
        double hi = self(self, n.hi) * (double)(1ull << (level(n.hi) - n.var - 1));
        memo[r] = lo + hi;
        return lo + hi;
    };
    return rec(rec, a) * (double)(1ull << level(a));
}

bool Bdd::ordered_and_reduced() const
{
    std::unordered_map<NodeKey, Ref, NodeKeyHash> seen;
    for (Ref r = 2; r < (Ref)nodes_.size(); r++) {
        const Node &n = nodes_[r];
        if (n.lo == n.hi) return false;
        if (nodes_[n.lo].var <= n.var || nodes_[n.hi].var <= n.var) return false;
        if (!seen.emplace(NodeKey{n.var, n.lo, n.hi}, r).second) return false;
    }
    return true;
}

namespace {

int id_bits(int n)
{
    int b = 0;
    while ((1ll << b) < n) b++;
    return b;
}

class BddBackend final : public SetBackend {
public:
    explicit BddBackend(const ParityGame &g) : SetBackend(g), bits_(id_bits(g.n))
    {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < g.n; v++)
            for (int w : g.succ[v]) edges.emplace_back(v, w);
        rel_ = build_relation(edges);
        init_pinned();
    }

    const char *name() const override { return "bdd"; }

    Bdd &manager() { return bdd_; }
    Bdd::Ref relation() const { return rel_; }
    int bits() const { return bits_; }

protected:
    void p_empty(H out) override { roots_[out] = Bdd::kFalse; }

    void p_from(H out, const std::vector<int> &vs) override
    {
        std::vector<int> ids(vs);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        roots_[out] = build_ids(ids.begin(), ids.end(), 0);
    }

    void p_binary(Op op, H out, H a, H b) override
    {
        Bdd::Op o = op == U ? Bdd::Or : op == I ? Bdd::And : Bdd::Diff;
        roots_[out] = bdd_.apply(o, roots_[a], roots_[b]);
    }

    bool p_subseteq(H a, H b) override { return bdd_.apply(Bdd::Diff, roots_[a], roots_[b]) == Bdd::kFalse; }

    bool p_equals(H a, H b) override { return roots_[a] == roots_[b]; }

    void p_pre(H out, H s) override { roots_[out] = bdd_.and_exists_odd(rel_, bdd_.shift(roots_[s], 1)); }

    bool p_contains(H h, int v) const override
    {
        std::vector<bool> asg(2 * bits_ + 1, false);
        for (int j = 0; j < bits_; j++) asg[2 * j] = (v >> (bits_ - 1 - j)) & 1;
        return bdd_.eval(roots_[h], asg);
    }

    void p_clear(H h) override { roots_[h] = Bdd::kFalse; }

    void p_grow(size_t slots) override { roots_.resize(slots, Bdd::kFalse); }

public:
    Bdd::Ref root(H h) const { return roots_[h]; }

private:
    using It = std::vector<int>::iterator;

    Bdd::Ref build_ids(It b, It e, int j)
    {
        if (b == e) return Bdd::kFalse;
        if (j == bits_) return Bdd::kTrue;
        int shift = bits_ - 1 - j;
        It mid = std::partition_point(b, e, [&](int v) { return !((v >> shift) & 1); });
        return bdd_.mk(2 * j, build_ids(b, mid, j + 1), build_ids(mid, e, j + 1));
    }

    Bdd::Ref build_relation(std::vector<std::pair<int, int>> &edges)
    {
        auto key = [&](const std::pair<int, int> &e) {
            uint64_t k = 0;
            for (int j = 0; j < bits_; j++) {
                k = (k << 1) | ((e.first >> (bits_ - 1 - j)) & 1);
                k = (k << 1) | ((e.second >> (bits_ - 1 - j)) & 1);
            }
            return k;
        };
        std::vector<uint64_t> keys;
        for (auto &e : edges) keys.push_back(key(e));
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        return build_keys(keys.begin(), keys.end(), 0);
    }

    Bdd::Ref build_keys(std::vector<uint64_t>::iterator b, std::vector<uint64_t>::iterator e, int t)
    {
        if (b == e) return Bdd::kFalse;
        int total = 2 * bits_;
        if (t == total) return Bdd::kTrue;
        int shift = total - 1 - t;
        auto mid = std::partition_point(b, e, [&](uint64_t k) { return !((k >> shift) & 1); });
        return bdd_.mk(t, build_keys(b, mid, t + 1), build_keys(mid, e, t + 1));
    }

    int bits_;
    Bdd bdd_;
    Bdd::Ref rel_ = Bdd::kFalse;
    std::vector<Bdd::Ref> roots_;
};

}

std::unique_ptr<SetBackend> make_bdd_backend(const ParityGame &g) { return std::make_unique<BddBackend>(g); }

BddInspect inspect_bdd(SetBackend &b)
{
    auto *bb = dynamic_cast<BddBackend *>(&b);
    if (!bb) return {};
    BddInspect out;
    out.manager = &bb->manager();
    out.relation = bb->relation();
    out.bits = bb->bits();
    out.root = [bb](SetBackend::H h) { return bb->root(h); };
    return out;
}

}
