#pragma once

#include <functional>
#include <list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rank.hpp"
#include "symset.hpp"

namespace pg {

class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TraceRecord {
    uint64_t iteration;
    Rank rank;
    int p_size;
    size_t stored;
};

struct SolveOptions {
    bool assert_invariants = false;
    // least fixed point from the naive oracle; enables the lower-bound check
    const std::vector<Rank> *oracle_rho = nullptr;
    std::function<void(const TraceRecord &)> trace;
    // called at every algorithm-level getSet with the queried rank and result
    std::function<void(const Rank &, const Set &)> on_get_set;
};

struct SolveResult {
    Winners winners;
    OpCounters counters;
    double w_size_estimate = 0;
    uint64_t iterations = 0;
    std::vector<Rank> rho;
    size_t max_stored = 0;
};

// Ordered rank map with a FIFO active list; Payload is the per-rank data.
template <class Payload> class RankIndex {
public:
    struct Node {
        Payload payload{};
        bool active = false;
        std::list<Rank>::iterator pos;
    };

    bool stored(const Rank &r) const { return map_.count(r) > 0; }
    size_t size() const { return map_.size(); }
    const std::map<Rank, Node> &nodes() const { return map_; }

    std::optional<Rank> pop_active()
    {
        if (active_.empty()) return std::nullopt;
        Rank r = active_.front();
        active_.pop_front();
        map_.at(r).active = false;
        return r;
    }

    void activate(const Rank &r)
    {
        auto &n = map_.at(r);
        if (n.active) return;
        n.active = true;
        n.pos = active_.insert(active_.end(), r);
    }

    void remove(const Rank &r)
    {
        auto it = map_.find(r);
        if (it == map_.end()) throw std::logic_error("removeSet on a rank that is not stored");
        if (it->second.active) active_.erase(it->second.pos);
        map_.erase(it);
    }

    Node &insert(const Rank &r) { return map_[r]; }

    // smallest stored rank at or above r
    typename std::map<Rank, Node>::const_iterator resolve(const Rank &r) const
    {
        auto it = map_.lower_bound(r);
        if (it == map_.end()) throw std::logic_error("rank above every stored rank");
        return it;
    }
    typename std::map<Rank, Node>::iterator resolve(const Rank &r)
    {
        auto it = map_.lower_bound(r);
        if (it == map_.end()) throw std::logic_error("rank above every stored rank");
        return it;
    }

    Rank next(const Rank &r) const
    {
        auto it = map_.upper_bound(r);
        if (it == map_.end()) throw std::logic_error("getNext above the top rank");
        return it->first;
    }

    Rank previous(const Rank &r) const
    {
        auto it = map_.lower_bound(r);
        if (it == map_.begin()) throw InvariantViolation("getPrevious invoked on the minimum rank");
        return std::prev(it)->first;
    }

    size_t active_count() const { return active_.size(); }

protected:
    std::map<Rank, Node> map_;
    std::list<Rank> active_;
};

// stored ranks own their sets S_{>=r}
class RankStructure : public RankIndex<Set> {
public:
    const Set &get_set(const Rank &r) const { return resolve(r)->second.payload; }
    void update(const Rank &r, const Set &s);
};

SolveResult solve_blackbox(const ParityGame &g, const RankDomain &dom, SetBackend &be, const SolveOptions &opt = {});

// shared checks on an explicit ranking
void check_lower_bound(const std::vector<Rank> &rho, const std::vector<Rank> &oracle, const RankDomain &dom);
void check_fixpoint(const ParityGame &g, const RankDomain &dom, const std::vector<Rank> &rho);
Winners winners_from_set(const ParityGame &g, Player z, const std::vector<int> &tracked);

}
