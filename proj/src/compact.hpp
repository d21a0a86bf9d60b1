#pragma once

#include "solver.hpp"

namespace pg {

// C_x^i for every position i and symbol x, plus C_top.
class CoordinateStore {
public:
    CoordinateStore(SetBackend &be, const OpmDomain &dom);

    Set get_set(const Rank &r);
    // S must contain the current S_{>=r}
    void update(const Rank &r, const Set &s);
    // update(r, S_{>=r} | x) without building the union
    void raise(const Rank &r, const Set &x);

    // replaces the whole family with the encoding of an explicit ranking
    void load(const std::vector<Rank> &rho);

    const Set &coordinate(int i, int ord) const { return c_[i][ord]; }
    const Set &top_set() const { return top_; }
    int set_count() const { return k_ * (int)c_[0].size() + 1; }

    // per vertex: the rank read back from the coordinate sets (uncounted)
    std::vector<Rank> decode() const;
    // per position, every vertex appears in exactly one C_x^i or in C_top
    bool partition_holds() const;
    // rows "i x: v v v" listing each nonempty C_x^i, then "TOP: ..."
    std::string dump() const;

private:
    SetBackend &be_;
    const OpmDomain &dom_;
    int k_;
    std::vector<std::vector<Set>> c_;
    Set top_;
};

SolveResult solve_compact(const ParityGame &g, const OpmDomain &dom, SetBackend &be, const SolveOptions &opt = {});

}
