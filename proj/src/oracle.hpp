#pragma once

#include <vector>

#include "game.hpp"
#include "rank.hpp"

namespace pg {

struct Winners {
    std::vector<int> even;
    std::vector<int> odd;
    bool operator==(const Winners &) const = default;
};

// membership flags over 0..n-1
std::vector<char> attractor(const ParityGame &g, Player z, const std::vector<char> &target, const std::vector<char> &sub);
std::vector<char> attractor(const ParityGame &g, Player z, const std::vector<char> &target);

Winners zielonka(const ParityGame &g);

struct NaiveGuard {
    int max_vertices = 8;
    double max_domain = 1e6;
};

Rank best(const ParityGame &g, const RankDomain &dom, const std::vector<Rank> &f, int v);

// least simultaneous fixed point of all Lift operators, round robin in id order
std::vector<Rank> naive_fixpoint(const ParityGame &g, const RankDomain &dom, NaiveGuard guard = {});

Winners winners_from_top(const ParityGame &g, const RankDomain &dom, const std::vector<Rank> &f);

}
