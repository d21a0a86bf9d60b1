#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "game.hpp"

namespace testing {

inline std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::filesystem::path> fixtures(const std::string &sub)
{
    std::vector<std::filesystem::path> out;
    for (auto &e : std::filesystem::directory_iterator(std::filesystem::path(FIXTURE_DIR) / sub))
        if (e.path().extension() == ".gm") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

// vertex ids listed on the "even:" and "odd:" lines
inline std::pair<std::vector<int>, std::vector<int>> parse_winners(const std::string &text)
{
    std::pair<std::vector<int>, std::vector<int>> w;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        auto &dst = tag == "even:" ? w.first : w.second;
        int v;
        while (ls >> v) dst.push_back(v);
    }
    return w;
}

inline pg::ParityGame sample_game(uint64_t seed, int max_n = 8, int max_d = 6)
{
    pg::Rng r(seed * 2654435761u + 17);
    int n = 1 + (int)r.below(max_n);
    int d = 1 + (int)r.below(max_d);
    const double probs[] = {0.2, 0.5, 0.9};
    return pg::random_game(n, d, probs[r.below(3)], seed);
}

}
