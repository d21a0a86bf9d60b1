#include "oracle.hpp"

#include <deque>
#include <stdexcept>

namespace pg {

std::vector<char> attractor(const ParityGame &g, Player z, const std::vector<char> &target, const std::vector<char> &sub)
{
    auto pred = g.predecessors();
    std::vector<char> in(target);
    std::vector<int> count(g.n, 0);
    for (int v = 0; v < g.n; v++)
        if (sub[v])
            for (int w : g.succ[v])
                if (sub[w]) count[v]++;
    std::deque<int> q;
    for (int v = 0; v < g.n; v++)
        if (in[v]) q.push_back(v);
    while (!q.empty()) {
        int w = q.front();
        q.pop_front();
        for (int v : pred[w]) {
            if (!sub[v] || in[v]) continue;
            if (g.owner[v] == z || --count[v] == 0) {
                in[v] = 1;
                q.push_back(v);
            }
        }
    }
    return in;
}

std::vector<char> attractor(const ParityGame &g, Player z, const std::vector<char> &target)
{
    return attractor(g, z, target, std::vector<char>(g.n, 1));
}

namespace {

void zielonka_rec(const ParityGame &g, std::vector<char> sub, std::vector<char> &we, std::vector<char> &wo)
{
    int top = -1;
    for (int v = 0; v < g.n; v++)
        if (sub[v]) top = std::max(top, g.priority[v]);
    if (top < 0) return;
    Player z = top % 2 == 0 ? Player::Even : Player::Odd;
    std::vector<char> target(g.n, 0);
    for (int v = 0; v < g.n; v++)
        if (sub[v] && g.priority[v] == top) target[v] = 1;
    auto a = attractor(g, z, target, sub);
    std::vector<char> rest(g.n, 0);
    for (int v = 0; v < g.n; v++) rest[v] = sub[v] && !a[v];
    std::vector<char> e1(g.n, 0), o1(g.n, 0);
    zielonka_rec(g, rest, e1, o1);
    auto &opp_win = z == Player::Even ? o1 : e1;
    bool none = true;
    for (int v = 0; v < g.n; v++)
        if (opp_win[v]) none = false;
    if (none) {
        auto &mine = z == Player::Even ? we : wo;
        for (int v = 0; v < g.n; v++)
            if (sub[v]) mine[v] = 1;
        return;
    }
    auto b = attractor(g, opponent(z), opp_win, sub);
    std::vector<char> rest2(g.n, 0);
    for (int v = 0; v < g.n; v++) rest2[v] = sub[v] && !b[v];
    zielonka_rec(g, rest2, we, wo);
    auto &theirs = z == Player::Even ? wo : we;
    for (int v = 0; v < g.n; v++)
        if (b[v]) theirs[v] = 1;
}

}

Winners zielonka(const ParityGame &g)
{
    std::vector<char> we(g.n, 0), wo(g.n, 0);
    zielonka_rec(g, std::vector<char>(g.n, 1), we, wo);
    Winners w;
    for (int v = 0; v < g.n; v++) (we[v] ? w.even : w.odd).push_back(v);
    return w;
}

Rank best(const ParityGame &g, const RankDomain &dom, const std::vector<Rank> &f, int v)
{
    bool take_max = g.owner[v] == dom.tracked();
    const Rank *b = nullptr;
    for (int w : g.succ[v])
        if (!b || (take_max ? f[w] > *b : f[w] < *b)) b = &f[w];
    return *b;
}

std::vector<Rank> naive_fixpoint(const ParityGame &g, const RankDomain &dom, NaiveGuard guard)
{
    if (g.n > guard.max_vertices || dom.size_estimate() > guard.max_domain)
        throw std::length_error("naive fixpoint guard exceeded");
    std::vector<Rank> f(g.n, dom.min());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n; v++) {
            Rank r = dom.lift(best(g, dom, f, v), g.priority[v]);
            if (r != f[v]) {
                if (r < f[v]) throw std::logic_error("naive fixpoint decreased a rank");
                f[v] = std::move(r);
                changed = true;
            }
        }
    }
    return f;
}

Winners winners_from_top(const ParityGame &g, const RankDomain &dom, const std::vector<Rank> &f)
{
    Winners w;
    for (int v = 0; v < g.n; v++) {
        bool tracked_wins = f[v].top;
        bool even = dom.tracked() == Player::Even ? tracked_wins : !tracked_wins;
        (even ? w.even : w.odd).push_back(v);
    }
    return w;
}

}
