#include "solver.hpp"

#include <algorithm>

namespace pg {

void RankStructure::update(const Rank &r, const Set &s)
{
    Set old = resolve(r)->second.payload;
    auto it = map_.try_emplace(r).first;
    while (it != map_.begin()) {
        auto p = std::prev(it);
        if (!p->second.payload.same_handle(old)) break;
        p->second.payload = s;
        it = p;
    }
    map_.at(r).payload = s;
}

void check_lower_bound(const std::vector<Rank> &rho, const std::vector<Rank> &oracle, const RankDomain &dom)
{
    for (size_t v = 0; v < rho.size(); v++)
        if (rho[v] > oracle[v])
            throw InvariantViolation("rank of vertex " + std::to_string(v) + " is " + dom.render(rho[v]) +
                                     ", above the least fixed point " + dom.render(oracle[v]));
}

void check_fixpoint(const ParityGame &g, const RankDomain &dom, const std::vector<Rank> &rho)
{
    for (int v = 0; v < g.n; v++) {
        Rank r = dom.lift(best(g, dom, rho, v), g.priority[v]);
        if (r != rho[v])
            throw InvariantViolation("Lift changes vertex " + std::to_string(v) + " from " + dom.render(rho[v]) + " to " +
                                     dom.render(r));
    }
}

Winners winners_from_set(const ParityGame &g, Player z, const std::vector<int> &tracked)
{
    std::vector<char> in(g.n, 0);
    for (int v : tracked) in[v] = 1;
    Winners w;
    for (int v = 0; v < g.n; v++) {
        bool even = (z == Player::Even) == (bool)in[v];
        (even ? w.even : w.odd).push_back(v);
    }
    return w;
}

namespace {

std::vector<Rank> derived_rho(const ParityGame &g, const RankDomain &dom, const RankStructure &D)
{
    std::vector<Rank> rho(g.n, dom.min());
    for (auto &[r, node] : D.nodes())
        for (int v : node.payload.members()) rho[v] = r;
    return rho;
}

void check_boundary(const ParityGame &g, const RankDomain &dom, const RankStructure &D, const SolveOptions &opt)
{
    if (D.size() > (size_t)g.n + 2) {
        std::string m = "more than n + 2 stored ranks:";
        for (auto &[r, node] : D.nodes()) m += " " + dom.render(r) + "[" + std::to_string(node.payload.members().size()) + "]";
        throw InvariantViolation(m);
    }
    const std::vector<int> *prev = nullptr;
    std::vector<std::vector<int>> sets;
    sets.reserve(D.size());
    const Rank *prev_rank = nullptr;
    for (auto &[r, node] : D.nodes()) {
        sets.push_back(node.payload.members());
        auto &cur = sets.back();
        if (prev && !std::includes(prev->begin(), prev->end(), cur.begin(), cur.end()))
            throw InvariantViolation("anti-monotonicity fails between " + dom.render(*prev_rank) + " and " + dom.render(r));
        if (prev && prev_rank != &D.nodes().begin()->first && prev->size() == cur.size())
            throw InvariantViolation("stored ranks " + dom.render(*prev_rank) + " and " + dom.render(r) + " hold the same set");
        prev = &cur;
        prev_rank = &r;
    }
    if (opt.oracle_rho) check_lower_bound(derived_rho(g, dom, D), *opt.oracle_rho, dom);
}

}

SolveResult solve_blackbox(const ParityGame &g, const RankDomain &dom, SetBackend &be, const SolveOptions &opt)
{
    const Player z = dom.tracked();
    const Rank min = dom.min(), top = dom.top();
    SolveResult res;
    res.w_size_estimate = dom.size_estimate();

    RankStructure D;
    D.insert(top).payload = empty_set(be);
    D.update(min, all_of(be));
    D.activate(min);

    auto get = [&](const Rank &r) -> const Set & {
        const Set &s = D.get_set(r);
        if (opt.on_get_set) opt.on_get_set(r, s);
        return s;
    };

    while (auto popped = D.pop_active()) {
        const Rank r = *popped;
        if (opt.assert_invariants) check_boundary(g, dom, D, opt);
        res.iterations++;

        Set P;
        {
            Set S = get(r);
            P = cpre_of(z, S);
        }
        if (opt.trace) opt.trace({res.iterations, r, (int)P.members().size(), D.size()});

        for (int c = 0; c < g.d; c++) {
            Rank rp = dom.lift(r, c);
            Set Sp = get(rp);
            Set PVc = P & priority_set(be, c);
            while (!PVc.subseteq(Sp)) {
                Sp |= PVc;
                bool keep = rp.top;
                if (!keep) {
                    const Set &Sn = get(D.next(rp));
                    keep = Sn.subseteq(Sp) && !Sp.equals(Sn);
                }
                if (keep) {
                    D.update(rp, Sp);
                    D.activate(rp);
                }
                for (;;) {
                    Rank prev = D.previous(rp);
                    Set joined = get(prev);
                    joined |= PVc;
                    if (!Sp.equals(joined) || prev == min) break;
                    D.remove(prev);
                }
                rp = D.previous(rp);
                Sp = get(rp);
            }
        }
        res.max_stored = std::max(res.max_stored, D.size());
    }

    if (opt.assert_invariants) check_boundary(g, dom, D, opt);
    res.rho = derived_rho(g, dom, D);
    if (opt.assert_invariants) check_fixpoint(g, dom, res.rho);
    res.winners = winners_from_set(g, z, D.get_set(top).members());
    res.counters = be.counters();
    return res;
}

}
