#include "compact.hpp"

#include <algorithm>

namespace pg {

CoordinateStore::CoordinateStore(SetBackend &be, const OpmDomain &dom) : be_(be), dom_(dom), k_(dom.k())
{
    std::vector<int> all(be.game().n);
    for (int v = 0; v < be.game().n; v++) all[v] = v;
    int symbols = dom.d() + 1;
    c_.resize(k_);
    for (int i = 0; i < k_; i++) {
        c_[i].emplace_back(&be, be.from_vertices(all));
        for (int x = 1; x < symbols; x++) c_[i].push_back(empty_set(be));
    }
    top_ = empty_set(be);
}

Set CoordinateStore::get_set(const Rank &r)
{
    if (r.top) return top_;
    if (r == dom_.min()) return all_of(be_);
    Set acc = top_;
    Set T;
    for (int i = 0; i < k_; i++) {
        int b = r.c[i];
        Set U;
        for (int x = b + 1; x < (int)c_[i].size(); x++) {
            if (!U)
                U = c_[i][x];
            else
                U |= c_[i][x];
        }
        if (U) {
            if (T) U &= T;
            acc |= U;
        }
        if (!T)
            T = c_[i][b];
        else
            T &= c_[i][b];
    }
    acc |= T;
    return acc;
}

void CoordinateStore::update(const Rank &r, const Set &s) { raise(r, s); }

void CoordinateStore::raise(const Rank &r, const Set &x)
{
    Set delta;
    {
        Set cur = get_set(r);
        delta = x - cur;
    }
    // delta never meets C_top, so inclusion in it means delta is empty
    if (delta.subseteq(top_)) return;
    for (int i = 0; i < k_; i++) {
        for (int x = 0; x < (int)c_[i].size(); x++)
            if (r.top || x != r.c[i]) c_[i][x] -= delta;
        if (!r.top) c_[i][r.c[i]] |= delta;
    }
    if (r.top) top_ |= delta;
}

void CoordinateStore::load(const std::vector<Rank> &rho)
{
    int n = be_.game().n;
    for (int i = 0; i < k_; i++)
        for (int x = 0; x < (int)c_[i].size(); x++) {
            std::vector<int> vs;
            for (int v = 0; v < n; v++)
                if (!rho[v].top && rho[v].c[i] == x) vs.push_back(v);
            c_[i][x] = Set(&be_, be_.from_vertices(vs));
        }
    std::vector<int> vs;
    for (int v = 0; v < n; v++)
        if (rho[v].top) vs.push_back(v);
    top_ = Set(&be_, be_.from_vertices(vs));
}

std::vector<Rank> CoordinateStore::decode() const
{
    int n = be_.game().n;
    std::vector<Rank> rho(n, dom_.min());
    for (int v : top_.members()) rho[v] = Rank::make_top();
    for (int i = 0; i < k_; i++)
        for (int x = 0; x < (int)c_[i].size(); x++)
            for (int v : c_[i][x].members())
                if (!rho[v].top) rho[v].c[i] = (uint16_t)x;
    return rho;
}

bool CoordinateStore::partition_holds() const
{
    int n = be_.game().n;
    std::vector<int> base(n, 0);
    for (int v : top_.members()) base[v]++;
    for (int i = 0; i < k_; i++) {
        auto count = base;
        for (auto &s : c_[i])
            for (int v : s.members()) count[v]++;
        for (int v = 0; v < n; v++)
            if (count[v] != 1) return false;
    }
    return true;
}

std::string CoordinateStore::dump() const
{
    std::string out;
    auto &chain = dom_.coordinate_alphabets()[0];
    for (int i = 0; i < k_; i++)
        for (int x = 0; x < (int)c_[i].size(); x++) {
            auto m = c_[i][x].members();
            if (m.empty()) continue;
            out += std::to_string(i + 1) + " " + chain[x] + ":";
            for (int v : m) out += " " + std::to_string(v);
            out += "\n";
        }
    out += "TOP:";
    for (int v : top_.members()) out += " " + std::to_string(v);
    return out + "\n";
}

namespace {

void check_compact(const OpmDomain &dom, const CoordinateStore &store, const SolveOptions &opt)
{
    if (!store.partition_holds()) throw InvariantViolation("coordinate sets no longer partition V");
    if (opt.oracle_rho) check_lower_bound(store.decode(), *opt.oracle_rho, dom);
}

}

SolveResult solve_compact(const ParityGame &g, const OpmDomain &dom, SetBackend &be, const SolveOptions &opt)
{
    const Player z = dom.tracked();
    SolveResult res;
    res.w_size_estimate = dom.size_estimate();

    CoordinateStore store(be, dom);
    const Rank min = dom.min();
    RankIndex<char> D;
    D.insert(min);
    D.insert(dom.top());
    D.activate(min);

    auto get = [&](const Rank &r) {
        Set s = store.get_set(r);
        if (opt.on_get_set) opt.on_get_set(r, s);
        return s;
    };

    while (auto popped = D.pop_active()) {
        const Rank r = *popped;
        if (opt.assert_invariants) check_compact(dom, store, opt);
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
            const Rank rold = rp;
            while (!PVc.subseteq(Sp)) {
                Sp |= PVc;
                bool keep = rp.top;
                if (!keep) {
                    Set Sn = get(D.next(rp));
                    keep = Sn.subseteq(Sp) && !Sp.equals(Sn);
                }
                if (keep) {
                    D.insert(rp);
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
            Sp = Set();
            // same S_delta as update(rold, S_rold): the coordinate sets are untouched inside the loop
            store.raise(rold, PVc);
        }
        res.max_stored = std::max(res.max_stored, D.size());
    }

    res.rho = store.decode();
    if (opt.assert_invariants) {
        check_compact(dom, store, opt);
        check_fixpoint(g, dom, res.rho);
    }
    res.winners = winners_from_set(g, z, store.top_set().members());
    res.counters = be.counters();
    return res;
}

}
