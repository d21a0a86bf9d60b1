// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "compact.hpp"
#include "game.hpp"
#include "oracle.hpp"
#include "rank.hpp"
#include "solver.hpp"
#include "symset.hpp"

using namespace pg;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::string first_failure;

    void fail(const std::string &why)
    {
        if (ok) first_failure = why;
        ok = false;
    }
};

int failures = 0;

void report(int id, const char *name, const Outcome &o, double secs)
{
    std::printf("%s %d %s: %s (%.1fs)", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
    if (!o.ok) std::printf(" first failure: %s", o.first_failure.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!o.ok) failures++;
}

void run(int id, const char *name, const std::function<Outcome()> &f)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = f();
    } catch (const std::exception &e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, name, o, secs);
}

const double kProbs[] = {0.2, 0.5, 0.9};

ParityGame game_for(uint64_t i, int max_n, int max_d)
{
    Rng r(i * 0x9E3779B97F4A7C15ull + 1);
    int n = 1 + (int)r.below(max_n);
    int d = 1 + (int)r.below(max_d);
    return random_game(n, d, kProbs[i % 3], i);
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tag(uint64_t seed, const ParityGame &g) { return "seed " + std::to_string(seed) + " n=" + std::to_string(g.n) + " d=" + std::to_string(g.d); }

int ceil_log2(int n)
{
    int k = 0;
    while ((1 << k) < n) k++;
    return k;
}

Outcome oracle_equivalence()
{
    Outcome o;
    const int games = 10000;
    for (uint64_t s = 0; s < games; s++) {
        ParityGame g = game_for(s, 8, 6);
        Winners z = zielonka(g);
        std::vector<std::pair<const char *, Winners>> got;
        for (const char *dn : {"spm", "opm"}) {
            auto dom = make_domain(dn, g);
            got.emplace_back(dn, winners_from_top(g, *dom, naive_fixpoint(g, *dom)));
            auto be = make_backend("bitset", g);
            got.emplace_back(dn, solve_blackbox(g, *dom, *be).winners);
        }
        OpmDomain opm = OpmDomain::for_game(g);
        auto be = make_backend("bitset", g);
        got.emplace_back("compact", solve_compact(g, opm, *be).winners);
        for (auto &[who, w] : got) {
            if (w != z) o.fail(std::string(who) + " disagrees with zielonka on " + tag(s, g));
            if (w.even.size() + w.odd.size() != (size_t)g.n) o.fail("partition incomplete on " + tag(s, g));
        }
    }
    o.detail = std::to_string(games) + " games, 6 solvers each";
    return o;
}

Outcome invariant_suite()
{
    Outcome o;
    const int games = 1000;
    int runs = 0;
    for (uint64_t s = 0; s < games; s++) {
        ParityGame g = game_for(s + 100000, 6, 6);
        for (const char *dn : {"spm", "opm"}) {
            auto dom = make_domain(dn, g);
            auto oracle = naive_fixpoint(g, *dom);
            SolveOptions opt;
            opt.assert_invariants = true;
            opt.oracle_rho = &oracle;
            try {
                auto be = make_backend("bitset", g);
                SolveResult r = solve_blackbox(g, *dom, *be, opt);
                runs++;
                if (r.rho != oracle) o.fail(std::string("blackbox ") + dn + " final ranking is not the least fixed point on " + tag(s, g));
                if (dn == std::string("opm")) {
                    auto be2 = make_backend("bitset", g);
                    SolveResult c = solve_compact(g, static_cast<const OpmDomain &>(*dom), *be2, opt);
                    runs++;
                    if (c.rho != oracle) o.fail("compact final ranking is not the least fixed point on " + tag(s, g));
                }
            } catch (const InvariantViolation &e) {
                o.fail(std::string(dn) + " " + e.what() + " on " + tag(s, g));
            }
        }
    }
    o.detail = std::to_string(runs) + " checked runs on " + std::to_string(games) + " games";
    return o;
}

struct BenchRow {
    ParityGame g;
    std::string name;
};

std::vector<BenchRow> bench_games()
{
    std::vector<BenchRow> out;
    for (auto &e : fs::directory_iterator(fs::path(FIXTURE_DIR) / "games"))
        if (e.path().extension() == ".gm") out.push_back({load_pgsolver(e.path().string()), e.path().filename().string()});
    for (uint64_t s = 0; s < 2000; s++) {
        ParityGame g = game_for(s + 200000, 16, 6);
        out.push_back({g, tag(s + 200000, g)});
    }
    return out;
}

struct Ratios {
    double bb_pre = 0, bb_basic = 0, cp_pre = 0, cp_basic = 0, bb_live = 0, cp_live = 0;
};

void bench_all(Outcome &ops, Outcome &space, Ratios &q)
{
    for (auto &row : bench_games()) {
        const ParityGame &g = row.g;
        const double n = g.n, d = g.d;
        for (const char *dn : {"spm", "opm"}) {
            auto dom = make_domain(dn, g);
            const double W = dom->size_estimate();
            auto be = make_backend("bitset", g);
            SolveResult r = solve_blackbox(g, *dom, *be);
            double pre_bound = 2 * (n * W + 1), basic_bound = 16 * d * n * W, live_bound = n + 8;
            q.bb_pre = std::max(q.bb_pre, r.counters.pre_ops / pre_bound);
            q.bb_basic = std::max(q.bb_basic, r.counters.basic_ops() / basic_bound);
            q.bb_live = std::max(q.bb_live, r.counters.live_sets_max / live_bound);
            if (r.counters.pre_ops > pre_bound) ops.fail(std::string("blackbox ") + dn + " pre_ops on " + row.name);
            if (r.counters.basic_ops() > basic_bound) ops.fail(std::string("blackbox ") + dn + " basic_ops on " + row.name);
            if (r.counters.live_sets_max > live_bound) space.fail(std::string("blackbox ") + dn + " live sets on " + row.name);
        }
        OpmDomain opm = OpmDomain::for_game(g);
        const double W = opm.size_estimate();
        auto be = make_backend("bitset", g);
        SolveResult c = solve_compact(g, opm, *be);
        double pre_bound = 2 * (n * W + 1);
        double basic_bound = 16 * d * d * n * W * std::max(1, ceil_log2(g.n));
        double live_bound = opm.k() * (d + 1) + 7;
        q.cp_pre = std::max(q.cp_pre, c.counters.pre_ops / pre_bound);
        q.cp_basic = std::max(q.cp_basic, c.counters.basic_ops() / basic_bound);
        q.cp_live = std::max(q.cp_live, c.counters.live_sets_max / live_bound);
        if (c.counters.pre_ops > pre_bound) ops.fail("compact pre_ops on " + row.name);
        if (c.counters.basic_ops() > basic_bound) ops.fail("compact basic_ops on " + row.name);
        if (c.counters.live_sets_max > live_bound) space.fail("compact live sets on " + row.name);
    }
}

template <class... A> std::string fmt(const char *f, A... a)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

Outcome encoding_fixture()
{
    Outcome o;
    ParityGame g = parse_pgsolver("0 7 0 0;\n1 0 0 1;\n2 0 0 2;");
    OpmDomain dom(5, 8);
    auto be = make_backend("bitset", g);
    CoordinateStore store(*be, dom);
    std::vector<std::vector<int>> f = {{6, 5, 4, 3, 3}, {7, 5, 4, 2, 2}, {-1, -1, -1, 3, 2}};
    std::vector<Rank> rho;
    for (auto &s : f) rho.push_back(dom.from_symbols(s));
    store.load(rho);

    // (position, symbol, members) with v1, v2, v3 as ids 0, 1, 2
    struct Member {
        int pos, sym;
        std::vector<int> vs;
    };
    const Member listed[] = {
        {1, -1, {2}}, {1, 6, {0}},    {1, 7, {1}}, {2, 5, {0, 1}}, {3, 4, {0, 1}},
        {4, 2, {1}},  {4, 3, {0, 2}}, {5, 3, {0}}, {5, 2, {1, 2}},
    };
    int checked = 0;
    for (auto &m : listed) {
        auto got = store.coordinate(m.pos - 1, dom.ordinal_of(m.sym)).members();
        for (int v : m.vs)
            if (!std::binary_search(got.begin(), got.end(), v))
                o.fail("v" + std::to_string(v + 1) + " missing from C^" + std::to_string(m.pos) + "_" + std::to_string(m.sym));
        checked++;
    }
    if (!store.partition_holds()) o.fail("coordinate sets do not partition V");
    if (store.decode() != rho) o.fail("decode does not return the loaded ranking");

    for (int t = 0; t < 3; t++) {
        std::vector<int> ge, eq;
        for (int v = 0; v < 3; v++) {
            if (rho[v] >= rho[t]) ge.push_back(v);
            if (rho[v] == rho[t]) eq.push_back(v);
        }
        if (store.get_set(rho[t]).members() != ge) o.fail("getSet of f(v" + std::to_string(t + 1) + ")");
        Set T = store.coordinate(0, rho[t].c[0]);
        for (int i = 1; i < 5; i++) T = T & store.coordinate(i, rho[t].c[i]);
        if (T.members() != eq) o.fail("S_r of f(v" + std::to_string(t + 1) + ")");
    }
    o.detail = std::to_string(checked) + " listed memberships, getSet and S_r for 3 ranks";
    return o;
}

void check_domain(Outcome &o, const RankDomain &dom, int priorities, const std::string &label, long &pairs)
{
    auto all = dom.enumerate(100000);
    for (size_t i = 0; i < all.size(); i++)
        for (size_t j = 0; j < all.size(); j++) {
            auto c = dom.compare(all[i], all[j]);
            bool want_less = i < j, want_eq = i == j;
            if ((c < 0) != want_less || (c == 0) != want_eq) o.fail("order broken in " + label);
        }
    for (int c = 0; c < priorities; c++) {
        if (dom.lift(dom.top(), c) != dom.top()) o.fail("lift(top) moved in " + label);
        std::vector<Rank> lifted;
        for (auto &r : all) lifted.push_back(dom.lift(r, c));
        // monotone along the chain is monotone on all pairs
        for (size_t i = 0; i + 1 < lifted.size(); i++) {
            if (lifted[i] > lifted[i + 1]) o.fail("lift not monotone in " + label + " c=" + std::to_string(c));
            pairs++;
        }
    }
}

Outcome domain_laws()
{
    Outcome o;
    long pairs = 0;
    int domains = 0;
    for (int k = 1; k <= 3; k++)
        for (int d = 1; d <= 4; d++) {
            OpmDomain dom(k, d);
            check_domain(o, dom, d, "opm k=" + std::to_string(k) + " d=" + std::to_string(d), pairs);
            domains++;
        }
    for (int n1 = 0; n1 <= 2; n1++)
        for (int n3 = 0; n3 <= 2; n3++) {
            SpmDomain dom({3, 1}, {n3, n1});
            check_domain(o, dom, 5, "spm n1=" + std::to_string(n1) + " n3=" + std::to_string(n3), pairs);
            domains++;
        }
    if (opm_symbol_chain(5) != std::vector<std::string>{"_", "3", "1", "0", "2", "4"}) o.fail("symbol chain for d=5");
    OpmDomain five(1, 5);
    auto syms = five.enumerate(100);
    for (size_t i = 0; i + 2 < syms.size(); i++)
        if (opm_symbol_compare(five.symbol_of(syms[i].c[0]), five.symbol_of(syms[i + 1].c[0]), 5) >= 0) o.fail("opm_symbol_compare disagrees with the chain");
    o.detail = std::to_string(domains) + " domains, " + std::to_string(pairs) + " adjacent lift pairs, chain _<3<1<0<2<4";
    return o;
}

// every getSet result and the trace of one solver run, rendered as text
std::vector<std::string> transcript(const ParityGame &g, const char *algo, const char *domain, const char *backend, OpCounters &ctr)
{
    auto dom = make_domain(domain, g);
    auto be = make_backend(backend, g);
    std::vector<std::string> lines;
    SolveOptions opt;
    opt.on_get_set = [&](const Rank &r, const Set &s) {
        std::string line = dom->render(r) + ":";
        for (int v : s.members()) line += " " + std::to_string(v);
        lines.push_back(std::move(line));
    };
    opt.trace = [&](const TraceRecord &t) { lines.push_back("iter " + dom->render(t.rank) + " " + std::to_string(t.p_size)); };
    SolveResult r = std::string(algo) == "compact" ? solve_compact(g, static_cast<const OpmDomain &>(*dom), *be, opt)
                                                   : solve_blackbox(g, *dom, *be, opt);
    std::string w = "even:";
    for (int v : r.winners.even) w += " " + std::to_string(v);
    lines.push_back(w);
    ctr = r.counters;
    return lines;
}

// random interface calls replayed on both backends
bool script_agrees(const ParityGame &g, uint64_t seed, long &calls)
{
    auto a = make_backend("bitset", g), b = make_backend("bdd", g);
    std::vector<Set> sa, sb;
    Rng r(seed);
    auto pick = [&](uint64_t x) { return (size_t)(x % sa.size()); };
    for (int v = 0; v < g.n; v += 3) {
        sa.push_back(Set(a.get(), a->from_vertices({v})));
        sb.push_back(Set(b.get(), b->from_vertices({v})));
    }
    sa.push_back(all_of(*a));
    sb.push_back(all_of(*b));
    for (int t = 0; t < 40; t++) {
        size_t i = pick(r.next()), j = pick(r.next());
        int op = (int)r.below(8);
        Set x, y;
        switch (op) {
        case 0: x = sa[i] | sa[j], y = sb[i] | sb[j]; break;
        case 1: x = sa[i] & sa[j], y = sb[i] & sb[j]; break;
        case 2: x = sa[i] - sa[j], y = sb[i] - sb[j]; break;
        case 3: x = pre_of(sa[i]), y = pre_of(sb[i]); break;
        case 4: x = cpre_of(Player::Even, sa[i]), y = cpre_of(Player::Even, sb[i]); break;
        case 5: x = cpre_of(Player::Odd, sa[i]), y = cpre_of(Player::Odd, sb[i]); break;
        case 6:
            if (sa[i].subseteq(sa[j]) != sb[i].subseteq(sb[j])) return false;
            break;
        default:
            if (sa[i].equals(sa[j]) != sb[i].equals(sb[j])) return false;
            break;
        }
        calls++;
        if (x) {
            if (x.members() != y.members()) return false;
            sa.push_back(x);
            sb.push_back(y);
        }
    }
    return a->counters().pre_ops == b->counters().pre_ops && a->counters().basic == b->counters().basic;
}

Outcome backend_equivalence()
{
    Outcome o;
    const int games = 1000;
    long lines = 0, calls = 0;
    const char *configs[][2] = {{"blackbox", "spm"}, {"blackbox", "opm"}, {"compact", "opm"}};
    for (uint64_t s = 0; s < games; s++) {
        ParityGame g = game_for(s + 300000, 32, 6);
        for (auto &cf : configs) {
            OpCounters ca, cb;
            auto ta = transcript(g, cf[0], cf[1], "bitset", ca);
            auto tb = transcript(g, cf[0], cf[1], "bdd", cb);
            lines += (long)ta.size();
            if (ta != tb) o.fail(std::string(cf[0]) + " " + cf[1] + " transcripts differ on " + tag(s, g));
            if (ca.pre_ops != cb.pre_ops) o.fail(std::string(cf[0]) + " " + cf[1] + " pre_ops differ on " + tag(s, g));
        }
        if (!script_agrees(g, s, calls)) o.fail("interface script diverges on " + tag(s, g));
    }
    o.detail = std::to_string(games) + " games, " + std::to_string(lines) + " traced getSet/iteration records, " + std::to_string(calls) +
               " scripted calls";
    return o;
}

Outcome parser_conformance()
{
    Outcome o;
    int good = 0, bad = 0;
    bool header = false, no_header = false, named = false, unnamed = false, multi = false;
    for (auto &e : fs::directory_iterator(fs::path(FIXTURE_DIR) / "games")) {
        if (e.path().extension() != ".gm") continue;
        std::string text = slurp(e.path());
        ParityGame g = parse_pgsolver(text);
        std::string once = write_pgsolver(g);
        ParityGame h = parse_pgsolver(once);
        if (!(h == g) || write_pgsolver(h) != once) o.fail("round trip of " + e.path().filename().string());
        (text.rfind("parity", 0) == 0 ? header : no_header) = true;
        (text.find('"') != std::string::npos ? named : unnamed) = true;
        for (auto &s : g.succ) multi |= s.size() > 1;
        good++;
    }
    std::set<std::string> kinds;
    for (auto &e : fs::directory_iterator(fs::path(FIXTURE_DIR) / "malformed")) {
        if (e.path().extension() != ".gm") continue;
        std::istringstream exp(slurp(fs::path(e.path()).replace_extension(".expected")));
        std::string kind;
        int line = 0;
        exp >> kind >> line;
        try {
            parse_pgsolver(slurp(e.path()));
            o.fail("accepted " + e.path().filename().string());
        } catch (const ParseError &err) {
            if (parse_error_kind_name(err.kind) != kind || err.line != line) o.fail("wrong error for " + e.path().filename().string());
            kinds.insert(parse_error_kind_name(err.kind));
        }
        bad++;
    }
    if (good < 50) o.fail("fewer than 50 accepted fixtures");
    if (!(header && no_header && named && unnamed && multi)) o.fail("corpus misses a surface style");
    if (kinds.size() != 5) o.fail("not every error class is exercised");
    o.detail = std::to_string(good) + " round-tripped files, " + std::to_string(bad) + " malformed files covering " + std::to_string(kinds.size()) +
               " error classes";
    return o;
}

}

int main()
{
    run(1, "oracle equivalence", oracle_equivalence);
    run(2, "invariant suite", invariant_suite);

    Outcome ops, space;
    Ratios q;
    auto t0 = std::chrono::steady_clock::now();
    try {
        bench_all(ops, space, q);
    } catch (const std::exception &e) {
        ops.fail(e.what());
        space.fail(e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ops.detail = fmt("worst ratio to bound: blackbox pre %.3f basic %.3f, compact pre %.3f basic %.3f", q.bb_pre, q.bb_basic, q.cp_pre, q.cp_basic);
    space.detail = fmt("worst ratio to bound: blackbox %.3f, compact %.3f", q.bb_live, q.cp_live);
    report(3, "operation bounds", ops, secs);
    report(4, "space bounds", space, 0);

    run(5, "encoding fixture", encoding_fixture);
    run(6, "domain laws", domain_laws);
    run(7, "backend equivalence", backend_equivalence);
    run(8, "parser conformance", parser_conformance);
    return failures ? 1 : 0;
}
