#include "rank.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pg {

std::vector<std::string> RankDomain::tuple_view(const Rank &r) const
{
    if (r.top) return {"TOP"};
    std::vector<std::string> out;
    for (size_t i = 0; i < r.c.size(); i++) out.push_back(alphabets_[i][r.c[i]]);
    return out;
}

Rank RankDomain::from_view(const std::vector<std::string> &syms) const
{
    if (syms.size() == 1 && syms[0] == "TOP") return top();
    if (syms.size() != alphabets_.size()) throw std::invalid_argument("tuple length mismatch");
    Rank r;
    for (size_t i = 0; i < syms.size(); i++) {
        auto &a = alphabets_[i];
        auto it = std::find(a.begin(), a.end(), syms[i]);
        if (it == a.end()) throw std::invalid_argument("symbol '" + syms[i] + "' not in alphabet");
        r.c.push_back((uint16_t)(it - a.begin()));
    }
    return r;
}

std::string RankDomain::render(const Rank &r) const
{
    if (r.top) return "TOP";
    std::string s = "(";
    for (size_t i = 0; i < r.c.size(); i++) {
        if (i) s += ",";
        s += alphabets_[i][r.c[i]];
    }
    return s + ")";
}

std::vector<Rank> RankDomain::enumerate(size_t limit) const
{
    double total = 1;
    for (auto &a : alphabets_) total *= (double)a.size();
    if (total + 1 > (double)limit) throw std::length_error("domain too large to enumerate");
    std::vector<Rank> out;
    Rank r = min();
    while (true) {
        out.push_back(r);
        int i = (int)r.c.size() - 1;
        while (i >= 0 && r.c[i] + 1 == (int)alphabets_[i].size()) r.c[i--] = 0;
        if (i < 0) break;
        r.c[i]++;
    }
    out.push_back(top());
    return out;
}

SpmDomain::SpmDomain(std::vector<int> odd_priorities, std::vector<int> bounds)
    : odd_(std::move(odd_priorities)), bounds_(std::move(bounds))
{
    if (odd_.size() != bounds_.size()) throw std::invalid_argument("spm: priorities and bounds differ in length");
    for (size_t i = 0; i < odd_.size(); i++) {
        if (odd_[i] % 2 != 1) throw std::invalid_argument("spm: coordinate priority must be odd");
        if (i && odd_[i] >= odd_[i - 1]) throw std::invalid_argument("spm: priorities must descend");
        std::vector<std::string> a;
        for (int v = 0; v <= bounds_[i]; v++) a.push_back(std::to_string(v));
        alphabets_.push_back(std::move(a));
    }
}

SpmDomain SpmDomain::for_game(const ParityGame &g)
{
    std::vector<int> odd, bounds;
    for (int p = g.d - 1; p >= 0; p--) {
        if (p % 2 == 0) continue;
        odd.push_back(p);
        bounds.push_back((int)g.vertices_with_priority(p).size());
    }
    return SpmDomain(odd, bounds);
}

Rank SpmDomain::lift(const Rank &r, int c) const
{
    if (r.top) return r;
    Rank out = r;
    int m = 0;
    while (m < (int)odd_.size() && odd_[m] >= c) m++;
    for (int i = m; i < (int)out.c.size(); i++) out.c[i] = 0;
    if (c % 2 == 0) return out;
    int j = m - 1;
    for (; j >= 0; j--) {
        if (out.c[j] < bounds_[j]) {
            out.c[j]++;
            break;
        }
        out.c[j] = 0;
    }
    return j < 0 ? top() : out;
}

std::string SpmDomain::render(const Rank &r) const { return RankDomain::render(r); }

double SpmDomain::size_estimate() const
{
    double p = 1;
    for (int b : bounds_) p *= (double)(b + 1);
    return p + 1;
}

std::vector<std::string> opm_symbol_chain(int d)
{
    std::vector<std::string> out{"_"};
    for (int p = d - 1; p >= 0; p--)
        if (p % 2) out.push_back(std::to_string(p));
    for (int p = 0; p < d; p++)
        if (p % 2 == 0) out.push_back(std::to_string(p));
    return out;
}

namespace {

int opm_key(int x, int d)
{
    if (x < 0) return 0;
    if (x % 2) return 1 + (d - 1 - x) / 2;
    return 1 + d / 2 + x / 2;
}

}

int opm_symbol_compare(int x, int y, int d)
{
    int a = opm_key(x, d), b = opm_key(y, d);
    return a < b ? -1 : a > b ? 1 : 0;
}

int OpmDomain::tuple_length(int n)
{
    int b = 0;
    while ((1ll << b) < n) b++;
    return b + 1;
}

OpmDomain::OpmDomain(int k, int d) : k_(k), d_(d)
{
    if (k < 1 || d < 1) throw std::invalid_argument("opm: k and d must be positive");
    auto chain = opm_symbol_chain(d);
    ord_.assign(d + 1, 0);
    for (size_t i = 0; i < chain.size(); i++) {
        int s = chain[i] == "_" ? -1 : std::stoi(chain[i]);
        sym_.push_back(s);
        ord_[s + 1] = (uint16_t)i;
    }
    alphabets_.assign(k, chain);
}

OpmDomain OpmDomain::for_game(const ParityGame &g) { return OpmDomain(tuple_length(g.n), g.d); }

std::vector<int> OpmDomain::symbols(const Rank &r) const
{
    std::vector<int> s;
    for (auto o : r.c) s.push_back(sym_[o]);
    return s;
}

Rank OpmDomain::from_symbols(const std::vector<int> &s) const
{
    Rank r;
    for (int x : s) r.c.push_back(ord_[x + 1]);
    return r;
}

std::vector<int> OpmDomain::base(std::vector<int> b, int p, bool &top) const
{
    top = false;
    for (auto &x : b)
        if (x >= 0) x = std::max(x, p);
    if (p % 2) return b;
    int j = (int)b.size() - 1;
    while (j >= 0 && b[j] >= 0 && b[j] % 2 == 0) j--;
    if (j < 0) {
        top = true;
        return b;
    }
    b[j] = p;
    for (size_t t = j + 1; t < b.size(); t++) b[t] = -1;
    return b;
}

Rank OpmDomain::base_lift(const Rank &r, int c) const
{
    if (r.top) return r;
    bool top;
    auto b = base(symbols(r), c, top);
    return top ? Rank::make_top() : from_symbols(b);
}

// least value of base() over all tuples at or above r
Rank OpmDomain::lift(const Rank &r, int p) const
{
    if (r.top) return r;
    Rank best = base_lift(r, p);
    auto s = symbols(r);
    std::vector<int> cand(k_);
    for (int i = 0; i < k_; i++) {
        int m = k_ - 1 - i;
        for (uint16_t o = r.c[i] + 1; o <= (uint16_t)d_; o++) {
            for (int t = 0; t < i; t++) cand[t] = s[t];
            cand[i] = sym_[o];
            Rank c;
            if (m == 0) {
                bool top;
                auto b = base(cand, p, top);
                c = top ? Rank::make_top() : from_symbols(b);
            } else {
                for (int t = 0; t <= i; t++)
                    if (cand[t] >= 0) cand[t] = std::max(cand[t], p);
                for (int t = i + 1; t < k_; t++) cand[t] = -1;
                if (p % 2 == 0) cand[k_ - 1] = p;
                c = from_symbols(cand);
            }
            if (c < best) best = c;
        }
    }
    return best;
}

std::string OpmDomain::render(const Rank &r) const
{
    if (r.top) return "TOP";
    std::string s;
    for (size_t i = 0; i < r.c.size(); i++) {
        if (d_ > 10 && i) s += ".";
        int x = sym_[r.c[i]];
        s += x < 0 ? "_" : std::to_string(x);
    }
    return s;
}

double OpmDomain::size_estimate() const { return std::pow((double)(d_ + 1), k_) + 1; }

std::unique_ptr<RankDomain> make_domain(const std::string &name, const ParityGame &g)
{
    if (name == "spm") return std::make_unique<SpmDomain>(SpmDomain::for_game(g));
    if (name == "opm") return std::make_unique<OpmDomain>(OpmDomain::for_game(g));
    throw std::invalid_argument("unknown domain " + name);
}

}
