#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "game.hpp"

namespace pg {

// Coordinates hold ordinals into the per-position alphabet, so plain
// lexicographic comparison is the domain order. Top sits above every tuple.
struct Rank {
    bool top = false;
    std::vector<uint16_t> c;

    static Rank make_top() { return Rank{true, {}}; }

    bool operator==(const Rank &o) const { return top == o.top && (top || c == o.c); }
    std::strong_ordering operator<=>(const Rank &o) const
    {
        if (top || o.top) return top == o.top ? std::strong_ordering::equal : (top ? std::strong_ordering::greater : std::strong_ordering::less);
        return c <=> o.c;
    }
};

class RankDomain {
public:
    virtual ~RankDomain() = default;

    virtual const char *id() const = 0;
    virtual Player tracked() const = 0;
    virtual Rank lift(const Rank &r, int c) const = 0;

    int length() const { return (int)alphabets_.size(); }
    Rank min() const { return Rank{false, std::vector<uint16_t>(alphabets_.size(), 0)}; }
    Rank top() const { return Rank::make_top(); }
    std::strong_ordering compare(const Rank &a, const Rank &b) const { return a <=> b; }

    // per-position symbol names in ascending order
    const std::vector<std::vector<std::string>> &coordinate_alphabets() const { return alphabets_; }
    std::vector<std::string> tuple_view(const Rank &r) const;
    Rank from_view(const std::vector<std::string> &syms) const;
    virtual std::string render(const Rank &r) const;

    // |W|: exact for SPM, an upper bound for OPM
    virtual double size_estimate() const = 0;

    // all tuples plus top in ascending order; throws when larger than limit
    std::vector<Rank> enumerate(size_t limit) const;

protected:
    std::vector<std::vector<std::string>> alphabets_;
};

class SpmDomain final : public RankDomain {
public:
    // bounds[i] = |V_p| for the i-th odd priority, highest odd priority first
    SpmDomain(std::vector<int> odd_priorities, std::vector<int> bounds);
    static SpmDomain for_game(const ParityGame &g);

    const char *id() const override { return "spm"; }
    Player tracked() const override { return Player::Odd; }
    Rank lift(const Rank &r, int c) const override;
    std::string render(const Rank &r) const override;
    double size_estimate() const override;

    const std::vector<int> &odd_priorities() const { return odd_; }
    const std::vector<int> &bounds() const { return bounds_; }

private:
    std::vector<int> odd_;
    std::vector<int> bounds_;
};

class OpmDomain final : public RankDomain {
public:
    OpmDomain(int k, int d);
    static OpmDomain for_game(const ParityGame &g);
    static int tuple_length(int n);

    const char *id() const override { return "opm"; }
    Player tracked() const override { return Player::Even; }
    Rank lift(const Rank &r, int c) const override;
    std::string render(const Rank &r) const override;
    double size_estimate() const override;

    int k() const { return k_; }
    int d() const { return d_; }

    // symbol -1 stands for '_'
    int symbol_of(uint16_t ord) const { return sym_[ord]; }
    uint16_t ordinal_of(int sym) const { return ord_[sym + 1]; }
    std::vector<int> symbols(const Rank &r) const;
    Rank from_symbols(const std::vector<int> &s) const;

    // the unclosed update, exposed for tests
    Rank base_lift(const Rank &r, int c) const;

private:
    std::vector<int> base(std::vector<int> b, int p, bool &top) const;
    bool sym_less(int a, int b) const { return ord_[a + 1] < ord_[b + 1]; }

    int k_, d_;
    std::vector<int> sym_;
    std::vector<uint16_t> ord_;
};

// ascending OPM symbol chain for d priorities, '_' first
std::vector<std::string> opm_symbol_chain(int d);
int opm_symbol_compare(int x, int y, int d);

std::unique_ptr<RankDomain> make_domain(const std::string &name, const ParityGame &g);

}
