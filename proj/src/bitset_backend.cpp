#include "symset.hpp"

#include <bit>

namespace pg {

namespace {

class BitsetBackend final : public SetBackend {
public:
    explicit BitsetBackend(const ParityGame &g) : SetBackend(g), words_((g.n + 63) / 64)
    {
        pred_.resize(g.n);
        for (int v = 0; v < g.n; v++)
            for (int w : g.succ[v]) pred_[w].push_back(v);
        init_pinned();
    }

    const char *name() const override { return "bitset"; }

protected:
    void p_empty(H out) override { bits_[out].assign(words_, 0); }

    void p_from(H out, const std::vector<int> &vs) override
    {
        auto &b = bits_[out];
        b.assign(words_, 0);
        for (int v : vs) b[v >> 6] |= 1ull << (v & 63);
    }

    void p_binary(Op op, H out, H a, H b) override
    {
        auto &x = bits_[a];
        auto &y = bits_[b];
        std::vector<uint64_t> r(words_);
        for (size_t i = 0; i < words_; i++) {
            switch (op) {
            case U: r[i] = x[i] | y[i]; break;
            case I: r[i] = x[i] & y[i]; break;
            case D: r[i] = x[i] & ~y[i]; break;
            }
        }
        bits_[out].swap(r);
    }

    bool p_subseteq(H a, H b) override
    {
        auto &x = bits_[a];
        auto &y = bits_[b];
        for (size_t i = 0; i < words_; i++)
            if (x[i] & ~y[i]) return false;
        return true;
    }

    bool p_equals(H a, H b) override { return bits_[a] == bits_[b]; }

    void p_pre(H out, H s) override
    {
        std::vector<uint64_t> r(words_, 0);
        auto &x = bits_[s];
        for (size_t i = 0; i < words_; i++) {
            uint64_t w = x[i];
            while (w) {
                int v = (int)(i * 64) + std::countr_zero(w);
                w &= w - 1;
                for (int u : pred_[v]) r[u >> 6] |= 1ull << (u & 63);
            }
        }
        bits_[out].swap(r);
    }


    bool p_contains(H h, int v) const override { return (bits_[h][v >> 6] >> (v & 63)) & 1; }

    void p_clear(H h) override { bits_[h].clear(); }

    void p_grow(size_t slots) override { bits_.resize(slots); }

private:
    size_t words_;
    std::vector<std::vector<uint64_t>> bits_;
    std::vector<std::vector<int>> pred_;
};

}

std::unique_ptr<SetBackend> make_bitset_backend(const ParityGame &g) { return std::make_unique<BitsetBackend>(g); }

}
