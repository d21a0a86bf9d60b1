#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "game.hpp"

namespace pg {

enum class BasicOp { Union = 0, Intersect, Difference, Subseteq, Equals };
constexpr int kBasicOpKinds = 5;
const char *basic_op_name(BasicOp op);

struct OpCounters {
    uint64_t pre_ops = 0;
    std::array<uint64_t, kBasicOpKinds> basic{};
    int64_t live_sets_now = 0;
    int64_t live_sets_max = 0;

    uint64_t basic_ops() const;
    uint64_t count(BasicOp op) const { return basic[(int)op]; }
};

// Slot-based set store. Handles are reference counted; pinned handles hold the
// game description (V, V_z, V_c) and stay outside the live-set accounting.
class SetBackend {
public:
    using H = int32_t;

    explicit SetBackend(const ParityGame &g);
    virtual ~SetBackend() = default;

    virtual const char *name() const = 0;

    const ParityGame &game() const { return g_; }
    const OpCounters &counters() const { return ctr_; }
    void reset_counters();

    H empty();
    H from_vertices(const std::vector<int> &vs);

    H unite(H a, H b);
    H intersect(H a, H b);
    H difference(H a, H b);
    bool subseteq(H a, H b);
    bool equals(H a, H b);
    H pre(H s);
    H cpre(Player z, H s);

    // in place when a is uniquely held; a is rebound otherwise
    void unite_into(H &a, H b);
    void intersect_into(H &a, H b);
    void subtract_into(H &a, H b);

    H all() const { return all_; }
    H of_player(Player z) const { return z == Player::Even ? even_ : odd_; }
    H of_priority(int c) const { return prio_[c]; }

    void retain(H h);
    void release(H h);
    int refcount(H h) const { return slots_[h].refs; }

    // uncounted inspection
    bool contains(H h, int v) const;
    std::vector<int> members(H h) const;
    int size_of(H h) const { return (int)members(h).size(); }

protected:
    enum Op { U, I, D };
    // backend primitives on payload slots; results go into a fresh or reused slot
    virtual void p_empty(H out) = 0;
    virtual void p_from(H out, const std::vector<int> &vs) = 0;
    virtual void p_binary(Op op, H out, H a, H b) = 0;
    virtual bool p_subseteq(H a, H b) = 0;
    virtual bool p_equals(H a, H b) = 0;
    virtual void p_pre(H out, H s) = 0;
    virtual bool p_contains(H h, int v) const = 0;
    virtual void p_clear(H h) = 0;
    virtual void p_grow(size_t slots) = 0;

    void init_pinned();

    const ParityGame &g_;

private:
    struct Slot {
        int refs = 0;
        bool pinned = false;
    };
    H alloc(bool pinned);
    H binary(Op op, H a, H b, BasicOp kind);
    void binary_into(Op op, H &a, H b, BasicOp kind);

    std::vector<Slot> slots_;
    std::vector<H> free_;
    OpCounters ctr_;
    H all_ = -1, even_ = -1, odd_ = -1;
    std::vector<H> prio_;
};

std::unique_ptr<SetBackend> make_bitset_backend(const ParityGame &g);
std::unique_ptr<SetBackend> make_bdd_backend(const ParityGame &g);
std::unique_ptr<SetBackend> make_backend(const std::string &name, const ParityGame &g);

// Owning reference to a backend handle.
class Set {
public:
    Set() = default;
    Set(SetBackend *b, SetBackend::H h) : b_(b), h_(h) {}
    static Set borrow(SetBackend *b, SetBackend::H h)
    {
        b->retain(h);
        return Set(b, h);
    }
    Set(const Set &o) : b_(o.b_), h_(o.h_)
    {
        if (b_) b_->retain(h_);
    }
    Set(Set &&o) noexcept : b_(o.b_), h_(o.h_) { o.b_ = nullptr; }
    Set &operator=(Set o) noexcept
    {
        std::swap(b_, o.b_);
        std::swap(h_, o.h_);
        return *this;
    }
    ~Set()
    {
        if (b_) b_->release(h_);
    }

    explicit operator bool() const { return b_ != nullptr; }
    SetBackend::H handle() const { return h_; }
    SetBackend *backend() const { return b_; }
    bool same_handle(const Set &o) const { return b_ == o.b_ && h_ == o.h_; }
    void reset() { *this = Set(); }

    Set operator|(const Set &o) const { return Set(b_, b_->unite(h_, o.h_)); }
    Set operator&(const Set &o) const { return Set(b_, b_->intersect(h_, o.h_)); }
    Set operator-(const Set &o) const { return Set(b_, b_->difference(h_, o.h_)); }
    Set &operator|=(const Set &o)
    {
        b_->unite_into(h_, o.h_);
        return *this;
    }
    Set &operator&=(const Set &o)
    {
        b_->intersect_into(h_, o.h_);
        return *this;
    }
    Set &operator-=(const Set &o)
    {
        b_->subtract_into(h_, o.h_);
        return *this;
    }
    bool subseteq(const Set &o) const { return b_->subseteq(h_, o.h_); }
    bool equals(const Set &o) const { return b_->equals(h_, o.h_); }

    std::vector<int> members() const { return b_->members(h_); }

private:
    SetBackend *b_ = nullptr;
    SetBackend::H h_ = -1;
};

inline Set all_of(SetBackend &b) { return Set::borrow(&b, b.all()); }
inline Set player_set(SetBackend &b, Player z) { return Set::borrow(&b, b.of_player(z)); }
inline Set priority_set(SetBackend &b, int c) { return Set::borrow(&b, b.of_priority(c)); }
inline Set empty_set(SetBackend &b) { return Set(&b, b.empty()); }
inline Set pre_of(const Set &s) { return Set(s.backend(), s.backend()->pre(s.handle())); }
inline Set cpre_of(Player z, const Set &s) { return Set(s.backend(), s.backend()->cpre(z, s.handle())); }

}
