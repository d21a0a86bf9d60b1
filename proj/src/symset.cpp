#include "symset.hpp"

#include <stdexcept>

namespace pg {

const char *basic_op_name(BasicOp op)
{
    switch (op) {
    case BasicOp::Union: return "union";
    case BasicOp::Intersect: return "intersect";
    case BasicOp::Difference: return "difference";
    case BasicOp::Subseteq: return "subseteq";
    case BasicOp::Equals: return "equals";
    }
    return "?";
}

uint64_t OpCounters::basic_ops() const
{
    uint64_t t = 0;
    for (auto x : basic) t += x;
    return t;
}

SetBackend::SetBackend(const ParityGame &g) : g_(g) {}

void SetBackend::init_pinned()
{
    std::vector<int> vs(g_.n);
    for (int v = 0; v < g_.n; v++) vs[v] = v;
    all_ = alloc(true);
    p_from(all_, vs);
    even_ = alloc(true);
    p_from(even_, g_.vertices_of(Player::Even));
    odd_ = alloc(true);
    p_from(odd_, g_.vertices_of(Player::Odd));
    for (int c = 0; c < g_.d; c++) {
        H h = alloc(true);
        p_from(h, g_.vertices_with_priority(c));
        prio_.push_back(h);
    }
}

void SetBackend::reset_counters()
{
    int64_t live = ctr_.live_sets_now;
    ctr_ = OpCounters{};
    ctr_.live_sets_now = ctr_.live_sets_max = live;
}

SetBackend::H SetBackend::alloc(bool pinned)
{
    H h;
    if (!free_.empty()) {
        h = free_.back();
        free_.pop_back();
    } else {
        h = (H)slots_.size();
        slots_.emplace_back();
        p_grow(slots_.size());
    }
    slots_[h].refs = 1;
    slots_[h].pinned = pinned;
    if (!pinned) {
        ctr_.live_sets_now++;
        if (ctr_.live_sets_now > ctr_.live_sets_max) ctr_.live_sets_max = ctr_.live_sets_now;
    }
    return h;
}

void SetBackend::retain(H h) { slots_[h].refs++; }

void SetBackend::release(H h)
{
    auto &s = slots_[h];
    if (--s.refs > 0 || s.pinned) return;
    p_clear(h);
    free_.push_back(h);
    ctr_.live_sets_now--;
}

SetBackend::H SetBackend::empty()
{
    H h = alloc(false);
    p_empty(h);
    return h;
}

SetBackend::H SetBackend::from_vertices(const std::vector<int> &vs)
{
    for (int v : vs)
        if (v < 0 || v >= g_.n) throw std::out_of_range("vertex id outside the game");
    H h = alloc(false);
    p_from(h, vs);
    return h;
}

SetBackend::H SetBackend::binary(Op op, H a, H b, BasicOp kind)
{
    ctr_.basic[(int)kind]++;
    H h = alloc(false);
    p_binary(op, h, a, b);
    return h;
}

void SetBackend::binary_into(Op op, H &a, H b, BasicOp kind)
{
    if (slots_[a].refs == 1 && !slots_[a].pinned) {
        ctr_.basic[(int)kind]++;
        p_binary(op, a, a, b);
        return;
    }
    H h = binary(op, a, b, kind);
    release(a);
    a = h;
}

SetBackend::H SetBackend::unite(H a, H b) { return binary(U, a, b, BasicOp::Union); }
SetBackend::H SetBackend::intersect(H a, H b) { return binary(I, a, b, BasicOp::Intersect); }
SetBackend::H SetBackend::difference(H a, H b) { return binary(D, a, b, BasicOp::Difference); }
void SetBackend::unite_into(H &a, H b) { binary_into(U, a, b, BasicOp::Union); }
void SetBackend::intersect_into(H &a, H b) { binary_into(I, a, b, BasicOp::Intersect); }
void SetBackend::subtract_into(H &a, H b) { binary_into(D, a, b, BasicOp::Difference); }

bool SetBackend::subseteq(H a, H b)
{
    ctr_.basic[(int)BasicOp::Subseteq]++;
    return p_subseteq(a, b);
}

bool SetBackend::equals(H a, H b)
{
    ctr_.basic[(int)BasicOp::Equals]++;
    return p_equals(a, b);
}

SetBackend::H SetBackend::pre(H s)
{
    ctr_.pre_ops++;
    H h = alloc(false);
    p_pre(h, s);
    return h;
}

SetBackend::H SetBackend::cpre(Player z, H s)
{
    H a = pre(s);
    intersect_into(a, of_player(z));
    H rest = difference(all_, s);
    H b = pre(rest);
    release(rest);
    H c = difference(of_player(opponent(z)), b);
    release(b);
    unite_into(a, c);
    release(c);
    return a;
}

bool SetBackend::contains(H h, int v) const { return p_contains(h, v); }

std::vector<int> SetBackend::members(H h) const
{
    std::vector<int> out;
    for (int v = 0; v < g_.n; v++)
        if (p_contains(h, v)) out.push_back(v);
    return out;
}

std::unique_ptr<SetBackend> make_backend(const std::string &name, const ParityGame &g)
{
    if (name == "bitset") return make_bitset_backend(g);
    if (name == "bdd") return make_bdd_backend(g);
    throw std::invalid_argument("unknown backend " + name);
}

}
