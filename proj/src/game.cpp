#include "game.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace pg {

int64_t ParityGame::edge_count() const
{
    int64_t m = 0;
    for (auto &s : succ) m += (int64_t)s.size();
    return m;
}

std::vector<int> ParityGame::vertices_with_priority(int c) const
{
    std::vector<int> out;
    for (int v = 0; v < n; v++)
        if (priority[v] == c) out.push_back(v);
    return out;
}

std::vector<int> ParityGame::vertices_of(Player z) const
{
    std::vector<int> out;
    for (int v = 0; v < n; v++)
        if (owner[v] == z) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> ParityGame::predecessors() const
{
    std::vector<std::vector<int>> pred(n);
    for (int v = 0; v < n; v++)
        for (int w : succ[v]) pred[w].push_back(v);
    return pred;
}

void ParityGame::validate() const
{
    if (n < 1) throw std::invalid_argument("game has no vertices");
    if (d < 1) throw std::invalid_argument("priority count below 1");
    if ((int)owner.size() != n || (int)priority.size() != n || (int)succ.size() != n || (int)name.size() != n)
        throw std::invalid_argument("per-vertex arrays have wrong length");
    for (int v = 0; v < n; v++) {
        if (priority[v] < 0 || priority[v] >= d) throw std::invalid_argument("priority out of range");
        if (succ[v].empty()) throw std::invalid_argument("vertex without successor");
        for (int w : succ[v])
            if (w < 0 || w >= n) throw std::invalid_argument("successor out of range");
    }
}

bool operator==(const ParityGame &a, const ParityGame &b)
{
    if (a.n != b.n || a.d != b.d || a.owner != b.owner || a.priority != b.priority || a.name != b.name) return false;
    for (int v = 0; v < a.n; v++) {
        auto x = a.succ[v], y = b.succ[v];
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    return true;
}

const char *parse_error_kind_name(ParseErrorKind k)
{
    switch (k) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::DuplicateId: return "duplicate-id";
    case ParseErrorKind::DanglingSuccessor: return "dangling-successor";
    case ParseErrorKind::NoSuccessors: return "no-successors";
    case ParseErrorKind::NegativePriority: return "negative-priority";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, int col, const std::string &msg)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + parse_error_kind_name(kind) + ": " + msg),
      kind(kind), line(line), col(col)
{
}

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view t) : t_(t) {}

    void skip_ws()
    {
        while (pos_ < t_.size() && std::isspace((unsigned char)t_[pos_])) advance();
    }

    bool at_end()
    {
        skip_ws();
        return pos_ >= t_.size();
    }

    char peek()
    {
        skip_ws();
        return pos_ < t_.size() ? t_[pos_] : '\0';
    }

    int line() const { return line_; }
    int col() const { return col_; }

    [[noreturn]] void fail(ParseErrorKind k, const std::string &msg) { throw ParseError(k, line_, col_, msg); }

    void expect(char c)
    {
        if (peek() != c) fail(ParseErrorKind::Syntax, std::string("expected '") + c + "'");
        advance();
    }

    bool word(std::string_view w)
    {
        skip_ws();
        if (t_.substr(pos_, w.size()) != w) return false;
        size_t end = pos_ + w.size();
        if (end < t_.size() && std::isalnum((unsigned char)t_[end])) return false;
        for (size_t i = 0; i < w.size(); i++) advance();
        return true;
    }

    // signed integer; sign kept so negative priorities get their own error
    int64_t integer(const char *what)
    {
        skip_ws();
        bool neg = false;
        if (pos_ < t_.size() && t_[pos_] == '-') {
            neg = true;
            advance();
        }
        if (pos_ >= t_.size() || !std::isdigit((unsigned char)t_[pos_]))
            fail(ParseErrorKind::Syntax, std::string("expected ") + what);
        int64_t v = 0;
        while (pos_ < t_.size() && std::isdigit((unsigned char)t_[pos_])) {
            v = v * 10 + (t_[pos_] - '0');
            if (v > std::numeric_limits<int32_t>::max()) fail(ParseErrorKind::Syntax, std::string(what) + " too large");
            advance();
        }
        return neg ? -v : v;
    }

    std::string quoted()
    {
        peek();
        const int l0 = line_, c0 = col_;
        auto open_end = [&] { return pos_ >= t_.size() || t_[pos_] == '\n'; };
        expect('"');
        std::string out;
        while (true) {
            if (open_end()) throw ParseError(ParseErrorKind::Syntax, l0, c0, "unterminated name");
            char c = t_[pos_];
            advance();
            if (c == '"') break;
            if (c == '\\') {
                if (open_end()) throw ParseError(ParseErrorKind::Syntax, l0, c0, "unterminated name");
                c = t_[pos_];
                advance();
            }
            out.push_back(c);
        }
        return out;
    }

private:
    void advance()
    {
        if (t_[pos_] == '\n') {
            line_++;
            col_ = 1;
        } else {
            col_++;
        }
        pos_++;
    }

    std::string_view t_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

struct RawVertex {
    int64_t id;
    int priority;
    Player owner;
    std::vector<int64_t> succ;
    std::vector<std::pair<int, int>> succ_pos;
    std::string name;
};

}

ParityGame parse_pgsolver(std::string_view text)
{
    Lexer lx(text);
    if (lx.word("parity")) {
        int64_t maxid = lx.integer("maximum vertex id");
        if (maxid < 0) lx.fail(ParseErrorKind::Syntax, "negative maximum vertex id");
        lx.expect(';');
    }

    std::vector<RawVertex> raw;
    std::unordered_map<int64_t, int> index;
    while (!lx.at_end()) {
        RawVertex rv;
        int line = lx.line(), col = lx.col();
        rv.id = lx.integer("vertex id");
        if (rv.id < 0) throw ParseError(ParseErrorKind::Syntax, line, col, "negative vertex id");
        if (index.count(rv.id))
            throw ParseError(ParseErrorKind::DuplicateId, line, col, "vertex " + std::to_string(rv.id) + " declared twice");

        lx.peek();
        int pl = lx.line(), pc = lx.col();
        int64_t pr = lx.integer("priority");
        if (pr < 0) throw ParseError(ParseErrorKind::NegativePriority, pl, pc, "priority " + std::to_string(pr));
        rv.priority = (int)pr;

        lx.peek();
        int ol = lx.line(), oc = lx.col();
        int64_t ow = lx.integer("owner");
        if (ow != 0 && ow != 1) throw ParseError(ParseErrorKind::Syntax, ol, oc, "owner must be 0 or 1");
        rv.owner = ow == 0 ? Player::Even : Player::Odd;

        char c = lx.peek();
        if (c == ';' || c == '"') lx.fail(ParseErrorKind::NoSuccessors, "vertex " + std::to_string(rv.id) + " has no successors");
        while (true) {
            lx.peek();
            rv.succ_pos.emplace_back(lx.line(), lx.col());
            int64_t w = lx.integer("successor id");
            if (w < 0) lx.fail(ParseErrorKind::Syntax, "negative successor id");
            rv.succ.push_back(w);
            if (lx.peek() != ',') break;
            lx.expect(',');
        }
        if (lx.peek() == '"') rv.name = lx.quoted();
        lx.expect(';');
        index.emplace(rv.id, (int)raw.size());
        raw.push_back(std::move(rv));
    }
    if (raw.empty()) lx.fail(ParseErrorKind::Syntax, "no vertices");

    ParityGame g;
    g.n = (int)raw.size();
    g.owner.resize(g.n);
    g.priority.resize(g.n);
    g.succ.resize(g.n);
    g.name.resize(g.n);
    int maxp = 0;
    for (int v = 0; v < g.n; v++) {
        auto &rv = raw[v];
        g.owner[v] = rv.owner;
        g.priority[v] = rv.priority;
        maxp = std::max(maxp, rv.priority);
        g.name[v] = rv.name;
        for (size_t j = 0; j < rv.succ.size(); j++) {
            auto it = index.find(rv.succ[j]);
            if (it == index.end())
                throw ParseError(ParseErrorKind::DanglingSuccessor, rv.succ_pos[j].first, rv.succ_pos[j].second,
                                 "successor " + std::to_string(rv.succ[j]) + " is not declared");
            g.succ[v].push_back(it->second);
        }
        std::sort(g.succ[v].begin(), g.succ[v].end());
        g.succ[v].erase(std::unique(g.succ[v].begin(), g.succ[v].end()), g.succ[v].end());
    }
    g.d = maxp + 1;
    return g;
}

ParityGame load_pgsolver(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_pgsolver(ss.str());
}

std::string write_pgsolver(const ParityGame &g)
{
    std::string out = "parity " + std::to_string(g.n - 1) + ";\n";
    for (int v = 0; v < g.n; v++) {
        out += std::to_string(v) + " " + std::to_string(g.priority[v]) + " " + (g.owner[v] == Player::Even ? "0" : "1") + " ";
        auto s = g.succ[v];
        std::sort(s.begin(), s.end());
        for (size_t j = 0; j < s.size(); j++) {
            if (j) out += ",";
            out += std::to_string(s[j]);
        }
        if (!g.name[v].empty()) {
            out += " \"";
            for (char c : g.name[v]) {
                if (c == '"' || c == '\\') out += '\\';
                out += c;
            }
            out += "\"";
        }
        out += ";\n";
    }
    return out;
}

uint64_t Rng::below(uint64_t bound)
{
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do x = eng_();
    while (x >= limit);
    return x % bound;
}

double Rng::unit() { return (double)(eng_() >> 11) * 0x1.0p-53; }

ParityGame random_game(int n, int d, double edge_density, uint64_t seed)
{
    if (n < 1 || d < 1 || !(edge_density > 0 && edge_density <= 1))
        throw std::invalid_argument("random_game needs n >= 1, d >= 1, 0 < p <= 1");
    Rng rng(seed);
    ParityGame g;
    g.n = n;
    g.owner.resize(n);
    g.priority.resize(n);
    g.succ.resize(n);
    g.name.resize(n);
    int maxp = 0;
    for (int v = 0; v < n; v++) {
        g.owner[v] = rng.below(2) ? Player::Odd : Player::Even;
        g.priority[v] = (int)rng.below(d);
        maxp = std::max(maxp, g.priority[v]);
    }
    for (int v = 0; v < n; v++)
        for (int w = 0; w < n; w++)
            if (rng.unit() < edge_density) g.succ[v].push_back(w);
    for (int v = 0; v < n; v++)
        if (g.succ[v].empty()) g.succ[v].push_back((int)rng.below(n));
    g.d = maxp + 1;
    return g;
}

}
