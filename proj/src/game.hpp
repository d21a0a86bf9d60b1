#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pg {

enum class Player : uint8_t { Even = 0, Odd = 1 };

inline Player opponent(Player z) { return z == Player::Even ? Player::Odd : Player::Even; }
inline const char *player_name(Player z) { return z == Player::Even ? "even" : "odd"; }

struct ParityGame {
    int n = 0;
    int d = 1;
    std::vector<Player> owner;
    std::vector<int> priority;
    std::vector<std::vector<int>> succ;
    std::vector<std::string> name;

    int64_t edge_count() const;
    std::vector<int> vertices_with_priority(int c) const;
    std::vector<int> vertices_of(Player z) const;
    // predecessor lists, built on demand
    std::vector<std::vector<int>> predecessors() const;
    // throws std::invalid_argument when an invariant fails
    void validate() const;
};

bool operator==(const ParityGame &a, const ParityGame &b);

enum class ParseErrorKind { Syntax, DuplicateId, DanglingSuccessor, NoSuccessors, NegativePriority };

const char *parse_error_kind_name(ParseErrorKind k);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, int col, const std::string &msg);
    ParseErrorKind kind;
    int line;
    int col;
};

ParityGame parse_pgsolver(std::string_view text);
ParityGame load_pgsolver(const std::string &path);
std::string write_pgsolver(const ParityGame &g);

ParityGame random_game(int n, int d, double edge_density, uint64_t seed);

// draws taken straight from the engine output, no std distributions
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    uint64_t next() { return eng_(); }
    uint64_t below(uint64_t bound);
    double unit();

private:
    std::mt19937_64 eng_;
};

}
