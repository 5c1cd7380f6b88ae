#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goldnug/fibonacci.hpp"
#include "goldnug/game.hpp"
#include "goldnug/nugget.hpp"

namespace goldnug {

enum class Color { blue, red };
enum class Player { left, right };

inline const char* to_string(Player p) { return p == Player::left ? "L" : "R"; }

inline Player parse_player(std::string_view s) {
    if (s == "L" || s == "left" || s == "Left") return Player::left;
    if (s == "R" || s == "right" || s == "Right") return Player::right;
    throw std::invalid_argument("player must be L or R, got '" + std::string(s) + "'");
}

struct Heap {
    Color color = Color::blue;
    std::uint64_t size = 0;

    std::string to_string() const { return std::to_string(size) + (color == Color::blue ? "b" : "r"); }
    friend auto operator<=>(const Heap&, const Heap&) = default;
};

/// In blue heaps Left subtracts members of A and Right members of B; in
/// red heaps the roles swap.
inline bool can_subtract(Player p, Color c, std::uint64_t k) {
    bool a = in_a<std::uint64_t>(k);
    return (p == Player::left) == (c == Color::blue) ? a : !a;
}

struct Position {
    std::vector<Heap> heaps;

    std::uint64_t largest_heap() const {
        std::uint64_t m = 0;
        for (const Heap& h : heaps) m = std::max(m, h.size);
        return m;
    }

    Position swapped_colors() const {
        Position p = *this;
        for (Heap& h : p.heaps) h.color = h.color == Color::blue ? Color::red : Color::blue;
        return p;
    }

    /// "3b+20b+18r"; the empty position prints as "0".
    std::string to_string() const {
        if (heaps.empty()) return "0";
        std::string out;
        for (const Heap& h : heaps) {
            if (!out.empty()) out += '+';
            out += h.to_string();
        }
        return out;
    }

    static Position parse(std::string_view text) {
        Position p;
        if (text == "0" || text.empty()) return p;
        std::size_t start = 0;
        while (true) {
            std::size_t plus = text.find('+', start);
            std::string_view item = text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
            if (item.size() < 2 || (item.back() != 'b' && item.back() != 'r')) {
                throw std::invalid_argument("bad heap '" + std::string(item) + "' in position '" + std::string(text) + "' (expected e.g. 20b or 18r)");
            }
            BigInt n;
            try {
                n = detail::parse_bigint(item.substr(0, item.size() - 1));
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("bad heap size in '" + std::string(item) + "'");
            }
            if (n < 0 || n > BigInt(std::numeric_limits<std::uint32_t>::max())) throw std::invalid_argument("heap size out of range in '" + std::string(item) + "'");
            p.heaps.push_back({item.back() == 'b' ? Color::blue : Color::red, n.convert_to<std::uint64_t>()});
            if (plus == std::string_view::npos) break;
            start = plus + 1;
        }
        return p;
    }

    friend bool operator==(const Position&, const Position&) = default;
};

struct Move {
    Player player = Player::left;
    std::size_t heap_index = 0;
    std::uint64_t amount = 0;
    Position result;

    /// "18r -> 3r"
    std::string to_string(const Position& from) const {
        const Heap& h = from.heaps.at(heap_index);
        Heap after{h.color, h.size - amount};
        return h.to_string() + " -> " + after.to_string();
    }
};

/// Canonical value of a position: blue heaps add, red heaps subtract.
inline GameId position_value(Universe& u, NuggetOracle& oracle, const Position& p) {
    GameId sum = u.zero();
    for (const Heap& h : p.heaps) {
        GameId v = oracle.heap(h.size);
        sum = u.add(sum, h.color == Color::blue ? v : u.negate(v));
    }
    return sum;
}

/// Plays positions out directly (no game values): memoized on the multiset
/// of nonempty heaps and the player to move.
class PositionSolver {
public:
    explicit PositionSolver(std::uint64_t bound = NuggetOracle::default_bound) : bound_(bound) {}

    /// Whether `mover`, moving first, wins.
    bool wins_first(const Position& p, Player mover) {
        check(p);
        return wins(normalize(p), mover);
    }

    Outcome outcome(const Position& p) {
        bool lw = wins_first(p, Player::left);
        bool rw = wins_first(p, Player::right);
        return lw && rw ? Outcome::N : lw ? Outcome::L : rw ? Outcome::R : Outcome::P;
    }

    /// All moves for `mover`, heaps in order, amounts ascending.
    static std::vector<Move> moves(const Position& p, Player mover) {
        std::vector<Move> out;
        for (std::size_t i = 0; i < p.heaps.size(); ++i) {
            for (std::uint64_t k = 1; k <= p.heaps[i].size; ++k) {
                if (!can_subtract(mover, p.heaps[i].color, k)) continue;
                Move m{mover, i, k, p};
                m.result.heaps[i].size -= k;
                out.push_back(std::move(m));
            }
        }
        return out;
    }

    /// First move (smallest heap index, then smallest amount) after which
    /// the mover wins moving second.
    std::optional<Move> winning_move(const Position& p, Player mover) {
        check(p);
        Player other = mover == Player::left ? Player::right : Player::left;
        for (Move& m : moves(p, mover)) {
            if (!wins(normalize(m.result), other)) return std::move(m);
        }
        return std::nullopt;
    }

private:
    using Key = std::vector<Heap>;

    void check(const Position& p) const {
        if (p.largest_heap() > bound_) {
            throw resource_limit("heap " + std::to_string(p.largest_heap()) + " exceeds the oracle bound " + std::to_string(bound_) +
                                 " (raise it with --oracle-bound)");
        }
    }

    static Key normalize(const Position& p) {
        Key k;
        for (const Heap& h : p.heaps) {
            if (h.size > 0) k.push_back(h);
        }
        std::sort(k.begin(), k.end());
        return k;
    }

    bool wins(const Key& key, Player mover) {
        auto& memo = mover == Player::left ? left_ : right_;
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Player other = mover == Player::left ? Player::right : Player::left;
        bool result = false;
        for (std::size_t i = 0; i < key.size() && !result; ++i) {
            if (i > 0 && key[i] == key[i - 1]) continue;
            for (std::uint64_t k = 1; k <= key[i].size && !result; ++k) {
                if (!can_subtract(mover, key[i].color, k)) continue;
                Key next = key;
                next[i].size -= k;
                if (next[i].size == 0) next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
                std::sort(next.begin(), next.end());
                result = !wins(next, other);
            }
        }
        memo.emplace(key, result);
        return result;
    }

    std::uint64_t bound_;
    std::map<Key, bool> left_, right_;
};

}  // namespace goldnug
