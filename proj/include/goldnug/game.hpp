#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "goldnug/dyadic.hpp"

namespace goldnug {

/// Handle to a game stored in a Universe. Two ids are equal iff their
/// records (option sets) are structurally equal.
struct GameId {
    std::uint32_t value = 0;
    friend auto operator<=>(GameId, GameId) = default;
};

struct GameRecord {
    std::vector<GameId> left;
    std::vector<GameId> right;
    friend bool operator==(const GameRecord&, const GameRecord&) = default;
};

enum class Outcome { L, R, N, P };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::L: return "L";
        case Outcome::R: return "R";
        case Outcome::N: return "N";
        case Outcome::P: return "P";
    }
    return "?";
}

/// Thrown when a game has no stop because it is neither a number nor has
/// options on the relevant side. Cannot happen for canonical forms.
class malformed_game : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

struct RecordHash {
    std::size_t operator()(const GameRecord& r) const noexcept {
        std::size_t h = r.left.size() * 0x9e3779b97f4a7c15ULL + r.right.size();
        for (GameId g : r.left) h = (h ^ g.value) * 0x100000001b3ULL;
        h ^= 0xff51afd7ed558ccdULL;
        for (GameId g : r.right) h = (h ^ g.value) * 0x100000001b3ULL;
        return h;
    }
};

inline std::uint64_t pair_key(GameId a, GameId b) { return (std::uint64_t(a.value) << 32) | b.value; }

inline void sort_unique(std::vector<GameId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// Arena of hash-consed short partizan games plus memo tables for every
/// derived quantity. A Universe is single-threaded: callers sharing one
/// across threads must serialize access.
///
/// Every operation accepts arbitrary (non-canonical) ids. Operations that
/// produce values (add, negate, from_number, canonical_form) return
/// canonical forms, except negate which preserves shape.
class Universe {
public:
    Universe() {
        zero_ = intern(GameRecord{});
        numbers_.emplace(zero_.value, Dyadic(0));
        number_ids_.emplace(Dyadic(0), zero_);
        canonical_.emplace(zero_.value, zero_);
    }

    Universe(const Universe&) = delete;
    Universe& operator=(const Universe&) = delete;
    Universe(Universe&&) = default;
    Universe& operator=(Universe&&) = default;

    GameId zero() const { return zero_; }
    std::size_t size() const { return records_.size(); }
    bool valid(GameId g) const { return g.value < records_.size(); }

    const GameRecord& record(GameId g) const {
        check(g);
        return records_[g.value];
    }
    std::span<const GameId> left_options(GameId g) const { return record(g).left; }
    std::span<const GameId> right_options(GameId g) const { return record(g).right; }

    /// Get-or-insert the game {left | right}. Option lists are sorted and
    /// deduplicated, so the returned id depends only on the option sets.
    GameId make_game(std::vector<GameId> left, std::vector<GameId> right) {
        for (GameId g : left) check(g);
        for (GameId g : right) check(g);
        detail::sort_unique(left);
        detail::sort_unique(right);
        return intern(GameRecord{std::move(left), std::move(right)});
    }

    /// Canonical form of the number d: integers as unary chains, other
    /// dyadics as {d - 2^-k | d + 2^-k}.
    GameId from_number(const Dyadic& d) {
        if (auto it = number_ids_.find(d); it != number_ids_.end()) return it->second;
        GameId id;
        if (d.is_integer()) {
            if (d.sign() > 0) {
                id = intern(GameRecord{{from_number(d - Dyadic(1))}, {}});
            } else {
                id = intern(GameRecord{{}, {from_number(d + Dyadic(1))}});
            }
        } else {
            Dyadic step(BigInt(1), d.exponent());
            GameId lo = from_number(d - step);
            GameId hi = from_number(d + step);
            id = intern(GameRecord{{lo}, {hi}});
        }
        number_ids_.emplace(d, id);
        numbers_.emplace(id.value, d);
        canonical_.emplace(id.value, id);
        return id;
    }

    /// Structural negation: swaps and negates option sets recursively.
    GameId negate(GameId g) {
        check(g);
        if (auto it = negation_.find(g.value); it != negation_.end()) return it->second;
        GameId result;
        if (auto n = numbers_.find(g.value); n != numbers_.end()) {
            result = from_number(-n->second);
        } else {
            const GameRecord rec = records_[g.value];
            std::vector<GameId> left, right;
            left.reserve(rec.right.size());
            right.reserve(rec.left.size());
            for (GameId r : rec.right) left.push_back(negate(r));
            for (GameId l : rec.left) right.push_back(negate(l));
            result = make_game(std::move(left), std::move(right));
            if (auto c = canonical_.find(g.value); c != canonical_.end() && c->second == g) {
                canonical_.emplace(result.value, result);
            }
        }
        negation_.emplace(g.value, result);
        negation_.emplace(result.value, g);
        return result;
    }

    /// Canonical form of the disjunctive sum g + h.
    GameId add(GameId g, GameId h) {
        GameId a = canonical_form(g);
        GameId b = canonical_form(h);
        if (a == zero_) return b;
        if (b == zero_) return a;
        if (b < a) std::swap(a, b);
        std::uint64_t key = detail::pair_key(a, b);
        if (auto it = sums_.find(key); it != sums_.end()) return it->second;
        GameId result;
        auto na = numbers_.find(a.value);
        auto nb = numbers_.find(b.value);
        if (na != numbers_.end() && nb != numbers_.end()) {
            result = from_number(na->second + nb->second);
        } else {
            const GameRecord ra = records_[a.value];
            const GameRecord rb = records_[b.value];
            std::vector<GameId> left, right;
            for (GameId x : ra.left) left.push_back(add(x, b));
            for (GameId x : rb.left) left.push_back(add(a, x));
            for (GameId x : ra.right) right.push_back(add(x, b));
            for (GameId x : rb.right) right.push_back(add(a, x));
            result = canonical_form(make_game(std::move(left), std::move(right)));
        }
        sums_.emplace(key, result);
        return result;
    }

    GameId subtract(GameId g, GameId h) { return add(g, negate(canonical_form(h))); }

    /// g >= h: Left wins g - h moving second. No Right option of g is <= h
    /// and no Left option of h is >= g.
    bool geq(GameId g, GameId h) {
        check(g);
        check(h);
        if (g == h) return true;
        auto ng = numbers_.find(g.value);
        auto nh = numbers_.find(h.value);
        if (ng != numbers_.end() && nh != numbers_.end()) return ng->second >= nh->second;
        std::uint64_t key = detail::pair_key(g, h);
        if (auto it = geq_.find(key); it != geq_.end()) return it->second;
        // geq never interns, so these references stay valid
        bool result = true;
        const GameRecord& rg = records_[g.value];
        const GameRecord& rh = records_[h.value];
        for (std::size_t i = 0; result && i < rg.right.size(); ++i) {
            if (geq(h, rg.right[i])) result = false;
        }
        for (std::size_t i = 0; result && i < rh.left.size(); ++i) {
            if (geq(rh.left[i], g)) result = false;
        }
        geq_.emplace(key, result);
        return result;
    }

    bool equal(GameId g, GameId h) { return geq(g, h) && geq(h, g); }

    Outcome outcome(GameId g) {
        bool left_second = geq(g, zero_);
        bool right_second = geq(zero_, g);
        if (left_second && right_second) return Outcome::P;
        if (left_second) return Outcome::L;
        if (right_second) return Outcome::R;
        return Outcome::N;
    }

    /// Value of g if g equals a number.
    std::optional<Dyadic> as_number(GameId g) {
        GameId c = canonical_form(g);
        if (auto it = numbers_.find(c.value); it != numbers_.end()) return it->second;
        return std::nullopt;
    }

    Dyadic left_stop(GameId g) { return stop(canonical_form(g), true); }
    Dyadic right_stop(GameId g) { return stop(canonical_form(g), false); }

    /// Removes dominated options and bypasses reversible ones until neither
    /// applies. Children are canonicalized first.
    GameId canonical_form(GameId g) {
        check(g);
        if (auto it = canonical_.find(g.value); it != canonical_.end()) return it->second;
        const GameRecord rec = records_[g.value];
        std::vector<GameId> left, right;
        left.reserve(rec.left.size());
        right.reserve(rec.right.size());
        for (GameId x : rec.left) left.push_back(canonical_form(x));
        for (GameId x : rec.right) right.push_back(canonical_form(x));
        detail::sort_unique(left);
        detail::sort_unique(right);

        GameId result;
        if (auto x = number_between(left, right)) {
            result = from_number(*x);
        } else {
            reduce(left, right);
            if (auto y = number_between(left, right)) {
                result = from_number(*y);
            } else {
                result = make_game(std::move(left), std::move(right));
            }
        }
        canonical_.emplace(g.value, result);
        canonical_.emplace(result.value, result);
        return result;
    }

    bool is_canonical(GameId g) { return canonical_form(g) == g; }

    /// Number value for ids already known to be canonical number forms;
    /// does no computation.
    std::optional<Dyadic> known_number(GameId g) const {
        if (auto it = numbers_.find(g.value); it != numbers_.end()) return it->second;
        return std::nullopt;
    }

    /// Number of nodes reachable from g (including g).
    std::size_t dag_size(GameId g) const {
        std::vector<std::uint32_t> stack{g.value};
        std::vector<bool> seen(records_.size());
        std::size_t count = 0;
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            if (seen[v]) continue;
            seen[v] = true;
            ++count;
            for (GameId o : records_[v].left) stack.push_back(o.value);
            for (GameId o : records_[v].right) stack.push_back(o.value);
        }
        return count;
    }

    /// Longest move sequence from g, alternating or not.
    std::size_t depth(GameId g) {
        check(g);
        if (auto it = depth_.find(g.value); it != depth_.end()) return it->second;
        std::size_t d = 0;
        const GameRecord rec = records_[g.value];
        for (GameId o : rec.left) d = std::max(d, depth(o) + 1);
        for (GameId o : rec.right) d = std::max(d, depth(o) + 1);
        depth_.emplace(g.value, d);
        return d;
    }

private:
    void check(GameId g) const {
        if (g.value >= records_.size()) throw std::invalid_argument("unknown game id " + std::to_string(g.value));
    }

    GameId intern(GameRecord rec) {
        if (auto it = index_.find(rec); it != index_.end()) return it->second;
        GameId id{static_cast<std::uint32_t>(records_.size())};
        records_.push_back(rec);
        index_.emplace(std::move(rec), id);
        return id;
    }

    // If every option is a known number and max(left) < min(right), the
    // simplest number in between.
    std::optional<Dyadic> number_between(const std::vector<GameId>& left, const std::vector<GameId>& right) const {
        std::optional<Dyadic> lo, hi;
        for (GameId x : left) {
            auto it = numbers_.find(x.value);
            if (it == numbers_.end()) return std::nullopt;
            if (!lo || it->second > *lo) lo = it->second;
        }
        for (GameId x : right) {
            auto it = numbers_.find(x.value);
            if (it == numbers_.end()) return std::nullopt;
            if (!hi || it->second < *hi) hi = it->second;
        }
        if (lo && hi) {
            if (!(*lo < *hi)) return std::nullopt;
            return simplest_number(*lo, *hi);
        }
        if (lo) return lo->sign() < 0 ? Dyadic(0) : Dyadic(lo->floor() + 1);
        if (hi) return hi->sign() > 0 ? Dyadic(0) : Dyadic(hi->ceil() - 1);
        return Dyadic(0);
    }

    // Domination and reversal on canonical option lists, to a fixed point.
    void reduce(std::vector<GameId>& left, std::vector<GameId>& right) {
        for (bool changed = true; changed;) {
            changed = false;
            remove_dominated(left, true);
            remove_dominated(right, false);

            GameId current = make_game(left, right);
            for (std::size_t i = 0; i < left.size() && !changed; ++i) {
                for (GameId lr : records_[left[i].value].right) {
                    if (geq(current, lr)) {
                        std::vector<GameId> replacement = records_[lr.value].left;
                        left.erase(left.begin() + static_cast<std::ptrdiff_t>(i));
                        left.insert(left.end(), replacement.begin(), replacement.end());
                        detail::sort_unique(left);
                        changed = true;
                        break;
                    }
                }
            }
            if (changed) continue;
            for (std::size_t i = 0; i < right.size() && !changed; ++i) {
                for (GameId rl : records_[right[i].value].left) {
                    if (geq(rl, current)) {
                        std::vector<GameId> replacement = records_[rl.value].right;
                        right.erase(right.begin() + static_cast<std::ptrdiff_t>(i));
                        right.insert(right.end(), replacement.begin(), replacement.end());
                        detail::sort_unique(right);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    // Left keeps maximal options, Right keeps minimal ones. Options are
    // canonical and distinct, so no two of them are equal.
    void remove_dominated(std::vector<GameId>& opts, bool left_side) {
        std::vector<GameId> kept;
        for (std::size_t i = 0; i < opts.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < opts.size() && !dominated; ++j) {
                if (i == j) continue;
                dominated = left_side ? geq(opts[j], opts[i]) : geq(opts[i], opts[j]);
            }
            if (!dominated) kept.push_back(opts[i]);
        }
        opts = std::move(kept);
    }

    // g must be canonical.
    Dyadic stop(GameId g, bool left) {
        if (auto it = numbers_.find(g.value); it != numbers_.end()) return it->second;
        auto& memo = left ? left_stops_ : right_stops_;
        if (auto it = memo.find(g.value); it != memo.end()) return it->second;
        const GameRecord rec = records_[g.value];
        const auto& opts = left ? rec.left : rec.right;
        if (opts.empty()) {
            throw malformed_game("game " + std::to_string(g.value) + " has no " + (left ? "Left" : "Right") +
                                 " options and is not a number");
        }
        std::optional<Dyadic> best;
        for (GameId o : opts) {
            Dyadic s = stop(o, !left);
            if (!best || (left ? s > *best : s < *best)) best = s;
        }
        memo.emplace(g.value, *best);
        return *best;
    }

    std::vector<GameRecord> records_;
    std::unordered_map<GameRecord, GameId, detail::RecordHash> index_;
    GameId zero_{};

    std::unordered_map<std::uint32_t, Dyadic> numbers_;  // canonical number forms only
    std::unordered_map<Dyadic, GameId> number_ids_;
    std::unordered_map<std::uint32_t, GameId> canonical_;
    std::unordered_map<std::uint32_t, GameId> negation_;
    std::unordered_map<std::uint64_t, GameId> sums_;
    std::unordered_map<std::uint64_t, bool> geq_;
    std::unordered_map<std::uint32_t, Dyadic> left_stops_;
    std::unordered_map<std::uint32_t, Dyadic> right_stops_;
    std::unordered_map<std::uint32_t, std::size_t> depth_;
};

}  // namespace goldnug
