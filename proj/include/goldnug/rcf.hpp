#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "goldnug/game.hpp"

namespace goldnug {

/// Infinitesimal-order comparison and reduced canonical form over a
/// Universe. Holds its own memo tables; the Universe must outlive it.
class RcfEngine {
public:
    explicit RcfEngine(Universe& u) : u_(u) {}

    /// g >=_I h, decided by R(g - h) >= 0.
    bool geq_inf(GameId g, GameId h) {
        std::uint64_t key = detail::pair_key(g, h);
        if (auto it = geq_inf_.find(key); it != geq_inf_.end()) return it->second;
        bool result = u_.right_stop(u_.subtract(g, h)) >= Dyadic(0);
        geq_inf_.emplace(key, result);
        return result;
    }

    bool eq_inf(GameId g, GameId h) { return geq_inf(g, h) && geq_inf(h, g); }

    /// Games whose stops agree collapse to that number. Hot games get their
    /// options replaced by reduced forms, then Inf-dominated options are
    /// dropped and Inf-reversible ones bypassed until nothing changes.
    GameId reduced_canonical_form(GameId g) {
        if (auto it = rcf_.find(g.value); it != rcf_.end()) return it->second;
        GameId c = u_.canonical_form(g);
        if (auto it = rcf_.find(c.value); it != rcf_.end()) {
            rcf_.emplace(g.value, it->second);
            return it->second;
        }
        Dyadic ls = u_.left_stop(c);
        Dyadic rs = u_.right_stop(c);
        GameId result;
        if (ls == rs) {
            result = u_.from_number(ls);
        } else {
            const GameRecord rec = u_.record(c);
            std::vector<GameId> left, right;
            for (GameId x : rec.left) left.push_back(reduced_canonical_form(x));
            for (GameId x : rec.right) right.push_back(reduced_canonical_form(x));
            detail::sort_unique(left);
            detail::sort_unique(right);
            reduce(left, right);
            result = u_.make_game(std::move(left), std::move(right));
        }
        rcf_.emplace(g.value, result);
        rcf_.emplace(c.value, result);
        rcf_.emplace(result.value, result);
        return result;
    }

    /// Bypasses skipped because the bypassed game would have been a number.
    std::size_t skipped_bypasses() const { return skipped_bypasses_; }

private:
    void reduce(std::vector<GameId>& left, std::vector<GameId>& right) {
        for (bool changed = true; changed;) {
            changed = false;
            drop_inf_dominated(left, true);
            drop_inf_dominated(right, false);

            GameId current = u_.make_game(left, right);
            changed = bypass(current, left, right, true) || bypass(current, left, right, false);
        }
    }

    // Left drops x when some other y has y >=_I x; Right drops x when
    // x >=_I y. Removal is one at a time so mutually close options keep one
    // representative.
    void drop_inf_dominated(std::vector<GameId>& opts, bool left_side) {
        for (std::size_t i = 0; i < opts.size();) {
            bool dominated = false;
            for (std::size_t j = 0; j < opts.size() && !dominated; ++j) {
                if (i == j) continue;
                dominated = left_side ? geq_inf(opts[j], opts[i]) : geq_inf(opts[i], opts[j]);
            }
            if (dominated) {
                opts.erase(opts.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
    }

    // Left option x is Inf-reversible through its Right option xr when
    // current >=_I xr; it is replaced by xr's Left options. Mirror image
    // for Right. A bypass that would turn the game into a number is not
    // applied.
    bool bypass(GameId current, std::vector<GameId>& left, std::vector<GameId>& right, bool left_side) {
        auto& opts = left_side ? left : right;
        for (std::size_t i = 0; i < opts.size(); ++i) {
            const GameRecord opt = u_.record(opts[i]);
            for (GameId through : left_side ? opt.right : opt.left) {
                bool reversible = left_side ? geq_inf(current, through) : geq_inf(through, current);
                if (!reversible) continue;
                const GameRecord t = u_.record(through);
                std::vector<GameId> next = opts;
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
                const auto& add = left_side ? t.left : t.right;
                next.insert(next.end(), add.begin(), add.end());
                detail::sort_unique(next);
                GameId candidate = left_side ? u_.make_game(next, right) : u_.make_game(left, next);
                if (u_.as_number(candidate)) {
                    ++skipped_bypasses_;
                    continue;
                }
                opts = std::move(next);
                return true;
            }
        }
        return false;
    }

    Universe& u_;
    std::unordered_map<std::uint64_t, bool> geq_inf_;
    std::unordered_map<std::uint32_t, GameId> rcf_;
    std::size_t skipped_bypasses_ = 0;
};

}  // namespace goldnug
