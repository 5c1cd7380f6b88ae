#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "goldnug/game.hpp"

namespace goldnug {

/// A computation would exceed the configured size bound.
class resource_limit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical forms of single heaps in a complementary subtraction game:
/// Left may subtract k when left_move(k) holds, Right when it does not.
/// Heaps are built bottom-up and memoized; heaps above `bound` are refused.
class SubtractionOracle {
public:
    SubtractionOracle(Universe& u, std::function<bool(std::size_t)> left_move, std::size_t bound)
        : u_(u), left_move_(std::move(left_move)), bound_(bound) {}

    std::size_t bound() const { return bound_; }
    void set_bound(std::size_t b) { bound_ = b; }

    /// Games already computed, i.e. heaps 0 .. computed()-1.
    std::size_t computed() const { return values_.size(); }

    GameId heap(std::size_t h) {
        if (h > bound_) {
            throw resource_limit("heap " + std::to_string(h) + " exceeds the oracle bound " + std::to_string(bound_) +
                                 " (raise it with --oracle-bound)");
        }
        while (values_.size() <= h) {
            std::size_t n = values_.size();
            std::vector<GameId> left, right;
            for (std::size_t k = 1; k <= n; ++k) {
                (left_move_(k) ? left : right).push_back(values_[n - k]);
            }
            values_.push_back(u_.canonical_form(u_.make_game(std::move(left), std::move(right))));
        }
        return values_[h];
    }

private:
    Universe& u_;
    std::function<bool(std::size_t)> left_move_;
    std::size_t bound_;
    std::vector<GameId> values_;
};

}  // namespace goldnug
