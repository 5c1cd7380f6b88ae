#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "goldnug/dyadic.hpp"
#include "goldnug/fibonacci.hpp"
#include "goldnug/game.hpp"
#include "goldnug/subtraction.hpp"

namespace goldnug {

/// alpha = (a + b sqrt(d)) / c, with d not a perfect square and c > 0.
struct QuadraticIrrational {
    BigInt a = 0, b = 1, d = 2, c = 1;

    /// floor(n * alpha), exact.
    BigInt floor_times(const BigInt& n) const {
        BigInt p = n * a;
        BigInt q = n * b;
        BigInt s;  // floor(q sqrt d)
        if (q == 0) {
            s = 0;
        } else if (q > 0) {
            s = boost::multiprecision::sqrt(BigInt(q * q * d));
        } else {
            s = -boost::multiprecision::sqrt(BigInt(q * q * d)) - 1;
        }
        // q sqrt d is irrational, so floor((p + q sqrt d) / c) = floor((p + s) / c)
        return floor_div(p + s, c);
    }

    /// alpha > x for a rational x = num / den (den > 0).
    bool greater_than(const BigInt& num, const BigInt& den) const {
        // (a + b sqrt d) / c > num / den  <=>  b den sqrt d > num c - a den
        BigInt lhs = b * den;
        BigInt rhs = num * c - a * den;
        return compare_sqrt(lhs, rhs) > 0;
    }

    /// The complementary Beatty parameter beta = alpha / (alpha - 1).
    QuadraticIrrational complement() const {
        BigInt na = a * a - a * c - b * b * d;
        BigInt nb = -b * c;
        BigInt nc = (a - c) * (a - c) - b * b * d;
        if (nc < 0) {
            na = -na;
            nb = -nb;
            nc = -nc;
        }
        return {na, nb, d, nc};
    }

    std::string to_string() const {
        return "(" + a.str() + (b < 0 ? "-" : "+") + BigInt(abs(b)).str() + "*sqrt(" + d.str() + "))/" + c.str();
    }

private:
    static BigInt floor_div(const BigInt& x, const BigInt& y) {
        BigInt q = x / y;
        if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
        return q;
    }

    // sign of (l sqrt d - r), using that l sqrt d is irrational unless l == 0
    int compare_sqrt(const BigInt& l, const BigInt& r) const {
        if (l == 0) return r < 0 ? 1 : (r > 0 ? -1 : 0);
        if (l > 0 && r < 0) return 1;
        if (l < 0 && r > 0) return -1;
        bool bigger_square = l * l * d > r * r;
        if (l > 0) return bigger_square ? 1 : -1;
        return bigger_square ? -1 : 1;
    }
};

/// A complementary subtraction game: Left subtracts members of her set,
/// Right subtracts every other positive integer.
struct CsGameSpec {
    struct GoldenNugget {};
    struct Beatty {
        QuadraticIrrational alpha;
    };
    struct Modular {
        unsigned modulus = 2;
        std::set<unsigned> left_residues;
    };
    struct OddEven {};
    struct Explicit {
        std::set<std::uint64_t> left;
        std::optional<std::set<std::uint64_t>> right;  // if given, must be the complement
    };
    using Kind = std::variant<GoldenNugget, Beatty, Modular, OddEven, Explicit>;

    Kind kind = GoldenNugget{};

    /// Left's moves among 1..max_k (index 0 unused), after checking that the
    /// two subtraction sets are complementary on that range.
    std::vector<bool> left_mask(std::size_t max_k) const {
        std::vector<bool> mask(max_k + 1, false);
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, GoldenNugget>) {
                    for (std::size_t k = 1; k <= max_k; ++k) mask[k] = in_a<std::uint64_t>(k);
                } else if constexpr (std::is_same_v<T, Beatty>) {
                    mark_beatty(mask, s.alpha);
                    std::vector<bool> right(max_k + 1, false);
                    mark_beatty(right, s.alpha.complement());
                    for (std::size_t k = 1; k <= max_k; ++k) {
                        if (mask[k] == right[k]) {
                            throw std::invalid_argument("Beatty spec " + s.alpha.to_string() + " is not complementary at " + std::to_string(k));
                        }
                    }
                } else if constexpr (std::is_same_v<T, Modular>) {
                    for (std::size_t k = 1; k <= max_k; ++k) mask[k] = s.left_residues.count(static_cast<unsigned>(k % s.modulus)) > 0;
                } else if constexpr (std::is_same_v<T, OddEven>) {
                    for (std::size_t k = 1; k <= max_k; ++k) mask[k] = k % 2 == 1;
                } else {
                    for (std::size_t k = 1; k <= max_k; ++k) {
                        mask[k] = s.left.count(k) > 0;
                        if (s.right && (s.right->count(k) > 0) == mask[k]) {
                            throw std::invalid_argument("explicit spec is not complementary at " + std::to_string(k));
                        }
                    }
                }
            },
            kind);
        return mask;
    }

    std::string to_string() const {
        return std::visit(
            [](const auto& s) -> std::string {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, GoldenNugget>) {
                    return "golden";
                } else if constexpr (std::is_same_v<T, Beatty>) {
                    return "beatty:" + s.alpha.to_string();
                } else if constexpr (std::is_same_v<T, Modular>) {
                    std::string out = "mod:" + std::to_string(s.modulus) + ":L=";
                    bool first = true;
                    for (unsigned r : s.left_residues) {
                        if (!first) out += ',';
                        out += std::to_string(r);
                        first = false;
                    }
                    return out;
                } else if constexpr (std::is_same_v<T, OddEven>) {
                    return "oddeven";
                } else {
                    std::string out = "explicit:L={";
                    bool first = true;
                    for (auto k : s.left) {
                        if (!first) out += ',';
                        out += std::to_string(k);
                        first = false;
                    }
                    return out + "}";
                }
            },
            kind);
    }

    /// golden | oddeven | beatty:sqrtD | beatty:A,B,D,C | mod:N:L=r1,r2 |
    /// explicit:L={k1,k2,...}[,R={...}]
    static CsGameSpec parse(std::string_view text);

private:
    static void mark_beatty(std::vector<bool>& mask, const QuadraticIrrational& alpha) {
        std::size_t max_k = mask.size() - 1;
        for (BigInt n = 1;; ++n) {
            BigInt v = alpha.floor_times(n);
            if (v > max_k) break;
            if (v >= 1) mask[v.convert_to<std::size_t>()] = true;
        }
    }
};

namespace detail {

inline std::vector<std::uint64_t> parse_uint_list(std::string_view s, std::string_view whole) {
    std::vector<std::uint64_t> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string_view item = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        BigInt v;
        try {
            v = parse_bigint(item);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad number '" + std::string(item) + "' in game spec '" + std::string(whole) + "'");
        }
        if (v < 0 || v > BigInt(std::numeric_limits<std::uint32_t>::max())) {
            throw std::invalid_argument("number out of range in game spec '" + std::string(whole) + "'");
        }
        out.push_back(v.convert_to<std::uint64_t>());
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string_view strip_braces(std::string_view s, std::string_view whole) {
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw std::invalid_argument("expected {...} in game spec '" + std::string(whole) + "'");
    return s.substr(1, s.size() - 2);
}

}  // namespace detail

inline CsGameSpec CsGameSpec::parse(std::string_view text) {
    auto bad = [&](const std::string& why) { return std::invalid_argument("bad game spec '" + std::string(text) + "': " + why); };
    if (text == "golden" || text == "goldennugget") return {GoldenNugget{}};
    if (text == "oddeven") return {OddEven{}};
    if (text.starts_with("beatty:")) {
        std::string_view arg = text.substr(7);
        QuadraticIrrational alpha;
        if (arg.starts_with("sqrt")) {
            auto d = detail::parse_uint_list(arg.substr(4), text);
            if (d.size() != 1) throw bad("expected sqrtD");
            alpha = {0, 1, d[0], 1};
        } else {
            auto parts = arg;
            std::vector<BigInt> v;
            std::size_t start = 0;
            while (true) {
                std::size_t comma = parts.find(',', start);
                v.push_back(detail::parse_bigint(parts.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
            if (v.size() != 4) throw bad("expected A,B,D,C for (A+B*sqrt(D))/C");
            alpha = {v[0], v[1], v[2], v[3]};
        }
        if (alpha.c <= 0 || alpha.b == 0 || alpha.d < 2) throw bad("need C > 0, B != 0, D >= 2");
        BigInt r = boost::multiprecision::sqrt(alpha.d);
        if (r * r == alpha.d) throw bad("D must not be a perfect square");
        if (!alpha.greater_than(1, 1) || alpha.greater_than(2, 1)) throw bad("alpha must lie in (1, 2)");
        return {Beatty{alpha}};
    }
    if (text.starts_with("mod:")) {
        std::string_view rest = text.substr(4);
        std::size_t colon = rest.find(':');
        if (colon == std::string_view::npos || rest.substr(colon + 1, 2) != "L=") throw bad("expected mod:N:L=r1,r2");
        auto n = detail::parse_uint_list(rest.substr(0, colon), text);
        if (n.size() != 1 || n[0] < 2) throw bad("modulus must be >= 2");
        Modular m;
        m.modulus = static_cast<unsigned>(n[0]);
        for (auto r : detail::parse_uint_list(rest.substr(colon + 3), text)) {
            if (r >= m.modulus) throw bad("residue " + std::to_string(r) + " out of range");
            m.left_residues.insert(static_cast<unsigned>(r));
        }
        return {m};
    }
    if (text.starts_with("explicit:L=")) {
        std::string_view rest = text.substr(11);
        Explicit e;
        std::size_t close = rest.find('}');
        if (close == std::string_view::npos) throw bad("unterminated set");
        for (auto k : detail::parse_uint_list(detail::strip_braces(rest.substr(0, close + 1), text), text)) {
            if (k == 0) throw bad("subtraction amounts must be positive");
            e.left.insert(k);
        }
        rest = rest.substr(close + 1);
        if (!rest.empty()) {
            if (!rest.starts_with(",R=")) throw bad("expected ,R={...}");
            std::set<std::uint64_t> right;
            for (auto k : detail::parse_uint_list(detail::strip_braces(rest.substr(3), text), text)) right.insert(k);
            e.right = std::move(right);
        }
        return {e};
    }
    throw bad("unknown game kind");
}

/// Single-heap outcomes 0..max_h by direct win/lose recursion.
inline std::vector<Outcome> cs_outcomes(const CsGameSpec& spec, std::size_t max_h) {
    std::vector<bool> left = spec.left_mask(max_h);
    std::vector<std::size_t> left_moves, right_moves;
    for (std::size_t k = 1; k <= max_h; ++k) (left[k] ? left_moves : right_moves).push_back(k);

    // left_first[h]: Left moving first wins; right_first likewise
    std::vector<bool> left_first(max_h + 1), right_first(max_h + 1);
    std::vector<Outcome> out(max_h + 1);
    for (std::size_t h = 0; h <= max_h; ++h) {
        bool lw = false, rw = false;
        for (std::size_t k : left_moves) {
            if (k > h) break;
            if (!right_first[h - k]) {
                lw = true;
                break;
            }
        }
        for (std::size_t k : right_moves) {
            if (k > h) break;
            if (!left_first[h - k]) {
                rw = true;
                break;
            }
        }
        left_first[h] = lw;
        right_first[h] = rw;
        out[h] = lw && rw ? Outcome::N : lw ? Outcome::L : rw ? Outcome::R : Outcome::P;
    }
    return out;
}

/// Canonical forms of single heaps of a CS game.
inline SubtractionOracle cs_oracle(Universe& u, const CsGameSpec& spec, std::size_t bound) {
    auto mask = std::make_shared<std::vector<bool>>(spec.left_mask(bound));
    return SubtractionOracle(u, [mask](std::size_t k) { return (*mask)[k]; }, bound);
}

/// Canonical form of heap h in the odd/even game (Left subtracts odd numbers).
inline GameId odd_even_value(Universe& u, std::size_t h, std::size_t bound = 60) {
    if (h > bound) throw resource_limit("heap " + std::to_string(h) + " exceeds the oracle bound " + std::to_string(bound));
    SubtractionOracle oracle(u, [](std::size_t k) { return k % 2 == 1; }, bound);
    return oracle.heap(h);
}

struct PeriodReport {
    std::size_t preperiod = 0;
    std::size_t period = 0;
};

/// Smallest period p <= n/3 (then smallest preperiod s <= n/3) such that the
/// sequence repeats with period p from s on, and the repeating tail spans
/// at least four periods. n is the sequence length.
template <class T>
std::optional<PeriodReport> find_period(const std::vector<T>& seq) {
    std::size_t n = seq.size();
    for (std::size_t p = 1; p <= n / 3; ++p) {
        // last index i with seq[i] != seq[i + p]; the periodic part starts after it
        std::size_t start = 0;
        for (std::size_t i = n - p; i-- > 0;) {
            if (seq[i] != seq[i + p]) {
                start = i + 1;
                break;
            }
        }
        if (start <= n / 3 && n - start >= 4 * p) return PeriodReport{start, p};
    }
    return std::nullopt;
}

inline std::optional<PeriodReport> periodicity_probe(const CsGameSpec& spec, std::size_t max_h) {
    return find_period(cs_outcomes(spec, max_h));
}

}  // namespace goldnug
