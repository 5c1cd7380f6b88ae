#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "goldnug/dyadic.hpp"

namespace goldnug {

/// Integer types the number-theory templates accept.
template <class T>
concept FibInteger = std::same_as<T, BigInt> || std::same_as<T, std::uint64_t> || std::same_as<T, std::int64_t>;

namespace detail {

template <FibInteger Int>
const std::vector<Int>& fib_table() {
    // index i holds F_{i-1}, so F_{-1} = 1 sits at 0
    static const std::vector<Int> table = [] {
        std::vector<Int> t{Int(1), Int(0), Int(1)};
        constexpr std::size_t big_limit = 512;
        for (;;) {
            const Int& a = t[t.size() - 1];
            const Int& b = t[t.size() - 2];
            if constexpr (std::is_same_v<Int, BigInt>) {
                if (t.size() >= big_limit) break;
            } else {
                if (a > std::numeric_limits<Int>::max() - b) break;
            }
            t.push_back(a + b);
        }
        return t;
    }();
    return table;
}

}  // namespace detail

/// F_n with F_{-1} = 1, F_0 = 0, F_1 = F_2 = 1.
template <FibInteger Int = BigInt>
Int fib(int n) {
    if (n < -1) throw std::invalid_argument("fib: index must be >= -1, got " + std::to_string(n));
    const auto& t = detail::fib_table<Int>();
    auto at = static_cast<std::size_t>(n + 1);
    if (at < t.size()) return t[at];
    if constexpr (!std::is_same_v<Int, BigInt>) {
        throw std::overflow_error("fib: F_" + std::to_string(n) + " does not fit");
    } else {
        BigInt a = t[t.size() - 2], b = t[t.size() - 1];
        for (std::size_t i = t.size(); i <= at; ++i) {
            BigInt c = a + b;
            a = std::move(b);
            b = std::move(c);
        }
        return b;
    }
}

/// A multiset of Fibonacci indices: index -> multiplicity (1 or 2).
struct FibRepr {
    enum class Kind { zeckendorf, least_odd, even };

    std::map<int, int> terms;
    Kind kind = Kind::zeckendorf;

    template <FibInteger Int = BigInt>
    Int value() const {
        Int v = 0;
        for (auto [index, mult] : terms) v += Int(mult) * fib<Int>(index);
        return v;
    }

    int least_index() const { return terms.empty() ? 0 : terms.begin()->first; }
    int greatest_index() const { return terms.empty() ? 0 : terms.rbegin()->first; }
    int multiplicity(int index) const {
        auto it = terms.find(index);
        return it == terms.end() ? 0 : it->second;
    }

    /// Whether the terms satisfy the invariants of `kind`.
    bool valid() const {
        if (terms.empty()) return false;
        for (auto [index, mult] : terms) {
            if (index < 1 || mult < 1 || mult > 2) return false;
        }
        switch (kind) {
            case Kind::zeckendorf:
            case Kind::least_odd: {
                int prev = -10;
                for (auto [index, mult] : terms) {
                    if (mult != 1 || index - prev < 2) return false;
                    prev = index;
                }
                return kind == Kind::zeckendorf ? least_index() >= 2 : least_index() % 2 == 1;
            }
            case Kind::even: {
                int last_two = -1;
                for (auto [index, mult] : terms) {
                    if (index % 2 != 0) return false;
                    if (mult == 2) {
                        if (last_two > 0) {
                            // some even index strictly between must be unused
                            bool gap = false;
                            for (int k = last_two + 2; k < index && !gap; k += 2) gap = multiplicity(k) == 0;
                            if (!gap) return false;
                        }
                        last_two = index;
                    }
                }
                return true;
            }
        }
        return false;
    }

    /// "F11+F8+F5+F3" (descending; a 2 prints as "2F10").
    std::string to_text() const {
        std::string out;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            if (!out.empty()) out += '+';
            if (it->second == 2) out += '2';
            out += 'F' + std::to_string(it->first);
        }
        return out;
    }

    /// One digit per index from the greatest down to index 2 (Zeckendorf)
    /// or index 1 (other kinds), most significant first: E(110) = "2000000000".
    std::string to_digits() const {
        std::string out;
        int low = kind == Kind::zeckendorf ? 2 : 1;
        for (int k = greatest_index(); k >= low; --k) out += static_cast<char>('0' + multiplicity(k));
        return out;
    }

    /// Parses either "F11+F8+2F5" or a digit string; the result is
    /// checked against the invariants of `kind`.
    static FibRepr parse(std::string_view text, Kind kind) {
        FibRepr r;
        r.kind = kind;
        if (text.find('F') != std::string_view::npos) {
            std::size_t i = 0;
            while (i < text.size()) {
                int mult = 1;
                if (text[i] >= '0' && text[i] <= '9') {
                    mult = text[i] - '0';
                    ++i;
                }
                if (i >= text.size() || text[i] != 'F') throw std::invalid_argument("bad representation '" + std::string(text) + "'");
                ++i;
                int index = 0;
                std::size_t start = i;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') index = index * 10 + (text[i++] - '0');
                if (i == start) throw std::invalid_argument("bad representation '" + std::string(text) + "'");
                r.terms[index] += mult;
                if (i < text.size()) {
                    if (text[i] != '+') throw std::invalid_argument("bad representation '" + std::string(text) + "'");
                    ++i;
                }
            }
        } else {
            int low = kind == Kind::zeckendorf ? 2 : 1;
            int index = low + static_cast<int>(text.size()) - 1;
            for (char c : text) {
                if (c < '0' || c > '2') throw std::invalid_argument("bad digit string '" + std::string(text) + "'");
                if (c != '0') r.terms[index] = c - '0';
                --index;
            }
        }
        if (!r.valid()) throw std::invalid_argument("'" + std::string(text) + "' violates the representation rules");
        return r;
    }

    friend bool operator==(const FibRepr&, const FibRepr&) = default;
};

inline const char* to_string(FibRepr::Kind k) {
    switch (k) {
        case FibRepr::Kind::zeckendorf: return "zeckendorf";
        case FibRepr::Kind::least_odd: return "least-odd";
        case FibRepr::Kind::even: return "even";
    }
    return "?";
}

namespace detail {

template <FibInteger Int>
void require_positive(const Int& x, const char* what) {
    if (x <= Int(0)) throw std::invalid_argument(std::string(what) + ": argument must be positive");
}

// Largest k >= min_index (stepping by `step`) with F_k <= x.
template <FibInteger Int>
int largest_fib_index_at_most(const Int& x, int min_index, int step) {
    int k = min_index;
    while (fib<Int>(k + step) <= x) k += step;
    return k;
}

}  // namespace detail

/// Greedy Zeckendorf representation: distinct, non-consecutive, indices >= 2.
template <FibInteger Int = BigInt>
FibRepr zeckendorf(Int x) {
    detail::require_positive(x, "zeckendorf");
    FibRepr r;
    r.kind = FibRepr::Kind::zeckendorf;
    int k = detail::largest_fib_index_at_most<Int>(x, 2, 1);
    while (x > Int(0)) {
        while (fib<Int>(k) > x) --k;
        r.terms[k] = 1;
        x -= fib<Int>(k);
        k -= 2;
    }
    return r;
}

/// Least index of Z(x).
template <FibInteger Int = BigInt>
int z1(Int x) {
    detail::require_positive(x, "z1");
    // peel off the greedy terms; the last one taken is the least
    int k = detail::largest_fib_index_at_most<Int>(x, 2, 1);
    int last = k;
    while (x > Int(0)) {
        while (fib<Int>(k) > x) --k;
        x -= fib<Int>(k);
        last = k;
        k -= 2;
    }
    return last;
}

/// Zeckendorf, with a trailing even-index term F_2k expanded to
/// F_{2k-1} + F_{2k-3} + ... + F_1 so that the least index is odd.
template <FibInteger Int = BigInt>
FibRepr least_odd(const Int& x) {
    FibRepr r = zeckendorf<Int>(x);
    r.kind = FibRepr::Kind::least_odd;
    int low = r.least_index();
    if (low % 2 == 0) {
        r.terms.erase(low);
        for (int k = low - 1; k >= 1; k -= 2) r.terms[k] = 1;
    }
    return r;
}

/// Even representation by repeatedly subtracting the largest even-indexed
/// Fibonacci number not exceeding the remainder.
template <FibInteger Int = BigInt>
FibRepr even_repr(Int x) {
    detail::require_positive(x, "even_repr");
    FibRepr r;
    r.kind = FibRepr::Kind::even;
    int k = detail::largest_fib_index_at_most<Int>(x, 2, 2);
    while (x > Int(0)) {
        while (fib<Int>(k) > x) k -= 2;
        r.terms[k] += 1;
        x -= fib<Int>(k);
    }
    return r;
}

/// Rewrites a Zeckendorf representation into the even one by eliminating
/// the least odd index each step: F3 -> 2F2, F_n + F_{n-3} -> 2F_{n-1},
/// otherwise F_n -> F_{n-1} + F_{n-2}.
inline FibRepr ze_transform(const FibRepr& z) {
    if (z.kind != FibRepr::Kind::zeckendorf || !z.valid()) throw std::invalid_argument("ze_transform: input is not a Zeckendorf representation");
    FibRepr r = z;
    r.kind = FibRepr::Kind::even;
    auto bump = [&](int index, int by) {
        if ((r.terms[index] += by) == 0) r.terms.erase(index);
    };
    for (;;) {
        int n = 0;
        for (auto [index, mult] : r.terms) {
            if (index % 2 == 1) {
                n = index;
                break;
            }
        }
        if (n == 0) break;
        if (n == 1) {
            // F1 = F2
            bump(1, -1);
            bump(2, 1);
        } else if (n == 3) {
            bump(3, -1);
            bump(2, 2);
        } else if (r.multiplicity(n - 3) > 0) {
            bump(n, -1);
            bump(n - 3, -1);
            bump(n - 1, 2);
        } else {
            bump(n, -1);
            bump(n - 1, 1);
            bump(n - 2, 1);
        }
    }
    return r;
}

template <FibInteger Int = BigInt>
bool in_a(const Int& x) {
    return z1<Int>(x) % 2 == 0;
}

template <FibInteger Int = BigInt>
bool in_b(const Int& x) {
    return z1<Int>(x) % 2 == 1;
}

/// A(n) = floor(n * phi), as the left shift of the least-odd representation of n.
template <FibInteger Int = BigInt>
Int a_seq(const Int& n) {
    if (n < Int(0)) throw std::invalid_argument("a_seq: n must be >= 0");
    if (n == Int(0)) return Int(0);
    Int v = 0;
    for (auto [index, mult] : least_odd<Int>(n).terms) v += fib<Int>(index + 1);
    return v;
}

/// B(n) = floor(n * phi^2) = A(n) + n.
template <FibInteger Int = BigInt>
Int b_seq(const Int& n) {
    return a_seq<Int>(n) + n;
}

/// The n with A(n) = x; x must be in A.
template <FibInteger Int = BigInt>
Int a_inverse(const Int& x) {
    if (x == Int(0)) return Int(0);
    FibRepr z = zeckendorf<Int>(x);
    if (z.least_index() % 2 != 0) throw std::invalid_argument("a_inverse: argument is not in A");
    Int n = 0;
    for (auto [index, mult] : z.terms) n += fib<Int>(index - 1);
    return n;
}

/// The n with B(n) = x; x must be in B.
template <FibInteger Int = BigInt>
Int b_inverse(const Int& x) {
    if (x == Int(0)) return Int(0);
    FibRepr z = zeckendorf<Int>(x);
    if (z.least_index() % 2 != 1) throw std::invalid_argument("b_inverse: argument is not in B");
    Int n = 0;
    for (auto [index, mult] : z.terms) n += fib<Int>(index - 2);
    return n;
}

/// Applies a composition written as a word over {A, B}, rightmost letter
/// first: compose_ab("AB", n) = A(B(n)).
template <FibInteger Int = BigInt>
Int compose_ab(std::string_view word, Int i) {
    if (i < Int(0)) throw std::invalid_argument("compose_ab: argument must be >= 0");
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (*it) {
            case 'A': i = a_seq<Int>(i); break;
            case 'B': i = b_seq<Int>(i); break;
            default: throw std::invalid_argument("compose_ab: word must be over {A,B}, got '" + std::string(word) + "'");
        }
    }
    return i;
}

// --- Fibonacci words ------------------------------------------------------

using Word = std::string;

/// phi^n(a) under a -> ab, b -> a.
inline Word morphism_power(int n) {
    if (n < 0) throw std::invalid_argument("morphism_power: n must be >= 0");
    Word prev = "a", cur = "ab";
    if (n == 0) return prev;
    for (int k = 2; k <= n; ++k) {
        Word next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Applies the morphism once to an arbitrary word.
inline Word apply_morphism(std::string_view w) {
    Word out;
    out.reserve(w.size() * 2);
    for (char c : w) {
        if (c == 'a') {
            out += "ab";
        } else if (c == 'b') {
            out += 'a';
        } else {
            throw std::invalid_argument("apply_morphism: word must be over {a,b}");
        }
    }
    return out;
}

/// Prefix of the Fibonacci word, or of the Wythoff word b + (Fibonacci
/// word) when with_leading_b is set.
inline Word word_prefix(std::size_t len, bool with_leading_b) {
    std::size_t need = with_leading_b ? (len == 0 ? 0 : len - 1) : len;
    Word prev = "a", cur = "ab";
    while (cur.size() < need) {
        Word next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    Word body = cur.substr(0, need);
    if (!with_leading_b) return body;
    return len == 0 ? Word{} : "b" + body;
}

inline std::size_t count_letter(std::string_view w, char c) {
    std::size_t n = 0;
    for (char x : w) n += x == c;
    return n;
}

/// S_{nb,na}(w) = nb * |w|_b + na * |w|_a.
inline BigInt weighted_count(std::string_view w, const BigInt& nb, const BigInt& na) {
    return nb * BigInt(count_letter(w, 'b')) + na * BigInt(count_letter(w, 'a'));
}

inline bool is_palindrome(std::string_view w) {
    for (std::size_t i = 0, j = w.size(); i < j; ++i, --j) {
        if (w[i] != w[j - 1]) return false;
    }
    return true;
}

}  // namespace goldnug
