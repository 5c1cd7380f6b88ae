#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "goldnug/dyadic.hpp"
#include "goldnug/fibonacci.hpp"
#include "goldnug/game.hpp"
#include "goldnug/subtraction.hpp"

namespace goldnug {

// Left subtracts members of A, Right members of B.
template <FibInteger Int = BigInt>
bool left_subtraction_ok(const Int& k) {
    if (k <= Int(0)) throw std::invalid_argument("subtraction amount must be positive");
    return in_a<Int>(k);
}

template <FibInteger Int = BigInt>
bool right_subtraction_ok(const Int& k) {
    if (k <= Int(0)) throw std::invalid_argument("subtraction amount must be positive");
    return in_b<Int>(k);
}

/// s(n) = 2/3 (4^n - 1) / 4^n, binary 0.(10)^{n-1}1.
inline Dyadic s_val(unsigned n) {
    BigInt four_n = BigInt(1) << (2 * n);
    return Dyadic(2 * (four_n - 1) / 3, 2 * n);
}

/// q(n) = 2/3 (4^n + 1/2) / 4^n, binary 0.(10)^{n-1}11.
inline Dyadic q_val(unsigned n) {
    BigInt four_n = BigInt(1) << (2 * n);
    return Dyadic((2 * four_n + 1) / 3, 2 * n);
}

/// G_i(n) = A(i) F_{2n+2} + i F_{2n+1} + F_{2n+3} - 2.
template <FibInteger Int = BigInt>
Int g_heap(const Int& i, int n) {
    if (i < Int(0) || n < 1) throw std::invalid_argument("g_heap: need i >= 0 and n >= 1");
    return a_seq<Int>(i) * fib<Int>(2 * n + 2) + i * fib<Int>(2 * n + 1) + fib<Int>(2 * n + 3) - Int(2);
}

struct HeapClass {
    enum class Kind { zero, in_b, in_ab_hat, in_b2_hat, g0, g_switch };
    Kind kind = Kind::zero;
    BigInt n = 0;  // G(n) parameter
    BigInt i = 0;  // index inside G(n)

    friend bool operator==(const HeapClass&, const HeapClass&) = default;

    std::string to_string() const {
        switch (kind) {
            case Kind::zero: return "zero";
            case Kind::in_b: return "B";
            case Kind::in_ab_hat: return "AB0+1";
            case Kind::in_b2_hat: return "B2+1";
            case Kind::g0: return "G(" + n.str() + ") i=0";
            case Kind::g_switch: return "G(" + n.str() + ") i=" + i.str();
        }
        return "?";
    }

    /// True for the classes whose values are numbers in [1/2, 1).
    bool is_number_heap() const { return kind == Kind::in_b2_hat || kind == Kind::g0; }
};

namespace detail {

template <FibInteger Int>
bool in_ab0(const Int& x) {
    if (x == Int(0)) return true;
    if (!in_a<Int>(x)) return false;
    Int y = a_inverse<Int>(x);
    return y >= Int(1) && in_b<Int>(y);
}

template <FibInteger Int>
bool in_b2(const Int& x) {
    if (x < Int(1) || !in_b<Int>(x)) return false;
    return in_b<Int>(b_inverse<Int>(x));
}

}  // namespace detail

/// Locates h in the partition B, AB0 (split into the G(n)), AB0+1, B2+1.
template <FibInteger Int = BigInt>
HeapClass classify(const Int& h) {
    using K = HeapClass::Kind;
    if (h < Int(0)) throw std::invalid_argument("classify: heap must be >= 0");
    if (h == Int(0)) return {K::zero, 0, 0};
    if (in_b<Int>(h)) return {K::in_b, 0, 0};
    Int below = h - Int(1);
    if (detail::in_ab0<Int>(below)) return {K::in_ab_hat, 0, 0};
    if (detail::in_b2<Int>(below)) return {K::in_b2_hat, 0, 0};
    // h in AB: h = B^{n+1}(i) + F_{2n+3} - 2 for exactly one n
    for (int n = 1; fib<Int>(2 * n + 3) - Int(2) <= h; ++n) {
        Int x = h - (fib<Int>(2 * n + 3) - Int(2));
        if (x == Int(0)) return {K::g0, BigInt(n), 0};
        bool ok = true;
        for (int step = 0; step <= n && ok; ++step) {
            ok = in_b<Int>(x);
            if (ok) x = b_inverse<Int>(x);
        }
        if (ok && x >= Int(1)) return {K::g_switch, BigInt(n), BigInt(x)};
    }
    throw std::logic_error("classify: heap " + BigInt(h).str() + " fits no class");
}

/// True for h in Q (B2+1 or F_{2n+3}-2), including 0.
template <FibInteger Int = BigInt>
bool in_q(const Int& h) {
    if (h == Int(0)) return true;
    return classify<Int>(h).is_number_heap();
}

namespace detail {

// Binary digits d_0 . d_1 ... d_k of d in [1/2, 1].
inline std::vector<int> xi_digits(const Dyadic& d) {
    if (d < Dyadic(BigInt(1), 1) || d > Dyadic(1)) throw std::invalid_argument("xi: argument " + d.to_string() + " is outside [1/2, 1]");
    if (d == Dyadic(1)) return {1};
    std::vector<int> bits{0};
    for (unsigned i = d.exponent(); i-- > 0;) bits.push_back(boost::multiprecision::bit_test(d.numerator(), i) ? 1 : 0);
    return bits;
}

// e(0) = 2, e(1) = 4, then repeat the previous index after the digits 01
// and step by two otherwise.
inline int xi_next_index(const std::vector<int>& bits, std::size_t i, int prev) {
    if (i == 0) return 2;
    if (i == 1) return 4;
    return bits[i - 2] == 0 && bits[i - 1] == 1 ? prev : prev + 2;
}

}  // namespace detail

/// The multiset of Fibonacci indices picked out by the digits of d.
inline FibRepr xi_repr(const Dyadic& d) {
    std::vector<int> bits = detail::xi_digits(d);
    FibRepr r;
    r.kind = FibRepr::Kind::even;
    int e = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        e = detail::xi_next_index(bits, i, e);
        if (bits[i]) r.terms[e] += 1;
    }
    return r;
}

/// xi(d) = sum of d_i F_{e(i)}.
template <FibInteger Int = BigInt>
Int xi(const Dyadic& d) {
    return xi_repr(d).value<Int>();
}

/// The dyadic delta in [1/2, 1] with xi(delta) = h, for h in Q. Heaps 0 and
/// 1 map to their values 0 and 1.
template <FibInteger Int = BigInt>
Dyadic xi_inverse(const Int& h) {
    if (h == Int(0)) return Dyadic(0);
    if (h == Int(1)) return Dyadic(1);
    if (h < Int(0) || !in_q<Int>(h)) throw std::domain_error("xi_inverse: heap " + BigInt(h).str() + " is not a number heap");
    // Walk the digits; a digit must be 1 exactly when the current index is
    // still owed by the even representation, since indices never come back.
    FibRepr target = even_repr<Int>(h);
    std::map<int, int> owed = target.terms;
    std::vector<int> bits;
    int e = 0;
    while (!owed.empty()) {
        std::size_t i = bits.size();
        e = detail::xi_next_index(bits, i, e);
        if (e > target.greatest_index()) throw std::domain_error("xi_inverse: no digit string reaches " + BigInt(h).str());
        auto it = owed.find(e);
        if (it != owed.end()) {
            bits.push_back(1);
            if (--it->second == 0) owed.erase(it);
        } else {
            bits.push_back(0);
        }
    }
    if (bits.front() != 0) throw std::domain_error("xi_inverse: heap " + BigInt(h).str() + " has no preimage below 1");
    BigInt num = 0;
    for (std::size_t i = 1; i < bits.size(); ++i) num = (num << 1) + bits[i];
    Dyadic delta(num, static_cast<unsigned>(bits.size() - 1));
    if (xi<Int>(delta) != h) throw std::domain_error("xi_inverse: heap " + BigInt(h).str() + " has no preimage");
    return delta;
}

/// Reduced canonical forms that occur for single heaps: a number, or the
/// switch {1 | right}.
struct RcfValue {
    bool is_switch = false;
    Dyadic value;  // the number, or the switch's Right option

    static RcfValue number(Dyadic d) { return {false, std::move(d)}; }
    static RcfValue switch_to(Dyadic right) { return {true, std::move(right)}; }

    std::string to_text() const { return is_switch ? "{1|" + value.to_string() + "}" : value.to_string(); }

    GameId to_game(Universe& u) const {
        if (!is_switch) return u.from_number(value);
        return u.make_game({u.from_number(Dyadic(1))}, {u.from_number(value)});
    }

    friend bool operator==(const RcfValue&, const RcfValue&) = default;
};

/// Reduced canonical form of a single heap straight from its class.
template <FibInteger Int = BigInt>
RcfValue heap_rcf(const Int& h) {
    using K = HeapClass::Kind;
    HeapClass c = classify<Int>(h);
    switch (c.kind) {
        case K::zero: return RcfValue::number(Dyadic(0));
        case K::in_b: return RcfValue::switch_to(Dyadic(0));
        case K::in_ab_hat: return RcfValue::number(Dyadic(1));
        case K::in_b2_hat: return RcfValue::number(xi_inverse<Int>(h));
        case K::g0: {
            Dyadic v = xi_inverse<Int>(h);
            if (v != s_val(c.n.convert_to<unsigned>())) throw std::logic_error("heap_rcf: G0 heap value differs from s(n)");
            return RcfValue::number(v);
        }
        case K::g_switch: return RcfValue::switch_to(s_val(c.n.convert_to<unsigned>()));
    }
    throw std::logic_error("heap_rcf: unreachable");
}

/// Largest even-indexed and largest odd-indexed Fibonacci numbers <= h:
/// the moves that realise a number heap's value.
template <FibInteger Int = BigInt>
std::pair<Int, Int> optimal_moves(const Int& h) {
    if (h < Int(2)) throw std::invalid_argument("optimal_moves: heap must be >= 2");
    int even = 2, odd = 1;
    while (fib<Int>(even + 2) <= h) even += 2;
    while (fib<Int>(odd + 2) <= h) odd += 2;
    return {fib<Int>(even), fib<Int>(odd)};
}

/// For number heaps xi(d) > xi(g): whether z1(xi(d) - xi(g)) is odd.
inline bool zeck_parity_check(const Dyadic& d, const Dyadic& g) {
    const Dyadic half(BigInt(1), 1);
    for (const Dyadic* x : {&d, &g}) {
        if (*x < half || *x >= Dyadic(1)) throw std::invalid_argument("zeck_parity_check: values must lie in [1/2, 1)");
    }
    BigInt hd = xi(d), hg = xi(g);
    if (!in_q(hd) || !in_q(hg)) throw std::invalid_argument("zeck_parity_check: xi images must be number heaps");
    if (hd <= hg) throw std::invalid_argument("zeck_parity_check: need xi(d) > xi(g)");
    return z1(BigInt(hd - hg)) % 2 == 1;
}

/// Full canonical forms of GoldenNugget heaps, computed bottom-up.
class NuggetOracle {
public:
    static constexpr std::size_t default_bound = 60;

    explicit NuggetOracle(Universe& u, std::size_t bound = default_bound)
        : oracle_(u, [](std::size_t k) { return in_a<std::uint64_t>(k); }, bound) {}

    GameId heap(std::size_t h) { return oracle_.heap(h); }
    std::size_t bound() const { return oracle_.bound(); }
    void set_bound(std::size_t b) { oracle_.set_bound(b); }

private:
    SubtractionOracle oracle_;
};

}  // namespace goldnug
