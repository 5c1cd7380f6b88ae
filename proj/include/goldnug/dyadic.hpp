#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace goldnug {

using BigInt = boost::multiprecision::cpp_int;

/// Exact dyadic rational numerator / 2^exponent, always kept in lowest terms
/// (exponent == 0 or numerator odd). Game values that are numbers are
/// always of this form, so no other rational type is needed.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Dyadic(BigInt n) : num_(std::move(n)) {}  // NOLINT(google-explicit-constructor)
    Dyadic(BigInt numerator, unsigned exponent) : num_(std::move(numerator)), exp_(exponent) { normalize(); }

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }
    BigInt denominator() const { return BigInt(1) << exp_; }
    bool is_integer() const { return exp_ == 0; }
    int sign() const { return num_.sign(); }

    /// Largest integer <= *this.
    BigInt floor() const {
        if (exp_ == 0) return num_;
        if (num_.sign() >= 0) return num_ >> exp_;
        return -((-num_ + denominator() - 1) >> exp_);
    }
    BigInt ceil() const { return -(-*this).floor(); }

    Dyadic operator-() const {
        Dyadic r;
        r.num_ = -num_;
        r.exp_ = exp_;
        return r;
    }
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        unsigned e = std::max(a.exp_, b.exp_);
        return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

    /// *this / 2^k
    Dyadic scaled_down(unsigned k) const { return Dyadic(num_, exp_ + k); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.exp_ == b.exp_ && a.num_ == b.num_; }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        unsigned e = std::max(a.exp_, b.exp_);
        BigInt l = a.num_ << (e - a.exp_);
        BigInt r = b.num_ << (e - b.exp_);
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p" for integers, "p/q" otherwise (q the power of two).
    std::string to_string() const {
        if (exp_ == 0) return num_.str();
        return num_.str() + "/" + denominator().str();
    }

    /// Digits after the binary point for values in [0, 1]: "0", "1", "0.1011".
    std::string to_binary() const {
        BigInt ip = floor();
        std::string out = ip.str();
        if (exp_ == 0) return out;
        if (num_.sign() < 0) throw std::domain_error("to_binary: negative value");
        BigInt frac = num_ - (ip << exp_);
        out += '.';
        for (unsigned i = exp_; i-- > 0;) out += bit_test(frac, i) ? '1' : '0';
        return out;
    }

    /// Accepts "p", "-p", "p/q" with q a power of two, "p/2^k", and binary
    /// fractions like "0.1011".
    static Dyadic parse(std::string_view s);

    std::size_t hash() const {
        long long low = static_cast<long long>(num_ % BigInt(1'000'000'007));
        return std::hash<long long>{}(low) ^ (std::size_t(exp_) * 0x9e3779b97f4a7c15ULL);
    }

private:
    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && !bit_test(abs(num_), 0)) {
            num_ >>= 1;
            --exp_;
        }
    }
    static bool bit_test(const BigInt& v, unsigned i) { return boost::multiprecision::bit_test(v, i); }

    BigInt num_ = 0;
    unsigned exp_ = 0;
};

namespace detail {

inline BigInt parse_bigint(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer literal '" + std::string(s) + "'");
    BigInt v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-v) : v;
}

inline unsigned log2_exact(const BigInt& d) {
    if (d <= 0) throw std::invalid_argument("denominator must be positive");
    unsigned k = 0;
    BigInt t = d;
    while (t > 1) {
        if (boost::multiprecision::bit_test(t, 0)) throw std::invalid_argument("denominator is not a power of two");
        t >>= 1;
        ++k;
    }
    return k;
}

}  // namespace detail

inline Dyadic Dyadic::parse(std::string_view s) {
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg) ip.remove_prefix(1);
        if (fp.empty()) throw std::invalid_argument("bad binary fraction '" + std::string(s) + "'");
        BigInt n = 0;
        for (char c : ip) {
            if (c != '0' && c != '1') throw std::invalid_argument("bad binary fraction '" + std::string(s) + "'");
            n = (n << 1) + (c - '0');
        }
        for (char c : fp) {
            if (c != '0' && c != '1') throw std::invalid_argument("bad binary fraction '" + std::string(s) + "'");
            n = (n << 1) + (c - '0');
        }
        return Dyadic(neg ? BigInt(-n) : n, static_cast<unsigned>(fp.size()));
    }
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Dyadic(detail::parse_bigint(s));
    BigInt n = detail::parse_bigint(s.substr(0, slash));
    std::string_view den = s.substr(slash + 1);
    if (den.size() > 2 && den.substr(0, 2) == "2^") {
        BigInt k = detail::parse_bigint(den.substr(2));
        if (k < 0 || k > 1'000'000) throw std::invalid_argument("bad exponent in '" + std::string(s) + "'");
        return Dyadic(n, k.convert_to<unsigned>());
    }
    return Dyadic(n, detail::log2_exact(detail::parse_bigint(den)));
}

/// The simplest dyadic strictly between lo and hi: an integer of least
/// magnitude if one fits, otherwise the one with the smallest denominator.
inline Dyadic simplest_number(const Dyadic& lo, const Dyadic& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_number: need lo < hi, got " + lo.to_string() + ", " + hi.to_string());
    // integers strictly inside (lo, hi)
    BigInt first = lo.floor() + 1;
    BigInt last = hi.ceil() - 1;
    if (first <= last) {
        if (first <= 0 && last >= 0) return Dyadic(0);
        return first > 0 ? Dyadic(first) : Dyadic(last);
    }
    // no integer inside: smallest k with an odd multiple of 2^-k strictly between
    for (unsigned k = 1;; ++k) {
        // m = floor(lo * 2^k) + 1 is the least multiple of 2^-k above lo
        Dyadic lo_k(lo.numerator() << k, lo.exponent());
        BigInt m = lo_k.floor() + 1;
        Dyadic candidate(m, k);
        if (candidate < hi) return candidate;
    }
}

}  // namespace goldnug

template <>
struct std::hash<goldnug::Dyadic> {
    std::size_t operator()(const goldnug::Dyadic& d) const { return d.hash(); }
};
