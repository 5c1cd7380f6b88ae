#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "goldnug/cs_game.hpp"
#include "goldnug/dyadic.hpp"
#include "goldnug/fibonacci.hpp"
#include "goldnug/game.hpp"
#include "goldnug/nugget.hpp"
#include "goldnug/positions.hpp"
#include "goldnug/rcf.hpp"

namespace goldnug {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;  // first counterexample, or a summary
    double seconds = 0;
};

struct VerifyOptions {
    std::optional<std::uint64_t> bound;  // caps every sweep range
    std::size_t oracle_bound = NuggetOracle::default_bound;
    std::uint64_t seed = 20240229;

    std::uint64_t cap(std::uint64_t n) const { return bound ? std::min(n, *bound) : n; }
};

using SuiteReport = std::vector<CheckResult>;

namespace detail {

using U = std::uint64_t;

// Runs one property; `body` returns an empty string on success and a
// counterexample description otherwise.
inline void run_check(SuiteReport& out, std::string name, const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = std::move(name);
    try {
        r.detail = body();
        r.passed = r.detail.empty();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
}

template <class... Ts>
std::string describe(const Ts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

inline U b_pow(unsigned n, U i) {
    for (unsigned k = 0; k < n; ++k) i = b_seq<U>(i);
    return i;
}

// Random short games with options drawn from earlier generations.
inline std::vector<GameId> random_games(Universe& u, std::mt19937_64& rng, std::size_t count) {
    std::vector<GameId> pool{u.zero(), u.from_number(1), u.from_number(-1), u.from_number(Dyadic(BigInt(1), 1))};
    GameId star = u.make_game({u.zero()}, {u.zero()});
    pool.push_back(star);
    std::vector<GameId> out;
    for (int depth = 1; depth <= 3; ++depth) {
        std::size_t base = pool.size();
        for (std::size_t k = 0; k < count; ++k) {
            std::uniform_int_distribution<std::size_t> pick(0, base - 1);
            std::uniform_int_distribution<int> width(0, 2);
            std::vector<GameId> l, r;
            for (int i = width(rng); i > 0; --i) l.push_back(pool[pick(rng)]);
            for (int i = width(rng); i > 0; --i) r.push_back(pool[pick(rng)]);
            GameId g = u.make_game(l, r);
            pool.push_back(g);
            out.push_back(g);
        }
    }
    return out;
}

}  // namespace detail

inline SuiteReport suite_game_core(const VerifyOptions& opt) {
    using detail::describe;
    SuiteReport out;
    Universe u;
    std::mt19937_64 rng(opt.seed);
    std::vector<GameId> games = detail::random_games(u, rng, static_cast<std::size_t>(opt.cap(40)));

    detail::run_check(out, "hash-consing soundness", [&]() -> std::string {
        for (GameId g : games) {
            for (GameId h : games) {
                bool same_id = u.canonical_form(g) == u.canonical_form(h);
                if (same_id != u.equal(g, h)) return describe("games ", g.value, " and ", h.value);
            }
        }
        return "";
    });
    detail::run_check(out, "g + (-g) is a P-position", [&]() -> std::string {
        for (GameId g : games) {
            if (u.outcome(u.add(g, u.negate(g))) != Outcome::P) return describe("game ", g.value);
        }
        return "";
    });
    detail::run_check(out, "number closure", [&]() -> std::string {
        for (int num = -40; num <= 40; ++num) {
            for (unsigned e = 0; e <= 5; ++e) {
                Dyadic d(BigInt(num), e);
                GameId g = u.from_number(d);
                if (u.as_number(g) != d) return describe("as_number(from_number(", d.to_string(), "))");
                if (u.negate(g) != u.from_number(-d)) return describe("negate(", d.to_string(), ")");
            }
        }
        return "";
    });
    detail::run_check(out, "outcome agrees with comparisons", [&]() -> std::string {
        for (GameId g : games) {
            bool ge = u.geq(g, u.zero()), le = u.geq(u.zero(), g);
            Outcome want = ge && le ? Outcome::P : ge ? Outcome::L : le ? Outcome::R : Outcome::N;
            if (u.outcome(g) != want) return describe("game ", g.value);
        }
        return "";
    });
    detail::run_check(out, "heap stops satisfy L >= R", [&]() -> std::string {
        NuggetOracle oracle(u, opt.oracle_bound);
        for (std::size_t h = 0; h <= opt.oracle_bound; ++h) {
            GameId g = oracle.heap(h);
            if (u.left_stop(g) < u.right_stop(g)) return describe("heap ", h);
        }
        return "";
    });
    detail::run_check(out, "{x|0} + up > 0 for x = 1/2, 1", [&]() -> std::string {
        GameId star = u.make_game({u.zero()}, {u.zero()});
        GameId up = u.make_game({u.zero()}, {star});
        for (const Dyadic& x : {Dyadic(BigInt(1), 1), Dyadic(1)}) {
            GameId g = u.make_game({u.from_number(x)}, {u.zero()});
            if (u.outcome(u.add(g, up)) != Outcome::L) return describe("x = ", x.to_string());
        }
        return "";
    });
    return out;
}

inline SuiteReport suite_rcf(const VerifyOptions& opt) {
    using detail::describe;
    SuiteReport out;
    Universe u;
    RcfEngine rcf(u);
    NuggetOracle oracle(u, opt.oracle_bound);
    std::size_t top = opt.cap(opt.oracle_bound);

    detail::run_check(out, "rcf is idempotent on heaps", [&]() -> std::string {
        for (std::size_t h = 0; h <= top; ++h) {
            GameId r = rcf.reduced_canonical_form(oracle.heap(h));
            if (rcf.reduced_canonical_form(r) != r) return describe("heap ", h);
        }
        return "";
    });
    detail::run_check(out, "heap =_I rcf(heap)", [&]() -> std::string {
        for (std::size_t h = 0; h <= top; ++h) {
            GameId g = oracle.heap(h);
            if (!rcf.eq_inf(g, rcf.reduced_canonical_form(g))) return describe("heap ", h);
        }
        return "";
    });
    detail::run_check(out, "rcf of a heap is a number or {1|x}", [&]() -> std::string {
        GameId one = u.from_number(1);
        for (std::size_t h = 0; h <= top; ++h) {
            GameId r = rcf.reduced_canonical_form(oracle.heap(h));
            if (u.known_number(r)) continue;
            const GameRecord& rec = u.record(r);
            bool shape = rec.left.size() == 1 && rec.left[0] == one && rec.right.size() == 1 && u.known_number(rec.right[0]);
            if (!shape) return describe("heap ", h, " has rcf ", to_text(u, r));
        }
        return "";
    });
    detail::run_check(out, "rcf preserves stops", [&]() -> std::string {
        for (std::size_t h = 0; h <= top; ++h) {
            GameId g = oracle.heap(h);
            GameId r = rcf.reduced_canonical_form(g);
            if (u.left_stop(g) != u.left_stop(r) || u.right_stop(g) != u.right_stop(r)) return describe("heap ", h);
        }
        return "";
    });
    return out;
}

inline SuiteReport suite_fibonacci(const VerifyOptions& opt) {
    using detail::describe;
    using detail::U;
    SuiteReport out;
    auto A = [](U n) { return a_seq<U>(n); };
    auto B = [](U n) { return b_seq<U>(n); };
    auto F = [](int k) { return fib<U>(k); };

    detail::run_check(out, "Kimberling identities", [&]() -> std::string {
        for (U n = 0; n <= opt.cap(10000); ++n) {
            if (n > 0 && A(A(n)) != B(n) - 1) return describe("A^2(", n, ")");
            if (A(B(n)) != A(n) + B(n)) return describe("AB(", n, ")");
            if (n > 0 && B(A(n)) != A(n) + B(n) - 1) return describe("BA(", n, ")");
            if (B(B(n)) != A(n) + 2 * B(n)) return describe("B^2(", n, ")");
        }
        return "";
    });
    detail::run_check(out, "A and B at Fibonacci numbers", [&]() -> std::string {
        for (int n = 1; n <= static_cast<int>(opt.cap(25)); ++n) {
            if (A(F(2 * n - 1)) != F(2 * n) || B(F(2 * n - 1)) != F(2 * n + 1) || A(F(2 * n)) != F(2 * n + 1) - 1 ||
                B(F(2 * n)) != F(2 * n + 2) - 1)
                return describe("n = ", n);
        }
        return "";
    });
    detail::run_check(out, "generalized Kimberling identities", [&]() -> std::string {
        for (int n = 1; n <= static_cast<int>(opt.cap(12)); ++n) {
            for (U i = 0; i <= opt.cap(500); ++i) {
                U bn = detail::b_pow(static_cast<unsigned>(n), i);
                if (F(2 * n - 3) * A(i) + F(2 * n - 2) * B(i) != A(detail::b_pow(static_cast<unsigned>(n - 1), i))) return describe("AB^(n-1), n=", n, " i=", i);
                if (F(2 * n - 2) * A(i) + F(2 * n - 1) * B(i) != bn) return describe("B^n, n=", n, " i=", i);
                if (F(2 * n) * A(i) + F(2 * n - 1) * i != bn) return describe("B^n second form, n=", n, " i=", i);
                if (i > 0 && F(2 * n) * A(i) + F(2 * n + 1) * B(i) - F(2 * n + 1) != A(detail::b_pow(static_cast<unsigned>(n), A(i))))
                    return describe("AB^nA, n=", n, " i=", i);
            }
        }
        return "";
    });
    detail::run_check(out, "gap equations", [&]() -> std::string {
        for (unsigned n = 0; n <= opt.cap(8); ++n) {
            auto abn = [&](U x) { return A(detail::b_pow(n, x)); };
            auto bn = [&](U x) { return detail::b_pow(n, x); };
            auto bna = [&](U x) { return detail::b_pow(n, A(x)); };
            for (U i = 1; i <= opt.cap(500); ++i) {
                U gap = abn(i) - abn(i - 1);
                if (gap != F(2 * n + 2) && gap != F(2 * n + 3)) return describe("AB^n gap, n=", n, " i=", i);
                if (n > 0) {
                    U g2 = bn(i) - bn(i - 1);
                    if (g2 != F(2 * n + 1) && g2 != F(2 * n + 2)) return describe("B^n gap, n=", n, " i=", i);
                    if (bn(A(i) + 1) - bn(A(i)) != F(2 * n + 2)) return describe("B^n after A, n=", n, " i=", i);
                    if (bn(B(i) + 1) - bn(B(i)) != F(2 * n + 1)) return describe("B^n after B, n=", n, " i=", i);
                    if (bn(B(i)) - bn(B(i) - 1) != F(2 * n + 2)) return describe("B^n at B, n=", n, " i=", i);
                }
                // forward gaps keyed by the letter at the left end
                if (abn(A(i) + 1) - abn(A(i)) != F(2 * n + 3)) return describe("AB^n after A, n=", n, " i=", i);
                if (abn(B(i) + 1) - abn(B(i)) != F(2 * n + 2)) return describe("AB^n after B, n=", n, " i=", i);
                if (abn(B(i)) - abn(B(i) - 1) != F(2 * n + 3)) return describe("AB^n at B, n=", n, " i=", i);
                if (bna(A(i) + 1) - bna(A(i)) != F(2 * n + 3)) return describe("B^nA after A, n=", n, " i=", i);
                if (bna(B(i) + 1) - bna(B(i)) != F(2 * n + 2)) return describe("B^nA after B, n=", n, " i=", i);
                if (bna(B(i)) - bna(B(i) - 1) != F(2 * n + 3)) return describe("B^nA at B, n=", n, " i=", i);
            }
        }
        return "";
    });
    detail::run_check(out, "additivity of A over odd-indexed Fibonacci sums", [&]() -> std::string {
        const int top = static_cast<int>(std::min<U>(opt.cap(24), 24) / 2);  // even indices 2..2*top
        // (i) coefficients in {0,1}
        for (U mask = 1; mask < (U(1) << top); ++mask) {
            U g = 0, h = 0;
            for (int i = 1; i <= top; ++i) {
                if (mask >> (i - 1) & 1) {
                    g += F(2 * i);
                    h += F(2 * i - 1);
                }
            }
            if (A(h) != g) return describe("0/1 coefficients, mask ", mask);
        }
        // (ii) c_1 = 0, other coefficients in {0,1,2}
        std::vector<int> c(static_cast<std::size_t>(top + 1), 0);
        for (;;) {
            int i = 2;
            while (i <= top && c[static_cast<std::size_t>(i)] == 2) c[static_cast<std::size_t>(i++)] = 0;
            if (i > top) break;
            ++c[static_cast<std::size_t>(i)];
            U g = 0, h = 0;
            for (int k = 2; k <= top; ++k) {
                g += U(c[static_cast<std::size_t>(k)]) * F(2 * k);
                h += U(c[static_cast<std::size_t>(k)]) * F(2 * k - 1);
            }
            if (A(h) != g) return describe("0/1/2 coefficients with h = ", h);
        }
        return "";
    });
    detail::run_check(out, "Fibonacci word lemmas", [&]() -> std::string {
        std::mt19937_64 rng(opt.seed);
        for (int t = 0; t < 200; ++t) {
            std::string w;
            for (int k = static_cast<int>(rng() % 40); k > 0; --k) w += (rng() & 1) ? 'a' : 'b';
            if (count_letter(apply_morphism(w), 'b') != count_letter(w, 'a')) return describe("|phi(x)|_b for x = ", w);
        }
        for (int n = 0; n <= static_cast<int>(opt.cap(25)); ++n) {
            Word p = morphism_power(n);
            if (count_letter(p, 'b') != F(n) || count_letter(p, 'a') != F(n + 1) || p.size() != F(n + 2)) return describe("letter counts of phi^", n);
        }
        Word inf = word_prefix(F(24), false);
        for (int n = 2; n <= static_cast<int>(opt.cap(20)); ++n) {
            Word p = morphism_power(n);
            if (inf.substr(0, 2 * F(n + 2)) != p + p) return describe("square prefix, n = ", n);
        }
        for (int n = 3; n <= static_cast<int>(opt.cap(24)); ++n) {
            if (!is_palindrome(std::string_view(inf).substr(0, F(n) - 2))) return describe("palindrome prefix, n = ", n);
        }
        for (int n = 2; n <= static_cast<int>(opt.cap(20)); ++n) {
            std::string_view w = std::string_view(inf).substr(0, F(n + 2) - 2);
            std::size_t len = F(n);
            if (len > w.size()) continue;
            std::size_t bs = count_letter(w.substr(0, len), 'b');
            for (std::size_t s = 0;; ++s) {
                if (bs != F(n - 2)) return describe("factor b-count, n = ", n, " offset ", s);
                if (s + len >= w.size()) break;
                bs += (w[s + len] == 'b') - (w[s] == 'b');
            }
        }
        return "";
    });
    detail::run_check(out, "letters of the Fibonacci word mark A", [&]() -> std::string {
        U top = opt.cap(100000);
        Word w = word_prefix(static_cast<std::size_t>(top), false);
        for (U k = 1; k <= top; ++k) {
            if ((w[k - 1] == 'a') != in_a<U>(k)) return describe("k = ", k);
        }
        return "";
    });
    detail::run_check(out, "weighted counts of the Wythoff word give A and B", [&]() -> std::string {
        U top = opt.cap(100000);
        Word w = word_prefix(static_cast<std::size_t>(top), true);
        U s12 = 0, s23 = 0;
        for (U n = 1; n <= top; ++n) {
            bool b = w[n - 1] == 'b';
            s12 += b ? 1 : 2;
            s23 += b ? 2 : 3;
            if (s12 != A(n) || s23 != B(n)) return describe("n = ", n);
        }
        for (int n = 0; n <= 25; ++n) {
            if (weighted_count(morphism_power(n), 1, 2) != BigInt(F(n + 3))) return describe("S_{1,2}(phi^", n, ")");
        }
        return "";
    });
    detail::run_check(out, "A is invariant under adding F_{n+3} to small k", [&]() -> std::string {
        for (int n = 2; n <= static_cast<int>(opt.cap(20)); ++n) {
            for (U k = 1; k <= F(n + 3) + 1; ++k) {
                if (in_a<U>(k + F(n + 3)) != in_a<U>(k)) return describe("n = ", n, " k = ", k);
            }
        }
        return "";
    });
    detail::run_check(out, "shifted differences of B^2 and AB", [&]() -> std::string {
        auto AB = [&](U k) { return A(B(k)); };
        auto BB = [&](U k) { return B(B(k)); };
        for (int n = 1; n <= static_cast<int>(opt.cap(10)); ++n) {
            for (U k = 1; k < F(2 * n + 1); ++k) {
                if (BB(k + F(2 * n)) - BB(k) != F(2 * n + 4)) return describe("(i) n=", n, " k=", k);
                if (AB(k + F(2 * n)) - AB(k) != F(2 * n + 3)) return describe("(iii) n=", n, " k=", k);
            }
            for (U k = 0; k < F(2 * n); ++k) {
                if (BB(k + F(2 * n - 1)) - BB(k) != F(2 * n + 3)) return describe("(ii) n=", n, " k=", k);
                if (AB(k + F(2 * n - 1)) - AB(k) != F(2 * n + 2)) return describe("(iv) n=", n, " k=", k);
            }
        }
        return "";
    });
    detail::run_check(out, "B(i) + B(j) = AB(n) only at zero", [&]() -> std::string {
        U top = opt.cap(2000);
        std::set<U> ab;
        for (U n = 1; n <= 3 * top; ++n) ab.insert(A(B(n)));
        std::vector<U> bs;
        for (U i = 0; i <= top; ++i) bs.push_back(B(i));
        for (U i = 0; i <= top; ++i) {
            for (U j = i; j <= top; ++j) {
                if ((i || j) && ab.count(bs[i] + bs[j])) return describe("i=", i, " j=", j);
            }
        }
        return "";
    });
    detail::run_check(out, "fractional-part lemma (integer form)", [&]() -> std::string {
        for (U n = 1; n <= opt.cap(100000); ++n) {
            if (A(B(n) + 1) != A(B(n)) + 1) return describe("A(B(n)+1), n=", n);
            if (A(A(n) + 1) != A(A(n)) + 2) return describe("A(A(n)+1), n=", n);
        }
        return "";
    });
    detail::run_check(out, "odd z1 matches the low end of E(x)", [&]() -> std::string {
        for (U x = 1; x <= opt.cap(100000); ++x) {
            FibRepr e = even_repr<U>(x);
            int k = 2;
            while (e.multiplicity(k) == 1) k += 2;
            if ((z1<U>(x) % 2 == 1) != (e.multiplicity(k) == 2)) return describe("x = ", x);
        }
        return "";
    });
    detail::run_check(out, "greedy even representation equals the ZE rewrite", [&]() -> std::string {
        for (U x = 1; x <= opt.cap(100000); ++x) {
            FibRepr e = even_repr<U>(x);
            if (!e.valid() || ze_transform(zeckendorf<U>(x)) != e) return describe("x = ", x);
        }
        return "";
    });
    detail::run_check(out, "E(B^2(n)+1) has least index 4", [&]() -> std::string {
        for (U n = 1; n <= opt.cap(5000); ++n) {
            if (even_repr<U>(B(B(n)) + 1).least_index() != 4) return describe("n = ", n);
        }
        return "";
    });
    detail::run_check(out, "differences that avoid A", [&]() -> std::string {
        U top = opt.cap(2000);
        std::vector<U> ab;
        for (U i = 0; i <= top; ++i) ab.push_back(A(B(i)));
        for (U n = 1; n <= top; ++n) {
            U bb = B(B(n));
            for (U x : ab) {
                if (bb > x && in_a<U>(bb - x)) return describe("B^2(", n, ") - ", x);
            }
        }
        for (int n = 1; n <= 44; ++n) {
            for (U x : ab) {
                if (F(2 * n + 1) > x + 3 && in_a<U>(F(2 * n + 1) - x - 3)) return describe("F_", 2 * n + 1, " - ", x, " - 3");
            }
        }
        return "";
    });
    return out;
}

inline SuiteReport suite_nugget(const VerifyOptions& opt) {
    using detail::describe;
    using detail::U;
    using K = HeapClass::Kind;
    SuiteReport out;
    auto F = [](int k) { return fib<U>(k); };

    detail::run_check(out, "partition is total and matches G_i(n)", [&]() -> std::string {
        for (U h = 0; h <= opt.cap(100000); ++h) {
            HeapClass c = classify<U>(h);
            if (c.kind == K::g0 || c.kind == K::g_switch) {
                if (g_heap<U>(c.i.convert_to<U>(), c.n.convert_to<int>()) != h) return describe("heap ", h, " classified ", c.to_string());
            }
        }
        return "";
    });
    std::vector<U> q_heaps;
    {
        U top = opt.cap(1000000);
        for (U n = 1; b_seq<U>(b_seq<U>(n)) + 1 <= top; ++n) q_heaps.push_back(b_seq<U>(b_seq<U>(n)) + 1);
        for (int n = 1; F(2 * n + 3) - 2 <= top; ++n) q_heaps.push_back(F(2 * n + 3) - 2);
        std::sort(q_heaps.begin(), q_heaps.end());
    }
    detail::run_check(out, "xi round trip and injectivity", [&]() -> std::string {
        std::set<Dyadic> seen;
        for (U h : q_heaps) {
            Dyadic d = xi_inverse<U>(h);
            if (xi<U>(d) != h) return describe("heap ", h);
            if (!seen.insert(d).second) return describe("value ", d.to_string(), " repeats at heap ", h);
        }
        return "";
    });
    detail::run_check(out, "number heaps lie in [1/2, 1)", [&]() -> std::string {
        for (U h : q_heaps) {
            if (h > opt.cap(100000)) break;
            Dyadic d = xi_inverse<U>(h);
            if (d < Dyadic(BigInt(1), 1) || d >= Dyadic(1)) return describe("heap ", h);
        }
        return "";
    });
    detail::run_check(out, "oracle agrees with the classifier", [&]() -> std::string {
        Universe u;
        RcfEngine rcf(u);
        NuggetOracle oracle(u, opt.oracle_bound);
        for (U h = 0; h <= opt.cap(opt.oracle_bound); ++h) {
            GameId g = oracle.heap(h);
            if (rcf.reduced_canonical_form(g) != heap_rcf<U>(h).to_game(u)) return describe("rcf of heap ", h);
            if (in_q<U>(h) && u.as_number(g) != xi_inverse<U>(h)) return describe("value of heap ", h);
        }
        return "";
    });
    detail::run_check(out, "s(n) and q(n) anchors", [&]() -> std::string {
        Universe u;
        NuggetOracle oracle(u, opt.oracle_bound);
        for (unsigned n = 0; n <= 20; ++n) {
            U hs = F(2 * static_cast<int>(n) + 3) - 2, hq = F(2 * static_cast<int>(n) + 4) - 2;
            if (xi_inverse<U>(hs) != s_val(n) || xi_inverse<U>(hq) != q_val(n)) return describe("xi_inverse, n = ", n);
            if (n <= 3 && hq <= opt.oracle_bound) {
                if (u.as_number(oracle.heap(hs)) != s_val(n) || u.as_number(oracle.heap(hq)) != q_val(n)) return describe("oracle, n = ", n);
            }
        }
        return "";
    });
    detail::run_check(out, "z1 parity orders the number heaps", [&]() -> std::string {
        std::vector<std::pair<U, Dyadic>> vals;
        for (U h : q_heaps) {
            if (h > opt.cap(10000)) break;
            vals.emplace_back(h, xi_inverse<U>(h));
        }
        for (std::size_t a = 0; a < vals.size(); ++a) {
            for (std::size_t b = 0; b < a; ++b) {
                bool odd = z1<U>(vals[a].first - vals[b].first) % 2 == 1;
                if (odd != (vals[b].second > vals[a].second)) return describe("heaps ", vals[a].first, " and ", vals[b].first);
            }
        }
        return "";
    });
    detail::run_check(out, "Right cannot reach a smaller s(m) anchor from G(n)", [&]() -> std::string {
        for (int n = 1; n <= 6; ++n) {
            for (int m = 0; m < n; ++m) {
                U anchor = F(2 * m + 3) - 2;
                auto x = [&](U i) { return g_heap<U>(i, n) - anchor; };
                for (U i = 0; i <= opt.cap(500); ++i) {
                    if (!in_a<U>(x(i))) return describe("G_", i, "(", n, ") - (F_", 2 * m + 3, " - 2)");
                }
                for (int k = 3; F(k) + 1 <= opt.cap(100); ++k) {
                    for (U j = 0; j < F(k - 1) && F(k) + 1 + j <= opt.cap(100); ++j) {
                        if (x(F(k) + 1 + j) != x(j + 1) + F(2 * n + k + 2)) return describe("recursion n=", n, " m=", m, " k=", k, " j=", j);
                    }
                }
            }
        }
        return "";
    });
    detail::run_check(out, "two Right moves cannot return an AB0+1 heap to 1", [&]() -> std::string {
        U top = opt.cap(1000);
        std::set<U> ab;
        for (U n = 1; n <= 3 * top; ++n) ab.insert(a_seq<U>(b_seq<U>(n)));
        for (U i = 1; i <= top; ++i) {
            for (U j = i; j <= top; ++j) {
                if (ab.count(b_seq<U>(i) + b_seq<U>(j))) return describe("i=", i, " j=", j);
            }
        }
        return "";
    });
    detail::run_check(out, "heaps 3A(n)+2n+3 have rcf {1|1/2}", [&]() -> std::string {
        for (U n = 1; n <= opt.cap(2000); ++n) {
            U h = 3 * a_seq<U>(n) + 2 * n + 3;
            if (!in_b<U>(h - 3) || in_b<U>(h) || !in_a<U>(h - 4)) return describe("moves from heap ", h);
            if (heap_rcf<U>(h) != RcfValue::switch_to(Dyadic(BigInt(1), 1))) return describe("rcf of heap ", h);
        }
        return "";
    });
    detail::run_check(out, "heaps 2F_{2n+3}-2 equal {1|s(n)} (n = 1, 2, 3)", [&]() -> std::string {
        Universe u;
        NuggetOracle oracle(u, std::max<std::size_t>(opt.oracle_bound, 66));
        for (unsigned n = 1; n <= 3; ++n) {
            U h = 2 * F(2 * static_cast<int>(n) + 3) - 2;
            GameId want = u.make_game({u.from_number(1)}, {u.from_number(s_val(n))});
            if (oracle.heap(h) != want) return describe("heap ", h, " is ", to_text(u, oracle.heap(h)));
        }
        return "";
    });
    return out;
}

inline SuiteReport suite_positions(const VerifyOptions& opt) {
    using detail::describe;
    SuiteReport out;
    Universe u;
    std::size_t bound = std::max<std::size_t>(opt.oracle_bound, 25);
    NuggetOracle oracle(u, bound);
    PositionSolver solver(bound);
    std::mt19937_64 rng(opt.seed);

    auto random_position = [&](std::uint64_t max_heap) {
        Position p;
        std::size_t count = 1 + rng() % 3;
        for (std::size_t i = 0; i < count; ++i) p.heaps.push_back({(rng() & 1) ? Color::blue : Color::red, rng() % (max_heap + 1)});
        return p;
    };
    auto swap_outcome = [](Outcome o) { return o == Outcome::L ? Outcome::R : o == Outcome::R ? Outcome::L : o; };

    detail::run_check(out, "value outcome equals played outcome", [&]() -> std::string {
        for (int t = 0; t < static_cast<int>(opt.cap(200)); ++t) {
            Position p = random_position(opt.cap(25));
            if (u.outcome(position_value(u, oracle, p)) != solver.outcome(p)) return describe("position ", p.to_string());
        }
        return "";
    });
    detail::run_check(out, "swapping colours negates", [&]() -> std::string {
        for (int t = 0; t < static_cast<int>(opt.cap(200)); ++t) {
            Position p = random_position(opt.cap(25));
            Position q = p.swapped_colors();
            if (position_value(u, oracle, q) != u.negate(position_value(u, oracle, p))) return describe("value of ", p.to_string());
            if (solver.outcome(q) != swap_outcome(solver.outcome(p))) return describe("outcome of ", p.to_string());
        }
        return "";
    });
    detail::run_check(out, "winning moves are sound and complete", [&]() -> std::string {
        std::uint64_t top = opt.cap(15);
        std::vector<Position> all;
        for (std::uint64_t a = 0; a <= top; ++a) {
            for (Color ca : {Color::blue, Color::red}) {
                all.push_back({{{ca, a}}});
                for (std::uint64_t b = 0; b <= top; ++b) {
                    for (Color cb : {Color::blue, Color::red}) all.push_back({{{ca, a}, {cb, b}}});
                }
            }
        }
        for (const Position& p : all) {
            for (Player mover : {Player::left, Player::right}) {
                Player other = mover == Player::left ? Player::right : Player::left;
                auto m = solver.winning_move(p, mover);
                bool any = false;
                for (const Move& mv : PositionSolver::moves(p, mover)) any = any || !solver.wins_first(mv.result, other);
                if (m.has_value() != any) return describe("existence at ", p.to_string());
                if (m && solver.wins_first(m->result, other)) return describe("move at ", p.to_string());
                if (m.has_value() != solver.wins_first(p, mover)) return describe("mover wins at ", p.to_string());
            }
        }
        return "";
    });
    auto beatty_pattern = [&](const CsGameSpec& spec, std::uint64_t top) -> std::string {
        std::vector<Outcome> o = cs_outcomes(spec, top);
        std::vector<bool> left = spec.left_mask(top);
        if (o[0] != Outcome::P) return "heap 0";
        for (std::uint64_t h = 1; h <= top; ++h) {
            if (o[h] != (left[h] ? Outcome::L : Outcome::N)) return describe(spec.to_string(), " heap ", h);
        }
        return "";
    };
    detail::run_check(out, "Beatty games: A -> L, B -> N", [&]() -> std::string {
        std::string r = beatty_pattern(CsGameSpec{CsGameSpec::GoldenNugget{}}, opt.cap(2000));
        if (!r.empty()) return r;
        return beatty_pattern(CsGameSpec::parse("beatty:sqrt2"), opt.cap(2000));
    });
    detail::run_check(out, "odd/even game closed forms", [&]() -> std::string {
        std::size_t top = static_cast<std::size_t>(opt.cap(30));
        GameId f = u.zero();  // f(h) for even h
        for (std::size_t h = 0; h <= top; ++h) {
            GameId v = odd_even_value(u, h, top);
            if (h % 2 == 1) {
                if (v != u.from_number(Dyadic(BigInt(1), static_cast<unsigned>((h - 1) / 2)))) return describe("odd heap ", h);
            } else {
                if (h > 0) f = u.canonical_form(u.make_game({u.from_number(1)}, {u.zero(), f}));
                if (v != f) return describe("even heap ", h);
            }
        }
        return "";
    });
    detail::run_check(out, "periodicity probe", [&]() -> std::string {
        auto odd_even = periodicity_probe(CsGameSpec::parse("mod:2:L=1"), opt.cap(5000));
        if (!odd_even || odd_even->period != 2 || odd_even->preperiod > 1) return "odd/even is not periodic with period 2";
        if (periodicity_probe(CsGameSpec{CsGameSpec::GoldenNugget{}}, opt.cap(5000))) return "GoldenNugget reported periodic";
        return "";
    });
    return out;
}

inline const std::map<std::string, std::function<SuiteReport(const VerifyOptions&)>>& verify_suites() {
    static const std::map<std::string, std::function<SuiteReport(const VerifyOptions&)>> suites{
        {"game-core", suite_game_core}, {"rcf", suite_rcf}, {"fibonacci", suite_fibonacci}, {"nugget", suite_nugget}, {"positions", suite_positions},
    };
    return suites;
}

}  // namespace goldnug
