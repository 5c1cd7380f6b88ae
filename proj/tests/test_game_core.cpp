#include <gtest/gtest.h>

#include "goldnug/goldnug.hpp"

using namespace goldnug;

namespace {

Dyadic dy(const char* s) { return Dyadic::parse(s); }

struct GameCore : ::testing::Test {
    Universe u;
    GameId num(const char* s) { return u.from_number(dy(s)); }
    GameId game(const char* s) { return parse_game(u, s); }
    GameId star() { return u.make_game({u.zero()}, {u.zero()}); }
};

}  // namespace

TEST(Dyadic, LowestTermsAndArithmetic) {
    Dyadic a = dy("6/8");
    EXPECT_EQ(a.numerator(), 3);
    EXPECT_EQ(a.exponent(), 2u);
    EXPECT_EQ(dy("1/2") + dy("1/4"), dy("3/4"));
    EXPECT_EQ(-dy("5/8"), dy("-5/8"));
    EXPECT_LT(dy("5/8"), dy("11/16"));
    EXPECT_EQ(dy("0.1011"), dy("11/16"));
    EXPECT_EQ(dy("11/2^4"), dy("11/16"));
    EXPECT_EQ(dy("11/16").to_binary(), "0.1011");
    EXPECT_THROW(dy("1/3"), std::invalid_argument);
    EXPECT_THROW(dy("abc"), std::invalid_argument);
}

TEST(Dyadic, SimplestNumber) {
    EXPECT_EQ(simplest_number(dy("0"), dy("1")), dy("1/2"));
    EXPECT_EQ(simplest_number(dy("1/2"), dy("3/4")), dy("5/8"));
    EXPECT_EQ(simplest_number(dy("5/8"), dy("11/16")), dy("21/32"));
    EXPECT_EQ(simplest_number(dy("-3/2"), dy("5")), dy("0"));
    EXPECT_EQ(simplest_number(dy("3/2"), dy("7/2")), dy("2"));
    EXPECT_THROW(simplest_number(dy("1"), dy("1")), std::invalid_argument);
}

TEST_F(GameCore, MakeGame) {
    EXPECT_EQ(u.make_game({}, {}), u.zero());
    EXPECT_EQ(u.make_game({u.zero()}, {}), num("1"));
    EXPECT_EQ(u.make_game({}, {u.zero()}), num("-1"));
    // duplicate and reordered options intern to the same record
    GameId one = num("1");
    EXPECT_EQ(u.make_game({one, u.zero(), one}, {}), u.make_game({u.zero(), one}, {}));
    EXPECT_THROW(u.make_game({GameId{999999}}, {}), std::invalid_argument);
}

TEST_F(GameCore, FromNumber) {
    EXPECT_EQ(u.record(u.from_number(dy("0"))).left.size(), 0u);
    EXPECT_EQ(num("1/2"), u.make_game({u.zero()}, {num("1")}));
    GameId g = u.make_game({num("1/2")}, {num("1")});
    EXPECT_EQ(u.canonical_form(g), g);
    EXPECT_EQ(g, num("3/4"));
    EXPECT_EQ(num("2"), u.make_game({num("1")}, {}));
    EXPECT_EQ(num("-3/2"), u.make_game({num("-2")}, {num("-1")}));
}

TEST_F(GameCore, NegateAndAdd) {
    EXPECT_EQ(u.negate(num("1")), num("-1"));
    GameId sw = game("{1|0}");
    EXPECT_EQ(u.canonical_form(u.add(sw, u.zero())), sw);
    GameId sum = u.add(sw, game("{0|-1}"));
    EXPECT_TRUE(u.equal(sum, u.zero()));
    EXPECT_EQ(u.canonical_form(u.add(num("1/2"), num("1/4"))), num("3/4"));
    EXPECT_EQ(u.canonical_form(u.add(star(), star())), u.zero());
}

TEST_F(GameCore, Geq) {
    EXPECT_TRUE(u.geq(num("1"), u.zero()));
    GameId sw = game("{1|0}");
    EXPECT_FALSE(u.geq(num("1"), sw));
    EXPECT_FALSE(u.geq(sw, num("1")));
    NuggetOracle oracle(u, 10);
    EXPECT_TRUE(u.geq(oracle.heap(4), oracle.heap(3)));
    EXPECT_FALSE(u.geq(oracle.heap(3), oracle.heap(4)));
}

TEST_F(GameCore, Outcome) {
    EXPECT_EQ(u.outcome(u.zero()), Outcome::P);
    EXPECT_EQ(u.outcome(game("{1|0}")), Outcome::N);
    EXPECT_EQ(u.outcome(num("1/2")), Outcome::L);
    EXPECT_EQ(u.outcome(num("-1/2")), Outcome::R);
    EXPECT_EQ(u.outcome(star()), Outcome::N);
}

TEST_F(GameCore, Stops) {
    GameId sw = game("{1|0}");
    EXPECT_EQ(u.left_stop(sw), dy("1"));
    EXPECT_EQ(u.right_stop(sw), dy("0"));
    NuggetOracle oracle(u, 10);
    EXPECT_EQ(u.left_stop(oracle.heap(4)), dy("1"));
    EXPECT_EQ(u.right_stop(oracle.heap(4)), dy("1"));
    EXPECT_EQ(u.left_stop(oracle.heap(8)), dy("1"));
    EXPECT_EQ(u.right_stop(oracle.heap(8)), dy("1/2"));
    EXPECT_EQ(u.left_stop(num("5/8")), dy("5/8"));
}

TEST_F(GameCore, AsNumber) {
    EXPECT_EQ(u.as_number(u.make_game({u.zero()}, {num("1")})), dy("1/2"));
    EXPECT_FALSE(u.as_number(game("{1|0}")).has_value());
    EXPECT_FALSE(u.as_number(star()).has_value());
    NuggetOracle oracle(u, 11);
    EXPECT_EQ(u.as_number(oracle.heap(11)), dy("5/8"));
    // a non-canonical number still evaluates
    EXPECT_EQ(u.as_number(u.make_game({num("-1"), u.zero()}, {num("1"), num("2")})), dy("1/2"));
}

TEST_F(GameCore, CanonicalForm) {
    EXPECT_EQ(u.canonical_form(u.make_game({u.zero(), num("1")}, {})), num("2"));
    EXPECT_EQ(u.canonical_form(u.make_game({u.zero(), num("-1")}, {})), num("1"));
    NuggetOracle oracle(u, 12);
    EXPECT_EQ(oracle.heap(5), game("{1,{1|0}|0}"));
    EXPECT_EQ(oracle.heap(12), game("{1||1|0||||1||1|0|||0,{1|0}}"));
    EXPECT_EQ(oracle.heap(0), u.zero());
    for (std::size_t h = 0; h <= 12; ++h) {
        GameId g = oracle.heap(h);
        EXPECT_EQ(u.canonical_form(g), g) << h;
        EXPECT_TRUE(u.is_canonical(g)) << h;
    }
}

TEST_F(GameCore, ReversibleOptionIsBypassed) {
    // Right answers {2|0} with 0, which reverses Left's only option away
    GameId g = u.make_game({game("{2|0}")}, {});
    EXPECT_EQ(u.outcome(g), Outcome::P);
    EXPECT_EQ(u.canonical_form(g), u.zero());
    GameId h = u.make_game({game("{2|0}"), num("1/2")}, {num("1")});
    EXPECT_EQ(u.canonical_form(h), num("3/4"));
}

TEST_F(GameCore, TextRoundTrip) {
    for (const char* s : {"0", "1", "-1", "5/8", "{1|0}", "{1,{1|0}|0}", "{|{0|}}", "{{1|0}|-1/2,{1|1/2}}"}) {
        GameId g = game(s);
        EXPECT_EQ(game(to_text(u, g).c_str()), g) << s;
    }
    EXPECT_EQ(to_text(u, game("{1||1|0}")), "{1|{1|0}}");
    EXPECT_EQ(to_text(u, u.make_game({}, {})), "0");
    EXPECT_EQ(to_text(u, game("{|}")), "0");
    EXPECT_EQ(game("{1||1|0|||0,{1|0}}"), game("{{1|{1|0}}|0,{1|0}}"));
    EXPECT_THROW(game("{1|0"), std::invalid_argument);
    EXPECT_THROW(game("{1|x}"), std::invalid_argument);
}

TEST_F(GameCore, UpAndSwitchesOverInfinitesimals) {
    GameId up = u.make_game({u.zero()}, {star()});
    EXPECT_EQ(u.outcome(up), Outcome::L);
    EXPECT_EQ(u.outcome(u.add(game("{1/2|0}"), up)), Outcome::L);
    EXPECT_EQ(u.outcome(u.add(game("{1|0}"), up)), Outcome::L);
    // x = 0 is the boundary case: {0|0} + up is fuzzy
    EXPECT_EQ(u.outcome(u.add(game("{0|0}"), up)), Outcome::N);
}

TEST(GameCoreSuite, AllChecksPass) {
    for (const CheckResult& r : suite_game_core(VerifyOptions{})) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}
