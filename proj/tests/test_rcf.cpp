#include <gtest/gtest.h>

#include "goldnug/goldnug.hpp"

using namespace goldnug;

namespace {

struct Rcf : ::testing::Test {
    Universe u;
    RcfEngine rcf{u};
    NuggetOracle oracle{u, 30};
    GameId game(const char* s) { return parse_game(u, s); }
};

}  // namespace

TEST_F(Rcf, GeqInf) {
    GameId one = u.from_number(1), sw = game("{1|0}");
    EXPECT_TRUE(rcf.geq_inf(one, sw));
    EXPECT_FALSE(rcf.geq_inf(sw, one));
    GameId half_sw = game("{1/2|0}");
    EXPECT_TRUE(rcf.geq_inf(half_sw, u.zero()));
    EXPECT_FALSE(rcf.geq_inf(u.zero(), half_sw));
    // the criterion is exactly the right stop of the difference
    EXPECT_EQ(u.right_stop(u.add(sw, u.negate(one))), Dyadic(-1));
}

TEST_F(Rcf, EqInf) {
    GameId star = u.make_game({u.zero()}, {u.zero()});
    EXPECT_TRUE(rcf.eq_inf(oracle.heap(4), u.from_number(1)));
    EXPECT_TRUE(rcf.eq_inf(u.zero(), star));
    EXPECT_FALSE(rcf.eq_inf(u.from_number(Dyadic::parse("1/2")), u.from_number(1)));
    GameId up = u.make_game({u.zero()}, {star});
    EXPECT_TRUE(rcf.eq_inf(up, u.zero()));
}

TEST_F(Rcf, KnownRows) {
    EXPECT_EQ(rcf.reduced_canonical_form(oracle.heap(4)), u.from_number(1));
    EXPECT_EQ(rcf.reduced_canonical_form(oracle.heap(7)), game("{1|0}"));
    EXPECT_EQ(rcf.reduced_canonical_form(oracle.heap(20)), game("{1|0}"));
    EXPECT_EQ(rcf.reduced_canonical_form(oracle.heap(16)), game("{1|1/2}"));
    EXPECT_EQ(rcf.reduced_canonical_form(oracle.heap(19)), u.from_number(Dyadic::parse("11/16")));
}

TEST_F(Rcf, NumbersAndInfinitesimalsCollapse) {
    GameId star = u.make_game({u.zero()}, {u.zero()});
    EXPECT_EQ(rcf.reduced_canonical_form(star), u.zero());
    GameId x = u.from_number(Dyadic::parse("3/4"));
    EXPECT_EQ(rcf.reduced_canonical_form(u.add(x, star)), x);
    // a hot game keeps its shape
    GameId g = game("{2|-1}");
    EXPECT_EQ(rcf.reduced_canonical_form(g), g);
}

TEST_F(Rcf, InfDominatedOptionRemoved) {
    // 1 and 1* are infinitesimally close; only one survives
    GameId star = u.make_game({u.zero()}, {u.zero()});
    GameId one_star = u.canonical_form(u.add(u.from_number(1), star));
    GameId g = u.canonical_form(u.make_game({u.from_number(1), one_star}, {u.zero()}));
    EXPECT_EQ(rcf.reduced_canonical_form(g), game("{1|0}"));
}

TEST(RcfSuite, AllChecksPass) {
    for (const CheckResult& r : suite_rcf(VerifyOptions{})) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}
