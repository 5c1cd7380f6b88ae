#include <gtest/gtest.h>

#include "goldnug/goldnug.hpp"
#include "oracles.hpp"

using namespace goldnug;
using U = std::uint64_t;

TEST(Position, ParseAndPrint) {
    Position p = Position::parse("3b+20b+18r");
    ASSERT_EQ(p.heaps.size(), 3u);
    EXPECT_EQ(p.heaps[2], (Heap{Color::red, 18}));
    EXPECT_EQ(p.to_string(), "3b+20b+18r");
    EXPECT_EQ(Position::parse("0").heaps.size(), 0u);
    EXPECT_EQ(Position{}.to_string(), "0");
    EXPECT_EQ(p.swapped_colors().to_string(), "3r+20r+18b");
    EXPECT_THROW(Position::parse("3x"), std::invalid_argument);
    EXPECT_THROW(Position::parse("b"), std::invalid_argument);
    EXPECT_THROW(Position::parse("3b++4r"), std::invalid_argument);
}

TEST(Position, Values) {
    Universe u;
    NuggetOracle oracle(u, 25);
    EXPECT_EQ(position_value(u, oracle, Position::parse("3b")), u.from_number(Dyadic::parse("1/2")));
    EXPECT_EQ(position_value(u, oracle, Position{}), u.zero());
    EXPECT_EQ(position_value(u, oracle, Position::parse("6r")), u.from_number(Dyadic::parse("-3/4")));
    // the sum's outcome agrees with direct search
    PositionSolver solver(25);
    for (const char* s : {"20b+18r", "3b+20b+18r", "20b+17r", "5b+5r", "11b+7r+2b"}) {
        Position p = Position::parse(s);
        EXPECT_EQ(u.outcome(position_value(u, oracle, p)), solver.outcome(p)) << s;
    }
    EXPECT_EQ(u.outcome(position_value(u, oracle, Position::parse("5b+5r"))), Outcome::P);
    EXPECT_THROW(position_value(u, oracle, Position::parse("30b")), resource_limit);
}

TEST(Position, WorkedExamples) {
    PositionSolver solver(25);
    Position p = Position::parse("3b+20b+18r");
    EXPECT_EQ(solver.outcome(p), Outcome::L);
    auto m = solver.winning_move(p, Player::left);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(can_subtract(Player::left, p.heaps[m->heap_index].color, m->amount));
    EXPECT_FALSE(solver.wins_first(m->result, Player::right));

    Position q = Position::parse("20b+17r");
    EXPECT_EQ(solver.outcome(q), Outcome::N);
    auto r = solver.winning_move(q, Player::right);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->to_string(q), "20b -> 0b");
    Position after16 = q;
    after16.heaps[0].size -= 16;
    EXPECT_TRUE(can_subtract(Player::left, Color::blue, 16));
    EXPECT_FALSE(solver.wins_first(after16, Player::right));
    // removing 17 from the red 18 is not a Left move
    EXPECT_FALSE(can_subtract(Player::left, Color::red, 17));
}

TEST(Position, TieBreakIsSmallestHeapThenAmount) {
    PositionSolver solver(25);
    Position p = Position::parse("1b+1b");
    auto m = solver.winning_move(p, Player::left);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->heap_index, 0u);
    EXPECT_EQ(m->amount, 1u);
    EXPECT_FALSE(solver.winning_move(Position{}, Player::left).has_value());
    EXPECT_THROW(solver.outcome(Position::parse("26b")), resource_limit);
}

TEST(CsGames, SpecParsing) {
    EXPECT_EQ(CsGameSpec::parse("golden").to_string(), "golden");
    EXPECT_EQ(CsGameSpec::parse("oddeven").to_string(), "oddeven");
    EXPECT_EQ(CsGameSpec::parse("mod:3:L=1,2").to_string(), "mod:3:L=1,2");
    EXPECT_NO_THROW(CsGameSpec::parse("beatty:sqrt2"));
    EXPECT_NO_THROW(CsGameSpec::parse("explicit:L={1,3,5}"));
    EXPECT_THROW(CsGameSpec::parse("beatty:sqrt4"), std::invalid_argument);
    EXPECT_THROW(CsGameSpec::parse("beatty:sqrt5"), std::invalid_argument);  // outside (1, 2)
    EXPECT_THROW(CsGameSpec::parse("wythoff"), std::invalid_argument);
    EXPECT_THROW(CsGameSpec::parse("explicit:L={1,2},R={2,3}").left_mask(5), std::invalid_argument);
}

TEST(CsGames, BeattyMasks) {
    // floor(n sqrt2) and its complement floor(n (2 + sqrt2))
    std::vector<bool> m = CsGameSpec::parse("beatty:sqrt2").left_mask(30);
    std::set<U> want{1, 2, 4, 5, 7, 8, 9, 11, 12, 14, 15, 16, 18, 19, 21, 22, 24, 25, 26, 28, 29};
    for (U k = 1; k <= 30; ++k) EXPECT_EQ(bool(m[k]), want.count(k) > 0) << k;
    std::vector<bool> g = CsGameSpec::parse("golden").left_mask(1000);
    std::vector<bool> mex = oracle::Wythoff(700).a_mask(1000);
    for (U k = 1; k <= 1000; ++k) ASSERT_EQ(g[k], mex[k]) << k;
}

TEST(CsGames, OutcomesAgainstPlainSearch) {
    for (const char* s : {"golden", "oddeven", "beatty:sqrt2", "beatty:sqrt3", "mod:3:L=1,2", "mod:5:L=0,2"}) {
        CsGameSpec spec = CsGameSpec::parse(s);
        std::vector<Outcome> got = cs_outcomes(spec, 400);
        std::vector<char> want = oracle::heap_outcomes(spec.left_mask(400), 400);
        for (std::size_t h = 0; h <= 400; ++h) ASSERT_EQ(to_string(got[h])[0], want[h]) << s << " heap " << h;
    }
}

TEST(CsGames, OddEven) {
    Universe u;
    EXPECT_EQ(odd_even_value(u, 1), u.from_number(1));
    EXPECT_EQ(odd_even_value(u, 2), parse_game(u, "{1|0}"));
    EXPECT_EQ(odd_even_value(u, 5), u.from_number(Dyadic::parse("1/4")));
    std::vector<Outcome> o = cs_outcomes(CsGameSpec::parse("oddeven"), 50);
    EXPECT_EQ(o[0], Outcome::P);
    for (std::size_t h = 1; h <= 50; ++h) EXPECT_EQ(o[h], h % 2 ? Outcome::L : Outcome::N);
}

TEST(CsGames, Periodicity) {
    auto r = periodicity_probe(CsGameSpec::parse("mod:2:L=1"), 1000);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->period, 2u);
    EXPECT_EQ(r->preperiod, 1u);
    EXPECT_FALSE(periodicity_probe(CsGameSpec::parse("golden"), 5000).has_value());
    EXPECT_TRUE(periodicity_probe(CsGameSpec::parse("mod:3:L=1,2"), 3000).has_value());
    EXPECT_EQ(find_period(std::vector<int>{5, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3})->period, 3u);
    EXPECT_FALSE(find_period(std::vector<int>{1, 2, 3}).has_value());
}

TEST(PositionsSuite, AllChecksPass) {
    for (const CheckResult& r : suite_positions(VerifyOptions{})) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}
