#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cakecut/errors.hpp"
#include "cakecut/oracle.hpp"
#include "test_support.hpp"

using namespace cakecut;
using cakecut::testing::piece_of;

namespace {

Oracle two_tier_oracle() {
    // agent 1: density 2 on [0,1/2], 0 on [1/2,1]; agent 2: uniform
    std::map<int, Valuation> vals;
    vals.emplace(1, Valuation({{rat(0), rat(1, 2), rat(2)}, {rat(1, 2), rat(1), rat(0)}}));
    vals.emplace(2, Valuation::uniform());
    return Oracle(std::move(vals));
}

}  // namespace

TEST_CASE("eval examples") {
    Oracle o = two_tier_oracle();
    CHECK(o.eval(2, piece_of({{"0", "1/3"}})) == rat(1, 3));
    CHECK(o.eval(1, Piece{}) == 0);
    CHECK(o.eval(1, piece_of({{"1/4", "3/4"}})) == rat(1, 2));
}

TEST_CASE("cut examples") {
    Oracle o = two_tier_oracle();
    CHECK(o.cut(2, rat(0), rat(1, 2)) == rat(1, 2));
    // minimal y on the zero-density plateau
    CHECK(o.cut(1, rat(0), rat(1)) == rat(1, 2));
    CHECK_THROWS_AS(o.cut(2, rat(1, 4), rat(1)), QueryPrecondition);
}

TEST_CASE("cut_from_right examples") {
    Oracle o = two_tier_oracle();
    auto [m1, r1] = o.cut_from_right(2, Piece::unit(), rat(1, 4));
    CHECK(m1 == rat(3, 4));
    CHECK(r1 == piece_of({{"3/4", "1"}}));

    auto [m2, r2] = o.cut_from_right(2, piece_of({{"0", "1/4"}, {"3/4", "1"}}), rat(3, 8));
    CHECK(m2 == rat(1, 8));
    CHECK(r2 == piece_of({{"1/8", "1/4"}, {"3/4", "1"}}));

    auto [m3, r3] = o.cut_from_right(1, Piece::unit(), rat(0));
    CHECK(m3 == rat(1));
    CHECK(r3.empty());
}

TEST_CASE("cut_equal examples") {
    std::map<int, Valuation> vals;
    vals.emplace(1, Valuation::uniform());
    vals.emplace(2, Valuation({{rat(0), rat(1, 3), rat(3)},
                               {rat(1, 3), rat(2, 3), rat(0)},
                               {rat(2, 3), rat(1), rat(3, 2)}}));
    Oracle o(std::move(vals));

    auto thirds = o.cut_equal(1, Piece::unit(), 3);
    CHECK(thirds[0] == piece_of({{"0", "1/3"}}));
    CHECK(thirds[1] == piece_of({{"1/3", "2/3"}}));
    CHECK(thirds[2] == piece_of({{"2/3", "1"}}));

    auto halves = o.cut_equal(1, piece_of({{"0", "1/2"}}), 2);
    CHECK(halves[0] == piece_of({{"0", "1/4"}}));
    CHECK(halves[1] == piece_of({{"1/4", "1/2"}}));

    auto split = o.cut_equal(2, Piece::unit(), 2);
    CHECK(split[0] == piece_of({{"0", "1/4"}}));
    CHECK(split[1] == piece_of({{"1/4", "1"}}));

    CHECK_THROWS_AS(o.cut_equal(2, piece_of({{"1/3", "2/3"}}), 2), ZeroValueResidue);
}

TEST_CASE("cut then eval round-trips exactly") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 300; ++it) {
        std::map<int, Valuation> vals;
        vals.emplace(1, cakecut::testing::random_valuation(rng));
        Oracle o(std::move(vals));
        const Valuation& v = o.valuation(1);

        Rational x = cakecut::testing::random_breakpoint(rng);
        Rational avail = v.value_interval(x, rat(1));
        std::uniform_int_distribution<long> num(0, 16);
        Rational r = avail * num(rng) / 16;
        Rational y = o.cut(1, x, r);
        CHECK(v.value_interval(x, y) == r);
    }
}

TEST_CASE("additivity over interior-disjoint pieces") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 200; ++it) {
        Valuation v = cakecut::testing::random_valuation(rng);
        Rational a = cakecut::testing::random_breakpoint(rng);
        Rational b = cakecut::testing::random_breakpoint(rng);
        if (a > b) std::swap(a, b);
        Piece p = piece_of({{"0", "1"}});
        Piece left = piece_clip(p, rat(0), a);
        Piece mid = piece_clip(p, a, b);
        Piece right = piece_clip(p, b, rat(1));
        CHECK(v.value(left) + v.value(mid) + v.value(right) == v.total());
    }
}

TEST_CASE("cut monotonicity in the target") {
    std::mt19937_64 rng(44);
    for (int it = 0; it < 200; ++it) {
        std::map<int, Valuation> vals;
        vals.emplace(1, cakecut::testing::random_valuation(rng));
        Oracle o(std::move(vals));
        Rational avail = o.valuation(1).total();
        std::uniform_int_distribution<long> num(0, 15);
        long n1 = num(rng), n2 = num(rng);
        if (n1 > n2) std::swap(n1, n2);
        Rational y1 = o.cut(1, rat(0), avail * n1 / 16);
        Rational y2 = o.cut(1, rat(0), avail * n2 / 16);
        CHECK(y1 <= y2);
    }
}

TEST_CASE("full-information ledger follows the (n-1)k + n eval accounting") {
    std::map<int, Valuation> vals;
    for (int i = 1; i <= 4; ++i) vals.emplace(i, Valuation::uniform());
    Oracle o(std::move(vals));
    CHECK(o.ledger().eval_count == 4);  // initial whole-cake evals
    o.cut(1, rat(0), rat(1, 2));
    o.cut_from_right(2, Piece::unit(), rat(1, 8));
    o.cut_equal(3, Piece::unit(), 4);
    CHECK(o.ledger().cut_count == 5);
    CHECK(o.ledger().eval_count == (4 - 1) * 5 + 4);
    CHECK(o.ledger().eval_count <= o.remark1_eval_bound());
}

TEST_CASE("ledger counters match logged entries") {
    Oracle o = two_tier_oracle();
    o.cut(1, rat(0), rat(1, 4));
    o.eval(2, piece_of({{"0", "1/4"}, {"1/2", "3/4"}}));
    long cuts = 0, evals = 0;
    for (const auto& rec : o.ledger().log())
        (rec.kind == QueryKind::Cut ? cuts : evals)++;
    CHECK(cuts == o.ledger().cut_count);
    CHECK(evals == o.ledger().eval_count);
}
