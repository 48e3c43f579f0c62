#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cakecut/base_protocols.hpp"
#include "cakecut/verify.hpp"
#include "test_support.hpp"

using namespace cakecut;
using cakecut::testing::piece_of;

TEST_CASE("divide_trivial") {
    CHECK(divide_trivial(Piece::unit(), 7).share(7) == Piece::unit());
    CHECK(divide_trivial(Piece{}, 7).share(7).empty());
    CHECK(divide_trivial(piece_of({{"1/4", "1/2"}}), 1).share(1) == piece_of({{"1/4", "1/2"}}));
}

TEST_CASE("cut_and_choose examples") {
    SECTION("both uniform") {
        std::map<int, Valuation> vals;
        vals.emplace(1, Valuation::uniform());
        vals.emplace(2, Valuation::uniform());
        Oracle o(std::move(vals));
        auto a = cut_and_choose(o, Piece::unit(), 1, 2);
        CHECK(o.ledger().cut_count == 1);
        CHECK(a.residue.empty());
        CHECK(check_complete(a, Piece::unit()));
        CHECK(check_envy_free(a, o.valuations()).envy_free());
        CHECK(o.value(1, a.share(1)) == rat(1, 2));
    }
    SECTION("chooser with concentrated density takes the right half") {
        std::map<int, Valuation> vals;
        vals.emplace(1, Valuation::uniform());
        vals.emplace(2, Valuation({{rat(0), rat(1, 2), rat(0)}, {rat(1, 2), rat(1), rat(2)}}));
        Oracle o(std::move(vals));
        auto a = cut_and_choose(o, Piece::unit(), 1, 2);
        CHECK(a.share(2) == piece_of({{"1/2", "1"}}));
        CHECK(a.share(1) == piece_of({{"0", "1/2"}}));
        CHECK(o.value(2, a.share(2)) == rat(1));
        CHECK(check_envy_free(a, o.valuations()).envy_free());
    }
    SECTION("empty cake") {
        std::map<int, Valuation> vals;
        vals.emplace(1, Valuation::uniform());
        vals.emplace(2, Valuation::uniform());
        Oracle o(std::move(vals));
        auto a = cut_and_choose(o, Piece{}, 1, 2);
        CHECK(a.share(1).empty());
        CHECK(a.share(2).empty());
        CHECK(check_envy_free(a, o.valuations()).envy_free());
    }
    SECTION("divider values nothing") {
        std::map<int, Valuation> vals;
        vals.emplace(1, Valuation({{rat(0), rat(1, 2), rat(1)}, {rat(1, 2), rat(1), rat(0)}}));
        vals.emplace(2, Valuation::uniform());
        Oracle o(std::move(vals));
        auto a = cut_and_choose(o, piece_of({{"1/2", "1"}}), 1, 2);
        CHECK(a.share(2) == piece_of({{"1/2", "1"}}));
        CHECK(check_envy_free(a, o.valuations()).envy_free());
    }
}

TEST_CASE("selfridge_conway examples") {
    SECTION("all uniform: thirds with no trim") {
        std::map<int, Valuation> vals;
        for (int i = 1; i <= 3; ++i) vals.emplace(i, Valuation::uniform());
        Oracle o(std::move(vals));
        auto a = selfridge_conway(o, Piece::unit(), {1, 2, 3});
        CHECK(o.ledger().cut_count == 2);  // trisection only, zero-length trim skipped
        CHECK(check_complete(a, Piece::unit()));
        CHECK(check_envy_free(a, o.valuations()).envy_free());
        for (int i = 1; i <= 3; ++i) CHECK(a.share(i).measure() == rat(1, 3));
    }
    SECTION("empty cake") {
        std::map<int, Valuation> vals;
        for (int i = 1; i <= 3; ++i) vals.emplace(i, Valuation::uniform());
        Oracle o(std::move(vals));
        auto a = selfridge_conway(o, Piece{}, {1, 2, 3});
        CHECK(check_envy_free(a, o.valuations()).envy_free());
        CHECK(a.share(1).empty());
    }
    SECTION("concentrated third agent") {
        std::map<int, Valuation> vals;
        vals.emplace(1, Valuation::uniform());
        vals.emplace(2, Valuation::uniform());
        vals.emplace(3, Valuation({{rat(0), rat(1, 3), rat(3)}, {rat(1, 3), rat(1), rat(0)}}));
        Oracle o(std::move(vals));
        auto a = selfridge_conway(o, Piece::unit(), {1, 2, 3});
        CHECK(check_complete(a, Piece::unit()));
        CHECK(check_envy_free(a, o.valuations()).envy_free());
    }
}

TEST_CASE("random instances stay exactly envy-free") {
    std::mt19937_64 rng(20230501);
    for (int it = 0; it < 200; ++it) {
        auto vals = cakecut::testing::random_instance(rng, 2);
        Oracle o(std::move(vals));
        auto a = cut_and_choose(o, Piece::unit(), 1, 2);
        CHECK(o.ledger().cut_count == 1);
        REQUIRE(check_complete(a, Piece::unit()));
        REQUIRE(check_envy_free(a, o.valuations()).envy_free());
    }
    for (int it = 0; it < 200; ++it) {
        auto vals = cakecut::testing::random_instance(rng, 3);
        Oracle o(std::move(vals));
        auto a = selfridge_conway(o, Piece::unit(), {1, 2, 3});
        CHECK(o.ledger().cut_count <= 5);
        REQUIRE(check_complete(a, Piece::unit()));
        REQUIRE(check_envy_free(a, o.valuations()).envy_free());
    }
}
