#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cakecut/significance.hpp"
#include "test_support.hpp"

using namespace cakecut;
using cakecut::testing::piece_of;

namespace {

Constants k4_100() { return constants_override(4, BigInt(50), BigInt(100), BigInt(9)); }

}  // namespace

TEST_CASE("classification thresholds") {
    auto k = k4_100();
    CHECK(classify(rat(0), rat(1), k) == SignificanceClass::Insignificant);
    CHECK(classify(rat(1), rat(1), k) == SignificanceClass::VerySignificant);
    // n=4, Cp=100, v=1: 1/1600 < 1/500 < 1/100
    CHECK(classify(rat(1, 500), rat(1), k) == SignificanceClass::Intermediate);
    CHECK(classify(rat(1, 1600), rat(1), k) == SignificanceClass::Insignificant);
    CHECK(classify(rat(1, 100), rat(1), k) == SignificanceClass::VerySignificant);
    // zero residue value
    CHECK(classify(rat(0), rat(0), k) == SignificanceClass::Insignificant);
    CHECK(classify(rat(1, 10), rat(0), k) == SignificanceClass::VerySignificant);
}

TEST_CASE("significance threshold sits between the bands") {
    auto k = k4_100();
    CHECK(is_significant(rat(1, 400), rat(1), k));
    CHECK_FALSE(is_significant(rat(1, 401), rat(1), k));
    CHECK(is_significant(rat(0), rat(0), k));
    // very significant implies significant (1/Cp >= 1/(n Cp))
    CHECK(is_significant(rat(1, 100), rat(1), k));
}

TEST_CASE("classify partitions [0, v] into three contiguous bands") {
    auto k = k4_100();
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(0, 4000);
    Rational v(1);
    for (int it = 0; it < 400; ++it) {
        Rational x = rat(num(rng), 4000);
        auto c = classify(x, v, k);
        if (x <= v / 1600)
            CHECK(c == SignificanceClass::Insignificant);
        else if (x >= v / 100)
            CHECK(c == SignificanceClass::VerySignificant);
        else
            CHECK(c == SignificanceClass::Intermediate);
        if (c == SignificanceClass::VerySignificant) CHECK(is_significant(x, v, k));
    }
}

TEST_CASE("bonus and domination") {
    std::map<int, Valuation> vals;
    vals.emplace(1, Valuation::uniform());
    vals.emplace(2, Valuation::uniform());
    Oracle o(std::move(vals));

    PartialAllocation s;
    s.cake = Piece::unit();
    s.shares[1] = piece_of({{"0", "1/2"}});
    s.shares[2] = piece_of({{"1/2", "3/4"}});
    s.residue = piece_of({{"3/4", "1"}});

    CHECK(bonus(o, s, 1, 2) == rat(1, 4));
    CHECK(bonus(o, s, 1, 1) == 0);
    // bonus 1/4 vs residue value 1/4: domination at the boundary (>=)
    CHECK(dominates(o, s, s.residue, 1, 2));
    CHECK_FALSE(dominates(o, s, piece_of({{"2/3", "1"}}), 1, 2));
    // empty residue: envy-free allocation dominates everywhere
    CHECK(dominates(o, s, Piece{}, 1, 2));
}

namespace {

Snapshot make_snapshot(int id, std::map<int, std::vector<int>> extractors) {
    Snapshot s;
    s.id = id;
    for (int a = 1; a <= 3; ++a) s.c[a] = Piece{};
    for (auto& [k, list] : extractors) {
        for (int e : list) s.extractions[k].push_back({Piece{}, e});
    }
    s.extraction_done = true;
    return s;
}

}  // namespace

TEST_CASE("iso keys follow the definition") {
    auto a = make_snapshot(1, {{1, {2, 3}}, {2, {1}}, {3, {}}});
    auto b = make_snapshot(2, {{1, {2, 3}}, {2, {1}}, {3, {}}});
    CHECK(iso_key(a) == iso_key(b));

    // same extractor sets, different order: different key
    auto c = make_snapshot(3, {{1, {3, 2}}, {2, {1}}, {3, {}}});
    CHECK(iso_key(a) != iso_key(c));

    // differing m_{jk}: different key
    auto d = make_snapshot(4, {{1, {2}}, {2, {1}}, {3, {}}});
    CHECK(iso_key(a) != iso_key(d));

    Snapshot undone;
    undone.c[1] = Piece{};
    CHECK_THROWS_AS(iso_key(undone), StateError);
}

TEST_CASE("semi-invariant counts very significant triples") {
    std::map<int, Valuation> vals;
    vals.emplace(1, Valuation::uniform());
    vals.emplace(2, Valuation::uniform());
    Oracle o(std::move(vals));
    auto k = k4_100();

    Snapshot snap;
    snap.id = 1;
    snap.c[1] = piece_of({{"0", "1/2"}});
    snap.c[2] = piece_of({{"1/2", "3/4"}});
    std::vector<Snapshot> snaps{snap};

    // all bonuses zero -> 0
    Snapshot even;
    even.id = 2;
    even.c[1] = piece_of({{"0", "1/4"}});
    even.c[2] = piece_of({{"1/4", "1/2"}});
    CHECK(semi_invariant({even}, o, {{1, rat(1, 2)}, {2, rat(1, 2)}}, k) == 0);

    // bonus of 1 over 2 is 1/4; with v_eff = 25 the threshold v/Cp = 1/4 is hit
    CHECK(semi_invariant(snaps, o, {{1, rat(25)}, {2, rat(25)}}, k) == 1);
    // larger residue: no longer very significant
    CHECK(semi_invariant(snaps, o, {{1, rat(26)}, {2, rat(26)}}, k) == 0);
    // shrinking the residue can only add triples
    CHECK(semi_invariant(snaps, o, {{1, rat(1, 10)}, {2, rat(1, 10)}}, k) == 1);
}
