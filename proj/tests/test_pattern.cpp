#include <doctest.h>

#include <random>
#include <set>

#include "hds/pattern.hpp"

using namespace hds;

namespace {

// Independent oracle: scan every embedded word.
Rat brute_force_max_sq(const CandidateClass& cls) {
    ScaledVector x = cls.canonical_element();
    Rat best(0);
    for (const ScaledVector& y : embed_hamming(cls.n, cls.m)) {
        Rat d = sq_dist(x, y).reduced();
        if (best < d) best = d;
    }
    return best;
}

std::vector<int> random_word(std::mt19937& rng, int n, int m) {
    std::vector<int> w(m);
    for (int j = 0; j < m; ++j) w[j] = (int)(rng() % n);
    return w;
}

} // namespace

TEST_CASE("block pattern invariants are enforced at construction") {
    CHECK_NOTHROW(BlockPattern(3, 4, {1, 1, 1}));  // (4,1,-2)/3
    CHECK_NOTHROW(BlockPattern(3, 5, {1, 0, 2}));  // (5,-1^2)/3
    CHECK_THROWS_AS(BlockPattern(3, 4, {1, 1, 0}), domain_error); // trailing zero
    CHECK_THROWS_AS(BlockPattern(3, 3, {1, 1, 1}), domain_error); // k0 mismatch
    CHECK_THROWS_AS(BlockPattern(3, 4, {2, 1, 1}), domain_error); // wrong sum
}

TEST_CASE("m statistic equals the brute-force maximum over the embedding") {
    struct Case {
        const char* text;
        long long expect;
    };
    // last one: every block constant gives max distance 2 per block
    for (const Case& c : {Case{"((2^4,-3)^P,1^5)/5", 4}, Case{"((4^6,-5^3)^P,1^9,1^9)/9", 6},
                          Case{"(1^3,1^3,1^3)/3", 2}, Case{"((4,1,-2)^P,1^3,1^3)/3", 6},
                          Case{"((5,-1^2)^P,1^3,1^3)/3", 6}, Case{"((9,3^2,-3^3)^P,1^6,1^6,1^6)/6", 8}}) {
        CandidateClass cls = CandidateClass::parse(c.text);
        CHECK(cls.m_value() == Rat(c.expect));
        CHECK(cls.m_value() == brute_force_max_sq(cls));
    }
}

TEST_CASE("addability criterion") {
    CHECK(CandidateClass::parse("((4^6,-5^3)^P,1^9,1^9)/9").is_addable());
    CHECK(CandidateClass::parse("((2^4,-3)^P,1^5)/5").is_addable());
    CHECK_FALSE(CandidateClass::parse("(1^5,1^5)/5").is_addable()); // M = 8/5
    // M = 8 exceeds 2m for m = 3
    CandidateClass big(3, {BlockPattern(3, 4, {1, 1, 1}), BlockPattern(3, 4, {1, 1, 1}),
                           BlockPattern::all_ones(3)});
    CHECK(big.m_value() == Rat(10));
    CHECK_FALSE(big.is_addable());
}

TEST_CASE("modification lowers the statistic by a positive even amount") {
    CandidateClass cls = CandidateClass::parse("((4,1,-2)^P,1^3,1^3)/3");
    CandidateClass reduced = cls.modify(0);
    CHECK(reduced == CandidateClass::parse("(1^3,1^3,1^3)/3"));
    CHECK(cls.m_value() - reduced.m_value() == Rat(4)); // t=3, trailing multiplicity 1

    CandidateClass five = CandidateClass::parse("((5,-1^2)^P,1^3,1^3)/3");
    CandidateClass five_red = five.modify(0);
    CHECK(five_red == CandidateClass::parse("((2^2,-1)^P,1^3,1^3)/3"));
    CHECK(five.m_value() - five_red.m_value() == Rat(2)); // trailing multiplicity 2

    CHECK_THROWS_AS(reduced.modify(0), domain_error);
}

TEST_CASE("reduce reaches a two-level class and fixes reduced classes") {
    CHECK(CandidateClass::parse("((4,1,-2)^P,1^3,1^3)/3").reduce() ==
          CandidateClass::parse("(1^3,1^3,1^3)/3"));
    CHECK(CandidateClass::parse("((5,-1^2)^P,1^3,1^3)/3").reduce() ==
          CandidateClass::parse("((2^2,-1)^P,1^3,1^3)/3"));
    CandidateClass fixed = CandidateClass::parse("((2^2,-1)^P,1^3,1^3)/3");
    CHECK(fixed.reduce() == fixed);
    CHECK(CandidateClass::parse("((9,3^2,-3^3)^P,1^6,1^6,1^6)/6").reduce() ==
          CandidateClass::parse("((3^4,-3^2)^P,1^6,1^6,1^6)/6"));
}

TEST_CASE("inverse expansions find every addable preimage") {
    CandidateClass ones = CandidateClass::parse("(1^3,1^3,1^3)/3");
    auto exp = ones.inverse_expansions();
    REQUIRE(exp.size() == 3); // one per block position
    std::set<CandidateClass> expect{CandidateClass::parse("((4,1,-2)^P,1^3,1^3)/3"),
                                    CandidateClass::parse("(1^3,(4,1,-2)^P,1^3)/3"),
                                    CandidateClass::parse("(1^3,1^3,(4,1,-2)^P)/3")};
    CHECK(std::set<CandidateClass>(exp.begin(), exp.end()) == expect);
    for (const auto& e : exp) {
        CHECK(e.is_addable());
        CHECK(e.reduce() == ones);
    }

    CandidateClass two = CandidateClass::parse("((2^2,-1)^P,1^3,1^3)/3");
    auto exp2 = two.inverse_expansions();
    REQUIRE(exp2.size() == 1);
    CHECK(exp2[0] == CandidateClass::parse("((5,-1^2)^P,1^3,1^3)/3"));
    CHECK(exp2[0].reduce() == two);

    // statistic already 2m: nothing can expand
    CandidateClass full = CandidateClass::parse("((2^2,-1)^P,(2^2,-1)^P,1^3)/3");
    CHECK(full.m_value() == Rat(6));
    CHECK(full.inverse_expansions().empty());

    // four blocks, n = 6
    CandidateClass six = CandidateClass::parse("((3^4,-3^2)^P,1^6,1^6,1^6)/6");
    auto exp6 = six.inverse_expansions();
    REQUIRE(exp6.size() == 1);
    CHECK(exp6[0] == CandidateClass::parse("((9,3^2,-3^3)^P,1^6,1^6,1^6)/6"));
}

TEST_CASE("canonical element sorts every block descending") {
    CHECK(CandidateClass::parse("((2^4,-3)^P,1^5)/5").canonical_element() ==
          ScaledVector(5, 2, {2, 2, 2, 2, -3, 1, 1, 1, 1, 1}));
    CHECK(CandidateClass::parse("(1^3,1^3,1^3)/3").canonical_element() ==
          ScaledVector(3, 3, std::vector<int>(9, 1)));
    CHECK(CandidateClass::parse("((4,1,-2)^P,1^3,1^3)/3").canonical_element() ==
          ScaledVector(3, 3, {4, 1, -2, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("class enumeration matches the multinomial count") {
    CHECK(CandidateClass::parse("((2^4,-3)^P,1^5)/5").enumerate().size() == 5);
    CHECK(CandidateClass::parse("((3^3,-2^2)^P,1^5)/5").enumerate().size() == 10);
    CandidateClass big = CandidateClass::parse("((15^5,-4^14)^P,1^19,1^19,1^19)/19");
    CHECK(big.class_size() == 11628);
    CHECK(big.enumerate().size() == 11628);
    CHECK_THROWS_WITH_AS(big.enumerate(10), doctest::Contains("11628"), domain_error);

    // enumerated vectors are distinct and all share the class statistic
    auto pts = CandidateClass::parse("((4,1,-2)^P,1^3,1^3)/3").enumerate();
    CHECK(std::set<ScaledVector>(pts.begin(), pts.end()).size() == pts.size());
    CHECK(pts.size() == 6);
}

TEST_CASE("notation parses and prints round-trip") {
    for (const char* text :
         {"((4^6,-5^3)^P,1^9,1^9)/9", "(1^3,1^3,1^3)/3", "((5,0^4)^P,(2^4,-3)^P,1^5)/5",
          "((9,3^2,-3^3)^P,1^6,1^6,1^6)/6", "((3,0^2)^P,(4,1,-2)^P,1^3,1^3)/3"}) {
        CandidateClass cls = CandidateClass::parse(text);
        CHECK(cls.str() == text);
        CHECK(CandidateClass::parse(cls.str()) == cls);
    }
    // interior zero multiplicities disappear from the notation but not the levels
    CandidateClass five = CandidateClass::parse("((5,-1^2)^P,1^3,1^3)/3");
    CHECK(five.blocks[0].t() == 3);
    CHECK(five.blocks[0].mults == std::vector<int>{1, 0, 2});
}

TEST_CASE("signed sums of coordinate differences stay within the word bound") {
    std::mt19937 rng(11);
    for (const char* text : {"((4^6,-5^3)^P,1^9,1^9)/9", "((5,-1^2)^P,1^3,1^3)/3",
                             "((6^2,-1^5)^P,(5^3,-2^4)^P,1^7,1^7)/7"}) {
        CandidateClass cls = CandidateClass::parse(text);
        ScaledVector x = cls.canonical_element();
        for (int trial = 0; trial < 200; ++trial) {
            auto w1 = random_word(rng, cls.n, cls.m);
            auto w2 = random_word(rng, cls.n, cls.m);
            long long sum = 0;
            for (int j = 0; j < cls.m; ++j)
                sum += x.block(j)[w1[j]] - x.block(j)[w2[j]];
            CHECK(sum % cls.n == 0);
            long long v = sum / cls.n;
            CHECK(v <= cls.m - 1);
            CHECK(v >= -(cls.m - 1));
        }
    }
}

TEST_CASE("distances from addable classes to the embedding are even integers up to 2m") {
    for (const char* text : {"((2^4,-3)^P,1^5)/5", "((4,1,-2)^P,1^3,1^3)/3",
                             "((2^2,-1)^P,(2^2,-1)^P,1^3)/3", "((3,-1)^P,1^2,1^2,1^2)/2"}) {
        CandidateClass cls = CandidateClass::parse(text);
        REQUIRE(cls.is_addable());
        for (const ScaledVector& x : cls.enumerate())
            for (const ScaledVector& y : embed_hamming(cls.n, cls.m)) {
                Rat d = sq_dist(x, y).reduced();
                CHECK(d.is_even_integer());
                CHECK(d.num >= 2);
                CHECK(d.num <= 2ll * cls.m);
            }
    }
}

TEST_CASE("per-level distance formula agrees with the direct computation") {
    std::mt19937 rng(23);
    for (const char* text : {"((4^6,-5^3)^P,1^9,1^9)/9", "((9,3^2,-3^3)^P,1^6,1^6,1^6)/6",
                             "((5,-1^2)^P,1^3,1^3)/3"}) {
        CandidateClass cls = CandidateClass::parse(text);
        ScaledVector x = cls.canonical_element();
        for (int trial = 0; trial < 100; ++trial) {
            auto w = random_word(rng, cls.n, cls.m);
            IndicatorProfile prof(cls, w);
            for (int lv : prof.level) CHECK(lv >= 0);
            CHECK(level_formula_sq_dist(cls, prof) ==
                  sq_dist(x, embed_word(cls.n, cls.m, w)).reduced());
        }
    }
}

TEST_CASE("orbit representative sorts blocks descending") {
    CandidateClass cls = CandidateClass::parse("(1^9,(4^6,-5^3)^P,1^9)/9");
    CHECK(cls.orbit_representative() == CandidateClass::parse("((4^6,-5^3)^P,1^9,1^9)/9"));
    CHECK(cls.orbit_representative() ==
          cls.with_blocks_permuted({2, 1, 0}).orbit_representative());
}
