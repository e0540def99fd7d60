#include <doctest.h>

#include <random>

#include "hds/extended.hpp"
#include "hds/quadratic.hpp"
#include "hds/rational.hpp"
#include "hds/vector.hpp"

using namespace hds;

TEST_CASE("rational arithmetic is exact and reduced") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(-4, 8).str() == "-1/2");
    CHECK(Rat(7, 1).is_integer());
    CHECK(Rat(8).is_even_integer());
    CHECK_FALSE(Rat(8, 3).is_even_integer());
    CHECK(Rat(2, 3) < Rat(3, 4));
    CHECK_THROWS_AS(Rat(1, 0), domain_error);
}

TEST_CASE("rational overflow is detected, never wrapped") {
    Rat big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, overflow_error);
    CHECK_NOTHROW(big + big); // 2*(max/2) still fits
}

TEST_CASE("quadratic values canonicalize square factors") {
    QuadraticValue v(Rat(0), Rat(1), Rat(8));
    CHECK(v.b == Rat(2));
    CHECK(v.r == Rat(2));

    QuadraticValue folded(Rat(1), Rat(3), Rat(4, 9)); // 1 + 3*(2/3) = 3
    CHECK(folded.is_rational());
    CHECK(folded.equals_rational(Rat(3)));

    QuadraticValue zero_coeff(Rat(5), Rat(0), Rat(7));
    CHECK(zero_coeff.equals_rational(Rat(5)));

    CHECK(QuadraticValue(Rat(1), Rat(1), Rat(2)) != QuadraticValue(Rat(1), Rat(1), Rat(3)));
    CHECK_THROWS_AS(QuadraticValue(Rat(0), Rat(1), Rat(-1)), domain_error);
}

TEST_CASE("embedding produces n^m points with one spike per block") {
    auto h22 = embed_hamming(2, 2);
    CHECK(h22.size() == 4);
    for (const auto& p : h22) {
        for (int j = 0; j < 2; ++j) {
            int spikes = 0;
            for (int i = 0; i < 2; ++i)
                if (p.block(j)[i] == 2) ++spikes;
            CHECK(spikes == 1);
        }
    }
    CHECK(embed_hamming(5, 2).size() == 25);
    CHECK(hamming_count(19, 4) == 130321);
    CHECK_THROWS_AS(embed_hamming(1, 2), domain_error);
    CHECK_THROWS_AS(embed_hamming(3, 0), domain_error);
}

TEST_CASE("squared distance doubles the word distance") {
    // words over {0,1,2} of length 2
    auto x = embed_word(3, 2, {0, 0});
    auto y = embed_word(3, 2, {0, 1});
    auto z = embed_word(3, 2, {1, 0});
    CHECK(sq_dist(x, y).reduced() == Rat(2));
    CHECK(sq_dist(y, z).reduced() == Rat(4));
    CHECK(sq_dist(x, x).reduced() == Rat(0));

    ScaledVector a(5, 2, {2, 2, 2, 2, -3, 1, 1, 1, 1, 1});
    ScaledVector b(5, 2, {1, 1, 1, 1, 1, 3, 3, 3, -2, -2});
    CHECK(sq_dist(a, b).reduced() == Rat(2));

    ScaledVector c(5, 1, {1, 1, 1, 1, 1});
    CHECK_THROWS_AS(sq_dist(a, c), domain_error);
}

TEST_CASE("embedding distance equals twice word distance, exhaustively") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {2, 4}, {4, 2}, {3, 3}}) {
        auto pts = embed_hamming(n, m);
        std::vector<std::vector<int>> words;
        std::vector<int> word(m, 0);
        for (;;) {
            words.push_back(word);
            int j = m - 1;
            while (j >= 0 && word[j] == n - 1) { word[j] = 0; --j; }
            if (j < 0) break;
            ++word[j];
        }
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                int h = 0;
                for (int c = 0; c < m; ++c)
                    if (words[i][c] != words[j][c]) ++h;
                CHECK(sq_dist(pts[i], pts[j]).reduced() == Rat(2 * h));
            }
    }
}

TEST_CASE("metric properties hold on random triples") {
    std::mt19937 rng(7);
    auto pts = embed_hamming(4, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& a = pts[rng() % pts.size()];
        const auto& b = pts[rng() % pts.size()];
        const auto& c = pts[rng() % pts.size()];
        Rat ab = sq_dist(a, b).reduced();
        Rat ba = sq_dist(b, a).reduced();
        CHECK(ab == ba);
        CHECK((ab.is_zero() == (a == b)));
        // sqrt(ab) <= sqrt(ac) + sqrt(cb), squared twice to stay rational
        Rat ac = sq_dist(a, c).reduced(), cb = sq_dist(c, b).reduced();
        Rat lhs = ab - ac - cb;
        bool triangle = lhs <= Rat(0) || lhs * lhs <= Rat(4) * ac * cb;
        CHECK(triangle);
    }
}

TEST_CASE("distance multiset counts unordered pairs") {
    auto h22 = embed_hamming(2, 2);
    auto hist = distance_multiset(h22);
    CHECK(hist.size() == 2);
    CHECK(hist[Rat(2)] == 4);
    CHECK(hist[Rat(4)] == 2);

    auto h52 = distance_multiset(embed_hamming(5, 2));
    CHECK(h52.size() == 2);
    CHECK(h52.count(Rat(2)) == 1);
    CHECK(h52.count(Rat(4)) == 1);

    // one pair at squared distance 6
    std::vector<ScaledVector> pair{embed_word(3, 3, {0, 0, 0}), embed_word(3, 3, {1, 1, 1})};
    auto single = distance_multiset(pair);
    CHECK(single.size() == 1);
    CHECK(single[Rat(6)] == 1);

    CHECK_THROWS_AS(distance_multiset({embed_word(2, 2, {0, 0})}), domain_error);
}

TEST_CASE("m-distance property of the embedding") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {5, 2}, {3, 3}, {2, 4}}) {
        auto hist = distance_multiset(embed_hamming(n, m));
        REQUIRE((int)hist.size() == m);
        for (int k = 1; k <= m; ++k) CHECK(hist.count(Rat(2 * k)) == 1);
    }
}

TEST_CASE("quadratic squared distances for points with a root coordinate") {
    // identical rational parts, same sign and radicand: distance 0
    ScaledVector ones4(4, 2, std::vector<int>(8, 1));
    ExtendedPoint p{ones4, 1, Rat(1, 2)};
    CHECK(quad_sq_dist(p, p).equals_rational(Rat(0)));

    // n=8: radicands 1/4 and 9/4 with opposite signs combine rationally to 4
    ScaledVector ones8(8, 2, std::vector<int>(16, 1));
    ExtendedPoint x1{ones8, 1, Rat(1, 4)};
    ExtendedPoint x9{ones8, -1, Rat(9, 4)};
    CHECK(quad_sq_dist(x1, x9).equals_rational(Rat(4)));

    // n=4, k=3: antipodal pair over the same rational part at (2*sqrt(1/2))^2 = 2
    CHECK(beta_sq(4, 3) == Rat(1, 2));
    ScaledVector base(4, 2, {3, 3, -1, -1, 1, 1, 1, 1});
    ExtendedPoint plus{base, 1, Rat(1, 2)};
    ExtendedPoint minus{base, -1, Rat(1, 2)};
    CHECK(quad_sq_dist(plus, minus).equals_rational(Rat(2)));

    // mixed radicands with irrational product stay irrational
    ExtendedPoint q{ones8, 1, Rat(1, 2)};
    ExtendedPoint r{ones8, 1, Rat(3, 2)};
    CHECK_FALSE(quad_sq_dist(q, r).is_rational());
    // while a rational-square product collapses to a rational
    ExtendedPoint r2{ones8, 1, Rat(9, 8)};
    CHECK(quad_sq_dist(q, r2).is_rational());
}
