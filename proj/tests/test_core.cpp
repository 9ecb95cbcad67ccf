#include <doctest.h>

#include "latticeforge/errors.hpp"
#include "latticeforge/lattice.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <random>

using namespace lf;

namespace {

// the definition delta is checked against: averaged exponential sum, rounded
int delta_exponential_oracle(std::int64_t a, std::int64_t n) {
    std::complex<double> acc(0.0, 0.0);
    for (std::int64_t k = 0; k < n; ++k) {
        const double phase = 2.0 * M_PI * static_cast<double>(a) * static_cast<double>(k) /
                             static_cast<double>(n);
        acc += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return static_cast<int>(std::lround(acc.real() / static_cast<double>(n)));
}

} // namespace

TEST_CASE("gamma_of_set") {
    const auto geo_half = WeightSequence::geometric(0.5);
    const auto poly2 = WeightSequence::polynomial(2.0);

    CHECK(gamma_of_set({}, geo_half) == 1.0);
    CHECK(gamma_of_set({1, 2}, geo_half) == doctest::Approx(1.0 / 8.0).epsilon(1e-15));
    CHECK(gamma_of_set({3}, poly2) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));

    SUBCASE("multiplicative over disjoint unions") {
        std::mt19937 rng(7);
        for (int it = 0; it < 50; ++it) {
            std::vector<int> u, v, both;
            for (int j = 1; j <= 12; ++j) {
                switch (rng() % 3) {
                case 0: u.push_back(j); both.push_back(j); break;
                case 1: v.push_back(j); both.push_back(j); break;
                default: break;
                }
            }
            CHECK(gamma_of_set(both, geo_half) ==
                  doctest::Approx(gamma_of_set(u, geo_half) * gamma_of_set(v, geo_half))
                      .epsilon(1e-13));
        }
    }
}

TEST_CASE("dual_weight") {
    const auto ones = WeightSequence::explicit_list({1.0, 0.5});
    CHECK(dual_weight({0, 0}, 2.0, ones) == 1.0);
    CHECK(dual_weight({2, -3}, 2.0, ones) == doctest::Approx(1.0 / 72.0).epsilon(1e-15));

    const auto g03 = WeightSequence::explicit_list({0.3});
    CHECK(dual_weight({5}, 3.0, g03) == doctest::Approx(0.0024).epsilon(1e-15));

    SUBCASE("symmetric under negation") {
        const auto poly3 = WeightSequence::polynomial(3.0);
        std::mt19937 rng(11);
        for (int it = 0; it < 100; ++it) {
            std::vector<std::int64_t> ell(4), neg(4);
            for (int j = 0; j < 4; ++j) {
                ell[j] = static_cast<std::int64_t>(rng() % 21) - 10;
                neg[j] = -ell[j];
            }
            CHECK(dual_weight(ell, 2.5, poly3) == dual_weight(neg, 2.5, poly3));
        }
    }
}

TEST_CASE("delta_n") {
    CHECK(delta_n(16, 8) == 1);
    CHECK(delta_n(12, 8) == 0);
    CHECK(delta_n(0, 4) == 1);

    SUBCASE("invariant under reduction mod N and matches the exponential sum") {
        std::mt19937 rng(3);
        for (int it = 0; it < 200; ++it) {
            const std::int64_t n = std::int64_t{1} << (1 + rng() % 6);
            const std::int64_t a = static_cast<std::int64_t>(rng() % 1000) - 500;
            CHECK(delta_n(a, n) == delta_n(((a % n) + n) % n, n));
            CHECK(delta_n(a, n) == delta_exponential_oracle(a, n));
        }
    }
}

TEST_CASE("d_star") {
    SUBCASE("all-zero reduction clamps to d") {
        CHECK(ReductionIndices::zero().d_star(10, 25) == 25);
    }
    SUBCASE("logarithmic examples") {
        const auto log2w = ReductionIndices::logarithmic(2.0);
        CHECK(log2w.d_star(6, 100) == 7);
        CHECK(log2w.d_star(10, 100) == 31);
    }
    SUBCASE("monotone non-increasing when w grows") {
        const auto w1 = ReductionIndices::logarithmic(1.0);
        const auto w2 = ReductionIndices::logarithmic(2.0);
        const auto w3 = ReductionIndices::logarithmic(3.5);
        for (int m = 2; m <= 12; ++m) {
            CHECK(w2.d_star(m, 1000) <= w1.d_star(m, 1000));
            CHECK(w3.d_star(m, 1000) <= w2.d_star(m, 1000));
        }
    }
}

TEST_CASE("logarithmic reduction indices are boundary-exact") {
    const auto w = ReductionIndices::logarithmic(2.0);
    // j = 2^i sits exactly on the boundary: w_j = 2i must not round down
    for (int i = 1; i <= 10; ++i)
        CHECK(w(1 << i) == 2 * i);

    const auto w15 = ReductionIndices::logarithmic(1.5);
    CHECK(w15(2) == 1);  // floor(1.5)
    CHECK(w15(4) == 3);  // exactly 3
    CHECK(w15(8) == 4);  // floor(4.5)
    CHECK(w15(101) == 9);
    CHECK(w15(102) == 10); // 1.5*log2(102) = 10.008

    const auto w35 = ReductionIndices::logarithmic(3.5);
    for (int j = 1; j <= 4096; ++j) {
        // cross-check against exact integer comparison 2^w <= j^7 < 2^{w+... }
        const double exact = 3.5 * std::log2(static_cast<double>(j));
        const int got = w35(j);
        CHECK(got <= exact + 1e-9);
        CHECK(got + 1 > exact - 1e-9);
    }
}

TEST_CASE("index_window") {
    const LatticeConfig cfg(4, 8);
    const auto w_explicit = ReductionIndices::explicit_list({0, 1, 5, 5, 5, 5, 5, 5});

    const IndexWindow full = index_window(1, cfg, w_explicit);
    CHECK(full.half_width == 15);
    CHECK(full.contains(0));
    CHECK(full.contains(-15));
    CHECK(!full.contains(16));

    const IndexWindow w1 = index_window(2, cfg, w_explicit);
    CHECK(w1.half_width == 7);

    const IndexWindow beyond = index_window(3, cfg, w_explicit, true);
    CHECK(beyond.half_width == 0);
    CHECK(beyond.empty());
    CHECK(!index_window(2, cfg, w_explicit, true).empty());
}

TEST_CASE("weight descriptors") {
    CHECK(WeightSequence::parse("poly:8")(2) == doctest::Approx(std::pow(2.0, -8.0)));
    CHECK(WeightSequence::parse("poly:8^2")(2) == doctest::Approx(std::pow(2.0, -16.0)));
    CHECK(WeightSequence::parse("geo:0.5")(3) == doctest::Approx(0.125));

    SUBCASE("format(parse(s)) is canonical") {
        for (const char* s : {"poly:8", "poly:8^2", "geo:0.5", "poly:3.5^0.5", "geo:0.95"})
            CHECK(WeightSequence::parse(s).format() == s);
        CHECK(WeightSequence::parse("poly:8.0").format() == "poly:8");
    }
    SUBCASE("powered composes exponents") {
        const auto g = WeightSequence::parse("poly:8").powered(2.0);
        CHECK(g(2) == doctest::Approx(std::pow(2.0, -16.0)));
        CHECK(g.format() == "poly:8^2");
        CHECK(g.powered(0.5)(2) == doctest::Approx(std::pow(2.0, -8.0)));
    }
    SUBCASE("rejects bad descriptors") {
        CHECK_THROWS_AS(WeightSequence::parse("poly"), validation_error);
        CHECK_THROWS_AS(WeightSequence::parse("poly:odd"), validation_error);
        CHECK_THROWS_AS(WeightSequence::parse("geo:1.5"), validation_error);
        CHECK_THROWS_AS(WeightSequence::parse("huh:1"), validation_error);
        CHECK_THROWS_AS(WeightSequence::polynomial(-1.0), validation_error);
    }
    SUBCASE("explicit lists must cover the requested index") {
        const auto g = WeightSequence::explicit_list({1.0, 0.5, 0.25});
        CHECK(g(3) == 0.25);
        CHECK_THROWS_AS(g(4), validation_error);
        CHECK_THROWS_AS(WeightSequence::explicit_list({1.0, -0.5}), validation_error);
    }
}

TEST_CASE("reduction descriptors") {
    CHECK(ReductionIndices::parse("zero").format() == "zero");
    CHECK(ReductionIndices::parse("log:1.5").format() == "log:1.5");
    CHECK(ReductionIndices::parse("log:3.5")(4) == 7);

    CHECK_THROWS_AS(ReductionIndices::parse("log:x"), validation_error);
    CHECK_THROWS_AS(ReductionIndices::explicit_list({1, 2}), validation_error);  // w_1 != 0
    CHECK_THROWS_AS(ReductionIndices::explicit_list({0, 2, 1}), validation_error);
    CHECK_THROWS_AS(ReductionIndices::explicit_list({0, -1}), validation_error);

    const auto ex = ReductionIndices::explicit_list({0, 0, 3});
    CHECK(ex(3) == 3);
    CHECK_THROWS_AS(ex(4), validation_error);
}

TEST_CASE("generating vector invariants") {
    const LatticeConfig cfg(4, 3);
    const auto w = ReductionIndices::explicit_list({0, 1, 2});

    const GeneratingVector ok(cfg, w, {1, 5, 3});
    CHECK(ok.full(1) == 1);
    CHECK(ok.full(2) == 10); // 2 * 5
    CHECK(ok.full(3) == 12); // 4 * 3
    CHECK(ok.d_star() == 3);

    CHECK_THROWS_AS(GeneratingVector(cfg, w, {1, 4, 3}), validation_error);  // even
    CHECK_THROWS_AS(GeneratingVector(cfg, w, {1, 9, 3}), validation_error);  // out of range
    CHECK_THROWS_AS(GeneratingVector(cfg, w, {1, 5}), validation_error);     // wrong length

    SUBCASE("coordinates beyond d* are pinned to 1 and map to 0 mod N") {
        const LatticeConfig small(2, 3);
        const auto wbig = ReductionIndices::explicit_list({0, 1, 6});
        const GeneratingVector v(small, wbig, {1, 1, 1});
        CHECK(v.d_star() == 2);
        CHECK(v.full(3) == 0);
        CHECK_THROWS_AS(GeneratingVector(small, wbig, {1, 1, 3}), validation_error);
    }
}
