#include <doctest.h>

#include <random>
#include <stdexcept>

#include "macmahon/qseries.hpp"

using namespace macmahon;

namespace {

constexpr std::size_t kOrder = 32;
const BigInt kTwo64 = boost::multiprecision::pow(BigInt(2), 64);
const BigInt kTwo100 = boost::multiprecision::pow(BigInt(2), 100);

// Coefficients mix small values with occasional ~100-bit ones.
QSeries random_series(std::mt19937_64& rng, std::size_t order = kOrder) {
    std::uniform_int_distribution<int> small(-20, 20);
    std::uniform_int_distribution<int> pick(0, 9);
    std::vector<BigInt> c(order);
    for (auto& v : c) {
        v = small(rng);
        if (pick(rng) == 0) {
            const BigInt high = rng();
            v = high * kTwo64 + rng() - kTwo100;
        }
    }
    return QSeries(order, std::move(c));
}

QSeries unit_series(std::mt19937_64& rng) {
    QSeries f = random_series(rng);
    std::vector<BigInt> c = f.coeffs();
    c[0] = (rng() & 1) ? 1 : -1;
    return QSeries(kOrder, std::move(c));
}

}  // namespace

TEST_CASE("ring examples") {
    CHECK(qs_mul(QSeries(4, {1, -1}), QSeries(4, {1, 1, 1, 1})) == QSeries::one(4));
    const QSeries f(5, {3, -1, 4, 1, -5});
    CHECK(qs_add(f, qs_neg(f)).is_zero());
    const QSeries g(3, {1, 1});
    CHECK(g * g == QSeries(3, {1, 2, 1}));
}

TEST_CASE("inverse examples") {
    CHECK(qs_inverse(QSeries(5, {1, -1})) == QSeries(5, {1, 1, 1, 1, 1}));
    CHECK(qs_inverse(QSeries::one(6)) == QSeries::one(6));
    const QSeries sq = QSeries(4, {1, -1}) * QSeries(4, {1, -1});
    const QSeries inv = qs_inverse(sq);
    CHECK(inv == QSeries(4, {1, 2, 3, 4}));
    CHECK(sq * inv == QSeries::one(4));
    CHECK(qs_inverse(QSeries(3, {-1, 1})) == QSeries(3, {-1, -1, -1}));
}

TEST_CASE("inverse needs a unit constant term") {
    CHECK_THROWS_AS(QSeries(4, {2, 1}).inverse(), std::domain_error);
    CHECK_THROWS_AS(QSeries(4, {0, 1}).inverse(), std::domain_error);
}

TEST_CASE("mixed orders truncate to the smaller order") {
    const QSeries a(3, {1, 2, 3});
    const QSeries b(5, {1, 1, 1, 1, 1});
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK(a + b == QSeries(3, {2, 3, 4}));
    // Equality compares the common prefix.
    CHECK(QSeries(2, {1, 2}) == QSeries(4, {1, 2, 7, 7}));
    CHECK_FALSE(QSeries(3, {1, 2, 0}) == QSeries(4, {1, 2, 7, 7}));
}

TEST_CASE("shift, valuation, truncation") {
    const QSeries f(5, {0, 0, 3, 1, 9});
    CHECK(f.valuation() == 2);
    CHECK(QSeries(5).valuation() == 5);
    CHECK(f.shifted(2) == QSeries(5, {0, 0, 0, 0, 3}));
    CHECK(f.shifted(9).is_zero());
    CHECK(f.truncated(3) == QSeries(3, {0, 0, 3}));
    CHECK(QSeries::monomial(4, 7).is_zero());
    QSeries g(5, {1});
    g.add_shifted(QSeries(5, {1, 1, 1, 1, 1}), 3);
    CHECK(g == QSeries(5, {1, 0, 0, 1, 1}));
}

TEST_CASE("geometric division matches inverse of 1 - q^e") {
    for (std::size_t e = 1; e < 7; ++e) {
        QSeries f(12, {1, 4, -2, 7});
        QSeries g = f;
        g.divide_by_one_minus_q_pow(e);
        CHECK(g == f * (QSeries::one(12) - QSeries::monomial(12, e)).inverse());
    }
}

TEST_CASE("to_string") {
    CHECK(QSeries(4, {1, 1, 3, 6}).to_string() == "1 + q + 3q^2 + 6q^3 + O(q^4)");
    CHECK(QSeries(3, {0, -1, 2}).to_string() == "-q + 2q^2 + O(q^3)");
    CHECK(QSeries(2).to_string() == "0 + O(q^2)");
}

TEST_CASE("ring axioms on 1000 random triples at L=32") {
    std::mt19937_64 rng(20101);
    const QSeries zero(kOrder);
    const QSeries one = QSeries::one(kOrder);
    for (int i = 0; i < 1000; ++i) {
        const QSeries a = random_series(rng), b = random_series(rng), c = random_series(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + zero == a);
        REQUIRE(a * one == a);
        REQUIRE((a + qs_neg(a)).is_zero());
    }
}

TEST_CASE("f * inverse(f) == 1 for 1000 random units at L=32") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const QSeries f = unit_series(rng);
        REQUIRE(f * f.inverse() == QSeries::one(kOrder));
    }
}
