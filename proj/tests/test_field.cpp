#include <gtest/gtest.h>

#include <random>

#include "modp/field.hpp"

using namespace modp;

namespace {

// Naive polynomial arithmetic over F_p, kept separate from the field code.
std::vector<long> naive_mulmod(const std::vector<long>& a, const std::vector<long>& b, const std::vector<long>& f, long p) {
    const std::size_t m = f.size() - 1;
    std::vector<long> prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t d = prod.size(); d-- > m;) {
        const long c = prod[d];
        if (!c) continue;
        for (std::size_t k = 0; k <= m; ++k) prod[d - m + k] = ((prod[d - m + k] - c * f[k]) % p + p) % p;
    }
    prod.resize(m);
    return prod;
}

}  // namespace

TEST(Field, PrimeFieldBasics) {
    const auto& F = FiniteField::prime(5);
    EXPECT_EQ(F.order(), 5u);
    EXPECT_EQ(F.degree(), 1);
    EXPECT_EQ(F.from_int(-1), F.from_int(4));
    EXPECT_EQ(F.from_int(2) * F.from_int(3), F.one());
    EXPECT_EQ(F.from_int(3).inverse(), F.from_int(2));
    EXPECT_EQ(F.from_int(2).pow(4), F.one());
    EXPECT_EQ(F.from_int(2).pow(-1), F.from_int(3));
}

TEST(Field, Interning) {
    EXPECT_EQ(&FiniteField::prime(3), &FiniteField::get(3, {1, 1}));
    EXPECT_EQ(&FiniteField::get(3, {1, 0, 1}), &FiniteField::get(3, {4, 3, 1}));
}

TEST(Field, RejectsBadInput) {
    EXPECT_THROW(FiniteField::prime(4), field_error);
    EXPECT_THROW(FiniteField::get(3, {2, 0, 1}), field_error);  // x^2 + 2 = (x-1)(x+1)
    EXPECT_THROW(FiniteField::get(3, {1, 0, 2}), field_error);  // not monic
    EXPECT_THROW(FiniteField::prime(3).zero().inverse(), field_error);
    EXPECT_THROW(FiniteField::prime(3).one() + FiniteField::prime(5).one(), field_error);
}

TEST(Field, MultiplicationMatchesNaivePolynomials) {
    const std::vector<long> f{2, 2, 1};  // x^2 + 2x + 2 over F_3
    const auto& F = FiniteField::get(3, {2, 2, 1});
    for (std::uint64_t a = 0; a < 9; ++a)
        for (std::uint64_t b = 0; b < 9; ++b) {
            const auto x = F.from_code(a), y = F.from_code(b);
            const auto cx = x.coeffs(), cy = y.coeffs();
            const auto expect = naive_mulmod({cx[0], cx[1]}, {cy[0], cy[1]}, f, 3);
            const auto got = (x * y).coeffs();
            EXPECT_EQ(got[0], expect[0]);
            EXPECT_EQ(got[1], expect[1]);
        }
}

TEST(Field, AxiomsOnRandomElements) {
    std::mt19937_64 rng(7);
    for (const auto* F : {&FiniteField::prime(7), &FiniteField::get(3, {2, 2, 1}), &FiniteField::conway_free(2, 3),
                          &FiniteField::conway_free(5, 2)}) {
        std::uniform_int_distribution<std::uint64_t> d(0, F->order() - 1);
        for (int t = 0; t < 300; ++t) {
            const auto a = F->from_code(d(rng)), b = F->from_code(d(rng)), c = F->from_code(d(rng));
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_TRUE((a - a).is_zero());
            if (!a.is_zero()) {
                EXPECT_EQ(a * a.inverse(), F->one());
                EXPECT_EQ(a.pow(static_cast<std::int64_t>(F->order() - 1)), F->one());
            }
            // Frobenius is additive
            const auto p = F->characteristic();
            EXPECT_EQ((a + b).pow(p), a.pow(p) + b.pow(p));
        }
    }
}

TEST(Field, MultiplicativeGroupIsCyclic) {
    const auto& F = FiniteField::conway_free(3, 2);
    bool found = false;
    for (std::uint64_t g = 1; g < F.order() && !found; ++g) {
        const auto x = F.from_code(g);
        int ord = 1;
        for (auto y = x; !y.is_one(); y *= x) ++ord;
        found = ord == 8;
    }
    EXPECT_TRUE(found);
}
