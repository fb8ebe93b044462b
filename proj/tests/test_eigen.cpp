#include <gtest/gtest.h>

#include <random>

#include "modp/eigen.hpp"

using namespace modp;

namespace {

const FiniteField& F9() { return FiniteField::get(3, {2, 2, 1}); }

Scalar random_unit(const FiniteField& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> d(1, F.order() - 1);
    return F.from_code(d(rng));
}

// A pair compatible with V: tame parts forced by the central character.
ParamPair compatible_pair(const StandardParabolic& M, const WeightClass& V, const FiniteField& F, std::mt19937_64& rng) {
    const auto e = central_character_exponents(restrict_to_levi(V, M));
    std::vector<SmoothCharacter> chars;
    for (int b = 0; b < M.num_blocks(); ++b) chars.emplace_back(random_unit(F, rng), e[static_cast<std::size_t>(b)], V.q());
    return ParamPair(M, chars);
}

HeckeElement random_T(const WeightClass& V, const FiniteField& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-2, 1);
    std::uniform_int_distribution<std::uint64_t> c(0, F.order() - 1);
    HeckeElement x(V, Basis::T, F);
    for (int t = 0; t < 3; ++t) {
        std::vector<int> v(static_cast<std::size_t>(V.rank()));
        for (auto& e : v) e = entry(rng);
        std::sort(v.begin(), v.end());
        x.add_term(Coweight(v), F.from_code(c(rng)));
    }
    return x;
}

}  // namespace

TEST(Eigen, CharacterArithmetic) {
    const SmoothCharacter a(F9().from_code(4), 5, 9), b(F9().from_code(7), 6, 9);
    EXPECT_EQ((a * b).tame(), 3);
    EXPECT_EQ((a * a.inverse()), SmoothCharacter::trivial(F9(), 9));
    EXPECT_EQ(a.pow(8).tame(), 0);
    EXPECT_THROW(SmoothCharacter(F9().zero(), 0, 9), std::invalid_argument);
}

TEST(Eigen, EvalTauOnCentralCoweights) {
    const auto& F = F9();
    const auto u1 = F.from_code(4), u2 = F.from_code(5);
    const ParamPair pr(StandardParabolic({2, 1}), {SmoothCharacter(u1, 0, 9), SmoothCharacter(u2, 0, 9)});
    EXPECT_EQ(eval_tau(pr, Coweight{-1, -1, 0}), u1);
    EXPECT_EQ(eval_tau(pr, Coweight{-2, -2, -1}), u1.pow(2) * u2);
    EXPECT_TRUE(eval_tau(pr, Coweight{-1, 0, 0}).is_zero());
}

TEST(Eigen, EvalTauIsMultiplicativeOnCentralCoweights) {
    std::mt19937_64 rng(1);
    const auto& F = F9();
    for (const auto& M : all_standard_parabolics(4)) {
        std::vector<SmoothCharacter> chars;
        for (int b = 0; b < M.num_blocks(); ++b) chars.emplace_back(random_unit(F, rng), 0, 9);
        const ParamPair pr(M, chars);
        std::uniform_int_distribution<int> d(-3, 0);
        for (int t = 0; t < 30; ++t) {
            std::vector<int> a(4), b(4);
            for (auto& x : a) x = d(rng);
            for (auto& x : b) x = d(rng);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            const Coweight ca(a), cb(b);
            EXPECT_EQ(eval_tau(pr, ca + cb), eval_tau(pr, ca) * eval_tau(pr, cb));
        }
    }
}

TEST(Eigen, EvalTIsAnAlgebraMap) {
    std::mt19937_64 rng(2);
    const auto& F = F9();
    for (int n = 2; n <= 3; ++n)
        for (const auto& V : all_weight_classes(n, 9)) {
            if (V.nu()[0] > 3) continue;  // a sample is enough here
            for (const auto& M : all_standard_parabolics(n)) {
                const auto pr = compatible_pair(M, V, F, rng);
                const auto a = random_T(V, F, rng), b = random_T(V, F, rng);
                EXPECT_EQ(eval(pr, multiply(a, b)), eval(pr, a) * eval(pr, b));
                EXPECT_EQ(eval(pr, a + b), eval(pr, a) + eval(pr, b));
            }
        }
}

TEST(Eigen, CompatibilityIsEnforced) {
    const WeightClass V(HighestWeight{1, 0}, 3);
    const ParamPair bad(StandardParabolic::whole(2), {SmoothCharacter::trivial(FiniteField::prime(3), 3)});
    EXPECT_THROW(eval_T(bad, Coweight{0, 0}, V), std::invalid_argument);
    const ParamPair good(StandardParabolic::whole(2), {SmoothCharacter(FiniteField::prime(3).one(), 1, 3)});
    EXPECT_EQ(eval_T(good, Coweight{0, 0}, V), FiniteField::prime(3).one());
}

TEST(Eigen, FactorsThroughAndSupersingular) {
    const auto& F = FiniteField::prime(5);
    const ParamPair pr(StandardParabolic({1, 2}), {SmoothCharacter::trivial(F, 5), SmoothCharacter::trivial(F, 5)});
    EXPECT_TRUE(factors_through(pr, StandardParabolic::whole(3)));
    EXPECT_TRUE(factors_through(pr, StandardParabolic({1, 2})));
    EXPECT_FALSE(factors_through(pr, StandardParabolic({2, 1})));
    EXPECT_FALSE(is_supersingular(pr));
    EXPECT_TRUE(is_supersingular(ParamPair(StandardParabolic::whole(3), {SmoothCharacter::trivial(F, 5)})));
}

TEST(Eigen, TwistUsesDeterminantOnBlocks) {
    const auto& F = FiniteField::prime(7);
    const ParamPair pr(StandardParabolic({1, 2}), {SmoothCharacter(F.from_int(2), 1, 7), SmoothCharacter(F.from_int(3), 0, 7)});
    const SmoothCharacter eta(F.from_int(3), 2, 7);
    const auto tw = twist(pr, eta);
    EXPECT_EQ(tw.chars()[0], SmoothCharacter(F.from_int(6), 3, 7));
    EXPECT_EQ(tw.chars()[1], SmoothCharacter(F.from_int(27), 4, 7));
    // twisting by eta then eta^{-1} is the identity
    EXPECT_EQ(twist(tw, eta.inverse()), pr);
}

TEST(Eigen, ChangeOfWeightAgreesWithTauValues) {
    std::mt19937_64 rng(9);
    const auto& F = F9();
    for (int n = 2; n <= 4; ++n)
        for (const auto& M : all_standard_parabolics(n))
            for (int i = 1; i < n; ++i) {
                if (M.contains_root(i)) continue;
                const auto V = WeightClass::trivial(n, 9);
                for (int t = 0; t < 10; ++t) {
                    auto pr = compatible_pair(M, V, F, rng);
                    if (t == 0 && M.block_size(M.block_of(i - 1)) == 1 && M.block_size(M.block_of(i)) == 1) {
                        auto chars = pr.chars();
                        chars[static_cast<std::size_t>(M.block_of(i))] = chars[static_cast<std::size_t>(M.block_of(i - 1))];
                        pr = ParamPair(M, chars);
                    }
                    const auto two_lambda = fundamental_antidominant_coweight(n, i).scaled(2);
                    const auto shifted = two_lambda + simple_coroot(n, i);
                    const bool differs = eval_tau(pr, two_lambda) != eval_tau(pr, shifted);
                    EXPECT_EQ(change_of_weight_applicable(V, i, pr), differs) << pr.to_string() << " i=" << i;
                }
            }
}
