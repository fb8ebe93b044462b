#include <gtest/gtest.h>

#include "modp/oracle.hpp"

using namespace modp;
using namespace modp::oracle;

namespace {

// [n]_q! / prod [n_b]_q!, the number of points of G/P over F_q.
std::uint64_t q_multinomial(const std::vector<int>& comp, std::uint64_t q) {
    auto qfact = [&](int m) {
        std::uint64_t f = 1;
        for (int k = 1; k <= m; ++k) {
            std::uint64_t qk = 0, pw = 1;
            for (int j = 0; j < k; ++j, pw *= q) qk += pw;
            f *= qk;
        }
        return f;
    };
    int n = 0;
    std::uint64_t den = 1;
    for (int b : comp) {
        n += b;
        den *= qfact(b);
    }
    return qfact(n) / den;
}

std::uint64_t naive_gl_order(int n, std::uint64_t q) {
    std::uint64_t o = 1, qn = 1;
    for (int k = 0; k < n; ++k) qn *= q;
    std::uint64_t qk = 1;
    for (int k = 0; k < n; ++k, qk *= q) o *= qn - qk;
    return o;
}

}  // namespace

TEST(Oracle, DenseLinearAlgebra) {
    const auto c = make_context(2, 5);
    const auto& F = *c.F;
    EXPECT_EQ(group_elements(make_context(2, 3)).size(), 48u);
    std::size_t checked = 0;
    for (const auto& g : group_elements(c)) {
        if (++checked > 500) break;
        EXPECT_NE(det(F, g), 0u);
        const auto h = inverse(F, g);
        const auto e = mul(F, g, h);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) EXPECT_EQ(e.at(i, j), i == j ? 1u : 0u);
        EXPECT_EQ(rank(F, g), 2);
    }
    Dense sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(0, 1) = 2;
    sing.at(1, 0) = 2;
    sing.at(1, 1) = 4;
    EXPECT_EQ(rank(F, sing), 1);
    EXPECT_EQ(kernel(F, sing).rows, 1);
}

TEST(Oracle, GroupOrders) {
    for (int n = 1; n <= 3; ++n)
        for (int q : {2, 3, 4, 5}) {
            EXPECT_EQ(gl_order(n, q), naive_gl_order(n, static_cast<std::uint64_t>(q)));
            if (gl_order(n, q) <= 20000) { EXPECT_EQ(group_elements(make_context(n, q)).size(), gl_order(n, q)); }
        }
}

TEST(Oracle, GuardsRejectLargeCases) {
    EXPECT_THROW(make_context(5, 2), guard_error);
    EXPECT_THROW(make_context(2, 7), guard_error);
    EXPECT_THROW(group_elements(make_context(4, 5)), guard_error);
}

TEST(Oracle, FlagCosetsAreQMultinomials) {
    for (int n = 2; n <= 3; ++n)
        for (int q : {2, 3, 4})
            for (const auto& P : all_standard_parabolics(n))
                EXPECT_EQ(flag_cosets(n, q, P).size(), q_multinomial(P.composition(), static_cast<std::uint64_t>(q)))
                    << "n=" << n << " q=" << q << " P=" << P.key();
    EXPECT_EQ(flag_cosets(4, 2, StandardParabolic({2, 2})).size(), q_multinomial({2, 2}, 2));
}

TEST(Oracle, BruhatCells) {
    for (int n = 2; n <= 3; ++n)
        for (int q : {2, 3}) EXPECT_TRUE(check_bruhat(n, q));
    const auto cells = bruhat_cell_sizes(2, 3);
    EXPECT_EQ(cells.at(WeylPerm::identity(2)), 12u);
    EXPECT_EQ(cells.at(WeylPerm::simple_reflection(2, 1)), 36u);
}

TEST(Oracle, MinusculeSatake) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}})
        for (int i = 1; i < n; ++i) {
            const auto r = minuscule_satake_report(n, q, i);
            EXPECT_TRUE(r.ok) << r.failure;
            // projective space: q^{n-1} + ... + 1 lines split as q^k
            std::uint64_t total = 0;
            for (const auto& [mu, c] : r.counts) total += c;
            EXPECT_EQ(total, q_multinomial({i, n - i}, static_cast<std::uint64_t>(q)));
        }
}

TEST(Oracle, IwahoriCosets) {
    for (int n = 2; n <= 3; ++n)
        for (int q : {2, 3, 4})
            for (int i = 1; i <= n; ++i) EXPECT_TRUE(check_iwahori_coset_count(n, q, i));
}

TEST(Oracle, ModulesCoverSmallWeights) {
    // characters, symmetric powers, their duals and exterior powers
    const auto all = all_weight_classes(3, 3);
    const auto supported = supported_weights(3, 3);
    EXPECT_EQ(supported.size(), 10u);
    for (const auto& nu : {HighestWeight{0, 0, 0}, HighestWeight{1, 1, 1}, HighestWeight{1, 0, 0}, HighestWeight{2, 0, 0},
                           HighestWeight{1, 1, 0}, HighestWeight{2, 2, 0}})
        EXPECT_NE(std::find(supported.begin(), supported.end(), WeightClass(nu, 3)), supported.end()) << nu.key();
    for (const auto& V : supported) {
        EXPECT_NE(std::find(all.begin(), all.end(), V), all.end());
        const auto m = TinyWeightModule::build(V);
        ASSERT_TRUE(m.has_value());
        // the action is a homomorphism on a sample of pairs
        const auto& G = group_elements(m->context());
        const auto& F = *m->context().F;
        for (std::size_t k = 0; k + 1 < G.size(); k += 997) {
            const auto lhs = m->act(mul(F, G[k], G[k + 1]));
            const auto rhs = mul(F, m->act(G[k]), m->act(G[k + 1]));
            EXPECT_EQ(lhs.a, rhs.a) << m->construction();
        }
    }
}

TEST(Oracle, LeviInvariants) {
    for (int n = 2; n <= 3; ++n)
        for (int q : {2, 3})
            for (const auto& V : supported_weights(n, q))
                for (const auto& P : all_standard_parabolics(n)) {
                    const auto r = levi_invariants_report(V, P);
                    EXPECT_TRUE(r.ok) << r.failure;
                    EXPECT_EQ(r.dim_highest_line, 1);
                    EXPECT_EQ(r.dim_invariants, r.dim_coinvariants);
                }
}

TEST(Oracle, OppositeProjection) {
    std::size_t applied = 0;
    for (int n = 2; n <= 3; ++n)
        for (int q : {2, 3})
            for (const auto& V : supported_weights(n, q))
                for (const auto& P : all_standard_parabolics(n))
                    for (const auto& Q : all_standard_parabolics(n)) {
                        if (!opposite_projection_applies(V, P, Q)) continue;
                        const auto r = opposite_projection_report(V, P, Q);
                        EXPECT_TRUE(r.ok) << r.failure;
                        EXPECT_GT(r.nonzero_inside, 0u);
                        ++applied;
                    }
    EXPECT_GT(applied, 0u);
}

TEST(Oracle, AllGatesPass) {
    for (const auto& g : run_gates(3, 3)) EXPECT_TRUE(g.pass) << g.name << ": " << g.detail;
}
