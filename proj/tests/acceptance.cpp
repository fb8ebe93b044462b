// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <iostream>
#include <random>
#include <set>
#include <string>

#include "modp/classify.hpp"
#include "modp/eigen.hpp"
#include "modp/hecke.hpp"
#include "modp/hecke0.hpp"
#include "modp/oracle.hpp"

using namespace modp;

namespace {

int failures = 0;

void report(int k, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " [" << k << "] " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    failures += !ok;
}

template <class Fn>
void criterion(int k, const std::string& name, Fn fn) {
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(k, name, ok, detail);
}

const FiniteField& F9() { return FiniteField::get(3, {2, 2, 1}); }

Coweight random_antidominant(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-4, 2);
    std::vector<int> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = d(rng);
    std::sort(v.begin(), v.end());
    return Coweight(v);
}

HeckeElement random_element(const WeightClass& V, Basis b, const FiniteField& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> c(1, F.order() - 1);
    std::uniform_int_distribution<int> count(1, 4);
    HeckeElement x(V, b, F);
    for (int t = count(rng); t > 0; --t) x.add_term(random_antidominant(V.rank(), rng), F.from_code(c(rng)));
    return x;
}

bool satake_round_trip(std::string& detail) {
    std::mt19937_64 rng(20240601);
    int done = 0;
    for (int n = 2; n <= 4; ++n) {
        const auto weights = all_weight_classes(n, 3);
        std::uniform_int_distribution<std::size_t> pick(0, weights.size() - 1);
        for (int t = 0; t < 200; ++t) {
            const auto& V = weights[pick(rng)];
            const auto& F = t % 2 ? F9() : FiniteField::prime(3);
            const auto x = random_element(V, Basis::T, F, rng);
            if (satake_tau_to_T(satake_T_to_tau(x)) != x) {
                detail = "T round trip failed for " + x.to_string();
                return false;
            }
            const auto y = random_element(V, Basis::tau, F, rng);
            if (satake_T_to_tau(satake_tau_to_T(y)) != y) {
                detail = "tau round trip failed for " + y.to_string();
                return false;
            }
            ++done;
        }
    }
    detail = std::to_string(done) + " elements each way";
    return true;
}

bool minuscule(std::string& detail) {
    int cases = 0;
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}})
        for (int i = 1; i < n; ++i) {
            const auto r = oracle::minuscule_satake_report(n, q, i);
            if (!r.ok) {
                detail = "n=" + std::to_string(n) + " q=" + std::to_string(q) + " i=" + std::to_string(i) + ": " + r.failure;
                return false;
            }
            ++cases;
        }
    detail = std::to_string(cases) + " (n, q, i) cases";
    return true;
}

bool doubled_coweight(std::string& detail) {
    const auto& F = FiniteField::prime(3);
    int cases = 0;
    for (int n = 2; n <= 4; ++n)
        for (const auto& M : all_standard_parabolics(n))
            for (int i = 1; i < n; ++i) {
                if (!M.contains_root(i)) continue;
                if (!doubled_coweight_support_claim(M, i, 4)) {
                    detail = "support claim fails for M=" + M.key() + " i=" + std::to_string(i);
                    return false;
                }
                // T_{2 lambda} - tau_{2 lambda} + tau_{2 lambda + alpha_i^vee} = 0
                const auto V = weight_with_levi(M, 3);
                const auto two = fundamental_antidominant_coweight(n, i).scaled(2);
                const auto t = satake_T_to_tau(HeckeElement::basis_element(V, Basis::T, two, F));
                HeckeElement expect(V, Basis::tau, F);
                expect.add_term(two, F.one());
                expect.add_term(two + simple_coroot(n, i), -F.one());
                if (t != expect) {
                    detail = "two-term sum nonzero for M=" + M.key() + " i=" + std::to_string(i) + ": " + t.to_string();
                    return false;
                }
                ++cases;
            }
    detail = std::to_string(cases) + " (M, i) pairs, box 4";
    return true;
}

bool constituent_counts(std::string& detail) {
    const auto& F = F9();
    const std::vector<SmoothCharacter> etas{SmoothCharacter(F.from_code(1), 0, 9), SmoothCharacter(F.from_code(4), 2, 9),
                                            SmoothCharacter(F.from_code(7), 0, 9)};
    int data = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& P : all_standard_parabolics(n)) {
            const int r = P.num_blocks();
            int combos = 1;
            for (int b = 0; b < r; ++b) combos *= 4;  // three Steinberg etas or a supersingular block
            for (int code = 0; code < combos; ++code) {
                std::vector<BlockRep> blocks;
                int c = code;
                bool ok = true;
                for (int b = 0; b < r; ++b, c /= 4) {
                    const int m = P.block_size(b);
                    if (c % 4 == 3) {
                        if (m < 2) {
                            ok = false;
                            break;
                        }
                        blocks.emplace_back(Supersingular{m, "s", etas[0]});
                    } else {
                        // alternate Q between Borel and whole to vary the runs
                        const auto Q = (b % 2) ? StandardParabolic::whole(m) : StandardParabolic::borel(m);
                        blocks.emplace_back(Steinberg{Q, etas[static_cast<std::size_t>(c % 4)]});
                    }
                }
                if (!ok) continue;
                const InductionDatum d(P, blocks);
                const auto cons = constituents(d);
                if (cons.elements.size() != (std::size_t{1} << delta(d))) {
                    detail = d.to_string() + " has " + std::to_string(cons.elements.size()) + " constituents";
                    return false;
                }
                std::set<std::string> names;
                for (const auto& e : cons.elements) {
                    names.insert(e.to_string());
                    if (param_pair(e) != param_pair(cons.elements.front())) {
                        detail = "parameter pairs differ within " + d.to_string();
                        return false;
                    }
                }
                if (names.size() != cons.elements.size()) {
                    detail = "repeated constituent in " + d.to_string();
                    return false;
                }
                ++data;
            }
        }
    const auto eta = etas[0];
    for (int n = 2; n <= 4; ++n) {
        std::vector<BlockRep> b(static_cast<std::size_t>(n), Steinberg{StandardParabolic::whole(1), eta});
        const auto len = constituents(InductionDatum(StandardParabolic::borel(n), b)).elements.size();
        if (len != (std::size_t{1} << (n - 1))) {
            detail = "principal series of GL_" + std::to_string(n) + " has length " + std::to_string(len);
            return false;
        }
    }
    detail = std::to_string(data) + " data; principal series lengths 2, 4, 8";
    return true;
}

bool lattices(std::string& detail) {
    const auto eta = SmoothCharacter::trivial(FiniteField::prime(3), 3);
    std::string counts;
    const std::uint64_t expect[] = {3, 6, 20};
    for (int n = 2; n <= 4; ++n) {
        std::vector<BlockRep> b(static_cast<std::size_t>(n), Steinberg{StandardParabolic::whole(1), eta});
        const auto L = submodule_lattice(InductionDatum(StandardParabolic::borel(n), b));
        counts += (counts.empty() ? "" : "/") + std::to_string(L.lower_set_count);
        if (L.lower_set_count != expect[n - 2] || L.socle.size() != 1 || L.cosocle.size() != 1) {
            detail = "lower sets " + counts;
            return false;
        }
    }
    detail = "lower sets " + counts;
    return true;
}

bool level_zero(std::string& detail) {
    const auto& F = FiniteField::prime(3);
    for (int n = 2; n <= 5; ++n) {
        bool ok = verify_braid_and_rotation(n, F) && verify_shifted_word_commutation(n, F);
        for (int i = 1; i < n; ++i) ok = ok && verify_rotation_word_power(n, i, F);
        if (!ok) {
            detail = "relations fail for n=" + std::to_string(n);
            return false;
        }
    }
    std::string caps;
    for (int n = 2; n <= 4; ++n) {
        const auto r = derive_rotation_invariance(n, n * n);
        if (!r.success || !r.nondegenerate) {
            detail = "derivation fails for n=" + std::to_string(n);
            return false;
        }
        for (const auto& s : r.steps)
            if (!s.trace_checked) {
                detail = "unchecked trace step " + s.identity;
                return false;
            }
        caps += (caps.empty() ? "" : ",") + std::to_string(r.minimal_sufficient_cap);
        if (n == 2 && r.chain(0) != "(S_1Π)²v = S_1Π(v−Πv) = S_1Πv − S_1v = S_1Πv") {
            detail = "n=2 trace is " + r.chain(0);
            return false;
        }
    }
    detail = "relations n<=5; derivations n=2,3,4 with minimal caps " + caps;
    return true;
}

bool weight_bijection(std::string& detail) {
    int maps = 0;
    for (int n = 1; n <= 3; ++n)
        for (int q : {2, 3, 4})
            for (const auto& M : all_standard_parabolics(n)) {
                std::set<LeviWeightClass> image;
                std::size_t regular = 0;
                for (const auto& V : all_weight_classes(n, q)) {
                    if (!is_M_regular(V, M)) continue;
                    ++regular;
                    const auto Vbar = restrict_to_levi(V, M);
                    image.insert(Vbar);
                    if (regular_cover(Vbar) != V) {
                        detail = "cover of the restriction of " + V.nu().key() + " differs";
                        return false;
                    }
                }
                const auto all = all_levi_weight_classes(M, q);
                if (image.size() != regular || image != std::set<LeviWeightClass>(all.begin(), all.end())) {
                    detail = "restriction is not a bijection for M=" + M.key() + " q=" + std::to_string(q);
                    return false;
                }
                ++maps;
            }
    detail = std::to_string(maps) + " (M, q) cases";
    return true;
}

bool finite_group_gates(std::string& detail) {
    std::size_t levi = 0, opposite = 0;
    for (const auto& g : oracle::run_gates(3, 3)) {
        const bool is_levi = g.name.rfind("levi invariants", 0) == 0;
        const bool is_opp = g.name.rfind("opposite projection", 0) == 0;
        if (!is_levi && !is_opp) continue;
        if (!g.pass) {
            detail = g.name + ": " + g.detail;
            return false;
        }
        levi += is_levi;
        opposite += is_opp;
    }
    detail = std::to_string(levi) + " invariant checks, " + std::to_string(opposite) + " projection checks";
    return levi > 0 && opposite > 0;
}

bool eigen_checks(std::string& detail) {
    std::mt19937_64 rng(77);
    const auto& F = F9();
    std::uniform_int_distribution<std::uint64_t> unit(1, F.order() - 1);
    std::uniform_int_distribution<int> rank(2, 4);
    int triples = 0;
    while (triples < 500) {
        const int n = rank(rng);
        const auto weights = all_weight_classes(n, 9);
        const auto& V = weights[std::uniform_int_distribution<std::size_t>(0, weights.size() - 1)(rng)];
        const auto parabolics = all_standard_parabolics(n);
        const auto& M = parabolics[std::uniform_int_distribution<std::size_t>(0, parabolics.size() - 1)(rng)];
        const auto e = central_character_exponents(restrict_to_levi(V, M));
        std::vector<SmoothCharacter> chars;
        for (int b = 0; b < M.num_blocks(); ++b) chars.emplace_back(F.from_code(unit(rng)), e[static_cast<std::size_t>(b)], 9);
        const ParamPair pr(M, chars);
        const auto l1 = random_antidominant(n, rng), l2 = random_antidominant(n, rng);
        const auto a = HeckeElement::basis_element(V, Basis::T, l1, F);
        const auto b = HeckeElement::basis_element(V, Basis::T, l2, F);
        if (eval(pr, multiply(a, b)) != eval_T(pr, l1, V) * eval_T(pr, l2, V)) {
            detail = "eval_T not multiplicative for " + pr.to_string() + " at " + l1.key() + ", " + l2.key();
            return false;
        }
        ++triples;
    }
    int cow = 0;
    for (int n = 2; n <= 4; ++n)
        for (const auto& M : all_standard_parabolics(n))
            for (int i = 1; i < n; ++i) {
                if (M.contains_root(i)) continue;
                const auto V = WeightClass::trivial(n, 9);
                for (int t = 0; t < 20; ++t) {
                    std::vector<SmoothCharacter> chars;
                    for (int b = 0; b < M.num_blocks(); ++b) chars.emplace_back(F.from_code(unit(rng)), 0, 9);
                    if (t == 0) chars[static_cast<std::size_t>(M.block_of(i))] = chars[static_cast<std::size_t>(M.block_of(i - 1))];
                    const ParamPair pr(M, chars);
                    const auto two = fundamental_antidominant_coweight(n, i).scaled(2);
                    const bool differs = eval_tau(pr, two) != eval_tau(pr, two + simple_coroot(n, i));
                    if (change_of_weight_applicable(V, i, pr) != differs) {
                        detail = "change of weight disagrees with tau values for " + pr.to_string();
                        return false;
                    }
                    ++cow;
                }
            }
    detail = std::to_string(triples) + " triples; " + std::to_string(cow) + " change-of-weight cases";
    return true;
}

}  // namespace

int main() {
    criterion(1, "Satake transform round trip", satake_round_trip);
    criterion(2, "minuscule Satake against finite-group orbit counts", minuscule);
    criterion(3, "support of doubled fundamental coweights", doubled_coweight);
    criterion(4, "constituent counts are 2^delta", constituent_counts);
    criterion(5, "submodule lattice sizes", lattices);
    criterion(6, "level-zero relations and rotation invariance", level_zero);
    criterion(7, "regular weights restrict bijectively to Levi weights", weight_bijection);
    criterion(8, "Levi invariants and opposite projections on explicit modules", finite_group_gates);
    criterion(9, "eigensystem multiplicativity and change of weight", eigen_checks);
    return failures == 0 ? 0 : 1;
}
