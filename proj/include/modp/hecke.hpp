#pragma once

// Spherical mod-p Hecke algebra H_G(V) = k[X_*(T)_-] in the T-basis and the
// tau-basis. With M = stab_levi(nu),
//     tau_mu = sum over antidominant lambda >=_M mu of S(T_lambda),
// and the inverse direction is Moebius inversion on (antidominant, <=_M).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "modp/field.hpp"
#include "modp/root_datum.hpp"
#include "modp/weights.hpp"

namespace modp {

enum class Basis { T, tau };

inline const char* basis_name(Basis b) { return b == Basis::T ? "T" : "tau"; }

class HeckeElement {
public:
    HeckeElement(WeightClass V, Basis b, const FiniteField& F) : V_(std::move(V)), basis_(b), F_(&F) {}

    static HeckeElement basis_element(const WeightClass& V, Basis b, const Coweight& lambda, const FiniteField& F) {
        HeckeElement x(V, b, F);
        x.add_term(lambda, F.one());
        return x;
    }

    const WeightClass& weight() const { return V_; }
    Basis basis() const { return basis_; }
    const FiniteField& field() const { return *F_; }
    StandardParabolic levi() const { return stab_levi(V_.nu()); }
    const std::map<Coweight, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const Coweight& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? F_->zero() : it->second;
    }

    void add_term(const Coweight& lambda, const Scalar& c) {
        if (lambda.size() != V_.rank()) throw std::invalid_argument("coweight " + lambda.key() + " has wrong length");
        if (!is_antidominant(lambda)) throw std::invalid_argument("key " + lambda.key() + " is not antidominant");
        if (&c.field() != F_) throw field_error("coefficient from a different field");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(lambda, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HeckeElement operator+(const HeckeElement& o) const {
        compatible(o);
        HeckeElement r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    HeckeElement operator-(const HeckeElement& o) const {
        compatible(o);
        HeckeElement r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
        return r;
    }
    HeckeElement scaled(const Scalar& s) const {
        HeckeElement r(V_, basis_, *F_);
        for (const auto& [k, c] : terms_) r.add_term(k, c * s);
        return r;
    }

    bool operator==(const HeckeElement& o) const {
        return V_ == o.V_ && basis_ == o.basis_ && F_ == o.F_ && terms_ == o.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.to_string() + "*" + basis_name(basis_) + "_(" + k.key() + ")";
        }
        return s;
    }

private:
    void compatible(const HeckeElement& o) const {
        if (!(V_ == o.V_)) throw std::invalid_argument("Hecke elements for different weights");
        if (basis_ != o.basis_) throw std::invalid_argument("Hecke elements in different bases");
        if (F_ != o.F_) throw field_error("Hecke elements over different fields");
    }

    WeightClass V_;
    Basis basis_;
    const FiniteField* F_;
    std::map<Coweight, Scalar> terms_;
};

namespace detail {

// "Height" of z above x: sum of the partial sums of z - x. Strictly
// increasing along <_M, so sorting by it gives a linear extension.
inline long height_above(const Coweight& x, const Coweight& z) {
    long h = 0, p = 0;
    for (int i = 0; i < x.size(); ++i) {
        p += z[i] - x[i];
        h += p;
    }
    return h;
}

// Moebius values mu(x, z) for every z in interval_above(x, M). The poset is
// invariant under central translation only (not under arbitrary shifts: the
// interval [(-3,0,3),(-2,0,2)] is a square, [(-1,0,1),(0,0,0)] a chain),
// so rows are cached by M and x normalized to last entry 0.
using MoebiusRow = std::map<Coweight, long>;

inline const MoebiusRow& moebius_row_normalized(const Coweight& x, const StandardParabolic& M) {
    thread_local std::map<std::pair<std::vector<int>, Coweight>, MoebiusRow> cache;
    auto key = std::make_pair(M.composition(), x);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    auto elems = interval_above(x, M);
    std::stable_sort(elems.begin(), elems.end(),
                     [&](const Coweight& a, const Coweight& b) { return height_above(x, a) < height_above(x, b); });
    MoebiusRow row;
    for (const auto& z : elems) {
        if (z == x) {
            row.emplace(z, 1);
            continue;
        }
        long s = 0;
        for (const auto& [w, m] : row)
            if (leq_M(w, z, M)) s += m;
        row.emplace(z, -s);
    }
    return cache.emplace(std::move(key), std::move(row)).first->second;
}

inline Coweight central_shift(const Coweight& x, int c) {
    Coweight r = x;
    for (int i = 0; i < r.size(); ++i) r[i] += c;
    return r;
}

}  // namespace detail

// Integer Moebius value mu(lower, upper) of the poset (antidominant, <=_M).
inline long moebius_int(const Coweight& lower, const Coweight& upper, const StandardParabolic& M) {
    if (!is_antidominant(lower) || !is_antidominant(upper))
        throw std::invalid_argument("moebius: arguments must be antidominant");
    if (!leq_M(lower, upper, M)) throw std::invalid_argument("moebius: " + lower.key() + " is not <=_M " + upper.key());
    const int c = lower[lower.size() - 1];
    const auto& row = detail::moebius_row_normalized(detail::central_shift(lower, -c), M);
    return row.at(detail::central_shift(upper, -c));
}

inline Scalar moebius(const Coweight& lower, const Coweight& upper, const StandardParabolic& M, const FiniteField& F) {
    return F.from_int(moebius_int(lower, upper, M));
}

inline HeckeElement satake_T_to_tau(const HeckeElement& x) {
    if (x.basis() != Basis::T) throw std::invalid_argument("satake_T_to_tau expects a T-basis element");
    const auto M = x.levi();
    HeckeElement out(x.weight(), Basis::tau, x.field());
    for (const auto& [lambda, c] : x.terms()) {
        const int shift = lambda[lambda.size() - 1];
        const auto& row = detail::moebius_row_normalized(detail::central_shift(lambda, -shift), M);
        for (const auto& [mu, m] : row) out.add_term(detail::central_shift(mu, shift), c * x.field().from_int(m));
    }
    return out;
}

inline HeckeElement satake_tau_to_T(const HeckeElement& x) {
    if (x.basis() != Basis::tau) throw std::invalid_argument("satake_tau_to_T expects a tau-basis element");
    const auto M = x.levi();
    HeckeElement out(x.weight(), Basis::T, x.field());
    for (const auto& [mu, c] : x.terms())
        for (const auto& lambda : interval_above(mu, M)) out.add_term(lambda, c);
    return out;
}

inline HeckeElement to_basis(const HeckeElement& x, Basis b) {
    if (x.basis() == b) return x;
    return b == Basis::tau ? satake_T_to_tau(x) : satake_tau_to_T(x);
}

inline HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
    if (!(a.weight() == b.weight())) throw std::invalid_argument("multiply: weight mismatch");
    if (&a.field() != &b.field()) throw field_error("multiply: field mismatch");
    const auto ta = to_basis(a, Basis::tau);
    const auto tb = to_basis(b, Basis::tau);
    HeckeElement prod(a.weight(), Basis::tau, a.field());
    for (const auto& [x, c] : ta.terms())
        for (const auto& [y, d] : tb.terms()) prod.add_term(x + y, c * d);
    return to_basis(prod, a.basis());
}

// For antidominant mu in the box: mu >=_M 2 lambda iff mu = 2 lambda or
// mu >=_M 2 lambda + alpha_i^vee, lambda the fundamental coweight.
inline bool doubled_coweight_support_claim(const StandardParabolic& M, int i, int box) {
    const int n = M.rank();
    if (!M.contains_root(i)) throw std::invalid_argument("alpha_" + std::to_string(i) + " is not a root of the Levi " + M.key());
    const Coweight two_lambda = fundamental_antidominant_coweight(n, i).scaled(2);
    const Coweight shifted = two_lambda + simple_coroot(n, i);
    std::vector<int> cur(static_cast<std::size_t>(n), -box);
    // odometer over weakly increasing vectors with entries in [-box, box]
    while (true) {
        const Coweight mu(cur);
        const bool lhs = leq_M(two_lambda, mu, M);
        const bool rhs = mu == two_lambda || leq_M(shifted, mu, M);
        if (lhs != rhs) return false;
        int j = n - 1;
        while (j >= 0 && cur[static_cast<std::size_t>(j)] == box) --j;
        if (j < 0) break;
        const int v = cur[static_cast<std::size_t>(j)] + 1;
        for (int k = j; k < n; ++k) cur[static_cast<std::size_t>(k)] = v;
    }
    return true;
}

// Support of H_G(V1, V2): empty, or the maximal coweight lambda_0 with
// <lambda_0, alpha_i> = 0 where nu1 - nu2 pairs to 0 with alpha_i^vee and -1
// otherwise, last coordinate 0.
inline std::optional<Coweight> bimodule_support(const WeightClass& V1, const WeightClass& V2) {
    if (V1.rank() != V2.rank() || V1.q() != V2.q()) throw std::invalid_argument("bimodule_support: rank or q mismatch");
    const int n = V1.rank();
    const int step = V1.q() - 1;
    for (int j = 0; j < n; ++j)
        if (mod_floor(V1.nu()[j] - V2.nu()[j], step) != 0) return std::nullopt;
    Coweight lambda0(std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = n - 1; i >= 1; --i) {
        const int d = pairing(V1.nu(), i) - pairing(V2.nu(), i);
        lambda0[i - 1] = lambda0[i] + (d == 0 ? 0 : -1);
    }
    return lambda0;
}

inline std::pair<Coweight, Coweight> change_of_weight_support(const WeightClass& V, int i) {
    if (pairing(V.nu(), i) != 0)
        throw std::invalid_argument("weight " + V.nu().key() + " pairs nontrivially with alpha_" + std::to_string(i));
    const auto lambda = fundamental_antidominant_coweight(V.rank(), i);
    return {lambda, lambda + simple_coroot(V.rank(), i)};
}

// A weight whose stabilizer Levi is exactly M (pairing 1 at boundaries).
inline WeightClass weight_with_levi(const StandardParabolic& M, int q) {
    const int n = M.rank();
    std::vector<int> nu(static_cast<std::size_t>(n), 0);
    for (int i = n - 1; i >= 1; --i) nu[static_cast<std::size_t>(i - 1)] = nu[static_cast<std::size_t>(i)] + (M.contains_root(i) ? 0 : 1);
    return WeightClass(HighestWeight(nu), q);
}

}  // namespace modp
