#pragma once

// Hecke eigenvalue systems as pairs (M, chi_M), chi_M a smooth character of
// Z_M = prod over blocks of F^x. A smooth character into a characteristic-p
// field is trivial on 1 + pi O, so it is its value at pi plus x -> x^e on k^x.

#include <stdexcept>
#include <string>
#include <vector>

#include "modp/field.hpp"
#include "modp/hecke.hpp"
#include "modp/root_datum.hpp"
#include "modp/weights.hpp"

namespace modp {

class SmoothCharacter {
public:
    // tame exponent is taken mod q-1
    SmoothCharacter(Scalar unramified, int tame, int q) : u_(unramified), tame_(mod_floor(tame, q - 1)), q_(q) {
        if (q < 2) throw std::invalid_argument("q must be at least 2");
        if (u_.is_zero()) throw std::invalid_argument("unramified value of a character must be nonzero");
    }

    static SmoothCharacter trivial(const FiniteField& F, int q) { return {F.one(), 0, q}; }

    const Scalar& unramified() const { return u_; }
    int tame() const { return tame_; }
    int q() const { return q_; }

    SmoothCharacter operator*(const SmoothCharacter& o) const {
        same_q(o);
        return {u_ * o.u_, tame_ + o.tame_, q_};
    }
    SmoothCharacter pow(int e) const { return {u_.pow(e), tame_ * e, q_}; }
    SmoothCharacter inverse() const { return pow(-1); }

    bool operator==(const SmoothCharacter& o) const { return u_ == o.u_ && tame_ == o.tame_ && q_ == o.q_; }
    bool operator!=(const SmoothCharacter& o) const { return !(*this == o); }
    bool operator<(const SmoothCharacter& o) const {
        if (tame_ != o.tame_) return tame_ < o.tame_;
        return u_ < o.u_;
    }

    std::string to_string() const { return "(" + u_.to_string() + ";" + std::to_string(tame_) + ")"; }

private:
    void same_q(const SmoothCharacter& o) const {
        if (o.q_ != q_) throw std::invalid_argument("characters for different q");
    }
    Scalar u_;
    int tame_;
    int q_;
};

class ParamPair {
public:
    ParamPair(StandardParabolic M, std::vector<SmoothCharacter> chars) : M_(std::move(M)), chars_(std::move(chars)) {
        if (static_cast<int>(chars_.size()) != M_.num_blocks())
            throw std::invalid_argument("parameterizing pair needs one character per Levi block");
    }

    const StandardParabolic& levi() const { return M_; }
    const std::vector<SmoothCharacter>& chars() const { return chars_; }
    const FiniteField& field() const { return chars_.front().unramified().field(); }

    bool operator==(const ParamPair& o) const { return M_ == o.M_ && chars_ == o.chars_; }
    bool operator!=(const ParamPair& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = "(" + M_.key() + ":";
        for (const auto& c : chars_) s += " " + c.to_string();
        return s + ")";
    }

private:
    StandardParabolic M_;
    std::vector<SmoothCharacter> chars_;
};

// chi'(tau_lambda) = chi_M(lambda(pi))^{-1} if lambda(pi) is central in M, else 0.
inline Scalar eval_tau(const ParamPair& pair, const Coweight& lambda) {
    const auto& M = pair.levi();
    if (lambda.size() != M.rank()) throw std::invalid_argument("eval_tau: rank mismatch");
    Scalar v = pair.field().one();
    for (int b = 0; b < M.num_blocks(); ++b) {
        const int start = M.block_start(b);
        for (int j = start + 1; j < start + M.block_size(b); ++j)
            if (lambda[j] != lambda[start]) return pair.field().zero();
        v *= pair.chars()[static_cast<std::size_t>(b)].unramified().pow(-lambda[start]);
    }
    return v;
}

inline void check_compatible(const ParamPair& pair, const WeightClass& V) {
    if (pair.levi().rank() != V.rank()) throw std::invalid_argument("pair and weight have different rank");
    const auto expected = central_character_exponents(restrict_to_levi(V, pair.levi()));
    for (std::size_t b = 0; b < expected.size(); ++b) {
        const auto& c = pair.chars()[b];
        if (c.q() != V.q() || c.tame() != expected[b])
            throw std::invalid_argument("character on block " + std::to_string(b + 1) + " has tame exponent " +
                                        std::to_string(c.tame()) + " but the weight's central character needs " +
                                        std::to_string(expected[b]));
    }
}

// Linear extension of the eigensystem to any Hecke element.
inline Scalar eval(const ParamPair& pair, const HeckeElement& x) {
    check_compatible(pair, x.weight());
    if (&x.field() != &pair.field()) throw field_error("eval: field mismatch");
    const auto t = to_basis(x, Basis::tau);
    Scalar s = pair.field().zero();
    for (const auto& [mu, c] : t.terms()) s += c * eval_tau(pair, mu);
    return s;
}

inline Scalar eval_T(const ParamPair& pair, const Coweight& lambda, const WeightClass& V) {
    return eval(pair, HeckeElement::basis_element(V, Basis::T, lambda, pair.field()));
}

// M subset of L as Levis
inline bool factors_through(const ParamPair& pair, const StandardParabolic& L) {
    return pair.levi().inside(L);
}

inline bool is_supersingular(const ParamPair& pair) { return pair.levi().is_whole(); }

// chi_b -> chi_b * (eta o det_b); det on the centre of a block of size m is z -> z^m
inline ParamPair twist(const ParamPair& pair, const SmoothCharacter& eta) {
    std::vector<SmoothCharacter> out;
    for (int b = 0; b < pair.levi().num_blocks(); ++b)
        out.push_back(pair.chars()[static_cast<std::size_t>(b)] * eta.pow(pair.levi().block_size(b)));
    return ParamPair(pair.levi(), std::move(out));
}

// alpha_i^vee(pi) lies in Z_M exactly when i and i+1 are singleton blocks;
// then the obstruction is chi_M(alpha_i^vee(pi)) = u_i / u_{i+1} = 1.
inline bool change_of_weight_applicable(const WeightClass& V, int i, const ParamPair& pair) {
    const auto& M = pair.levi();
    if (M.rank() != V.rank()) throw std::invalid_argument("rank mismatch");
    if (pairing(V.nu(), i) != 0)
        throw std::invalid_argument("weight " + V.nu().key() + " pairs nontrivially with alpha_" + std::to_string(i));
    if (M.contains_root(i)) throw std::invalid_argument("alpha_" + std::to_string(i) + " lies in the Levi of the pair");
    const int b1 = M.block_of(i - 1);
    const int b2 = M.block_of(i);
    if (M.block_size(b1) != 1 || M.block_size(b2) != 1) return true;
    return pair.chars()[static_cast<std::size_t>(b1)].unramified() != pair.chars()[static_cast<std::size_t>(b2)].unramified();
}

}  // namespace modp
