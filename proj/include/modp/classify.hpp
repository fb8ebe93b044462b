#pragma once

// Classification data for irreducible admissible representations of GL_n(F):
// Ind_P^G(sigma_1 x ... x sigma_r) where each sigma_i is either an opaque
// supersingular representation of GL_{n_i} (n_i > 1) or Sp_{Q_i} x (eta_i o det).
// Sp_G is the trivial representation, so Steinberg{Q = whole} is eta o det.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "modp/eigen.hpp"
#include "modp/poset.hpp"
#include "modp/root_datum.hpp"

namespace modp {

struct Supersingular {
    int size;
    std::string label;
    SmoothCharacter central_char;
    bool operator==(const Supersingular& o) const {
        return size == o.size && label == o.label && central_char == o.central_char;
    }
};

struct Steinberg {
    StandardParabolic Q;  // parabolic of GL_{size}
    SmoothCharacter eta;
    int size() const { return Q.rank(); }
    bool operator==(const Steinberg& o) const { return Q == o.Q && eta == o.eta; }
};

using BlockRep = std::variant<Supersingular, Steinberg>;

inline int block_size(const BlockRep& b) {
    return std::visit([](const auto& x) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Supersingular>) return x.size;
        else return x.size();
    }, b);
}

inline const Steinberg* as_steinberg(const BlockRep& b) { return std::get_if<Steinberg>(&b); }
inline const Supersingular* as_supersingular(const BlockRep& b) { return std::get_if<Supersingular>(&b); }

class InductionDatum {
public:
    InductionDatum(StandardParabolic P, std::vector<BlockRep> blocks) : P_(std::move(P)), blocks_(std::move(blocks)) {
        if (static_cast<int>(blocks_.size()) != P_.num_blocks())
            throw std::invalid_argument("datum has " + std::to_string(blocks_.size()) + " blocks but P has " +
                                        std::to_string(P_.num_blocks()));
        for (int b = 0; b < P_.num_blocks(); ++b) {
            const int s = block_size(blocks_[static_cast<std::size_t>(b)]);
            if (s != P_.block_size(b))
                throw std::invalid_argument("block " + std::to_string(b + 1) + " has size " + std::to_string(s) +
                                            " but P expects " + std::to_string(P_.block_size(b)));
        }
    }

    const StandardParabolic& parabolic() const { return P_; }
    const std::vector<BlockRep>& blocks() const { return blocks_; }
    int rank() const { return P_.rank(); }

    bool operator==(const InductionDatum& o) const { return P_ == o.P_ && blocks_ == o.blocks_; }
    bool operator!=(const InductionDatum& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = "Ind_(" + P_.key() + ")(";
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (b) s += " x ";
            if (const auto* st = as_steinberg(blocks_[b])) {
                s += st->Q.is_whole() ? "1" : "Sp[" + st->Q.key() + "]";
                s += "*" + st->eta.to_string();
            } else {
                const auto& ss = std::get<Supersingular>(blocks_[b]);
                s += "SS{" + ss.label + "," + ss.central_char.to_string() + "}";
            }
        }
        return s + ")";
    }

private:
    StandardParabolic P_;
    std::vector<BlockRep> blocks_;
};

// supersingular blocks have size > 1; adjacent Steinberg blocks have distinct eta
inline bool validate(const InductionDatum& d) {
    const auto& bl = d.blocks();
    for (std::size_t b = 0; b < bl.size(); ++b) {
        if (const auto* ss = as_supersingular(bl[b]); ss && ss->size < 2) return false;
        if (b + 1 < bl.size()) {
            const auto* s1 = as_steinberg(bl[b]);
            const auto* s2 = as_steinberg(bl[b + 1]);
            if (s1 && s2 && s1->eta == s2->eta) return false;
        }
    }
    return true;
}

class IrreducibleRep {
public:
    explicit IrreducibleRep(InductionDatum d) : d_(std::move(d)) {
        if (!validate(d_)) throw std::invalid_argument("datum is not in canonical form: " + d_.to_string());
    }
    const InductionDatum& datum() const { return d_; }
    bool operator==(const IrreducibleRep& o) const { return d_ == o.d_; }
    bool operator!=(const IrreducibleRep& o) const { return !(*this == o); }
    std::string to_string() const { return d_.to_string(); }

private:
    InductionDatum d_;
};

inline int delta(const InductionDatum& d) {
    int c = 0;
    const auto& bl = d.blocks();
    for (std::size_t b = 0; b + 1 < bl.size(); ++b) {
        const auto* s1 = as_steinberg(bl[b]);
        const auto* s2 = as_steinberg(bl[b + 1]);
        if (s1 && s2 && s1->eta == s2->eta) ++c;
    }
    return c;
}

// A maximal run of consecutive same-eta Steinberg blocks merged into one
// GL_m block (L = the run's Levi in GL_m, S = the concatenated Q's), or a
// single supersingular block.
struct SuperBlock {
    std::size_t first = 0, last = 0;  // block indices in the datum, inclusive
    int size = 0;
    const Supersingular* supersingular = nullptr;
    std::optional<StandardParabolic> L;
    std::optional<StandardParabolic> S;
    std::optional<SmoothCharacter> eta;
    std::vector<int> free_roots;  // 1-based roots of GL_m outside Delta_L

    int free_count() const { return static_cast<int>(free_roots.size()); }
};

inline std::vector<SuperBlock> normalize_runs(const InductionDatum& d) {
    std::vector<SuperBlock> out;
    const auto& bl = d.blocks();
    std::size_t b = 0;
    while (b < bl.size()) {
        SuperBlock sb;
        sb.first = b;
        if (const auto* ss = as_supersingular(bl[b])) {
            sb.last = b;
            sb.size = ss->size;
            sb.supersingular = ss;
            out.push_back(std::move(sb));
            ++b;
            continue;
        }
        const auto* st = as_steinberg(bl[b]);
        std::size_t e = b;
        while (e + 1 < bl.size() && as_steinberg(bl[e + 1]) && as_steinberg(bl[e + 1])->eta == st->eta) ++e;
        std::vector<int> lcomp, scomp;
        for (std::size_t k = b; k <= e; ++k) {
            const auto& q = as_steinberg(bl[k])->Q;
            lcomp.push_back(q.rank());
            scomp.insert(scomp.end(), q.composition().begin(), q.composition().end());
        }
        sb.last = e;
        sb.L = StandardParabolic(lcomp);
        sb.S = StandardParabolic(scomp);
        sb.size = sb.L->rank();
        sb.eta = st->eta;
        for (int i = 1; i < sb.size; ++i)
            if (!sb.L->contains_root(i)) sb.free_roots.push_back(i);
        out.push_back(std::move(sb));
        b = e + 1;
    }
    return out;
}

// Sp_{P'} for P' with Delta_{P'} cap Delta_M = Delta_Q.
inline std::vector<StandardParabolic> steinberg_constituents(const StandardParabolic& P, const StandardParabolic& Q) {
    return parabolics_with_levi_trace(P, Q);
}

struct ConstituentPoset {
    std::vector<IrreducibleRep> elements;
    // choice bits per element: bit k set when the k-th free root (super-blocks
    // left to right, roots left to right) is added to S_i
    std::vector<std::uint64_t> choices;
    int free_bits = 0;

    // x <=_X y iff S'_x contains S'_y componentwise
    bool leq(std::size_t x, std::size_t y) const { return (choices[x] & choices[y]) == choices[y]; }
    FinitePoset poset() const {
        return FinitePoset(static_cast<int>(elements.size()),
                           [this](int a, int b) { return leq(static_cast<std::size_t>(a), static_cast<std::size_t>(b)); });
    }
};

inline ConstituentPoset constituents(const InductionDatum& d) {
    const auto runs = normalize_runs(d);
    int bits = 0;
    for (const auto& r : runs) bits += r.free_count();
    if (bits > 20) throw std::invalid_argument("too many constituents to enumerate");
    ConstituentPoset out;
    out.free_bits = bits;
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << bits); ++g) {
        // bit for global free root k (0-based, left to right) is read MSB first
        std::vector<int> comp;
        std::vector<BlockRep> blocks;
        std::uint64_t choice = 0;
        int k = 0;
        for (const auto& r : runs) {
            comp.push_back(r.size);
            if (r.supersingular) {
                blocks.emplace_back(*r.supersingular);
                continue;
            }
            RootMask m = r.S->mask();
            for (int root : r.free_roots) {
                if (g >> (bits - 1 - k) & 1u) {
                    m |= RootMask{1} << (root - 1);
                    choice |= std::uint64_t{1} << k;
                }
                ++k;
            }
            blocks.emplace_back(Steinberg{StandardParabolic::from_mask(r.size, m), *r.eta});
        }
        out.elements.emplace_back(InductionDatum(StandardParabolic(comp), std::move(blocks)));
        out.choices.push_back(choice);
    }
    return out;
}

inline ParamPair param_pair(const IrreducibleRep& rep) {
    std::vector<int> comp;
    std::vector<SmoothCharacter> chars;
    for (const auto& b : rep.datum().blocks()) {
        if (const auto* st = as_steinberg(b)) {
            for (int j = 0; j < st->size(); ++j) {
                comp.push_back(1);
                chars.push_back(st->eta);
            }
        } else {
            const auto& ss = std::get<Supersingular>(b);
            comp.push_back(ss.size);
            chars.push_back(ss.central_char);
        }
    }
    return ParamPair(StandardParabolic(comp), std::move(chars));
}

struct PrincipalSeriesVerdict {
    bool irreducible;      // chi_i != chi_{i+1} for all i
    bool tame_criterion;   // the tame parts already differ at every i
};

inline PrincipalSeriesVerdict is_irreducible_principal_series(const std::vector<SmoothCharacter>& chars) {
    PrincipalSeriesVerdict v{true, true};
    for (std::size_t i = 0; i + 1 < chars.size(); ++i) {
        if (chars[i] == chars[i + 1]) v.irreducible = false;
        if (chars[i].tame() == chars[i + 1].tame()) v.tame_criterion = false;
    }
    return v;
}

struct SubmoduleLattice {
    ConstituentPoset constituents;
    FinitePoset order;
    std::uint64_t lower_set_count;
    std::vector<ElementSet> principal;  // per constituent: the submodule with that cosocle
    std::vector<int> socle;
    std::vector<int> cosocle;

    std::vector<ElementSet> lower_sets() const { return order.lower_sets(); }
};

inline SubmoduleLattice submodule_lattice(const InductionDatum& d) {
    auto cons = constituents(d);
    auto order = cons.poset();
    std::vector<ElementSet> principal;
    for (int i = 0; i < order.size(); ++i) principal.push_back(order.principal_lower_set(i));
    const auto count = order.count_lower_sets();
    auto socle = order.minimal_elements();
    auto cosocle = order.maximal_elements();
    return SubmoduleLattice{std::move(cons), std::move(order), count, std::move(principal), std::move(socle), std::move(cosocle)};
}

}  // namespace modp
