#pragma once

// Serre weights F(nu) of GL_n(F_q), handled purely through q-restricted
// highest weights. Two highest weights give the same weight iff they differ
// by a multiple of (q-1)(1,...,1); the canonical representative has its last
// entry in [0, q-2]. For a Levi M the same normalization is done per block.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "modp/root_datum.hpp"

namespace modp {

inline int floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return static_cast<int>(q);
}

inline int mod_floor(long a, long b) { return static_cast<int>(a - static_cast<long>(floor_div(a, b)) * b); }

// q = p^f; returns p, or throws
inline int prime_of_prime_power(int q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    int p = 2;
    while (q % p != 0) ++p;
    int r = q;
    while (r % p == 0) r /= p;
    if (r != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return p;
}

namespace detail {

// shift each block of nu by a multiple of (q-1) so its last entry is in [0, q-2]
inline HighestWeight canonical_blockwise(HighestWeight nu, const StandardParabolic& M, int q) {
    const int step = q - 1;
    for (int b = 0; b < M.num_blocks(); ++b) {
        const int start = M.block_start(b);
        const int last = start + M.block_size(b) - 1;
        const int shift = floor_div(nu[last], step) * step;
        for (int j = start; j <= last; ++j) nu[j] -= shift;
    }
    return nu;
}

inline void check_restricted(const HighestWeight& nu, const StandardParabolic& M, int q) {
    for (int i = 1; i < nu.size(); ++i) {
        if (!M.contains_root(i)) continue;
        const int c = pairing(nu, i);
        if (c < 0 || c > q - 1)
            throw std::invalid_argument("highest weight " + nu.key() + " is not q-restricted for q=" + std::to_string(q));
    }
}

}  // namespace detail

class WeightClass {
public:
    WeightClass(HighestWeight nu, int q) : q_(q), p_(prime_of_prime_power(q)) {
        if (nu.size() < 1) throw std::invalid_argument("empty highest weight");
        const auto G = StandardParabolic::whole(nu.size());
        detail::check_restricted(nu, G, q);
        nu_ = detail::canonical_blockwise(std::move(nu), G, q);
    }

    static WeightClass trivial(int n, int q) { return WeightClass(HighestWeight(std::vector<int>(static_cast<std::size_t>(n), 0)), q); }

    const HighestWeight& nu() const { return nu_; }
    int q() const { return q_; }
    int p() const { return p_; }
    int rank() const { return nu_.size(); }

    bool operator==(const WeightClass&) const = default;
    auto operator<=>(const WeightClass&) const = default;

private:
    HighestWeight nu_;
    int q_;
    int p_;
};

class LeviWeightClass {
public:
    LeviWeightClass(StandardParabolic M, HighestWeight nu, int q) : M_(std::move(M)), q_(q) {
        if (M_.rank() != nu.size()) throw std::invalid_argument("Levi and weight have different rank");
        prime_of_prime_power(q);
        detail::check_restricted(nu, M_, q);
        nu_ = detail::canonical_blockwise(std::move(nu), M_, q);
    }

    const StandardParabolic& levi() const { return M_; }
    const HighestWeight& nu() const { return nu_; }
    int q() const { return q_; }

    bool operator==(const LeviWeightClass&) const = default;
    auto operator<=>(const LeviWeightClass&) const = default;

private:
    StandardParabolic M_;
    HighestWeight nu_;
    int q_;
};

// V^{N(k)} as a weight for M: same highest weight, smaller group.
inline LeviWeightClass restrict_to_levi(const WeightClass& V, const StandardParabolic& P) {
    return LeviWeightClass(P, V.nu(), V.q());
}

inline bool is_M_regular(const WeightClass& V, const StandardParabolic& M) {
    if (M.rank() != V.rank()) throw std::invalid_argument("rank mismatch");
    for (int i = 1; i < V.rank(); ++i)
        if (!M.contains_root(i) && pairing(V.nu(), i) <= 0) return false;
    return true;
}

// The unique M-regular weight restricting to Vbar. Block b gets shifted by
// c_b (q-1); each boundary pairing must land in [1, q-1], which pins down
// c_b - c_{b+1} because that window holds exactly one value of each residue.
inline WeightClass regular_cover(const LeviWeightClass& Vbar) {
    const auto& M = Vbar.levi();
    const int q = Vbar.q();
    const int step = q - 1;
    HighestWeight nu = Vbar.nu();
    for (int b = M.num_blocks() - 2; b >= 0; --b) {
        const int last = M.block_start(b) + M.block_size(b) - 1;
        const int d = nu[last] - nu[last + 1];
        // want d + k*step in [1, step]
        const int k = floor_div(step - d, step);
        for (int j = M.block_start(b); j <= last; ++j) nu[j] += k * step;
    }
    return WeightClass(nu, q);
}

// Sum of nu over each block of M, mod q-1.
inline std::vector<int> central_character_exponents(const LeviWeightClass& Vbar) {
    const auto& M = Vbar.levi();
    const int step = Vbar.q() - 1;
    std::vector<int> out;
    for (int b = 0; b < M.num_blocks(); ++b) {
        long s = 0;
        for (int j = M.block_start(b); j < M.block_start(b) + M.block_size(b); ++j) s += Vbar.nu()[j];
        out.push_back(mod_floor(s, step));
    }
    return out;
}

// nu + (q-1) omega_i where omega_i = (1^i, 0^{n-i})
inline WeightClass weight_partner_for_change(const WeightClass& V, int i) {
    if (pairing(V.nu(), i) != 0)
        throw std::invalid_argument("weight " + V.nu().key() + " pairs nontrivially with alpha_" + std::to_string(i));
    HighestWeight nu = V.nu();
    for (int j = 0; j < i; ++j) nu[j] += V.q() - 1;
    return WeightClass(nu, V.q());
}

// All canonical q-restricted weights of GL_n(F_q).
inline std::vector<WeightClass> all_weight_classes(int n, int q) {
    std::vector<WeightClass> out;
    std::vector<int> nu(static_cast<std::size_t>(n), 0);
    // choose last entry in [0, q-2], then each pairing in [0, q-1]
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    while (true) {
        nu[static_cast<std::size_t>(n - 1)] = c[static_cast<std::size_t>(n - 1)];
        for (int j = n - 2; j >= 0; --j) nu[static_cast<std::size_t>(j)] = nu[static_cast<std::size_t>(j + 1)] + c[static_cast<std::size_t>(j)];
        out.emplace_back(HighestWeight(nu), q);
        int j = 0;
        for (; j < n; ++j) {
            const int cap = (j == n - 1) ? q - 2 : q - 1;
            if (c[static_cast<std::size_t>(j)] < cap) {
                ++c[static_cast<std::size_t>(j)];
                break;
            }
            c[static_cast<std::size_t>(j)] = 0;
        }
        if (j == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All canonical blockwise q-restricted weights of M.
inline std::vector<LeviWeightClass> all_levi_weight_classes(const StandardParabolic& M, int q) {
    std::vector<std::vector<WeightClass>> per_block;
    for (int b = 0; b < M.num_blocks(); ++b) per_block.push_back(all_weight_classes(M.block_size(b), q));
    std::vector<LeviWeightClass> out;
    std::vector<std::size_t> idx(per_block.size(), 0);
    while (true) {
        std::vector<int> nu;
        for (std::size_t b = 0; b < per_block.size(); ++b)
            for (int x : per_block[b][idx[b]].nu()) nu.push_back(x);
        out.emplace_back(M, HighestWeight(nu), q);
        std::size_t b = 0;
        for (; b < idx.size(); ++b) {
            if (++idx[b] < per_block[b].size()) break;
            idx[b] = 0;
        }
        if (b == idx.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace modp
