#pragma once

// Type-A conventions for GL_n, fixed once:
//   alpha_i = e_i - e_{i+1}, alpha_i^vee = e_i - e_{i+1},
//   antidominant = weakly increasing, dominant = weakly decreasing,
//   pairing = dot product.
// Simple-root indices are 1-based everywhere in the public API.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace modp {

template <class Tag>
class IntVec {
public:
    IntVec() = default;
    explicit IntVec(std::vector<int> v) : v_(std::move(v)) {}
    IntVec(std::initializer_list<int> v) : v_(v) {}

    int size() const { return static_cast<int>(v_.size()); }
    int operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    IntVec operator+(const IntVec& o) const { same(o); IntVec r = *this; for (int i = 0; i < size(); ++i) r[i] += o[i]; return r; }
    IntVec operator-(const IntVec& o) const { same(o); IntVec r = *this; for (int i = 0; i < size(); ++i) r[i] -= o[i]; return r; }
    IntVec operator-() const { IntVec r = *this; for (auto& x : r.v_) x = -x; return r; }
    IntVec scaled(int c) const { IntVec r = *this; for (auto& x : r.v_) x *= c; return r; }

    long sum() const { return std::accumulate(v_.begin(), v_.end(), 0L); }

    bool operator==(const IntVec&) const = default;
    auto operator<=>(const IntVec&) const = default;

    // "a,b,c"
    std::string key() const {
        std::string s;
        for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
        return s;
    }

    static IntVec parse(const std::string& s) {
        std::vector<int> v;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t used = 0;
            int x = 0;
            try {
                x = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad integer vector: '" + s + "'");
            }
            if (used != tok.size() && tok.find_first_not_of(' ', used) != std::string::npos)
                throw std::invalid_argument("bad integer vector: '" + s + "'");
            v.push_back(x);
        }
        if (v.empty()) throw std::invalid_argument("empty integer vector");
        return IntVec(std::move(v));
    }

private:
    void same(const IntVec& o) const {
        if (o.size() != size()) throw std::invalid_argument("vector length mismatch");
    }
    std::vector<int> v_;
};

struct CoweightTag {};
struct HighestWeightTag {};
using Coweight = IntVec<CoweightTag>;        // X_*(T)
using HighestWeight = IntVec<HighestWeightTag>;  // X^*(T)

template <class Tag>
bool is_antidominant(const IntVec<Tag>& v) {
    return std::is_sorted(v.begin(), v.end());
}

template <class Tag>
bool is_dominant(const IntVec<Tag>& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

inline void check_root_index(int n, int i) {
    if (i < 1 || i > n - 1)
        throw std::out_of_range("simple root index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
}

// <v, alpha_i> (or <v, alpha_i^vee> for weights): v_i - v_{i+1}
template <class Tag>
int pairing(const IntVec<Tag>& v, int i) {
    check_root_index(v.size(), i);
    return v[i - 1] - v[i];
}

inline Coweight simple_coroot(int n, int i) {
    check_root_index(n, i);
    Coweight c(std::vector<int>(static_cast<std::size_t>(n), 0));
    c[i - 1] = 1;
    c[i] = -1;
    return c;
}

// (-1,...,-1,0,...,0) with i entries -1
inline Coweight fundamental_antidominant_coweight(int n, int i) {
    check_root_index(n, i);
    Coweight c(std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int j = 0; j < i; ++j) c[j] = -1;
    return c;
}

// Subsets of simple roots: bit (i-1) stands for alpha_i.
using RootMask = std::uint32_t;

class StandardParabolic {
public:
    StandardParabolic() = default;
    explicit StandardParabolic(std::vector<int> composition) : comp_(std::move(composition)) {
        if (comp_.empty()) throw std::invalid_argument("empty composition");
        for (int b : comp_)
            if (b <= 0) throw std::invalid_argument("composition parts must be positive");
        if (rank() > 31) throw std::invalid_argument("rank above 31 is not supported");
    }

    static StandardParabolic borel(int n) { return StandardParabolic(std::vector<int>(static_cast<std::size_t>(n), 1)); }
    static StandardParabolic whole(int n) { return StandardParabolic(std::vector<int>{n}); }

    static StandardParabolic from_mask(int n, RootMask delta) {
        if (n < 1) throw std::invalid_argument("rank must be positive");
        std::vector<int> comp;
        int run = 1;
        for (int i = 1; i < n; ++i) {
            if (delta >> (i - 1) & 1u) {
                ++run;
            } else {
                comp.push_back(run);
                run = 1;
            }
        }
        comp.push_back(run);
        return StandardParabolic(std::move(comp));
    }

    int rank() const { return std::accumulate(comp_.begin(), comp_.end(), 0); }
    int num_blocks() const { return static_cast<int>(comp_.size()); }
    const std::vector<int>& composition() const { return comp_; }
    int block_size(int b) const { return comp_[static_cast<std::size_t>(b)]; }

    // 0-based first coordinate of block b
    int block_start(int b) const {
        return std::accumulate(comp_.begin(), comp_.begin() + b, 0);
    }

    // block containing 0-based coordinate j
    int block_of(int j) const {
        int acc = 0;
        for (int b = 0; b < num_blocks(); ++b) {
            acc += comp_[static_cast<std::size_t>(b)];
            if (j < acc) return b;
        }
        throw std::out_of_range("coordinate outside rank");
    }

    RootMask mask() const {
        RootMask m = 0;
        int pos = 0;
        for (int b : comp_) {
            for (int k = 1; k < b; ++k) m |= RootMask{1} << (pos + k - 1);
            pos += b;
        }
        return m;
    }

    // alpha_i in Delta_M
    bool contains_root(int i) const {
        check_root_index(rank(), i);
        return mask() >> (i - 1) & 1u;
    }

    // As Levis: this <= other iff Delta_this is a subset of Delta_other.
    bool inside(const StandardParabolic& other) const {
        if (other.rank() != rank()) throw std::invalid_argument("rank mismatch");
        return (mask() & ~other.mask()) == 0;
    }

    bool is_whole() const { return comp_.size() == 1; }
    bool is_borel() const { return static_cast<int>(comp_.size()) == rank(); }

    std::string key() const {
        std::string s;
        for (std::size_t i = 0; i < comp_.size(); ++i) s += (i ? "," : "") + std::to_string(comp_[i]);
        return s;
    }

    bool operator==(const StandardParabolic&) const = default;
    auto operator<=>(const StandardParabolic&) const = default;

private:
    std::vector<int> comp_;
};

// Permutation of {0..n-1}; (w v)_{w(j)} = v_j.
class WeylPerm {
public:
    explicit WeylPerm(std::vector<int> perm) : p_(std::move(perm)) {
        std::vector<int> s = p_;
        std::sort(s.begin(), s.end());
        for (int j = 0; j < static_cast<int>(s.size()); ++j)
            if (s[static_cast<std::size_t>(j)] != j) throw std::invalid_argument("not a permutation");
    }
    static WeylPerm identity(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        return WeylPerm(std::move(p));
    }
    // s_i, 1-based
    static WeylPerm simple_reflection(int n, int i) {
        check_root_index(n, i);
        auto w = identity(n);
        std::swap(w.p_[static_cast<std::size_t>(i - 1)], w.p_[static_cast<std::size_t>(i)]);
        return w;
    }

    int size() const { return static_cast<int>(p_.size()); }
    int operator()(int j) const { return p_[static_cast<std::size_t>(j)]; }

    template <class Tag>
    IntVec<Tag> act(const IntVec<Tag>& v) const {
        if (v.size() != size()) throw std::invalid_argument("rank mismatch");
        IntVec<Tag> r = v;
        for (int j = 0; j < size(); ++j) r[p_[static_cast<std::size_t>(j)]] = v[j];
        return r;
    }

    WeylPerm operator*(const WeylPerm& o) const {
        std::vector<int> r(p_.size());
        for (int j = 0; j < size(); ++j) r[static_cast<std::size_t>(j)] = p_[static_cast<std::size_t>(o(j))];
        return WeylPerm(std::move(r));
    }

    int length() const {
        int inv = 0;
        for (int a = 0; a < size(); ++a)
            for (int b = a + 1; b < size(); ++b)
                if (p_[static_cast<std::size_t>(a)] > p_[static_cast<std::size_t>(b)]) ++inv;
        return inv;
    }

    const std::vector<int>& images() const { return p_; }
    bool operator==(const WeylPerm&) const = default;
    auto operator<=>(const WeylPerm&) const = default;

private:
    std::vector<int> p_;
};

// lambda >=_M mu, i.e. lambda - mu is a nonnegative integral combination of
// the simple coroots alpha_i^vee with alpha_i in Delta_M.
inline bool leq_M(const Coweight& mu, const Coweight& lambda, const StandardParabolic& M) {
    const int n = mu.size();
    if (lambda.size() != n || M.rank() != n) throw std::invalid_argument("length mismatch");
    const RootMask dm = M.mask();
    long partial = 0;
    for (int i = 0; i < n; ++i) {
        partial += lambda[i] - mu[i];
        if (i == n - 1) return partial == 0;
        if (partial < 0) return false;
        if (partial != 0 && !(dm >> i & 1u)) return false;
    }
    return true;
}

namespace detail {

// Builds weakly increasing lambda coordinate by coordinate, keeping the
// partial sums of lambda - mu admissible for M. Entries of an antidominant
// lambda >= mu lie in [mu_1, mu_n], so the search is finite.
inline void enumerate_above(const Coweight& mu, RootMask dm, int pos, long partial, int lo,
                            std::vector<int>& cur, std::vector<Coweight>& out) {
    const int n = mu.size();
    if (pos == n) {
        if (partial == 0) out.emplace_back(cur);
        return;
    }
    const int hi = mu[n - 1];
    for (int x = lo; x <= hi; ++x) {
        const long p = partial + x - mu[pos];
        if (pos < n - 1) {
            if (p < 0) continue;
            if (p != 0 && !(dm >> pos & 1u)) continue;
        } else if (p != 0) {
            continue;
        }
        cur[static_cast<std::size_t>(pos)] = x;
        enumerate_above(mu, dm, pos + 1, p, x, cur, out);
    }
}

}  // namespace detail

// All antidominant lambda with mu <=_M lambda, in lexicographic order.
inline std::vector<Coweight> interval_above(const Coweight& mu, const StandardParabolic& M) {
    if (!is_antidominant(mu)) throw std::invalid_argument("interval_above: " + mu.key() + " is not antidominant");
    if (M.rank() != mu.size()) throw std::invalid_argument("length mismatch");
    std::vector<Coweight> out;
    std::vector<int> cur(static_cast<std::size_t>(mu.size()));
    detail::enumerate_above(mu, M.mask(), 0, 0, mu[0], cur, out);
    return out;
}

// Levi with Delta_M = {alpha_i : <nu, alpha_i^vee> = 0}
inline StandardParabolic stab_levi(const HighestWeight& nu) {
    RootMask m = 0;
    for (int i = 1; i < nu.size(); ++i)
        if (pairing(nu, i) == 0) m |= RootMask{1} << (i - 1);
    return StandardParabolic::from_mask(nu.size(), m);
}

// All P' with Delta_{P'} cap Delta_M = Delta_Q, ordered by the bitmask of
// the free part S = Delta_{P'} minus Delta_Q read as a binary number over the
// boundary roots of M (leftmost boundary root most significant).
inline std::vector<StandardParabolic> parabolics_with_levi_trace(const StandardParabolic& M, const StandardParabolic& Q) {
    const int n = M.rank();
    if (Q.rank() != n) throw std::invalid_argument("rank mismatch");
    if (!Q.inside(M)) throw std::invalid_argument("parabolic " + Q.key() + " is not inside the Levi " + M.key());
    std::vector<int> free_roots;  // 0-based bit positions of Delta minus Delta_M
    for (int i = 0; i < n - 1; ++i)
        if (!(M.mask() >> i & 1u)) free_roots.push_back(i);
    const int k = static_cast<int>(free_roots.size());
    std::vector<StandardParabolic> out;
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
        RootMask d = Q.mask();
        for (int b = 0; b < k; ++b)
            if (s >> (k - 1 - b) & 1u) d |= RootMask{1} << free_roots[static_cast<std::size_t>(b)];
        out.push_back(StandardParabolic::from_mask(n, d));
    }
    return out;
}

// Compositions of n in lexicographic order.
inline std::vector<StandardParabolic> all_standard_parabolics(int n) {
    std::vector<StandardParabolic> out;
    for (RootMask m = 0; m < (RootMask{1} << (n - 1)); ++m) out.push_back(StandardParabolic::from_mask(n, m));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace modp
