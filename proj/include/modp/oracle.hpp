#pragma once

// Brute-force ground truth over GL_n(F_q) for tiny n and q: group and coset
// enumeration, Bruhat and Iwasawa counts, and explicit small weight modules
// on which the invariant/coinvariant statements are checked by dense linear
// algebra. Nothing here is clever on purpose.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "modp/field.hpp"
#include "modp/hecke.hpp"
#include "modp/root_datum.hpp"
#include "modp/weights.hpp"

namespace modp::oracle {

inline constexpr std::uint64_t kGroupSizeGuard = 1'000'000;
inline constexpr int kMaxRank = 4;
inline constexpr int kMaxQ = 5;

class guard_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

// prod_{k<n} (q^n - q^k), saturating well above the guard
inline std::uint64_t gl_order(int n, int q) {
    const std::uint64_t qn = ipow(static_cast<std::uint64_t>(q), n);
    std::uint64_t r = 1;
    for (int k = 0; k < n; ++k) {
        const std::uint64_t f = qn - ipow(static_cast<std::uint64_t>(q), k);
        if (r > (std::uint64_t{1} << 40)) return r;
        r *= f;
    }
    return r;
}

struct Fq {
    int n = 0;
    int q = 0;
    int p = 0;
    int f = 0;
    const FiniteField* F = nullptr;
};

inline Fq make_context(int n, int q) {
    if (n < 1 || n > kMaxRank) throw guard_error("oracle supports 1 <= n <= " + std::to_string(kMaxRank));
    if (q < 2 || q > kMaxQ) throw guard_error("oracle supports 2 <= q <= " + std::to_string(kMaxQ));
    Fq c;
    c.n = n;
    c.q = q;
    c.p = prime_of_prime_power(q);
    c.f = 0;
    for (int x = 1; x < q; x *= c.p) ++c.f;
    c.F = &FiniteField::conway_free(c.p, c.f);
    return c;
}

// Dense matrices of field codes.
struct Dense {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint64_t> a;

    Dense() = default;
    Dense(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}

    std::uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    std::uint64_t at(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }

    bool operator==(const Dense&) const = default;
    auto operator<=>(const Dense&) const = default;
};

using Matrix = Dense;

inline Dense identity(int n) {
    Dense m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline Dense mul(const FiniteField& F, const Dense& x, const Dense& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    Dense r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const auto c = x.at(i, k);
            if (!c) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) = F.add(r.at(i, j), F.mul(c, y.at(k, j)));
        }
    return r;
}

inline Dense transpose(const Dense& m) {
    Dense t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

inline Dense stack(const Dense& top, const Dense& bottom) {
    if (top.rows == 0) return bottom;
    if (bottom.rows == 0) return top;
    if (top.cols != bottom.cols) throw std::invalid_argument("stack: column mismatch");
    Dense r = top;
    r.rows += bottom.rows;
    r.a.insert(r.a.end(), bottom.a.begin(), bottom.a.end());
    return r;
}

// In place reduced row echelon form; returns pivot columns. Zero rows are dropped.
inline std::vector<int> rref(const FiniteField& F, Dense& m) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int s = r;
        while (s < m.rows && m.at(s, c) == 0) ++s;
        if (s == m.rows) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(s, j));
        const auto inv = F.inv(m.at(r, c));
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const auto f = F.neg(m.at(i, c));
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = F.add(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    m.rows = r;
    m.a.resize(static_cast<std::size_t>(r * m.cols));
    return piv;
}

inline int rank(const FiniteField& F, Dense m) { return static_cast<int>(rref(F, m).size()); }

// Rows of the result span {x : m x = 0}.
inline Dense kernel(const FiniteField& F, Dense m) {
    const int cols = m.cols;
    const auto piv = rref(F, m);
    std::vector<bool> is_piv(static_cast<std::size_t>(cols), false);
    for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
    Dense k(0, cols);
    for (int fc = 0; fc < cols; ++fc) {
        if (is_piv[static_cast<std::size_t>(fc)]) continue;
        Dense v(1, cols);
        v.at(0, fc) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v.at(0, piv[r]) = F.neg(m.at(static_cast<int>(r), fc));
        k = stack(k, v);
    }
    return k;
}

inline std::uint64_t det(const FiniteField& F, Dense m) {
    if (m.rows != m.cols) throw std::invalid_argument("det of a non-square matrix");
    const int n = m.rows;
    std::uint64_t d = 1;
    for (int c = 0; c < n; ++c) {
        int s = c;
        while (s < n && m.at(s, c) == 0) ++s;
        if (s == n) return 0;
        if (s != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(c, j), m.at(s, j));
            d = F.neg(d);
        }
        d = F.mul(d, m.at(c, c));
        const auto inv = F.inv(m.at(c, c));
        for (int i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            const auto f = F.neg(F.mul(m.at(i, c), inv));
            for (int j = c; j < n; ++j) m.at(i, j) = F.add(m.at(i, j), F.mul(f, m.at(c, j)));
        }
    }
    return d;
}

inline Dense inverse(const FiniteField& F, const Dense& g) {
    const int n = g.rows;
    Dense aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = g.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const auto piv = rref(F, aug);
    if (static_cast<int>(piv.size()) != n || piv.back() != n - 1) throw std::invalid_argument("matrix is singular");
    Dense r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

// I + t E_ab (0-based a != b)
inline Matrix root_element(int n, int a, int b, std::uint64_t t) {
    Matrix m = identity(n);
    m.at(a, b) = t;
    return m;
}

inline Matrix permutation_matrix(const WeylPerm& w) {
    const int n = w.size();
    Matrix m(n, n);
    for (int j = 0; j < n; ++j) m.at(w(j), j) = 1;
    return m;
}

// ---- subgroups -------------------------------------------------------------

inline bool in_parabolic(const Matrix& g, const StandardParabolic& P) {
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j)
            if (P.block_of(i) > P.block_of(j) && g.at(i, j) != 0) return false;
    return true;
}

inline bool in_opposite_parabolic(const Matrix& g, const StandardParabolic& P) {
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j)
            if (P.block_of(i) < P.block_of(j) && g.at(i, j) != 0) return false;
    return true;
}

// Generators of the unipotent radical of P (or of its opposite): root
// elements x_ab(t), t != 0, for a, b in different blocks.
inline std::vector<Matrix> radical_generators(const Fq& c, const StandardParabolic& P, bool opposite) {
    std::vector<Matrix> out;
    for (int a = 0; a < c.n; ++a)
        for (int b = 0; b < c.n; ++b) {
            const bool take = opposite ? P.block_of(a) > P.block_of(b) : P.block_of(a) < P.block_of(b);
            if (!take) continue;
            for (std::uint64_t t = 1; t < static_cast<std::uint64_t>(c.q); ++t) out.push_back(root_element(c.n, a, b, t));
        }
    return out;
}

inline std::vector<Matrix> torus(const Fq& c) {
    std::vector<Matrix> out;
    std::vector<std::uint64_t> d(static_cast<std::size_t>(c.n), 1);
    while (true) {
        Matrix m(c.n, c.n);
        for (int i = 0; i < c.n; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
        out.push_back(std::move(m));
        int i = 0;
        while (i < c.n && ++d[static_cast<std::size_t>(i)] == static_cast<std::uint64_t>(c.q)) d[static_cast<std::size_t>(i++)] = 1;
        if (i == c.n) break;
    }
    return out;
}

// Every element of the upper unitriangular group, or of the upper Borel.
inline std::vector<Matrix> upper_triangular(const Fq& c, bool unipotent) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < c.n; ++i)
        for (int j = i; j < c.n; ++j)
            if (i < j || !unipotent) slots.emplace_back(i, j);
    const std::uint64_t bound = unipotent ? ipow(static_cast<std::uint64_t>(c.q), static_cast<int>(slots.size()))
                                          : gl_order(1, c.q) * ipow(static_cast<std::uint64_t>(c.q), static_cast<int>(slots.size()));
    if (bound > kGroupSizeGuard) throw guard_error("triangular group too large to enumerate");
    std::vector<Matrix> out;
    std::vector<std::uint64_t> v(slots.size(), 0);
    while (true) {
        Matrix m = identity(c.n);
        bool ok = true;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            m.at(slots[s].first, slots[s].second) = v[s];
            if (slots[s].first == slots[s].second && v[s] == 0) ok = false;
        }
        if (ok) out.push_back(std::move(m));
        std::size_t s = 0;
        while (s < v.size() && ++v[s] == static_cast<std::uint64_t>(c.q)) v[s++] = 0;
        if (s == v.size()) break;
    }
    return out;
}

// All of GL_n(F_q), row by row; deterministic order.
inline std::vector<Matrix> enumerate_gl(const Fq& c) {
    if (gl_order(c.n, c.q) > kGroupSizeGuard)
        throw guard_error("|GL_" + std::to_string(c.n) + "(F_" + std::to_string(c.q) + ")| exceeds the size guard");
    const std::uint64_t nv = ipow(static_cast<std::uint64_t>(c.q), c.n);
    std::vector<Matrix> out;
    Matrix cur(c.n, c.n);
    auto rec = [&](auto&& self, int r) -> void {
        if (r == c.n) {
            out.push_back(cur);
            return;
        }
        for (std::uint64_t code = 0; code < nv; ++code) {
            std::uint64_t x = code;
            for (int j = 0; j < c.n; ++j) {
                cur.at(r, j) = x % static_cast<std::uint64_t>(c.q);
                x /= static_cast<std::uint64_t>(c.q);
            }
            Dense head(r + 1, c.n);
            std::copy(cur.a.begin(), cur.a.begin() + (r + 1) * c.n, head.a.begin());
            if (rank(*c.F, head) == r + 1) self(self, r + 1);
        }
    };
    rec(rec, 0);
    return out;
}

inline const std::vector<Matrix>& group_elements(const Fq& c) {
    thread_local std::map<std::pair<int, int>, std::vector<Matrix>> cache;
    auto key = std::make_pair(c.n, c.q);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    return cache.emplace(key, enumerate_gl(c)).first->second;
}

// ---- flags and cosets ------------------------------------------------------

// gP is determined by the partial flag spanned by leading column blocks.
inline std::vector<std::uint64_t> flag_key(const FiniteField& F, const Matrix& g, const StandardParabolic& P) {
    std::vector<std::uint64_t> key;
    int d = 0;
    for (int b = 0; b + 1 < P.num_blocks(); ++b) {
        d += P.block_size(b);
        Dense cols(d, g.rows);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < g.rows; ++i) cols.at(j, i) = g.at(i, j);
        rref(F, cols);
        key.insert(key.end(), cols.a.begin(), cols.a.end());
        key.push_back(~std::uint64_t{0});
    }
    return key;
}

inline std::vector<Matrix> flag_cosets(int n, int q, const StandardParabolic& P) {
    if (P.rank() != n) throw std::invalid_argument("parabolic has the wrong rank");
    const auto c = make_context(n, q);
    std::map<std::vector<std::uint64_t>, std::size_t> seen;
    std::vector<Matrix> reps;
    for (const auto& g : group_elements(c))
        if (seen.try_emplace(flag_key(*c.F, g, P), reps.size()).second) reps.push_back(g);
    return reps;
}

// U(k)-orbits on G(k)/P(k), P the (i, n-i) parabolic. Each orbit holds one
// coordinate subspace e_S, |S| = i, and is labelled by mu_a = -1 for a in S.
inline std::map<Coweight, std::uint64_t> iwasawa_orbit_counts(int n, int q, int i) {
    check_root_index(n, i);
    const auto c = make_context(n, q);
    const StandardParabolic P({i, n - i});
    std::set<std::vector<std::uint64_t>> all;
    for (const auto& g : group_elements(c)) all.insert(flag_key(*c.F, g, P));
    const auto U = upper_triangular(c, true);

    std::map<Coweight, std::uint64_t> out;
    std::set<std::vector<std::uint64_t>> covered;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
        if (std::popcount(S) != i) continue;
        std::vector<int> img;
        for (int a = 0; a < n; ++a)
            if (S >> a & 1u) img.push_back(a);
        for (int a = 0; a < n; ++a)
            if (!(S >> a & 1u)) img.push_back(a);
        const auto w = permutation_matrix(WeylPerm(img));
        std::set<std::vector<std::uint64_t>> orbit;
        for (const auto& u : U) orbit.insert(flag_key(*c.F, mul(*c.F, u, w), P));
        for (const auto& k : orbit)
            if (!covered.insert(k).second) throw std::logic_error("U-orbits of coordinate subspaces overlap");
        std::vector<int> mu(static_cast<std::size_t>(n), 0);
        for (int a = 0; a < n; ++a)
            if (S >> a & 1u) mu[static_cast<std::size_t>(a)] = -1;
        out[Coweight(mu)] = orbit.size();
    }
    if (covered != all) throw std::logic_error("U-orbits of coordinate subspaces miss some cosets");
    return out;
}

inline int inversions(const Coweight& mu) {
    int k = 0;
    for (int a = 0; a < mu.size(); ++a)
        for (int b = a + 1; b < mu.size(); ++b)
            if (mu[a] > mu[b]) ++k;
    return k;
}

struct MinusculeSatakeReport {
    bool ok = true;
    std::map<Coweight, std::uint64_t> counts;
    std::string failure;
};

// Counts must be q^{l(w)}, total |G/P|, and mod p they must agree with the
// T-to-tau expansion of T_lambda for the trivial weight.
inline MinusculeSatakeReport minuscule_satake_report(int n, int q, int i) {
    MinusculeSatakeReport r;
    r.counts = iwasawa_orbit_counts(n, q, i);
    auto fail = [&](std::string why) {
        if (r.ok) r.failure = std::move(why);
        r.ok = false;
    };
    std::uint64_t total = 0;
    for (const auto& [mu, cnt] : r.counts) {
        total += cnt;
        if (cnt != ipow(static_cast<std::uint64_t>(q), inversions(mu))) fail("orbit of " + mu.key() + " has size " + std::to_string(cnt));
    }
    if (total != flag_cosets(n, q, StandardParabolic({i, n - i})).size()) fail("orbit sizes do not add up to the coset count");

    const int p = prime_of_prime_power(q);
    const auto& Fp = FiniteField::prime(p);
    const auto lambda = fundamental_antidominant_coweight(n, i);
    const auto S = satake_T_to_tau(HeckeElement::basis_element(WeightClass::trivial(n, q), Basis::T, lambda, Fp));
    std::map<Coweight, Scalar> reduced;
    for (const auto& [mu, cnt] : r.counts) {
        const auto s = Fp.from_int(static_cast<std::int64_t>(cnt % static_cast<std::uint64_t>(p)));
        if (!s.is_zero()) reduced.emplace(mu, s);
    }
    if (reduced.size() != 1 || !reduced.count(lambda) || !reduced.at(lambda).is_one())
        fail("nonzero residues other than 1 at lambda");
    if (S.terms() != reduced) fail("Satake expansion " + S.to_string() + " disagrees with the orbit counts");
    return r;
}

inline bool check_minuscule_satake(int n, int q, int i) { return minuscule_satake_report(n, q, i).ok; }

// Lines through row vectors in the orbit of <e_i> under right multiplication
// by B(k). Each has a unique representative e_i + sum_{b>i} a_b e_b.
inline std::uint64_t iwahori_coset_count(int n, int q, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("index out of range");
    const auto c = make_context(n, q);
    const auto& F = *c.F;
    std::set<std::vector<std::uint64_t>> lines;
    for (const auto& b : upper_triangular(c, false)) {
        std::vector<std::uint64_t> v(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = b.at(i - 1, j);
        int lead = 0;
        while (v[static_cast<std::size_t>(lead)] == 0) ++lead;
        if (lead != i - 1) throw std::logic_error("orbit line does not start at position i");
        const auto inv = F.inv(v[static_cast<std::size_t>(lead)]);
        for (auto& x : v) x = F.mul(x, inv);
        lines.insert(v);
    }
    return lines.size();
}

inline bool check_iwahori_coset_count(int n, int q, int i) {
    return iwahori_coset_count(n, q, i) == ipow(static_cast<std::uint64_t>(q), n - i);
}

// Sizes of the B(k)-double cosets, identified through the ranks of the
// lower-left corners, which are invariant under B on both sides.
inline std::map<WeylPerm, std::uint64_t> bruhat_cell_sizes(int n, int q) {
    const auto c = make_context(n, q);
    auto corner_ranks = [&](const Matrix& g) {
        std::vector<int> key;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Dense sub(n - i, j + 1);
                for (int a = i; a < n; ++a)
                    for (int b = 0; b <= j; ++b) sub.at(a - i, b) = g.at(a, b);
                key.push_back(rank(*c.F, sub));
            }
        return key;
    };
    std::map<std::vector<int>, WeylPerm> cells;
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = j;
    do {
        WeylPerm w(img);
        if (!cells.emplace(corner_ranks(permutation_matrix(w)), w).second)
            throw std::logic_error("two permutations share a rank pattern");
    } while (std::next_permutation(img.begin(), img.end()));
    std::map<WeylPerm, std::uint64_t> out;
    for (const auto& g : group_elements(c)) {
        auto it = cells.find(corner_ranks(g));
        if (it == cells.end()) throw std::logic_error("element outside every Bruhat cell");
        ++out[it->second];
    }
    return out;
}

inline bool check_bruhat(int n, int q) {
    const auto cells = bruhat_cell_sizes(n, q);
    std::uint64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<std::uint64_t>(k);
    if (cells.size() != fact) return false;
    const std::uint64_t borel = ipow(static_cast<std::uint64_t>(q - 1), n) * ipow(static_cast<std::uint64_t>(q), n * (n - 1) / 2);
    for (const auto& [w, size] : cells)
        if (size != ipow(static_cast<std::uint64_t>(q), w.length()) * borel) return false;
    return true;
}

// ---- small weight modules --------------------------------------------------

enum class FactorKind { Sym, SymDual, Wedge };

struct ModuleFactor {
    FactorKind kind;
    int degree;
    int frobenius;  // twist by x -> x^(p^frobenius)
};

namespace detail {

inline std::vector<std::vector<int>> monomials(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            m[static_cast<std::size_t>(pos)] = left;
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, left - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
        if (std::popcount(S) != k) continue;
        std::vector<int> s;
        for (int a = 0; a < n; ++a)
            if (S >> a & 1u) s.push_back(a);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

using PolyN = std::map<std::vector<int>, std::uint64_t>;

inline PolyN poly_mul(const FiniteField& F, const PolyN& x, const PolyN& y) {
    PolyN r;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) {
            auto m = mx;
            for (std::size_t j = 0; j < m.size(); ++j) m[j] += my[j];
            auto& slot = r[m];
            slot = F.add(slot, F.mul(cx, cy));
        }
    return r;
}

// Sym^d of the column action: x_j -> sum_i g_ij x_i.
inline Dense sym_action(const FiniteField& F, const Matrix& g, const std::vector<std::vector<int>>& basis) {
    const int n = g.rows;
    const int dim = static_cast<int>(basis.size());
    std::map<std::vector<int>, int> index;
    for (int k = 0; k < dim; ++k) index[basis[static_cast<std::size_t>(k)]] = k;
    std::vector<PolyN> linear(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (g.at(i, j) == 0) continue;
            std::vector<int> m(static_cast<std::size_t>(n), 0);
            m[static_cast<std::size_t>(i)] = 1;
            linear[static_cast<std::size_t>(j)][m] = g.at(i, j);
        }
    Dense r(dim, dim);
    for (int col = 0; col < dim; ++col) {
        PolyN prod{{std::vector<int>(static_cast<std::size_t>(n), 0), 1}};
        for (int j = 0; j < n; ++j)
            for (int e = 0; e < basis[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]; ++e)
                prod = poly_mul(F, prod, linear[static_cast<std::size_t>(j)]);
        for (const auto& [m, c] : prod)
            if (c) r.at(index.at(m), col) = c;
    }
    return r;
}

inline Dense wedge_action(const FiniteField& F, const Matrix& g, const std::vector<std::vector<int>>& basis) {
    const int dim = static_cast<int>(basis.size());
    Dense r(dim, dim);
    for (int I = 0; I < dim; ++I)
        for (int J = 0; J < dim; ++J) {
            const auto& rows = basis[static_cast<std::size_t>(I)];
            const auto& cols = basis[static_cast<std::size_t>(J)];
            const int k = static_cast<int>(rows.size());
            Dense minor(k, k);
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) minor.at(a, b) = g.at(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]);
            r.at(I, J) = det(F, minor);
        }
    return r;
}

inline Dense kron(const FiniteField& F, const Dense& x, const Dense& y) {
    Dense r(x.rows * y.rows, x.cols * y.cols);
    for (int a = 0; a < x.rows; ++a)
        for (int b = 0; b < x.cols; ++b) {
            if (!x.at(a, b)) continue;
            for (int c = 0; c < y.rows; ++c)
                for (int d = 0; d < y.cols; ++d) r.at(a * y.rows + c, b * y.cols + d) = F.mul(x.at(a, b), y.at(c, d));
        }
    return r;
}

}  // namespace detail

// F(nu) realized as a tensor product of Frobenius twists of Sym^a (a <= p-1)
// of the standard module or its dual, or Lambda^k, times det^b.
class TinyWeightModule {
public:
    static std::optional<TinyWeightModule> build(const WeightClass& V) {
        const int n = V.rank();
        const auto& nu = V.nu();
        const int last = nu[n - 1];
        std::vector<int> top(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) top[static_cast<std::size_t>(j)] = nu[j] - last;
        const int a = top[0];

        auto is_shape = [&](int head_len, int value) {
            for (int j = 0; j < n; ++j)
                if (top[static_cast<std::size_t>(j)] != (j < head_len ? value : 0)) return false;
            return true;
        };
        auto digits = [&](int x, FactorKind kind) {
            std::vector<ModuleFactor> fs;
            for (int j = 0; x > 0; ++j, x /= V.p())
                if (x % V.p()) fs.push_back({kind, x % V.p(), j});
            return fs;
        };

        TinyWeightModule m(V);
        if (a == 0) {
            m.det_power_ = last;
            m.label_ = "det^" + std::to_string(last);
        } else if (is_shape(1, a)) {
            m.factors_ = digits(a, FactorKind::Sym);
            m.det_power_ = last;
            m.label_ = "Sym^" + std::to_string(a) + " (x) det^" + std::to_string(last);
        } else if (is_shape(n - 1, a)) {
            m.factors_ = digits(a, FactorKind::SymDual);
            m.det_power_ = last + a;
            m.label_ = "Sym^" + std::to_string(a) + "(dual) (x) det^" + std::to_string(last + a);
        } else {
            int k = 0;
            while (k < n && top[static_cast<std::size_t>(k)] == 1) ++k;
            if (k == 0 || !is_shape(k, 1)) return std::nullopt;
            m.factors_ = {{FactorKind::Wedge, k, 0}};
            m.det_power_ = last;
            m.label_ = "Lambda^" + std::to_string(k) + " (x) det^" + std::to_string(last);
        }
        m.ctx_ = make_context(n, V.q());
        m.setup_basis();
        return m;
    }

    const WeightClass& weight() const { return V_; }
    const std::string& construction() const { return label_; }
    int dim() const { return static_cast<int>(weights_.size()); }
    const std::vector<std::vector<int>>& basis_weights() const { return weights_; }
    const Fq& context() const { return ctx_; }

    Dense act(const Matrix& g) const {
        const auto& F = *ctx_.F;
        Dense r = identity(1);
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            const auto& fac = factors_[k];
            Matrix h = g;
            const auto e = ipow(static_cast<std::uint64_t>(ctx_.p), fac.frobenius);
            for (auto& x : h.a) x = F.pow(x, e);
            Dense part;
            switch (fac.kind) {
                case FactorKind::Sym: part = detail::sym_action(F, h, bases_[k]); break;
                case FactorKind::SymDual: part = detail::sym_action(F, transpose(inverse(F, h)), bases_[k]); break;
                case FactorKind::Wedge: part = detail::wedge_action(F, h, bases_[k]); break;
            }
            r = detail::kron(F, r, part);
        }
        const auto d = Scalar(F, det(F, g)).pow(det_power_).code();
        for (auto& x : r.a) x = F.mul(x, d);
        return r;
    }

private:
    explicit TinyWeightModule(WeightClass V) : V_(std::move(V)) {}

    void setup_basis() {
        const int n = ctx_.n;
        weights_ = {std::vector<int>(static_cast<std::size_t>(n), det_power_)};
        for (const auto& fac : factors_) {
            const auto scale = static_cast<int>(ipow(static_cast<std::uint64_t>(ctx_.p), fac.frobenius));
            std::vector<std::vector<int>> basis = fac.kind == FactorKind::Wedge ? detail::subsets(n, fac.degree)
                                                                               : detail::monomials(n, fac.degree);
            std::vector<std::vector<int>> fw;
            for (const auto& b : basis) {
                std::vector<int> w(static_cast<std::size_t>(n), 0);
                if (fac.kind == FactorKind::Wedge)
                    for (int a : b) w[static_cast<std::size_t>(a)] = scale;
                else
                    for (int j = 0; j < n; ++j)
                        w[static_cast<std::size_t>(j)] = (fac.kind == FactorKind::Sym ? 1 : -1) * scale * b[static_cast<std::size_t>(j)];
                fw.push_back(std::move(w));
            }
            std::vector<std::vector<int>> next;
            for (const auto& x : weights_)
                for (const auto& y : fw) {
                    auto s = x;
                    for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] += y[static_cast<std::size_t>(j)];
                    next.push_back(std::move(s));
                }
            weights_ = std::move(next);
            bases_.push_back(std::move(basis));
        }
    }

    WeightClass V_;
    Fq ctx_;
    std::vector<ModuleFactor> factors_;
    int det_power_ = 0;
    std::string label_;
    std::vector<std::vector<std::vector<int>>> bases_;
    std::vector<std::vector<int>> weights_;
};

inline std::vector<WeightClass> supported_weights(int n, int q) {
    std::vector<WeightClass> out;
    for (const auto& V : all_weight_classes(n, q))
        if (TinyWeightModule::build(V)) out.push_back(V);
    return out;
}

namespace detail {

// Rows span the fixed vectors of every generator.
inline Dense invariants(const TinyWeightModule& V, const std::vector<Matrix>& gens) {
    const auto& F = *V.context().F;
    Dense rel(0, V.dim());
    for (const auto& s : gens) {
        Dense d = V.act(s);
        for (int i = 0; i < d.rows; ++i) d.at(i, i) = F.add(d.at(i, i), F.neg(1));
        rel = stack(rel, d);
    }
    if (rel.rows == 0) return identity(V.dim());
    return kernel(F, rel);
}

// Rows span sum_s (s - 1)V, the kernel of V -> V_H for H = <gens>.
inline Dense augmentation(const TinyWeightModule& V, const std::vector<Matrix>& gens) {
    const auto& F = *V.context().F;
    Dense span(0, V.dim());
    for (const auto& s : gens) {
        Dense d = V.act(s);
        for (int i = 0; i < d.rows; ++i) d.at(i, i) = F.add(d.at(i, i), F.neg(1));
        span = stack(span, transpose(d));
    }
    rref(F, span);
    return span;
}

inline bool same_subspace(const FiniteField& F, const Dense& a, const Dense& b) {
    const int ra = rank(F, a), rb = rank(F, b);
    return ra == rb && rank(F, stack(a, b)) == ra;
}

inline std::vector<long> block_sums(const std::vector<int>& w, const StandardParabolic& P) {
    std::vector<long> s(static_cast<std::size_t>(P.num_blocks()), 0);
    for (int j = 0; j < static_cast<int>(w.size()); ++j) s[static_cast<std::size_t>(P.block_of(j))] += w[static_cast<std::size_t>(j)];
    return s;
}

}  // namespace detail

struct LeviInvariantsReport {
    bool ok = true;
    std::string construction;
    int dim = 0;
    int dim_invariants = 0;     // V^{N(k)}
    int dim_coinvariants = 0;   // V_{Nbar(k)}
    int dim_highest_line = 0;   // V^{U(k)}
    std::string failure;
};

// V^N is the span of the weight vectors whose block sums match nu, the map
// V^N -> V_{Nbar} is an isomorphism, and V^U is a line on which T(k) acts by nu.
inline LeviInvariantsReport levi_invariants_report(const WeightClass& V, const StandardParabolic& P) {
    if (P.rank() != V.rank()) throw std::invalid_argument("parabolic has the wrong rank");
    const auto mod = TinyWeightModule::build(V);
    if (!mod) throw std::invalid_argument("no explicit module for nu = " + V.nu().key());
    const auto& c = mod->context();
    const auto& F = *c.F;
    LeviInvariantsReport r;
    r.construction = mod->construction();
    r.dim = mod->dim();
    auto fail = [&](std::string why) {
        if (r.ok) r.failure = std::move(why);
        r.ok = false;
    };

    const auto inv = detail::invariants(*mod, radical_generators(c, P, false));
    const auto aug = detail::augmentation(*mod, radical_generators(c, P, true));
    r.dim_invariants = inv.rows;
    r.dim_coinvariants = r.dim - aug.rows;

    const auto B = StandardParabolic::borel(c.n);
    const auto line = detail::invariants(*mod, radical_generators(c, B, false));
    r.dim_highest_line = line.rows;
    if (line.rows != 1) fail("V^U has dimension " + std::to_string(line.rows));

    if (line.rows == 1) {
        for (const auto& t : torus(c)) {
            std::uint64_t chi = 1;
            for (int j = 0; j < c.n; ++j) chi = F.mul(chi, Scalar(F, t.at(j, j)).pow(V.nu()[j]).code());
            const auto image = mul(F, line, transpose(mod->act(t)));
            Dense expect = line;
            for (auto& x : expect.a) x = F.mul(x, chi);
            if (image != expect) {
                fail("torus does not act on V^U through nu");
                break;
            }
        }
    }

    Dense expected(0, r.dim);
    const auto target = detail::block_sums(V.nu().entries(), P);
    for (int k = 0; k < r.dim; ++k)
        if (detail::block_sums(mod->basis_weights()[static_cast<std::size_t>(k)], P) == target) {
            Dense e(1, r.dim);
            e.at(0, k) = 1;
            expected = stack(expected, e);
        }
    if (!detail::same_subspace(F, inv, expected)) fail("V^N is not the span of the weight vectors with nu's block sums");
    if (r.dim_coinvariants != r.dim_invariants) fail("dim V^N != dim V_Nbar");
    if (rank(F, stack(aug, inv)) != aug.rows + inv.rows) fail("V^N -> V_Nbar is not injective");
    return r;
}

inline bool check_levi_invariants(int n, int q, const HighestWeight& nu, const StandardParabolic& P) {
    if (nu.size() != n) throw std::invalid_argument("weight has the wrong rank");
    return levi_invariants_report(WeightClass(nu, q), P).ok;
}

struct OppositeProjectionReport {
    bool ok = true;
    bool stabilizer_clause = false;  // one regularity hypothesis was dropped
    std::uint64_t checked = 0;
    std::uint64_t outside = 0;        // elements outside Qbar P
    std::uint64_t nonzero_inside = 0;
    std::string failure;
};

// Which (P, Q) the statement covers for V: both regularities, or Stab_W(nu)
// equal to W_M or W_L with the other hypothesis dropped.
inline std::optional<bool> opposite_projection_applies(const WeightClass& V, const StandardParabolic& P, const StandardParabolic& Q) {
    const bool mreg = is_M_regular(V, P);
    const bool lreg = is_M_regular(V, Q);
    if (mreg && lreg) return false;
    const auto stab = stab_levi(V.nu());
    if (stab == P || stab == Q) return true;
    return std::nullopt;
}

namespace detail {

inline OppositeProjectionReport opposite_projection_on(const TinyWeightModule& mod, const std::vector<Matrix>& G, const std::vector<Dense>& images,
                                    const StandardParabolic& P, const StandardParabolic& Q) {
    const auto& c = mod.context();
    const auto& F = *c.F;
    const auto applies = opposite_projection_applies(mod.weight(), P, Q);
    if (!applies) throw std::invalid_argument("V is not regular enough for this pair of parabolics");
    OppositeProjectionReport r;
    r.stabilizer_clause = *applies;

    const auto inv = invariants(mod, radical_generators(c, P, false));
    const auto aug = augmentation(mod, radical_generators(c, Q, true));
    std::set<std::vector<std::uint64_t>> qbar_p;
    for (const auto& g : G)
        if (in_opposite_parabolic(g, Q)) qbar_p.insert(flag_key(F, g, P));

    for (std::size_t k = 0; k < G.size(); ++k) {
        ++r.checked;
        const bool inside = qbar_p.count(flag_key(F, G[k], P)) > 0;
        const auto moved = mul(F, inv, transpose(images[k]));
        const bool nonzero = rank(F, stack(aug, moved)) > aug.rows;
        if (!inside) {
            ++r.outside;
            if (nonzero && r.ok) {
                r.ok = false;
                r.failure = "projection is nonzero for an element outside Qbar P";
            }
        } else if (nonzero) {
            ++r.nonzero_inside;
        }
    }
    if (r.nonzero_inside == 0 && r.ok) {
        r.ok = false;
        r.failure = "projection vanishes everywhere, the check is vacuous";
    }
    return r;
}

}  // namespace detail

inline OppositeProjectionReport opposite_projection_report(const WeightClass& V, const StandardParabolic& P, const StandardParabolic& Q) {
    if (P.rank() != V.rank() || Q.rank() != V.rank()) throw std::invalid_argument("parabolic has the wrong rank");
    const auto mod = TinyWeightModule::build(V);
    if (!mod) throw std::invalid_argument("no explicit module for nu = " + V.nu().key());
    if (!opposite_projection_applies(V, P, Q)) throw std::invalid_argument("V is not regular enough for this pair of parabolics");
    const auto& G = group_elements(mod->context());
    std::vector<Dense> images;
    images.reserve(G.size());
    for (const auto& g : G) images.push_back(mod->act(g));
    return detail::opposite_projection_on(*mod, G, images, P, Q);
}

inline bool check_opposite_projection(int n, int q, const HighestWeight& nu, const StandardParabolic& P, const StandardParabolic& Q) {
    if (nu.size() != n) throw std::invalid_argument("weight has the wrong rank");
    return opposite_projection_report(WeightClass(nu, q), P, Q).ok;
}

// ---- umbrella --------------------------------------------------------------

struct GateResult {
    std::string name;
    bool pass;
    std::string detail;
};

inline std::vector<int> prime_powers_up_to(int max_q) {
    std::vector<int> out;
    for (int q = 2; q <= std::min(max_q, kMaxQ); ++q) {
        int p = 2;
        while (q % p) ++p;
        int x = q;
        while (x % p == 0) x /= p;
        if (x == 1) out.push_back(q);
    }
    return out;
}

// Every oracle gate on n in [2, max_n], q <= max_q within the size guard.
inline std::vector<GateResult> run_gates(int max_n, int max_q) {
    std::vector<GateResult> out;
    for (int n = 2; n <= std::min(max_n, kMaxRank); ++n)
        for (int q : prime_powers_up_to(max_q)) {
            if (gl_order(n, q) > kGroupSizeGuard) {
                out.push_back({"skip GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")", true, "over the size guard"});
                continue;
            }
            const auto c = make_context(n, q);
            const std::string tag = " n=" + std::to_string(n) + " q=" + std::to_string(q);
            const auto& G = group_elements(c);
            out.push_back({"group order" + tag, G.size() == gl_order(n, q), std::to_string(G.size()) + " elements"});
            out.push_back({"bruhat" + tag, check_bruhat(n, q), ""});
            for (int i = 1; i < n; ++i) {
                const auto rep = minuscule_satake_report(n, q, i);
                out.push_back({"minuscule satake" + tag + " i=" + std::to_string(i), rep.ok, rep.failure});
            }
            for (int i = 1; i <= n; ++i)
                out.push_back({"iwahori cosets" + tag + " i=" + std::to_string(i), check_iwahori_coset_count(n, q, i), ""});

            const auto parabolics = all_standard_parabolics(n);
            for (const auto& V : supported_weights(n, q)) {
                const auto mod = TinyWeightModule::build(V);
                for (const auto& P : parabolics) {
                    const auto rep = levi_invariants_report(V, P);
                    out.push_back({"levi invariants" + tag + " nu=" + V.nu().key() + " P=" + P.key(), rep.ok,
                                   rep.construction + (rep.ok ? "" : ": " + rep.failure)});
                }
                std::vector<Dense> images;
                images.reserve(G.size());
                for (const auto& g : G) images.push_back(mod->act(g));
                for (const auto& P : parabolics)
                    for (const auto& Q : parabolics) {
                        if (!opposite_projection_applies(V, P, Q)) continue;
                        const auto rep = detail::opposite_projection_on(*mod, G, images, P, Q);
                        out.push_back({"opposite projection" + tag + " nu=" + V.nu().key() + " P=" + P.key() + " Q=" + Q.key(), rep.ok,
                                       (rep.stabilizer_clause ? "stabilizer clause" : "both regular") +
                                           std::string(rep.ok ? "" : ": " + rep.failure)});
                    }
            }
        }
    return out;
}

}  // namespace modp::oracle
