#pragma once

// Extended affine 0-Hecke algebra of type A~_{n-1}.
//
// Group elements are bijections f of Z with f(j+n) = f(j)+n, stored by their
// window (f(1), ..., f(n)); product is composition, (fg)(j) = f(g(j)).
//   s_i (i = 0..n-1) swaps i+kn and i+1+kn,
//   Pi(j) = j - 1, so that s_k Pi = Pi s_{k+1},
//   translation by lambda is j -> j - n lambda_j, so (s_i...s_{n-1} Pi)^i = t_{(1^i,0^{n-i})}.
// Pi^n is central; the algebra sets Pi^n = zeta. Elements are normalized to
// rotation r in [0, n), where f has rotation r when sum_j (f(j) - j) = -n r.
//
// T_w T_{w'} = (-1)^{l(w)+l(w')-l(w*w')} T_{w*w'} with * the Demazure product.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modp/field.hpp"
#include "modp/root_datum.hpp"

namespace modp {

namespace detail {

inline int fdiv(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline int fmod(int a, int b) { return a - fdiv(a, b) * b; }

}  // namespace detail

class ExtAffineElem {
public:
    // Normalizes rotation into [0, n); returns the element together with the
    // power of Pi^n that was split off.
    static std::pair<ExtAffineElem, int> normalize(std::vector<int> window) {
        const int n = static_cast<int>(window.size());
        if (n < 1) throw std::invalid_argument("empty window");
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        long s = 0;
        for (int j = 0; j < n; ++j) {
            const int r = detail::fmod(window[static_cast<std::size_t>(j)], n);
            if (seen[static_cast<std::size_t>(r)]) throw std::invalid_argument("window residues are not distinct");
            seen[static_cast<std::size_t>(r)] = true;
            s += window[static_cast<std::size_t>(j)] - (j + 1);
        }
        // s = -n k with k the rotation before normalizing
        const int k = static_cast<int>(-s / n);
        const int q = detail::fdiv(k, n);
        for (auto& x : window) x += q * n;
        ExtAffineElem e;
        e.w_ = std::move(window);
        return {std::move(e), q};
    }

    static ExtAffineElem identity(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = j + 1;
        return normalize(std::move(w)).first;
    }

    // s_i for i in 0..n-1 (s_0 is the affine reflection)
    static ExtAffineElem simple(int n, int i) {
        if (n < 2 || i < 0 || i >= n) throw std::out_of_range("simple reflection index out of range");
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) w[static_cast<std::size_t>(j - 1)] = j;
        if (i == 0) {
            w[0] = 0;
            w[static_cast<std::size_t>(n - 1)] = n + 1;
        } else {
            std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
        }
        return normalize(std::move(w)).first;
    }

    static std::pair<ExtAffineElem, int> rotation_power(int n, int r) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) w[static_cast<std::size_t>(j - 1)] = j - r;
        return normalize(std::move(w));
    }

    static std::pair<ExtAffineElem, int> translation(const Coweight& lambda) {
        const int n = lambda.size();
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) w[static_cast<std::size_t>(j - 1)] = j - n * lambda[j - 1];
        return normalize(std::move(w));
    }

    int rank() const { return static_cast<int>(w_.size()); }
    const std::vector<int>& window() const { return w_; }

    int operator()(int j) const {
        const int n = rank();
        const int r = detail::fmod(j - 1, n);
        return w_[static_cast<std::size_t>(r)] + (j - 1 - r);
    }

    int rotation() const {
        long s = 0;
        for (int j = 0; j < rank(); ++j) s += w_[static_cast<std::size_t>(j)] - (j + 1);
        return static_cast<int>(-s / rank());
    }

    // window of Pi^{-r} f, which has sum (f(j) - j) = 0
    std::vector<int> affine_window() const {
        std::vector<int> a = w_;
        for (auto& x : a) x += rotation();
        return a;
    }

    int length() const {
        const int n = rank();
        int l = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) l += std::abs(detail::fdiv(w_[static_cast<std::size_t>(j)] - w_[static_cast<std::size_t>(i)], n));
        return l;
    }

    // l(w s_i) < l(w)
    bool right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

    // returns (f o g, power of Pi^n split off)
    friend std::pair<ExtAffineElem, int> compose(const ExtAffineElem& f, const ExtAffineElem& g) {
        if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch");
        std::vector<int> w(static_cast<std::size_t>(f.rank()));
        for (int j = 1; j <= f.rank(); ++j) w[static_cast<std::size_t>(j - 1)] = f(g(j));
        return normalize(std::move(w));
    }

    // w = Pi^r s_{a_1} ... s_{a_k} reduced; returns (r, a)
    std::pair<int, std::vector<int>> reduced_word() const {
        ExtAffineElem cur = *this;
        std::vector<int> letters;
        while (true) {
            int d = -1;
            for (int i = 0; i < rank(); ++i)
                if (cur.right_descent(i)) {
                    d = i;
                    break;
                }
            if (d < 0) break;
            letters.push_back(d);
            cur = compose(cur, simple(rank(), d)).first;
        }
        std::reverse(letters.begin(), letters.end());
        return {cur.rotation(), letters};
    }

    std::string key() const {
        std::string s = "[";
        for (std::size_t i = 0; i < w_.size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
        return s + "]";
    }

    bool operator==(const ExtAffineElem&) const = default;
    auto operator<=>(const ExtAffineElem&) const = default;

private:
    std::vector<int> w_;
};

struct DemazureResult {
    int sign;       // +1 or -1
    int zeta_power; // copies of Pi^n split off
    ExtAffineElem result;
};

// Letter-by-letter over a reduced word of w2: Pi passes freely, s is
// appended when the length goes up and absorbed with a sign otherwise.
inline DemazureResult demazure_product(const ExtAffineElem& w1, const ExtAffineElem& w2) {
    if (w1.rank() != w2.rank()) throw std::invalid_argument("demazure_product: rank mismatch");
    const int n = w1.rank();
    const auto [r, letters] = w2.reduced_word();
    auto [acc, z] = compose(w1, ExtAffineElem::rotation_power(n, r).first);
    int sign = 1;
    for (int s : letters) {
        if (acc.right_descent(s)) {
            sign = -sign;
        } else {
            auto [next, dz] = compose(acc, ExtAffineElem::simple(n, s));
            acc = std::move(next);
            z += dz;
        }
    }
    return {sign, z, acc};
}

class Hecke0Element {
public:
    Hecke0Element(int n, const FiniteField& F, std::int64_t zeta = 1) : n_(n), F_(&F), zeta_(F.from_int(zeta)) {
        if (n < 1) throw std::invalid_argument("rank must be positive");
        if (zeta_.is_zero()) throw std::invalid_argument("zeta must be invertible");
    }

    static Hecke0Element basis(const ExtAffineElem& w, const FiniteField& F, std::int64_t zeta = 1) {
        Hecke0Element x(w.rank(), F, zeta);
        x.add_term(w, F.one());
        return x;
    }
    static Hecke0Element one(int n, const FiniteField& F, std::int64_t zeta = 1) {
        return basis(ExtAffineElem::identity(n), F, zeta);
    }
    // S_i, i in 0..n-1
    static Hecke0Element S(int n, int i, const FiniteField& F, std::int64_t zeta = 1) {
        return basis(ExtAffineElem::simple(n, i), F, zeta);
    }
    static Hecke0Element Pi(int n, const FiniteField& F, std::int64_t zeta = 1) {
        return basis(ExtAffineElem::rotation_power(n, 1).first, F, zeta);
    }

    int rank() const { return n_; }
    const FiniteField& field() const { return *F_; }
    const Scalar& zeta() const { return zeta_; }
    const std::map<ExtAffineElem, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExtAffineElem& w, const Scalar& c) {
        if (w.rank() != n_) throw std::invalid_argument("rank mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Hecke0Element operator+(const Hecke0Element& o) const {
        check(o);
        Hecke0Element r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    Hecke0Element operator-(const Hecke0Element& o) const {
        check(o);
        Hecke0Element r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
        return r;
    }
    Hecke0Element scaled(const Scalar& s) const {
        Hecke0Element r(n_, *F_);
        r.zeta_ = zeta_;
        for (const auto& [w, c] : terms_) r.add_term(w, c * s);
        return r;
    }

    Hecke0Element operator*(const Hecke0Element& o) const {
        check(o);
        Hecke0Element r(n_, *F_);
        r.zeta_ = zeta_;
        for (const auto& [a, c] : terms_)
            for (const auto& [b, d] : o.terms_) {
                const auto pr = demazure_product(a, b);
                Scalar coef = c * d * zeta_.pow(pr.zeta_power);
                if (pr.sign < 0) coef = -coef;
                r.add_term(pr.result, coef);
            }
        return r;
    }

    Hecke0Element pow(int e) const {
        Hecke0Element r(n_, *F_);
        r.zeta_ = zeta_;
        r.add_term(ExtAffineElem::identity(n_), F_->one());
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    bool operator==(const Hecke0Element& o) const { return n_ == o.n_ && F_ == o.F_ && zeta_ == o.zeta_ && terms_ == o.terms_; }
    bool operator!=(const Hecke0Element& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) s += (s.empty() ? "" : " + ") + c.to_string() + "*T" + w.key();
        return s;
    }

private:
    void check(const Hecke0Element& o) const {
        if (o.n_ != n_ || o.F_ != F_ || o.zeta_ != zeta_) throw std::invalid_argument("incompatible 0-Hecke elements");
    }
    int n_;
    const FiniteField* F_;
    Scalar zeta_;
    std::map<ExtAffineElem, Scalar> terms_;
};

// Words in the generators: letter k >= 0 is S_k, letter -1 is Pi.
using Hecke0Word = std::vector<int>;
inline constexpr int kPi = -1;

inline Hecke0Element word_element(int n, const Hecke0Word& word, const FiniteField& F, std::int64_t zeta = 1) {
    Hecke0Element x = Hecke0Element::one(n, F, zeta);
    for (int l : word) x = x * (l == kPi ? Hecke0Element::Pi(n, F, zeta) : Hecke0Element::S(n, l, F, zeta));
    return x;
}

// S_a S_{a+1} ... S_b (empty when a > b)
inline Hecke0Word run_word(int a, int b) {
    Hecke0Word w;
    for (int k = a; k <= b; ++k) w.push_back(k);
    return w;
}

inline Hecke0Word concat(Hecke0Word a, const Hecke0Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// X_i = S_{i(i+1)...(n-1)} Pi; X_n = Pi
inline Hecke0Word x_word(int n, int i) { return concat(run_word(i, n - 1), {kPi}); }

inline bool verify_braid_and_rotation(int n, const FiniteField& F, std::int64_t zeta = 1) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
    auto S = [&](int i) { return Hecke0Element::S(n, i, F, zeta); };
    const auto Pi = Hecke0Element::Pi(n, F, zeta);
    for (int i = 1; i <= n - 1; ++i)
        if (S(i) * S(i) != S(i).scaled(-F.one())) return false;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            if (std::abs(i - j) > 1 && S(i) * S(j) != S(j) * S(i)) return false;
    for (int k = 1; k + 1 <= n - 1; ++k)
        if (S(k) * S(k + 1) * S(k) != S(k + 1) * S(k) * S(k + 1)) return false;
    for (int k = 1; k + 1 <= n - 1; ++k)
        if (S(k) * Pi != Pi * S(k + 1)) return false;
    if (Pi.pow(n) != Hecke0Element::one(n, F, zeta).scaled(F.from_int(zeta))) return false;
    return true;
}

// S_{i..j} S_{k..(l-1)} = S_{(k+1)..l} S_{i..j} for i <= k <= l <= j <= n-1
inline bool verify_shifted_word_commutation(int n, const FiniteField& F) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j)
            for (int k = i; k <= j; ++k)
                for (int l = k; l <= j; ++l) {
                    const auto lhs = word_element(n, concat(run_word(i, j), run_word(k, l - 1)), F);
                    const auto rhs = word_element(n, concat(run_word(k + 1, l), run_word(i, j)), F);
                    if (lhs != rhs) return false;
                }
    return true;
}

inline Coweight omega(int n, int i) {
    Coweight c(std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int j = 0; j < i; ++j) c[j] = 1;
    return c;
}

// (S_{i..(n-1)} Pi)^i is +T_{t_i}, t_i translation by (1^i, 0^{n-i}), of length i(n-i)
inline bool verify_rotation_word_power(int n, int i, const FiniteField& F) {
    check_root_index(n, i);
    const auto u = word_element(n, x_word(n, i), F).pow(i);
    if (u.terms().size() != 1) return false;
    const auto& [w, c] = *u.terms().begin();
    const auto [t, z] = ExtAffineElem::translation(omega(n, i));
    return z == 0 && c == F.one() && w == t && w.length() == i * (n - i);
}

// ---------------------------------------------------------------------------
// The module generated by v with S_i v = 0 (1 <= i <= n-1), Pi^n v = v and
//     v = sum_{i=1}^n S_{i(i+1)...(n-1)} Pi v.
// T_w v with a right descent among s_1..s_{n-1} is zero, so module vectors
// live on the elements without such descents. Identities are certified by
// membership in the span of T_w (relation) for l(w) <= cap.

class QuotientModule {
public:
    QuotientModule(int n, const FiniteField& F) : n_(n), F_(&F) {}

    bool is_normal(const ExtAffineElem& w) const {
        for (int i = 1; i <= n_ - 1; ++i)
            if (w.right_descent(i)) return false;
        return true;
    }

    // x v in normal form, as sparse (column, coefficient) pairs sorted by column
    std::vector<std::pair<int, std::uint64_t>> reduce(const Hecke0Element& x) {
        std::vector<std::pair<int, std::uint64_t>> row;
        for (const auto& [w, c] : x.terms())
            if (is_normal(w)) row.emplace_back(column(w), c.code());
        std::sort(row.begin(), row.end());
        return row;
    }

    int column(const ExtAffineElem& w) {
        auto [it, fresh] = cols_.try_emplace(w, static_cast<int>(cols_.size()));
        return it->second;
    }

    const FiniteField& field() const { return *F_; }
    int rank() const { return n_; }

private:
    int n_;
    const FiniteField* F_;
    std::map<ExtAffineElem, int> cols_;
};

namespace detail {

using SparseRow = std::vector<std::pair<int, std::uint64_t>>;

// row echelon form with unique leading columns; rows stored with leading 1
class SparseEchelon {
public:
    explicit SparseEchelon(const FiniteField& F) : F_(&F) {}

    // reduces in place; true iff the row ends up zero
    bool reduce(SparseRow& row) const {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) return false;
            row = axpy(row, it->second, F_->neg(row.front().second));
        }
        return true;
    }

    void insert(SparseRow row) {
        if (reduce(row)) return;
        const std::uint64_t inv = F_->inv(row.front().second);
        for (auto& e : row) e.second = F_->mul(e.second, inv);
        const int lead = row.front().first;
        pivots_.emplace(lead, std::move(row));
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    // a + c*b
    SparseRow axpy(const SparseRow& a, const SparseRow& b, std::uint64_t c) const {
        SparseRow r;
        r.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                r.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                r.emplace_back(b[j].first, F_->mul(c, b[j].second));
                ++j;
            } else {
                const std::uint64_t v = F_->add(a[i].second, F_->mul(c, b[j].second));
                if (v != 0) r.emplace_back(a[i].first, v);
                ++i;
                ++j;
            }
        }
        return r;
    }

    const FiniteField* F_;
    std::unordered_map<int, SparseRow> pivots_;
};

// Elements of the extended affine group sorted into layers by length.
class LengthLayers {
public:
    explicit LengthLayers(int n) : n_(n) {
        std::vector<ExtAffineElem> zero;
        for (int r = 0; r < n; ++r) zero.push_back(ExtAffineElem::rotation_power(n, r).first);
        layers_.push_back(std::move(zero));
    }

    const std::vector<ExtAffineElem>& layer(int l) {
        while (static_cast<int>(layers_.size()) <= l) {
            const auto& prev = layers_.back();
            const int target = static_cast<int>(layers_.size());
            std::vector<ExtAffineElem> next;
            for (const auto& w : prev)
                for (int i = 0; i < n_; ++i) {
                    auto sw = compose(ExtAffineElem::simple(n_, i), w).first;
                    if (sw.length() == target) next.push_back(std::move(sw));
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            layers_.push_back(std::move(next));
        }
        return layers_[static_cast<std::size_t>(l)];
    }

private:
    int n_;
    std::vector<std::vector<ExtAffineElem>> layers_;
};

inline std::string superscript(int k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    if (k < 0) throw std::invalid_argument("negative exponent");
    std::string s;
    for (char c : std::to_string(k)) s += digits[c - '0'];
    return s;
}

// Renders a word with runs of Pi collapsed to powers and Pi^n dropped.
inline std::string render_word(const Hecke0Word& w, int n) {
    std::string s;
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] == kPi) {
            int k = 0;
            while (i < w.size() && w[i] == kPi) {
                ++k;
                ++i;
            }
            k %= n;
            if (k == 1) s += "Π";
            else if (k > 1) s += "Π" + superscript(k);
        } else {
            s += "S_" + std::to_string(w[i]);
            ++i;
        }
    }
    return s;
}

}  // namespace detail

struct SignedWord {
    int sign;
    Hecke0Word word;
};

// One line of a derivation: a signed sum of words applied to v, plus its text.
struct TraceLine {
    std::string text;
    std::vector<SignedWord> terms;
};

struct DerivationStep {
    std::string identity;       // e.g. "U_1²v = U_1v"
    bool proved = false;
    int minimal_cap = -1;       // smallest length cap certifying the identity
    std::vector<TraceLine> trace;
    bool trace_checked = false; // every consecutive pair of lines certified
};

struct RotationDerivationReport {
    int n = 0;
    int length_cap = 0;
    std::vector<DerivationStep> steps;  // U_1..U_{n-1}, then v = Pi v
    bool success = false;
    bool inconclusive = false;          // a cap was exceeded somewhere
    bool nondegenerate = false;         // v itself is not in the relation span at the cap
    int minimal_sufficient_cap = -1;

    // the trace of step i as one chain "a = b = c"
    std::string chain(std::size_t step) const {
        std::string s;
        for (const auto& line : steps.at(step).trace) s += (s.empty() ? "" : " ") + line.text;
        return s;
    }
};

namespace detail {

class DerivationEngine {
public:
    DerivationEngine(int n, const FiniteField& F) : n_(n), F_(&F), module_(n, F), layers_(n) {}

    Hecke0Element word(const Hecke0Word& w) const { return word_element(n_, w, *F_); }

    Hecke0Element combo(const std::vector<SignedWord>& terms) const {
        Hecke0Element x(n_, *F_);
        for (const auto& t : terms) x = x + word(t.word).scaled(F_->from_int(t.sign));
        return x;
    }

    // 1 - sum_i X_i, i.e. the defining relation applied to v
    Hecke0Element sum_relation() const {
        Hecke0Element r = Hecke0Element::one(n_, *F_);
        for (int i = 1; i <= n_; ++i) r = r - word(x_word(n_, i));
        return r;
    }

    // For each target x: the smallest cap c <= max_cap with x v in the span
    // of T_w r v (r in relations, l(w) <= c), or nullopt.
    std::vector<std::optional<int>> certify(const std::vector<Hecke0Element>& relations,
                                            const std::vector<Hecke0Element>& targets, int max_cap) {
        SparseEchelon ech(*F_);
        std::vector<SparseRow> rows;
        for (const auto& t : targets) rows.push_back(module_.reduce(t));
        std::vector<std::optional<int>> found(targets.size());
        std::size_t open = targets.size();
        for (int c = 0; c <= max_cap && open > 0; ++c) {
            for (const auto& w : layers_.layer(c)) {
                const auto Tw = Hecke0Element::basis(w, *F_);
                for (const auto& r : relations) ech.insert(module_.reduce(Tw * r));
            }
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (found[k]) continue;
                if (ech.reduce(rows[k])) {
                    found[k] = c;
                    --open;
                }
            }
        }
        return found;
    }

    int n() const { return n_; }
    const FiniteField& field() const { return *F_; }

private:
    int n_;
    const FiniteField* F_;
    QuotientModule module_;
    LengthLayers layers_;
};

// text for a sum "a − b − c" of rendered words each followed by v
inline std::string render_sum(const std::vector<SignedWord>& terms, int n, bool spaced) {
    std::string s;
    const std::string minus = spaced ? " − " : "−";
    const std::string plus = spaced ? " + " : "+";
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string w = render_word(terms[k].word, n) + "v";
        if (k == 0) s += (terms[k].sign < 0 ? "−" : "") + w;
        else s += (terms[k].sign < 0 ? minus : plus) + w;
    }
    return s.empty() ? "0" : s;
}

}  // namespace detail

// Re-derives the algebraic core of the argument that v = Pi v:
// for i = 1..n-1, X_i^2 v = X_i v (so U_i^2 v = U_i v with U_i = X_i^i),
// then the nilpotence hypothesis gives U_i v = 0; finally v - Pi v = 0.
inline RotationDerivationReport derive_rotation_invariance(int n, int length_cap, const FiniteField& F = FiniteField::prime(3)) {
    if (n < 2) throw std::invalid_argument("derive_rotation_invariance needs n >= 2");
    if (length_cap < n * n) throw std::invalid_argument("length cap must be at least n^2");
    detail::DerivationEngine eng(n, F);
    RotationDerivationReport rep;
    rep.n = n;
    rep.length_cap = length_cap;
    std::vector<Hecke0Element> relations{eng.sum_relation()};
    const auto v = Hecke0Element::one(n, F);
    int worst = 0;

    for (int i = 1; i <= n - 1; ++i) {
        DerivationStep st;
        const std::string ui = "U_" + std::to_string(i);
        st.identity = ui + "²v = " + ui + "v";
        const Hecke0Word X = x_word(n, i);
        const auto U = eng.word(X).pow(i);
        const auto target = U * U - U;

        // trace for X_i^2 v = X_i v
        const std::string x = detail::render_word(X, n);
        std::vector<SignedWord> inner{{1, {}}};  // v - sum_{k>i} X_k v
        for (int k = i + 1; k <= n; ++k) inner.push_back({-1, x_word(n, k)});
        TraceLine l0;
        l0.text = "(" + x + ")²v = " + x + "(" + detail::render_sum(inner, n, false) + ")";
        l0.terms = {{1, concat(X, X)}};
        TraceLine l1;  // distribute, pushing Pi right via Pi S_j = S_{j-1} Pi
        TraceLine l2;  // move S_{(k-1)..(n-2)} past S_{i..(n-1)}
        l1.terms.push_back({1, X});
        l2.terms.push_back({1, X});
        for (int k = i + 1; k <= n; ++k) {
            l1.terms.push_back({-1, concat(concat(run_word(i, n - 1), run_word(k - 1, n - 2)), {kPi, kPi})});
            l2.terms.push_back({-1, concat(concat(run_word(k, n - 1), run_word(i, n - 1)), {kPi, kPi})});
        }
        l1.text = "= " + detail::render_sum(l1.terms, n, true);
        l2.text = "= " + detail::render_sum(l2.terms, n, true);
        TraceLine l3;
        l3.terms = {{1, X}};
        l3.text = "= " + x + "v";
        st.trace.push_back(l0);
        st.trace.push_back(l1);
        if (l2.text != l1.text) st.trace.push_back(l2);
        st.trace.push_back(l3);

        // targets: the identity itself, then each consecutive pair of lines
        std::vector<Hecke0Element> targets{target};
        for (std::size_t k = 0; k + 1 < st.trace.size(); ++k)
            targets.push_back(eng.combo(st.trace[k].terms) - eng.combo(st.trace[k + 1].terms));
        const auto caps = eng.certify(relations, targets, length_cap);
        st.proved = caps[0].has_value();
        st.minimal_cap = caps[0].value_or(-1);
        st.trace_checked = true;
        for (std::size_t k = 1; k < caps.size(); ++k) {
            if (!caps[k]) st.trace_checked = false;
            else worst = std::max(worst, *caps[k]);
        }

        if (!st.proved) rep.inconclusive = true;
        worst = std::max(worst, st.minimal_cap);
        rep.steps.push_back(std::move(st));
        // nilpotence hypothesis: U_i v = 0
        relations.push_back(U);
    }

    DerivationStep fin;
    fin.identity = "v = Πv";
    const auto Pi = Hecke0Element::Pi(n, F);
    const auto cap = eng.certify(relations, {v - Pi}, length_cap)[0];
    fin.proved = cap.has_value();
    fin.minimal_cap = cap.value_or(-1);
    std::vector<SignedWord> all;
    for (int k = 1; k <= n; ++k) all.push_back({1, x_word(n, k)});
    TraceLine a{"v = " + detail::render_sum(all, n, true), {{1, {}}}};
    TraceLine b{"= Πv", {{1, {kPi}}}};
    fin.trace = {a, b};
    fin.trace_checked = fin.proved;
    if (!fin.proved) rep.inconclusive = true;
    worst = std::max(worst, fin.minimal_cap);
    rep.steps.push_back(std::move(fin));

    // guard against a collapsed quotient, where every identity would hold vacuously
    rep.nondegenerate = !eng.certify(relations, {v}, length_cap)[0].has_value();

    rep.success = !rep.inconclusive && rep.nondegenerate;
    for (const auto& s : rep.steps) rep.success = rep.success && s.trace_checked;
    rep.minimal_sufficient_cap = rep.success ? worst : -1;
    return rep;
}

}  // namespace modp
