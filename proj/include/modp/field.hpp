#pragma once

// Finite fields F_{p^m} presented as F_p[x]/(f) for a monic irreducible f.
// Elements are packed into one integer code: sum of c_i p^i over the
// coefficient vector (c_0, ..., c_{m-1}).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace modp {

class field_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace poly {

using Poly = std::vector<std::int64_t>;  // low degree first

inline std::int64_t mod(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = mod(a, p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw field_error("element not invertible mod " + std::to_string(p));
    return mod(t, p);
}

// remainder of a modulo b (b nonzero)
inline Poly rem(Poly a, const Poly& b, std::int64_t p) {
    trim(a);
    const int db = deg(b);
    const std::int64_t lead_inv = inv_mod(b.back(), p);
    while (deg(a) >= db) {
        const int shift = deg(a) - db;
        const std::int64_t c = mod(a.back() * lead_inv, p);
        for (int i = 0; i <= db; ++i)
            a[shift + i] = mod(a[shift + i] - c * b[i], p);
        trim(a);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod(r[i + j] + a[i] * b[j], p);
    return rem(std::move(r), f, p);
}

inline Poly sub(Poly a, const Poly& b, std::int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
    trim(a);
    return a;
}

inline Poly gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod f by repeated p-th powering
inline Poly frobenius_power_of_x(int k, const Poly& f, std::int64_t p) {
    Poly x = rem(Poly{0, 1}, f, p);
    for (int s = 0; s < k; ++s) {
        Poly acc{1};
        Poly base = x;
        for (std::int64_t e = p; e > 0; e >>= 1) {
            if (e & 1) acc = mulmod(acc, base, f, p);
            base = mulmod(base, base, f, p);
        }
        x = std::move(acc);
    }
    return x;
}

}  // namespace poly

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Rabin's test. f is given low degree first and need not be monic.
inline bool is_irreducible(poly::Poly f, std::int64_t p) {
    for (auto& c : f) c = poly::mod(c, p);
    poly::trim(f);
    const int m = poly::deg(f);
    if (m < 1) return false;
    if (m == 1) return true;
    const poly::Poly x{0, 1};
    if (poly::sub(poly::frobenius_power_of_x(m, f, p), x, p).size() != 0) return false;
    int rest = m;
    for (int d = 2; d <= rest; ++d) {
        if (rest % d != 0) continue;
        while (rest % d == 0) rest /= d;
        auto g = poly::gcd(f, poly::sub(poly::frobenius_power_of_x(m / d, f, p), x, p), p);
        if (poly::deg(g) > 0) return false;
    }
    return true;
}

class Scalar;

class FiniteField {
public:
    // Interned: equal (p, modulus) give the same object, which lives for the
    // whole process so Scalars can hold a plain pointer.
    static const FiniteField& get(std::int64_t p, poly::Poly modulus) {
        if (!is_prime(p)) throw field_error("characteristic " + std::to_string(p) + " is not prime");
        if (p >= (std::int64_t{1} << 31)) throw field_error("characteristic too large");
        for (auto& c : modulus) c = poly::mod(c, p);
        poly::trim(modulus);
        if (modulus.size() < 2) throw field_error("modulus must have degree at least 1");
        if (modulus.back() != 1) throw field_error("modulus must be monic");
        if (modulus.size() == 2) modulus = {0, 1};  // every linear modulus gives F_p
        if (!is_irreducible(modulus, p)) throw field_error("modulus is reducible over F_" + std::to_string(p));

        static std::mutex mu;
        static std::map<std::pair<std::int64_t, poly::Poly>, std::unique_ptr<FiniteField>> registry;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(p, modulus);
        auto it = registry.find(key);
        if (it == registry.end())
            it = registry.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(p, std::move(modulus)))).first;
        return *it->second;
    }

    static const FiniteField& prime(std::int64_t p) { return get(p, {0, 1}); }

    // F_{p^m} with the lexicographically first monic irreducible modulus.
    static const FiniteField& conway_free(std::int64_t p, int m) {
        if (m == 1) return prime(p);
        if (!is_prime(p)) throw field_error("characteristic " + std::to_string(p) + " is not prime");
        poly::Poly f(m + 1, 0);
        f[m] = 1;
        while (true) {
            if (f[0] != 0 && is_irreducible(f, p)) return get(p, f);
            int i = 0;
            while (i < m && ++f[i] == p) f[i++] = 0;
            if (i == m) throw field_error("no irreducible polynomial found");
        }
    }

    std::int64_t characteristic() const { return p_; }
    int degree() const { return m_; }
    std::uint64_t order() const { return order_; }
    const poly::Poly& modulus() const { return modulus_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t a) const;
    Scalar from_coeffs(const std::vector<std::int64_t>& c) const;
    Scalar from_code(std::uint64_t code) const;

    std::vector<std::int64_t> coeffs(std::uint64_t code) const {
        std::vector<std::int64_t> c(m_);
        for (int i = 0; i < m_; ++i) {
            c[i] = static_cast<std::int64_t>(code % p_);
            code /= p_;
        }
        return c;
    }

    std::uint64_t encode(const std::vector<std::int64_t>& c) const {
        std::uint64_t code = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            code = code * p_ + static_cast<std::uint64_t>(poly::mod(c[i], p_));
        return code;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        if (m_ == 1) return (a + b) % p_;
        std::uint64_t r = 0, w = 1;
        const std::uint64_t p = p_;
        for (int i = 0; i < m_; ++i, a /= p, b /= p, w *= p) r += ((a % p + b % p) % p) * w;
        return r;
    }

    std::uint64_t neg(std::uint64_t a) const {
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        std::uint64_t r = 0, w = 1;
        const std::uint64_t p = p_;
        for (int i = 0; i < m_; ++i, a /= p, w *= p) r += ((p - a % p) % p) * w;
        return r;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (m_ == 1) return (a * b) % p_;
        if (!table_.empty()) return table_[a * order_ + b];
        return encode(poly::mulmod(coeffs(a), coeffs(b), modulus_, p_));
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw field_error("division by zero");
        if (m_ == 1) return static_cast<std::uint64_t>(poly::inv_mod(static_cast<std::int64_t>(a), p_));
        return pow(a, order_ - 2);
    }

    std::string describe() const {
        std::string s = "F_" + std::to_string(p_);
        if (m_ > 1) s += "^" + std::to_string(m_);
        return s;
    }

private:
    FiniteField(std::int64_t p, poly::Poly modulus) : p_(p), m_(poly::deg(modulus)), modulus_(std::move(modulus)) {
        order_ = 1;
        for (int i = 0; i < m_; ++i) {
            if (order_ > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(p_))
                throw field_error("field too large");
            order_ *= static_cast<std::uint64_t>(p_);
        }
        if (m_ > 1 && order_ <= 256) {
            table_.resize(order_ * order_);
            for (std::uint64_t a = 0; a < order_; ++a)
                for (std::uint64_t b = 0; b < order_; ++b)
                    table_[a * order_ + b] = encode(poly::mulmod(coeffs(a), coeffs(b), modulus_, p_));
        }
    }

    std::int64_t p_;
    int m_;
    poly::Poly modulus_;
    std::uint64_t order_ = 0;
    std::vector<std::uint64_t> table_;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(const FiniteField& f, std::uint64_t code) : f_(&f), c_(code) {}

    const FiniteField& field() const {
        if (!f_) throw field_error("scalar has no field");
        return *f_;
    }
    bool has_field() const { return f_ != nullptr; }
    std::uint64_t code() const { return c_; }
    bool is_zero() const { return c_ == 0; }
    bool is_one() const { return c_ == 1; }
    std::vector<std::int64_t> coeffs() const { return field().coeffs(c_); }

    Scalar operator+(const Scalar& o) const { check(o); return {*f_, f_->add(c_, o.c_)}; }
    Scalar operator-(const Scalar& o) const { check(o); return {*f_, f_->add(c_, f_->neg(o.c_))}; }
    Scalar operator-() const { return {field(), f_->neg(c_)}; }
    Scalar operator*(const Scalar& o) const { check(o); return {*f_, f_->mul(c_, o.c_)}; }
    Scalar operator/(const Scalar& o) const { check(o); return {*f_, f_->mul(c_, f_->inv(o.c_))}; }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const { return {field(), f_->inv(c_)}; }

    Scalar pow(std::int64_t e) const {
        const FiniteField& f = field();
        if (e >= 0) return {f, f.pow(c_, static_cast<std::uint64_t>(e))};
        return {f, f.pow(f.inv(c_), static_cast<std::uint64_t>(-e))};
    }

    bool operator==(const Scalar& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const { return c_ < o.c_; }

    std::string to_string() const {
        const auto c = coeffs();
        if (c.size() == 1) return std::to_string(c[0]);
        std::string s = "[";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
        return s + "]";
    }

private:
    void check(const Scalar& o) const {
        if (!f_ || f_ != o.f_) throw field_error("scalars from different fields");
    }

    const FiniteField* f_ = nullptr;
    std::uint64_t c_ = 0;
};

inline Scalar FiniteField::zero() const { return {*this, 0}; }
inline Scalar FiniteField::one() const { return {*this, 1}; }
inline Scalar FiniteField::from_int(std::int64_t a) const {
    return {*this, static_cast<std::uint64_t>(poly::mod(a, p_))};
}
inline Scalar FiniteField::from_coeffs(const std::vector<std::int64_t>& c) const {
    if (static_cast<int>(c.size()) > m_) throw field_error("too many coefficients for " + describe());
    return {*this, encode(c)};
}
inline Scalar FiniteField::from_code(std::uint64_t code) const {
    if (code >= order_) throw field_error("code out of range");
    return {*this, code};
}

}  // namespace modp
