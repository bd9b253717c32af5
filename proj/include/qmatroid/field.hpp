#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qmatroid/errors.hpp"

namespace qmatroid {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A concrete finite field F_{p^e}, presented as F_p[x]/(modulus).
///
/// Elements are the integers 0..q-1; the value encodes the coefficient
/// vector of the residue polynomial in base p (low digit = constant term).
/// Multiplication and inversion run on log/antilog tables built at
/// construction; addition is digit arithmetic (plain XOR when p = 2).
/// Immutable after construction.
class Field : public std::enable_shared_from_this<Field> {
   public:
    using value_type = std::uint16_t;

    static constexpr std::uint32_t max_order = 1u << 16;

    /// Builds and validates a field. For e > 1 the modulus must be the
    /// coefficient list (low to high, monic) of a degree-e polynomial that
    /// is irreducible over F_p. An empty modulus selects the built-in
    /// default, which exists for (p,e) in {(2,2),(2,3),(3,3)} only.
    static FieldPtr make(int p, int e, std::vector<int> modulus = {}) {
        return FieldPtr(new Field(p, e, std::move(modulus)));
    }

    int p() const noexcept { return p_; }
    int degree() const noexcept { return e_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<value_type>& modulus() const noexcept { return modulus_; }

    bool same_as(const Field& other) const noexcept {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

    // --- arithmetic on raw values ------------------------------------

    value_type add(value_type a, value_type b) const {
        if (p_ == 2) return a ^ b;
        value_type out = 0;
        std::uint32_t mult = 1;
        for (int i = 0; i < e_; ++i) {
            int da = (a / mult) % p_;
            int db = (b / mult) % p_;
            out = static_cast<value_type>(out + mult * ((da + db) % p_));
            mult *= p_;
        }
        return out;
    }

    value_type neg(value_type a) const {
        if (p_ == 2) return a;
        value_type out = 0;
        std::uint32_t mult = 1;
        for (int i = 0; i < e_; ++i) {
            int d = (a / mult) % p_;
            out = static_cast<value_type>(out + mult * ((p_ - d) % p_));
            mult *= p_;
        }
        return out;
    }

    value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }

    value_type mul(value_type a, value_type b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }

    value_type inv(value_type a) const {
        require(a != 0, errc::division_by_zero, "inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

    value_type pow(value_type a, long long k) const {
        if (a == 0) {
            require(k >= 0, errc::division_by_zero, "0 to a negative power");
            return k == 0 ? 1 : 0;
        }
        long long m = q_ - 1;
        long long ex = ((static_cast<long long>(log_[a]) * (k % m)) % m + m) % m;
        return exp_[ex];
    }

    /// Multiplicative generator used for the log/antilog tables.
    value_type generator() const noexcept { return generator_; }

    // --- coordinate view over F_p ------------------------------------

    std::vector<int> coords(value_type a) const {
        std::vector<int> c(e_);
        for (int i = 0; i < e_; ++i) {
            c[i] = a % p_;
            a = static_cast<value_type>(a / p_);
        }
        return c;
    }

    value_type from_coords(const std::vector<int>& c) const {
        require(static_cast<int>(c.size()) <= e_, errc::degree_mismatch,
                "coordinate vector longer than extension degree");
        std::uint32_t v = 0, mult = 1;
        for (int x : c) {
            int d = ((x % p_) + p_) % p_;
            v += mult * static_cast<std::uint32_t>(d);
            mult *= p_;
        }
        return static_cast<value_type>(v);
    }

    /// Value of the modulus root alpha (the element x); 0 in a prime field
    /// has no meaning here, so this requires e > 1.
    value_type alpha() const {
        require(e_ > 1, errc::degree_mismatch, "prime field has no modulus root");
        return static_cast<value_type>(p_);
    }

    std::string describe() const {
        std::string s = "GF(" + std::to_string(q_) + ")";
        if (e_ > 1) {
            s += " = F_" + std::to_string(p_) + "[x]/(";
            bool first = true;
            for (int i = e_; i >= 0; --i) {
                if (modulus_[i] == 0) continue;
                if (!first) s += "+";
                first = false;
                if (i == 0 || modulus_[i] != 1) s += std::to_string(modulus_[i]);
                if (i >= 1) s += "x";
                if (i >= 2) s += "^" + std::to_string(i);
            }
            s += ")";
        }
        return s;
    }

    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

   private:
    Field(int p, int e, std::vector<int> modulus_in) : p_(p), e_(e) {
        require(is_prime(p), errc::non_prime, std::to_string(p) + " is not prime");
        require(e >= 1, errc::invalid_range, "extension degree must be >= 1");
        std::uint64_t q = 1;
        for (int i = 0; i < e; ++i) {
            q *= static_cast<std::uint64_t>(p);
            require(q <= max_order, errc::invalid_range, "field order exceeds 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);

        if (e_ == 1) {
            require(modulus_in.empty() ||
                        modulus_in == std::vector<int>{0, 1},  // x itself, tolerated
                    errc::degree_mismatch, "prime field takes no modulus");
            modulus_.clear();
        } else {
            if (modulus_in.empty()) modulus_in = default_modulus(p, e);
            require(static_cast<int>(modulus_in.size()) == e + 1, errc::degree_mismatch,
                    "modulus must have degree exactly " + std::to_string(e));
            modulus_.resize(e + 1);
            for (int i = 0; i <= e; ++i) {
                int c = ((modulus_in[i] % p) + p) % p;
                modulus_[i] = static_cast<value_type>(c);
            }
            require(modulus_[e] == 1, errc::degree_mismatch, "modulus must be monic");
            require(irreducible(modulus_, p), errc::reducible_modulus,
                    "modulus is reducible over F_" + std::to_string(p));
        }
        build_tables();
    }

    static std::vector<int> default_modulus(int p, int e) {
        if (p == 2 && e == 2) return {1, 1, 1};        // x^2 + x + 1
        if (p == 2 && e == 3) return {1, 1, 0, 1};     // x^3 + x + 1
        if (p == 3 && e == 3) return {1, 2, 0, 1};     // x^3 + 2x + 1
        fail(errc::degree_mismatch, "no default modulus for (p,e) = (" + std::to_string(p) +
                                        "," + std::to_string(e) + "); supply one");
    }

    // Exhaustive trial division: f (monic, degree e) is irreducible over F_p
    // iff no monic polynomial of degree 1..e/2 divides it.
    static bool irreducible(const std::vector<value_type>& f, int p) {
        int e = static_cast<int>(f.size()) - 1;
        std::vector<int> g;
        for (int d = 1; 2 * d <= e; ++d) {
            g.assign(d + 1, 0);
            g[d] = 1;
            // odometer over the d low coefficients
            while (true) {
                if (poly_divides(g, f, p)) return false;
                int i = 0;
                while (i < d && ++g[i] == p) g[i++] = 0;
                if (i == d) break;
            }
        }
        return true;
    }

    static bool poly_divides(const std::vector<int>& g, const std::vector<value_type>& f, int p) {
        std::vector<int> r(f.begin(), f.end());
        int dg = static_cast<int>(g.size()) - 1;
        for (int i = static_cast<int>(r.size()) - 1; i >= dg; --i) {
            int c = r[i] % p;
            if (c == 0) continue;
            for (int j = 0; j <= dg; ++j) r[i - dg + j] = ((r[i - dg + j] - c * g[j]) % p + p) % p;
        }
        return std::all_of(r.begin(), r.begin() + dg, [](int x) { return x == 0; });
    }

    // Schoolbook product of residue polynomials, reduced by the modulus.
    value_type mul_poly(value_type a, value_type b) const {
        if (e_ == 1) return static_cast<value_type>((static_cast<std::uint32_t>(a) * b) % p_);
        std::vector<int> prod(2 * e_ - 1, 0);
        std::vector<int> ca = coords(a), cb = coords(b);
        for (int i = 0; i < e_; ++i)
            for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        for (int i = 2 * e_ - 2; i >= e_; --i) {
            int c = prod[i];
            if (c == 0) continue;
            for (int j = 0; j < e_; ++j)
                prod[i - e_ + j] = ((prod[i - e_ + j] - c * modulus_[j]) % p_ + p_) % p_;
            prod[i] = 0;
        }
        std::uint32_t v = 0, mult = 1;
        for (int i = 0; i < e_; ++i) {
            v += mult * static_cast<std::uint32_t>(prod[i]);
            mult *= p_;
        }
        return static_cast<value_type>(v);
    }

    void build_tables() {
        log_.assign(q_, 0);
        exp_.assign(q_, 1);
        for (std::uint32_t g = 2; g < q_; ++g) {
            std::uint32_t ordr = 1;
            value_type x = static_cast<value_type>(g);
            while (x != 1) {
                x = mul_poly(x, static_cast<value_type>(g));
                ++ordr;
            }
            if (ordr == q_ - 1) {
                generator_ = static_cast<value_type>(g);
                break;
            }
        }
        if (q_ == 2) generator_ = 1;
        value_type x = 1;
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
            exp_[i] = x;
            log_[x] = static_cast<value_type>(i);
            x = mul_poly(x, generator_);
        }
    }

    int p_, e_;
    std::uint32_t q_;
    std::vector<value_type> modulus_;  // empty for prime fields
    std::vector<value_type> exp_, log_;
    value_type generator_ = 1;
};

/// An element bound to its field; the checked, operator-overloaded face of
/// the raw value arithmetic above.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(FieldPtr f, Field::value_type v) : f_(std::move(f)), v_(v) {
        require(v_ < f_->order(), errc::invalid_range, "element value out of range");
    }

    Field::value_type value() const noexcept { return v_; }
    const FieldPtr& field() const noexcept { return f_; }
    std::vector<int> coords() const { return f_->coords(v_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_->add(a.v_, b.v_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_->sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_->mul(a.v_, b.v_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_->div(a.v_, b.v_)};
    }
    FieldElement operator-() const { return {f_, f_->neg(v_)}; }
    FieldElement inv() const { return {f_, f_->inv(v_)}; }
    FieldElement pow(long long k) const { return {f_, f_->pow(v_, k)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.f_->same_as(*b.f_) && a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

   private:
    static void check(const FieldElement& a, const FieldElement& b) {
        require(a.f_ && b.f_ && a.f_->same_as(*b.f_), errc::field_mismatch,
                "operands belong to different fields");
    }
    FieldPtr f_;
    Field::value_type v_ = 0;
};

}  // namespace qmatroid
