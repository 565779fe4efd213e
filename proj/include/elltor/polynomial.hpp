#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "elltor/errors.hpp"
#include "elltor/field_concepts.hpp"

namespace elltor::algebra {

// Dense univariate polynomial over an arbitrary coefficient field.
// Invariant: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree kZeroPolyDegree.
inline constexpr int kZeroPolyDegree = -1;

template <FieldLike F>
class Polynomial {
  public:
    using Coeff = typename F::Element;

    explicit Polynomial(F field) : field_(std::move(field)) {}

    Polynomial(F field, std::vector<Coeff> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(const F& f, Coeff c) {
        return Polynomial(f, {std::move(c)});
    }
    static Polynomial from_int(const F& f, int64_t v) {
        return constant(f, f.from_int(v));
    }
    // The variable itself (named t or x depending on context).
    static Polynomial variable(const F& f) {
        return Polynomial(f, {f.zero(), f.one()});
    }
    // c_k coefficients given low-to-high as plain integers.
    static Polynomial from_ints(const F& f, std::initializer_list<int64_t> vs) {
        std::vector<Coeff> c;
        for (int64_t v : vs) c.push_back(f.from_int(v));
        return Polynomial(f, std::move(c));
    }

    const F& field() const { return field_; }
    const std::vector<Coeff>& coeffs() const { return c_; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Coeff coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return field_.zero();
        return c_[static_cast<size_t>(i)];
    }
    Coeff lead() const {
        if (c_.empty()) return field_.zero();
        return c_.back();
    }

    bool eq(const Polynomial& other) const {
        check_field(other);
        if (c_.size() != other.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!field_.eq(c_[i], other.c_[i])) return false;
        return true;
    }

    Polynomial add(const Polynomial& other) const {
        check_field(other);
        std::vector<Coeff> out(std::max(c_.size(), other.c_.size()), field_.zero());
        for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
        for (size_t i = 0; i < other.c_.size(); ++i)
            out[i] = field_.add(out[i], other.c_[i]);
        return Polynomial(field_, std::move(out));
    }

    Polynomial sub(const Polynomial& other) const {
        check_field(other);
        std::vector<Coeff> out(std::max(c_.size(), other.c_.size()), field_.zero());
        for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
        for (size_t i = 0; i < other.c_.size(); ++i)
            out[i] = field_.sub(out[i], other.c_[i]);
        return Polynomial(field_, std::move(out));
    }

    Polynomial neg() const {
        std::vector<Coeff> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(field_.neg(x));
        return Polynomial(field_, std::move(out));
    }

    Polynomial mul(const Polynomial& other) const {
        check_field(other);
        if (is_zero() || other.is_zero()) return Polynomial(field_);
        std::vector<Coeff> out(c_.size() + other.c_.size() - 1, field_.zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (field_.is_zero(c_[i])) continue;
            for (size_t j = 0; j < other.c_.size(); ++j)
                out[i + j] = field_.add(out[i + j], field_.mul(c_[i], other.c_[j]));
        }
        return Polynomial(field_, std::move(out));
    }

    Polynomial scale(const Coeff& s) const {
        std::vector<Coeff> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(field_.mul(x, s));
        return Polynomial(field_, std::move(out));
    }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& divisor) const {
        check_field(divisor);
        if (divisor.is_zero())
            fail(ErrorCode::DivisionByZero, "polynomial division by zero");
        Polynomial rem = *this;
        std::vector<Coeff> q(
            degree() >= divisor.degree()
                ? static_cast<size_t>(degree() - divisor.degree() + 1)
                : 0,
            field_.zero());
        Coeff lead_inv = field_.inv(divisor.lead());
        while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
            int shift = rem.degree() - divisor.degree();
            Coeff factor = field_.mul(rem.lead(), lead_inv);
            // rem -= factor * x^shift * divisor
            std::vector<Coeff> rc = rem.c_;
            for (size_t j = 0; j < divisor.c_.size(); ++j) {
                size_t k = static_cast<size_t>(shift) + j;
                rc[k] = field_.sub(rc[k], field_.mul(factor, divisor.c_[j]));
            }
            rem = Polynomial(field_, std::move(rc));
            q[static_cast<size_t>(shift)] = factor;
        }
        return {Polynomial(field_, std::move(q)), std::move(rem)};
    }

    Polynomial mod(const Polynomial& divisor) const { return divrem(divisor).second; }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scale(field_.inv(lead()));
    }

    Coeff eval(const Coeff& x) const {
        Coeff acc = field_.zero();
        for (size_t i = c_.size(); i-- > 0;)
            acc = field_.add(field_.mul(acc, x), c_[i]);
        return acc;
    }

    Polynomial pow(uint64_t e) const {
        Polynomial acc = from_int(field_, 1);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) acc = acc.mul(base);
            base = base.mul(base);
            e >>= 1;
        }
        return acc;
    }

    Polynomial powmod(uint64_t e, const Polynomial& modulus) const {
        Polynomial acc = from_int(field_, 1);
        Polynomial base = this->mod(modulus);
        while (e > 0) {
            if (e & 1) acc = acc.mul(base).mod(modulus);
            base = base.mul(base).mod(modulus);
            e >>= 1;
        }
        return acc;
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (field_.is_zero(c_[i])) continue;
            if (!s.empty()) s += "+";
            std::string cs = field_.to_string(c_[i]);
            if (i == 0) {
                s += cs;
            } else {
                if (cs != "1") s += cs + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }
    void check_field(const Polynomial& other) const {
        if (!field_.same_field(other.field_))
            fail(ErrorCode::FieldMismatch, "polynomials over different fields");
    }

    F field_;
    std::vector<Coeff> c_;
};

// Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
template <FieldLike F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
    if (!a.field().same_field(b.field()))
        fail(ErrorCode::FieldMismatch, "gcd of polynomials over different fields");
    while (!b.is_zero()) {
        Polynomial<F> r = a.mod(b);
        a = b;
        b = r;
    }
    return a.monic();
}

// Extended Euclid: returns (g, s) with s*a = g (mod m), g = gcd(a, m) monic.
template <FieldLike F>
std::pair<Polynomial<F>, Polynomial<F>> poly_half_xgcd(const Polynomial<F>& a,
                                                       const Polynomial<F>& m) {
    const F& f = a.field();
    Polynomial<F> r0 = m, r1 = a;
    Polynomial<F> s0(f), s1 = Polynomial<F>::from_int(f, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        Polynomial<F> s2 = s0.sub(q.mul(s1));
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0.is_zero()) return {r0, s0};
    auto lead_inv = f.inv(r0.lead());
    return {r0.scale(lead_inv), s0.scale(lead_inv)};
}

} // namespace elltor::algebra
