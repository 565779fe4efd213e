#include "elltor/ext_field.hpp"

namespace elltor::algebra {

namespace {

constexpr int64_t kDeskScaleOrder = int64_t{1} << 40;

int64_t pow_checked_small(int64_t p, int k) {
    int64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q = checked_mul(q, p);
        if (q > kDeskScaleOrder)
            fail(ErrorCode::OutOfDeskScale, "extension field order exceeds 2^40");
    }
    return q;
}

} // namespace

bool ExtField::is_irreducible(const Polynomial<PrimeField>& m) {
    const PrimeField& fp = m.field();
    int64_t p = fp.modulus();
    int k = m.degree();
    if (k < 1) return false;
    if (k == 1) return true;
    // Rabin: x^(p^k) = x (mod m) and gcd(x^(p^(k/r)) - x, m) = 1 for every
    // prime r | k.
    Polynomial<PrimeField> x = Polynomial<PrimeField>::variable(fp);
    Polynomial<PrimeField> xp = x;
    // Frobenius iterates: xp_i = x^(p^i) mod m, computed by repeated p-powering.
    std::vector<Polynomial<PrimeField>> frob;
    frob.push_back(x.mod(m));
    for (int i = 1; i <= k; ++i)
        frob.push_back(frob.back().powmod(static_cast<uint64_t>(p), m));
    if (!frob[static_cast<size_t>(k)].eq(x.mod(m))) return false;
    for (const auto& [r, e] : factorize(k)) {
        (void)e;
        Polynomial<PrimeField> d =
            poly_gcd(frob[static_cast<size_t>(k / r)].sub(x).mod(m), m);
        if (d.degree() != 0) return false;
    }
    return true;
}

Polynomial<PrimeField> ExtField::canonical_modulus(const PrimeField& base, int k) {
    int64_t p = base.modulus();
    pow_checked_small(p, k);
    // Enumerate non-leading coefficient vectors in ascending lex order with
    // the constant coefficient most significant.
    int64_t total = 1;
    for (int i = 0; i < k; ++i) total = checked_mul(total, p);
    for (int64_t v = 0; v < total; ++v) {
        std::vector<int64_t> c(static_cast<size_t>(k) + 1, 0);
        int64_t rest = v;
        for (int i = 0; i < k; ++i) {
            // digit for coefficient index i, constant coefficient first
            int64_t place = 1;
            for (int j = i + 1; j < k; ++j) place *= p;
            c[static_cast<size_t>(i)] = rest / place;
            rest %= place;
        }
        c[static_cast<size_t>(k)] = 1; // monic
        std::vector<int64_t> reduced;
        reduced.reserve(c.size());
        for (int64_t x : c) reduced.push_back(base.from_int(x));
        Polynomial<PrimeField> m(base, std::move(reduced));
        if (is_irreducible(m)) return m;
    }
    fail(ErrorCode::NotIrreducible, "no irreducible modulus found (unreachable)");
}

ExtField::ExtField(int64_t p, int k)
    : ExtField(PrimeField(p), canonical_modulus(PrimeField(p), k)) {}

ExtField::ExtField(const PrimeField& base, Polynomial<PrimeField> modulus) {
    if (modulus.degree() < 1)
        fail(ErrorCode::PrecondViolation, "extension modulus must have degree >= 1");
    if (!base.eq(modulus.lead(), base.one()))
        fail(ErrorCode::PrecondViolation, "extension modulus must be monic");
    if (!is_irreducible(modulus))
        fail(ErrorCode::NotIrreducible, "extension modulus is reducible");
    int k = modulus.degree();
    int64_t q = pow_checked_small(base.modulus(), k);
    impl_ = std::make_shared<Impl>(Impl{base, std::move(modulus), k, q});
}

ExtField::Element ExtField::from_int(int64_t v) const {
    Element a = zero();
    a[0] = impl_->base.from_int(v);
    return a;
}

ExtField::Element ExtField::from_coeffs(const std::vector<int64_t>& c) const {
    if (static_cast<int>(c.size()) > impl_->k)
        fail(ErrorCode::PrecondViolation, "coefficient vector longer than degree");
    Element a = zero();
    for (size_t i = 0; i < c.size(); ++i) a[i] = impl_->base.from_int(c[i]);
    return a;
}

ExtField::Element ExtField::element_at(int64_t i) const {
    Element a = zero();
    int64_t p = impl_->base.modulus();
    for (int d = 0; d < impl_->k && i > 0; ++d) {
        a[static_cast<size_t>(d)] = i % p;
        i /= p;
    }
    return a;
}

int64_t ExtField::index_of(const Element& a) const {
    int64_t p = impl_->base.modulus();
    int64_t idx = 0;
    for (size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
    return idx;
}

ExtField::Element ExtField::add(const Element& a, const Element& b) const {
    const PrimeField& fp = impl_->base;
    Element out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = fp.add(a[i], b[i]);
    return out;
}

ExtField::Element ExtField::sub(const Element& a, const Element& b) const {
    const PrimeField& fp = impl_->base;
    Element out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = fp.sub(a[i], b[i]);
    return out;
}

ExtField::Element ExtField::neg(const Element& a) const {
    const PrimeField& fp = impl_->base;
    Element out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = fp.neg(a[i]);
    return out;
}

bool ExtField::is_zero(const Element& a) const {
    for (int64_t x : a)
        if (x != 0) return false;
    return true;
}

Polynomial<PrimeField> ExtField::to_poly(const Element& a) const {
    return Polynomial<PrimeField>(impl_->base, a);
}

ExtField::Element ExtField::from_poly(const Polynomial<PrimeField>& f) const {
    Element a = zero();
    for (int i = 0; i <= f.degree(); ++i) a[static_cast<size_t>(i)] = f.coeff(i);
    return a;
}

ExtField::Element ExtField::mul(const Element& a, const Element& b) const {
    const PrimeField& fp = impl_->base;
    int k = impl_->k;
    // Schoolbook product then reduction by the monic modulus.
    std::vector<int64_t> prod(static_cast<size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < k; ++j) {
            auto& slot = prod[static_cast<size_t>(i + j)];
            slot = fp.add(slot, fp.mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]));
        }
    }
    const auto& m = impl_->modulus.coeffs();
    for (int d = 2 * k - 2; d >= k; --d) {
        int64_t c = prod[static_cast<size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<size_t>(d)] = 0;
        for (int j = 0; j < k; ++j) {
            auto& slot = prod[static_cast<size_t>(d - k + j)];
            slot = fp.sub(slot, fp.mul(c, m[static_cast<size_t>(j)]));
        }
    }
    prod.resize(static_cast<size_t>(k));
    return prod;
}

ExtField::Element ExtField::inv(const Element& a) const {
    if (is_zero(a)) fail(ErrorCode::DivisionByZero, "inverse of 0 in extension field");
    auto [g, s] = poly_half_xgcd(to_poly(a), impl_->modulus);
    if (g.degree() != 0)
        fail(ErrorCode::DivisionByZero, "non-invertible extension element");
    return from_poly(s.mod(impl_->modulus));
}

ExtField::Element ExtField::pow(const Element& a, uint64_t e) const {
    Element acc = one();
    Element base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::string ExtField::to_string(const Element& a) const {
    return to_poly(a).to_string("w");
}

bool ExtField::same_field(const ExtField& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->base == other.impl_->base &&
           impl_->modulus.eq(other.impl_->modulus);
}

} // namespace elltor::algebra
