#include "elltor/table_field.hpp"

#include <mutex>

#include "elltor/numutil.hpp"

namespace elltor::curves {

using namespace elltor::algebra;

TableField::TableField(const PrimeField& f) {
    build(f.modulus(), 1, {}, nullptr);
}

TableField::TableField(const ExtField& f) {
    std::vector<int64_t> nonlead;
    for (int i = 0; i < f.extension_degree(); ++i)
        nonlead.push_back(f.modulus_poly().coeff(i));
    build(f.characteristic(), f.extension_degree(), nonlead, &f);
}

TableField::TableField(int64_t p, int k) {
    if (k == 1) {
        build(p, 1, {}, nullptr);
    } else {
        ExtField f(p, k);
        std::vector<int64_t> nonlead;
        for (int i = 0; i < k; ++i) nonlead.push_back(f.modulus_poly().coeff(i));
        build(p, k, nonlead, &f);
    }
}

int64_t TableField::packed_add(int64_t a, int64_t b) const {
    if (k_ == 1) {
        int64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    int64_t out = 0, place = 1;
    for (int i = 0; i < k_; ++i) {
        int64_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        int64_t s = da + db;
        if (s >= p_) s -= p_;
        out += s * place;
        place *= p_;
    }
    return out;
}

void TableField::build(int64_t p, int k, const std::vector<int64_t>& modulus_nonlead,
                       const ExtField* src) {
    p_ = p;
    k_ = k;
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ = checked_mul(q_, p);
    if (q_ > kMaxOrder)
        fail(ErrorCode::FieldTooLarge, "table field order exceeds 10^6");
    if (k == 1) {
        modulus_.assign(1, 0);
    } else {
        modulus_ = modulus_nonlead;
    }
    qm1_ = static_cast<uint32_t>(q_ - 1);
    zero_mark_ = qm1_;
    log_neg1_ = p == 2 ? 0 : qm1_ / 2;

    exp_.assign(static_cast<size_t>(q_), 0);
    log_.assign(static_cast<size_t>(q_), 0);
    log_[0] = zero_mark_;

    auto factors = factorize(q_ - 1);

    if (k == 1) {
        // Find a primitive root, then fill by modular multiplication.
        int64_t g = 1;
        if (q_ > 2) {
            for (int64_t cand = 2; cand < q_; ++cand) {
                bool ok = true;
                for (const auto& [r, e] : factors) {
                    (void)e;
                    if (pow_mod(cand, static_cast<uint64_t>((q_ - 1) / r), q_) == 1) {
                        ok = false;
                        break;
                    }
                }
                if (ok) { g = cand; break; }
            }
        }
        int64_t acc = 1;
        for (uint32_t i = 0; i < qm1_; ++i) {
            exp_[i] = static_cast<uint32_t>(acc);
            log_[static_cast<size_t>(acc)] = i;
            acc = acc * g % q_;
        }
    } else {
        // Find a generator, preferring degree-1 elements so the exp table
        // fills with an O(k) multiply step.
        auto order_ok = [&](const ExtField::Element& cand) {
            if (src->is_zero(cand)) return false;
            for (const auto& [r, e] : factors) {
                (void)e;
                auto t = src->pow(cand, static_cast<uint64_t>((q_ - 1) / r));
                if (src->eq(t, src->one())) return false;
            }
            return true;
        };
        ExtField::Element g = src->zero();
        bool found = false;
        for (int64_t packed = p; packed < q_ && !found; ++packed) {
            auto cand = src->element_at(packed);
            if (order_ok(cand)) { g = cand; found = true; }
        }
        if (!found)
            fail(ErrorCode::PrecondViolation, "no generator found (unreachable)");

        auto cur = src->one();
        for (uint32_t i = 0; i < qm1_; ++i) {
            int64_t packed = src->index_of(cur);
            exp_[i] = static_cast<uint32_t>(packed);
            log_[static_cast<size_t>(packed)] = i;
            cur = src->mul(cur, g);
        }
    }

    zech_.assign(static_cast<size_t>(qm1_), 0);
    for (uint32_t d = 0; d < qm1_; ++d)
        zech_[d] = log_[static_cast<size_t>(packed_add(1, exp_[d]))];

    if (p == 2) {
        // Trace mask over digit positions: Tr(theta^i) for i < k, where
        // Tr(z) = z + z^2 + ... + z^(2^(k-1)) lands in F_2.
        tr_mask_ = 0;
        for (int i = 0; i < k; ++i) {
            Element z = from_packed(int64_t{1} << i);
            Element acc = zero();
            Element w = z;
            for (int j = 0; j < k; ++j) {
                acc = add(acc, w);
                w = mul(w, w);
            }
            if (to_packed(acc) == 1) tr_mask_ |= uint64_t{1} << i;
        }
        // Column space of L(z) = z^2 + z with column combinations, for
        // solving Artin-Schreier equations by back-substitution.
        as_pivots_.clear();
        for (int i = 0; i < k; ++i) {
            Element zi = from_packed(int64_t{1} << i);
            uint64_t col = static_cast<uint64_t>(to_packed(add(mul(zi, zi), zi)));
            uint64_t combo = uint64_t{1} << i;
            for (const auto& [pv, pc] : as_pivots_) {
                uint64_t high = uint64_t{1} << (63 - __builtin_clzll(pv));
                if (col & high) {
                    col ^= pv;
                    combo ^= pc;
                }
            }
            if (col != 0) as_pivots_.emplace_back(col, combo);
        }
    }
}

TableField::Element TableField::from_int(int64_t v) const {
    return from_packed(mod_reduce(v, p_));
}

std::optional<TableField::Element> TableField::sqrt(Element a) const {
    if (a == zero_mark_) return a;
    if (p_ == 2) {
        // squaring is bijective: sqrt(g^a) = g^(a/2) adjusting parity
        uint32_t e = (a & 1u) ? (a + qm1_) / 2 : a / 2;
        return e % qm1_;
    }
    if (a & 1u) return std::nullopt;
    return a / 2;
}

std::optional<TableField::Element> TableField::solve_artin_schreier(Element w) const {
    if (p_ != 2) fail(ErrorCode::PrecondViolation, "Artin-Schreier solve needs char 2");
    if (w == zero_mark_) return zero();
    uint64_t col = static_cast<uint64_t>(to_packed(w));
    uint64_t combo = 0;
    for (const auto& [pv, pc] : as_pivots_) {
        uint64_t high = uint64_t{1} << (63 - __builtin_clzll(pv));
        if (col & high) {
            col ^= pv;
            combo ^= pc;
        }
    }
    if (col != 0) return std::nullopt;
    return from_packed(static_cast<int64_t>(combo));
}

std::string TableField::to_string(Element a) const {
    return std::to_string(to_packed(a));
}

std::shared_ptr<const TableField> TableFieldCache::get(int64_t p, int k) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& e : entries_)
        if (e.p == p && e.k == k) return e.field;
    auto field = std::make_shared<const TableField>(p, k);
    // Budget: keep at most ~16M total table slots.
    int64_t total = field->order();
    for (const auto& e : entries_) total += e.field->order();
    while (total > 16000000 && !entries_.empty()) {
        total -= entries_.front().field->order();
        entries_.erase(entries_.begin());
    }
    entries_.push_back({p, k, field});
    return field;
}

TableFieldCache& TableFieldCache::global() {
    static TableFieldCache cache;
    return cache;
}

} // namespace elltor::curves
