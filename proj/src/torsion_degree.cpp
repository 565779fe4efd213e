#include "elltor/torsion_degree.hpp"

namespace elltor::proell {

const char* degree_method_name(DegreeMethod m) {
    switch (m) {
        case DegreeMethod::RootOrders: return "RootOrders";
        case DegreeMethod::ScalarDisambiguated: return "ScalarDisambiguated";
        case DegreeMethod::EnumerationOracle: return "EnumerationOracle";
    }
    return "?";
}

bool is_power_of(int64_t v, int64_t ell) {
    if (v < 1) return false;
    while (v % ell == 0) v /= ell;
    return v == 1;
}

namespace detail {

std::optional<int64_t> sqrt_mod_small(int64_t a, int64_t ell) {
    a = algebra::mod_reduce(a, ell);
    for (int64_t s = 0; s < ell; ++s)
        if (s * s % ell == a) return s;
    return std::nullopt;
}

int64_t frobenius_order_in_ell2(int64_t a, int64_t q, int64_t ell) {
    int64_t am = algebra::mod_reduce(a, ell);
    int64_t qm = algebra::mod_reduce(q, ell);
    // F_{ell^2} = F_ell[x]/(x^2 - a x + q); elements u x + v.
    struct E2 {
        int64_t u, v;
    };
    auto mul = [&](E2 s, E2 t) {
        // x^2 = a x - q
        int64_t uu = algebra::mod_reduce(s.u * t.u, ell);
        int64_t cross = algebra::mod_reduce(s.u * t.v + s.v * t.u, ell);
        return E2{algebra::mod_reduce(cross + uu * am, ell),
                  algebra::mod_reduce(s.v * t.v - uu * qm, ell)};
    };
    auto pw = [&](E2 b, int64_t n) {
        E2 acc{0, 1};
        while (n > 0) {
            if (n & 1) acc = mul(acc, b);
            b = mul(b, b);
            n >>= 1;
        }
        return acc;
    };
    E2 root{1, 0};
    int64_t group = ell * ell - 1;
    int64_t f = group;
    for (const auto& [r, e] : algebra::factorize(group)) {
        for (int i = 0; i < e; ++i) {
            E2 t = pw(root, f / r);
            if (t.u == 0 && t.v == 1)
                f /= r;
            else
                break;
        }
    }
    return f;
}

} // namespace detail

// Explicit instantiations for the two exact finite base fields.
template TorsionDegree torsion_field_degree<PrimeField>(
    const WeierstrassCurve<PrimeField>&, int64_t);
template TorsionDegree torsion_field_degree<ExtField>(
    const WeierstrassCurve<ExtField>&, int64_t);
template MembershipReport is_proell_member<PrimeField>(
    const WeierstrassCurve<PrimeField>&, int64_t);
template MembershipReport is_proell_member<ExtField>(
    const WeierstrassCurve<ExtField>&, int64_t);

} // namespace elltor::proell
