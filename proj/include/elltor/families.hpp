#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "elltor/quad_ext.hpp"
#include "elltor/weierstrass.hpp"

namespace elltor::families {

using RF = algebra::RationalFunction<algebra::PrimeField>;
using RFField = algebra::RationalFunctionField<algebra::PrimeField>;
using QuadExtField = algebra::QuadExtField;

using SevenCurve = curves::WeierstrassCurve<RFField>;
using ElevenCurve = curves::WeierstrassCurve<QuadExtField>;

inline constexpr int64_t kElevenExponentGuard = 512; // cap on p^n

// y^2 + (1 - f(f-1)) xy - f^2(f-1) y = x^3 - f^2(f-1) x^2 over F_p(t) for a
// non-constant rational function f; (0, 0) has order 7.
SevenCurve build_seven(int64_t p, const RF& f);

struct SevenReport {
    bool delta_matches = false;
    bool c4_matches = false;
    bool j_nonconstant = false;
    std::optional<int64_t> order; // of (0, 0)
    std::string delta;
    std::string c4;
};

// Checks the computed invariants against the closed forms
// delta = f^7 (f-1)^7 (f^3 - 8f^2 + 5f + 1) and
// c4 = (f^2 - f + 1)(f^6 - 11f^5 + 30f^4 - 15f^3 - 10f^2 + 5f + 1),
// as canonical rational functions, and j for non-constancy.
SevenReport verify_seven(int64_t p, const RF& f);

// y^2 + (s - rs + 1)^(p^n) xy + (rs - r^2 s)^(p^n) y
//   = x^3 + (rs - r^2 s)^(p^n) x^2
// over F_p(t, u) with u^2 + (t^2+1)u + t = 0, r = ut + 1, s = -t + 1;
// (0, 0) has order 11 for every n >= 0.
ElevenCurve build_eleven(int64_t p, int64_t n);

struct ElevenReport {
    std::optional<int64_t> order; // of (0, 0)
    bool order_is_11 = false;
    bool j_nonconstant = false;
};

ElevenReport verify_eleven(int64_t p, int64_t n);

} // namespace elltor::families
