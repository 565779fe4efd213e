#pragma once

#include <concepts>
#include <cstdint>
#include <string>

namespace elltor::algebra {

// The common surface every coefficient field exposes.  Elements are plain
// values; the field object carries the modulus/relation and performs all
// arithmetic, so generic code (polynomials, curves, torsion rings) is
// written once against this concept.
template <class F>
concept FieldLike = requires(const F f, const typename F::Element& a,
                             const typename F::Element& b) {
    typename F::Element;
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.from_int(std::int64_t{}) } -> std::convertible_to<typename F::Element>;
    { f.add(a, b) } -> std::convertible_to<typename F::Element>;
    { f.sub(a, b) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, b) } -> std::convertible_to<typename F::Element>;
    { f.neg(a) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.div(a, b) } -> std::convertible_to<typename F::Element>;
    { f.pow(a, std::uint64_t{}) } -> std::convertible_to<typename F::Element>;
    { f.eq(a, b) } -> std::convertible_to<bool>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.characteristic() } -> std::convertible_to<std::int64_t>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.same_field(f) } -> std::convertible_to<bool>;
};

// Fields whose elements can be enumerated (used by brute-force reference
// kernels and point enumeration).
template <class F>
concept FiniteFieldLike = FieldLike<F> && requires(const F f, std::int64_t i) {
    { f.order() } -> std::convertible_to<std::int64_t>;
    { f.element_at(i) } -> std::convertible_to<typename F::Element>;
};

} // namespace elltor::algebra
