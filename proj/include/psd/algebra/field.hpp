#pragma once

#include <concepts>
#include <cstdint>

namespace psd::algebra {

/// A field context: element values carry no modulus, the context does the arithmetic.
template <class F>
concept FieldContext = requires(const F& f, const typename F::Elem& a, std::uint64_t k) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.from_uint(k) } -> std::same_as<typename F::Elem>;
  { f.add(a, a) } -> std::same_as<typename F::Elem>;
  { f.sub(a, a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
};

}  // namespace psd::algebra
