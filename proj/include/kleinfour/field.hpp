#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace kleinfour {

// Raised when a computation would exceed a configured size bound.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when elements of distinct field contexts are mixed. Cross-context
// operations are rejected, never coerced.
class context_mismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact field with decidable equality and square testing. Contexts are
// immutable after construction, all operations are pure, and values may be
// freely shared between threads.
template <class K>
concept FieldContext =
    std::copyable<typename K::Elem> &&
    requires(const K& F, const typename K::Elem& a, const typename K::Elem& b, long n) {
      { F.zero() } -> std::same_as<typename K::Elem>;
      { F.one() } -> std::same_as<typename K::Elem>;
      { F.add(a, b) } -> std::same_as<typename K::Elem>;
      { F.sub(a, b) } -> std::same_as<typename K::Elem>;
      { F.mul(a, b) } -> std::same_as<typename K::Elem>;
      { F.neg(a) } -> std::same_as<typename K::Elem>;
      { F.inv(a) } -> std::same_as<typename K::Elem>;
      { F.eq(a, b) } -> std::convertible_to<bool>;
      { F.is_zero(a) } -> std::convertible_to<bool>;
      { F.is_square(a) } -> std::convertible_to<bool>;
      { F.sqrt(a) } -> std::same_as<std::optional<typename K::Elem>>;
      { F.from_int(n) } -> std::same_as<typename K::Elem>;
      { F.finite() } -> std::convertible_to<bool>;
      { F.characteristic() } -> std::convertible_to<std::uint64_t>;
      { F.to_string(a) } -> std::convertible_to<std::string>;
    };

// Finite refinement: a fixed deterministic enumeration starting 0, 1.
template <class K>
concept FiniteFieldContext =
    FieldContext<K> &&
    requires(const K& F, std::uint64_t i, const typename K::Elem& a) {
      { F.size() } -> std::convertible_to<std::uint64_t>;
      { F.element(i) } -> std::same_as<typename K::Elem>;
      { F.index(a) } -> std::convertible_to<std::uint64_t>;
    };

// Ordered refinement: total order compatible with the field operations.
template <class K>
concept OrderedFieldContext =
    FieldContext<K> &&
    requires(const K& F, const typename K::Elem& a, const typename K::Elem& b) {
      { F.cmp(a, b) } -> std::convertible_to<int>;
    };

}  // namespace kleinfour
