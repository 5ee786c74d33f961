#ifndef CELLRES_ARRANGEMENT_SIGN_VECTOR_HPP
#define CELLRES_ARRANGEMENT_SIGN_VECTOR_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "cellres/core/matroid.hpp"

namespace cellres::arrangement {

using core::ElementSet;

/// An element of {+,-,0}^E for a ground set of at most 64 elements, stored as
/// two disjoint bit masks.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t size) : size_(size) {}
  SignVector(std::size_t size, ElementSet plus, ElementSet minus)
      : plus_(plus), minus_(minus), size_(size) {}

  std::size_t size() const { return size_; }
  ElementSet plus() const { return plus_; }
  ElementSet minus() const { return minus_; }
  ElementSet support() const { return plus_ | minus_; }
  ElementSet zero_set() const { return core::full_set(size_) & ~support(); }
  bool is_zero() const { return support() == 0; }

  /// -1, 0 or +1.
  int operator[](std::size_t e) const {
    return core::contains(plus_, e) ? 1 : (core::contains(minus_, e) ? -1 : 0);
  }
  void set(std::size_t e, int s);

  SignVector operator-() const { return {size_, minus_, plus_}; }
  /// (X o Y)_e = X_e if X_e != 0, else Y_e.
  SignVector compose(const SignVector& other) const;
  /// Elements where the two vectors have opposite nonzero signs.
  ElementSet separation(const SignVector& other) const {
    return (plus_ & other.minus_) | (minus_ & other.plus_);
  }
  /// Face order: every nonzero entry of *this agrees with `other`.
  bool conforms_to(const SignVector& other) const {
    return (plus_ & ~other.plus_) == 0 && (minus_ & ~other.minus_) == 0;
  }

  /// Entries in ground-set order; the final element is set off by '|' when
  /// `distinguished_last` is true, e.g. "0-+0|+".
  std::string to_string(bool distinguished_last = true) const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  ElementSet plus_ = 0;
  ElementSet minus_ = 0;
  std::size_t size_ = 0;
};

/// Lexicographic order with entries ranked 0 < + < -.
bool lex_less(const SignVector& a, const SignVector& b);

struct SignVectorLess {
  bool operator()(const SignVector& a, const SignVector& b) const { return lex_less(a, b); }
};

struct SignVectorHash {
  std::size_t operator()(const SignVector& v) const {
    return std::hash<std::uint64_t>{}(v.plus() * 0x9E3779B97F4A7C15ULL ^ v.minus());
  }
};

}  // namespace cellres::arrangement

#endif  // CELLRES_ARRANGEMENT_SIGN_VECTOR_HPP
