#ifndef CELLRES_CORE_RATIONAL_HPP
#define CELLRES_CORE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cellres::core {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// as long as every constructor path canonicalizes; parse_rational does.
using BigInt = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or an integer.  Returns nullopt on malformed text or q == 0.
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

int sign(const Rational& r);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Scales a nonzero vector to a primitive integer vector (coprime entries)
/// with the same direction.
std::vector<BigInt> primitive_integer_vector(const RationalVector& v);

/// Reduction of r modulo the prime p; nullopt when p divides the denominator.
std::optional<std::uint64_t> reduce_mod(const Rational& r, std::uint64_t p);

}  // namespace cellres::core

#endif  // CELLRES_CORE_RATIONAL_HPP
