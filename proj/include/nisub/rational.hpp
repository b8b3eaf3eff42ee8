#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nisub {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense coordinate vector over the rationals.
using Vector = std::vector<Rational>;

std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

Vector zero_vector(size_t dim);
Vector unit_vector(size_t dim, size_t index);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

}  // namespace nisub
