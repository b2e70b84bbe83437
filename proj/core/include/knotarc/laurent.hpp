#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>

namespace knotarc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in the variables a and z with integer coefficients.
///
/// Terms are keyed by (a-exponent, z-exponent) and kept sorted; zero
/// coefficients are never stored, so equality is equality of term tables.
class Laurent2 {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, BigInt>;

  Laurent2() = default;
  explicit Laurent2(Terms terms);

  static Laurent2 monomial(const BigInt& c, int i, int j);
  static Laurent2 one() { return monomial(1, 0, 0); }
  static Laurent2 a() { return monomial(1, 1, 0); }
  static Laurent2 z() { return monomial(1, 0, 1); }
  /// The split-union factor z^-1 a - 1 + z^-1 a^-1.
  static Laurent2 delta();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coeff(int i, int j) const;

  /// Extreme exponents; all four throw std::domain_error on the zero polynomial.
  int max_a() const;
  int min_a() const;
  int max_z() const;
  int min_z() const;

  Laurent2 operator-() const;
  Laurent2& operator+=(const Laurent2& other);
  Laurent2& operator-=(const Laurent2& other);

  friend bool operator==(const Laurent2&, const Laurent2&) = default;

 private:
  Terms terms_;
};

/// Exact Laurent polynomial in one variable, keyed by exponent.
class Laurent1 {
 public:
  using Terms = std::map<int, BigInt>;

  Laurent1() = default;
  explicit Laurent1(Terms terms);

  static Laurent1 monomial(const BigInt& c, int e);
  static Laurent1 one() { return monomial(1, 0); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int e) const;
  int max_deg() const;
  int min_deg() const;

  /// True for +x^e or -x^e.
  bool is_unit_monomial() const;

  Laurent1 operator-() const;
  Laurent1& operator+=(const Laurent1& other);

  /// Replaces x by x^-1.
  Laurent1 invert_variable() const;

  friend bool operator==(const Laurent1&, const Laurent1&) = default;

 private:
  Terms terms_;
};

struct PolySummary {
  int max_a = 0;
  BigInt top_coeff;
  int top_zpow = 0;
  int min_a = 0;
  BigInt bot_coeff;
  int bot_zpow = 0;

  friend bool operator==(const PolySummary&, const PolySummary&) = default;
};

Laurent2 add(const Laurent2& x, const Laurent2& y);
Laurent2 neg(const Laurent2& x);
Laurent2 mul(const Laurent2& x, const Laurent2& y);

/// Multiplies x by c * a^i * z^j. Throws std::invalid_argument when c is 0.
Laurent2 mono_mul(const Laurent2& x, const BigInt& c, int i, int j);

/// max-deg_a minus min-deg_a. Throws std::domain_error on the zero polynomial.
int spread_a(const Laurent2& x);

/// Highest z-term at the top and at the bottom a-degree.
/// Throws std::domain_error on the zero polynomial.
PolySummary summarize(const Laurent2& x);

/// The image of x under a -> a_image, z -> z_image.
///
/// A negative power of a variable can only be mapped when its image is a unit
/// monomial; otherwise std::domain_error is thrown ("negative z-power with
/// non-unit image", or the analogous message for a).
Laurent1 substitute(const Laurent2& x, const Laurent1& a_image, const Laurent1& z_image);

/// Replaces a by a^-1.
Laurent2 invert_a(const Laurent2& x);

Laurent1 add(const Laurent1& x, const Laurent1& y);
Laurent1 mul(const Laurent1& x, const Laurent1& y);
/// Throws std::domain_error for negative n unless x is a unit monomial.
Laurent1 pow(const Laurent1& x, int n);

/// Terms in decreasing (a, z) order as `c*a^i*z^j`, e.g. `1*a^1*z^-1 - 1*a^0*z^0`.
/// The zero polynomial renders as `0`.
std::string to_text(const Laurent2& x);
/// Terms in decreasing exponent order as `c*q^e`, using the given variable name.
std::string to_text(const Laurent1& x, const std::string& var = "q");

/// JSON list of [i, j, c] triples in increasing (i, j) order.
/// Coefficients outside the 64-bit range are emitted as decimal strings.
std::string to_json(const Laurent2& x);
/// JSON list of [e, c] pairs in increasing exponent order.
std::string to_json(const Laurent1& x);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
Laurent2 laurent2_from_json(const std::string& text);

std::string to_text(const PolySummary& s);

}  // namespace knotarc
