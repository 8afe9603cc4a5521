#pragma once

// Exact modular and rational arithmetic shared by every other module.
//
// All slopes handled by the library satisfy p <= 8192, so 64-bit storage is
// enough for every residue and every reduced rational that appears. Rational
// operations are carried out in 128-bit intermediates and checked on the way
// back down; an overflow is reported as std::overflow_error, never rounded.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lenscert {

using Int = std::int64_t;

/// A canonical residue class: 0 <= value < modulus.
struct Residue {
    Int value = 0;
    Int modulus = 1;

    constexpr operator Int() const { return value; }
    friend constexpr bool operator==(const Residue&, const Residue&) = default;
};

/// [gamma]_p, the representative of gamma in [0, p). Throws std::invalid_argument if p < 1.
Residue reduce_mod(Int gamma, Int p);

/// h' with h * h' = 1 mod p. Throws std::invalid_argument unless gcd(h, p) = 1.
Residue mod_inverse(Int h, Int p);

/// True iff some x in [0, p) has x^2 = q mod p. Direct scan.
bool is_square_mod(Int q, Int p);

/// Quadratic-residue lookup for one modulus; is_square_mod for repeated queries.
class SquareTable {
public:
    explicit SquareTable(Int p);
    bool contains(Int q) const;
    Int modulus() const { return p_; }

private:
    Int p_;
    std::vector<bool> square_;
};

Int gcd(Int a, Int b);

/// sum_{j=0}^{n-1} floor((a*j + b) / m) for n >= 0, m >= 1, any sign of a, b.
Int floor_sum(Int n, Int m, Int a, Int b);

/// Exact rational in lowest terms with positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    Rational(Int n);  // NOLINT(google-explicit-constructor)
    Rational(Int n, Int d);

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

private:
    Int num_ = 0;
    Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Dedekind sum s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)), with ((0)) = 0.
Rational dedekind_sum(Int q, Int p);

}  // namespace lenscert
