#include "lenscert/arith.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace lenscert {

namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int narrow(Wide v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw std::overflow_error("lenscert: rational arithmetic overflow");
    return static_cast<Int>(v);
}

Wide floor_div(Wide a, Wide b) {
    Wide q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Int gcd(Int a, Int b) { return static_cast<Int>(wide_gcd(a, b)); }

Residue reduce_mod(Int gamma, Int p) {
    if (p < 1) throw std::invalid_argument("reduce_mod: modulus must be positive");
    Int r = gamma % p;
    if (r < 0) r += p;
    return {r, p};
}

Residue mod_inverse(Int h, Int p) {
    if (p < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (gcd(h, p) != 1)
        throw std::invalid_argument("mod_inverse: " + std::to_string(h) + " is not invertible mod " +
                                    std::to_string(p));
    // Extended Euclid on (h mod p, p).
    Int a = reduce_mod(h, p).value, b = p;
    Int x0 = 1, x1 = 0;
    while (b != 0) {
        Int t = a / b;
        Int r = a - t * b;
        a = b;
        b = r;
        Int x = x0 - t * x1;
        x0 = x1;
        x1 = x;
    }
    return reduce_mod(x0, p);
}

bool is_square_mod(Int q, Int p) {
    Int target = reduce_mod(q, p).value;
    for (Int x = 0; x < p; ++x)
        if ((x * x) % p == target) return true;
    return false;
}

SquareTable::SquareTable(Int p) : p_(p), square_(static_cast<std::size_t>(p), false) {
    if (p < 1) throw std::invalid_argument("SquareTable: modulus must be positive");
    for (Int x = 0; x < p; ++x) square_[static_cast<std::size_t>((x * x) % p)] = true;
}

bool SquareTable::contains(Int q) const {
    return square_[static_cast<std::size_t>(reduce_mod(q, p_).value)];
}

Int floor_sum(Int n, Int m, Int a, Int b) {
    if (n < 0 || m < 1) throw std::invalid_argument("floor_sum: need n >= 0, m >= 1");
    Wide ans = 0;
    Wide N = n, M = m, A = a, B = b;
    if (A < 0 || A >= M) {
        Wide q = floor_div(A, M);
        ans += N * (N - 1) / 2 * q;
        A -= q * M;
    }
    if (B < 0 || B >= M) {
        Wide q = floor_div(B, M);
        ans += N * q;
        B -= q * M;
    }
    // Now 0 <= A, B < M.
    while (true) {
        if (A >= M) {
            ans += N * (N - 1) / 2 * (A / M);
            A %= M;
        }
        if (B >= M) {
            ans += N * (B / M);
            B %= M;
        }
        Wide y_max = A * N + B;
        if (y_max < M) break;
        N = y_max / M;
        B = y_max % M;
        Wide t = M;
        M = A;
        A = t;
    }
    return narrow(ans);
}

Rational::Rational(Int n) : num_(n), den_(1) {}

Rational::Rational(Int n, Int d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    Wide g = wide_gcd(n, d);
    Wide wn = n, wd = d;
    if (g > 1) {
        wn /= g;
        wd /= g;
    }
    if (wd < 0) {
        wn = -wn;
        wd = -wd;
    }
    num_ = narrow(wn);
    den_ = narrow(wd);
}

namespace {

Rational make(Wide n, Wide d) {
    if (d == 0) throw std::domain_error("Rational: division by zero");
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational& Rational::operator+=(const Rational& o) {
    Wide g = wide_gcd(den_, o.den_);
    Wide n = Wide(num_) * (o.den_ / g) + Wide(o.num_) * (den_ / g);
    Wide d = Wide(den_) * (o.den_ / g);
    return *this = make(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    return *this = make(Wide(num_) * o.num_, Wide(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return *this = make(Wide(num_) * o.den_, Wide(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Wide lhs = Wide(a.num_) * b.den_;
    Wide rhs = Wide(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational dedekind_sum(Int q, Int p) {
    if (p < 1) throw std::invalid_argument("dedekind_sum: modulus must be positive");
    if (gcd(q, p) != 1) throw std::invalid_argument("dedekind_sum: gcd(q, p) must be 1");
    // ((k/p)) = (2k - p) / (2p) for 0 < k < p; the whole sum shares denominator 4p^2.
    Wide total = 0;
    for (Int k = 1; k < p; ++k) {
        Int r = reduce_mod(k * q, p).value;
        if (r == 0) continue;
        total += Wide(2 * k - p) * (2 * r - p);
    }
    return make(total, Wide(4) * p * p);
}

}  // namespace lenscert
