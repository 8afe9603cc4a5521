#include "lenscert/dinv.hpp"

#include <stdexcept>
#include <string>

namespace lenscert {

Rational d_lens_p1(Int p, Int i) {
    if (p < 1) throw std::invalid_argument("d_lens_p1: p must be positive");
    if (i < 0 || i >= p) throw std::invalid_argument("d_lens_p1: label out of range");
    Int t = 2 * i - p;
    return Rational(t * t - p, 4 * p);
}

Rational d_lens(Int p, Int q, Int i) {
    if (p < 1 || i < 0 || i >= p) throw std::invalid_argument("d_lens: label out of range");
    if (!(p == 1 && q == 0) && (q <= 0 || q >= p || gcd(p, q) != 1))
        throw std::invalid_argument("d_lens: need gcd(p, q) = 1 and 0 < q < p, got p=" + std::to_string(p) +
                                    " q=" + std::to_string(q));
    // Unrolled recursion: alternate signs down the Euclidean descent.
    Rational total;
    Int sign = 1;
    while (p != 1) {
        Int t = 2 * i + 1 - p - q;
        total += Rational(sign * (t * t - p * q), 4 * p * q);
        Int r = p % q;
        i = i % q;
        p = q;
        q = r;
        sign = -sign;
    }
    return total;
}

DVector d_vector(Int p, Int q) {
    DVector out{p, q, {}};
    out.values.reserve(static_cast<std::size_t>(p));
    for (Int i = 0; i < p; ++i) out.values.push_back(d_lens(p, q, i));
    return out;
}

const DVector& DVectorCache::get(Int p, Int q) {
    auto key = std::make_pair(p, q);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, d_vector(p, q)).first;
    return it->second;
}

SpinCMap::SpinCMap(Int h_, Int p_) : p(p_), h(0), c{0, 1} {
    if (p_ < 1) throw std::invalid_argument("SpinCMap: p must be positive");
    if (gcd(h_, p_) != 1) throw std::invalid_argument("SpinCMap: gcd(h, p) must be 1");
    h = reduce_mod(h_, p_).value;
    // (h+1+p)(h-1) is always even for h prime to p; c does not depend on the lift of h.
    c = reduce_mod(((h + 1 + p) * (h - 1)) / 2, p);
}

Residue SpinCMap::operator()(Int i) const { return reduce_mod(h * i + c.value, p); }

Residue spin_c_Q(Int h, Int p, Int i) { return SpinCMap(h, p)(i); }

}  // namespace lenscert
