#include "lenscert/alex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lenscert {

SymmetricPoly SymmetricPoly::from_half(std::vector<Int> half) {
    while (half.size() > 1 && half.back() == 0) half.pop_back();
    if (half.empty()) half.push_back(0);
    return SymmetricPoly(std::move(half));
}

SymmetricPoly SymmetricPoly::from_terms(const std::map<Int, Int>& terms) {
    Int top = 0;
    for (const auto& [e, c] : terms)
        if (c != 0) top = std::max(top, e < 0 ? -e : e);
    std::vector<Int> half(static_cast<std::size_t>(top + 1), 0);
    auto get = [&](Int e) {
        auto it = terms.find(e);
        return it == terms.end() ? Int{0} : it->second;
    };
    for (Int i = 0; i <= top; ++i) {
        if (get(i) != get(-i)) throw std::invalid_argument("SymmetricPoly: terms are not symmetric");
        half[static_cast<std::size_t>(i)] = get(i);
    }
    return from_half(std::move(half));
}

Int SymmetricPoly::coeff(Int i) const {
    if (i < 0) i = -i;
    return i <= degree() ? half_[static_cast<std::size_t>(i)] : 0;
}

Int SymmetricPoly::eval_at_one() const {
    Int s = half_[0];
    for (std::size_t i = 1; i < half_.size(); ++i) s += 2 * half_[i];
    return s;
}

std::string SymmetricPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (Int e = -degree(); e <= degree(); ++e) {
        Int c = coeff(e);
        if (c == 0) continue;
        Int mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << "t";
        if (e != 1) os << "^" << e;
    }
    if (first) os << "0";
    return os.str();
}

Int ReducedVector::sum() const {
    Int s = 0;
    for (Int e : entries) s += e;
    return s;
}

Int TorsionVector::at(Int i) const {
    if (i < 0) i = -i;
    return i < static_cast<Int>(entries.size()) ? entries[static_cast<std::size_t>(i)] : 0;
}

Int TorsionVector::sum_over_z() const {
    Int s = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) s += (i == 0 ? 1 : 2) * entries[i];
    return s;
}

bool TorsionVector::nonnegative() const {
    for (Int t : entries)
        if (t < 0) return false;
    return true;
}

Int phi(Int p, Int q, Int h, Int k) {
    if (gcd(h, p) != 1 || gcd(q, p) != 1) throw std::invalid_argument("phi: need gcd(h,p) = gcd(q,p) = 1");
    Int hr = reduce_mod(h, p).value;
    Int hinv = mod_inverse(h, p).value;
    Int count = 0;
    for (Int j = 1; j <= hinv; ++j) {
        Int r = reduce_mod(q * j - k, p).value;
        if (r >= 1 && r <= hr) ++count;
    }
    return count;
}

Int phi_fast(Int p, Int q, Int h, Int k) {
    if (p == 1) return 0;
    Int hr = reduce_mod(h, p).value;
    Int hinv = mod_inverse(h, p).value;
    // [x]_p in [1, h]  <=>  floor((x-1)/p) - floor((x-1-h)/p) = 1, for 0 < h < p.
    Int b = q - reduce_mod(k, p).value - 1;
    return floor_sum(hinv, p, q, b) - floor_sum(hinv, p, q, b - hr);
}

Int alex_m(Int p, Int h) {
    if (p == 1) return 0;
    Int hr = reduce_mod(h, p).value;
    Int hinv = mod_inverse(h, p).value;
    return (hr * hinv - 1) / p;
}

ReducedVector reduced_coeffs(Int p, Int q, Int h) {
    if (gcd(h, p) != 1 || gcd(q, p) != 1)
        throw std::invalid_argument("reduced_coeffs: need gcd(h,p) = gcd(q,p) = 1");
    if (p == 1) return {1, {1}};
    const Int hr = reduce_mod(h, p).value;
    const Int hinv = mod_inverse(h, p).value;
    const Int m = (hr * hinv - 1) / p;

    // Phi^k for all k at once: each j covers the cyclic interval k in [qj-h, qj-1].
    std::vector<Int> diff(static_cast<std::size_t>(p + 1), 0);
    for (Int j = 1; j <= hinv; ++j) {
        Int lo = reduce_mod(q * j - hr, p).value;
        Int hi = lo + hr;
        if (hi <= p) {
            ++diff[static_cast<std::size_t>(lo)];
            --diff[static_cast<std::size_t>(hi)];
        } else {
            ++diff[static_cast<std::size_t>(lo)];
            --diff[static_cast<std::size_t>(p)];
            ++diff[0];
            --diff[static_cast<std::size_t>(hi - p)];
        }
    }
    std::vector<Int> phi_all(static_cast<std::size_t>(p));
    Int run = 0;
    for (Int k = 0; k < p; ++k) phi_all[static_cast<std::size_t>(k)] = (run += diff[static_cast<std::size_t>(k)]);

    const Int c = reduce_mod(((hr + 1 + p) * (hr - 1)) / 2, p).value;
    ReducedVector out{p, std::vector<Int>(static_cast<std::size_t>(p))};
    Int idx = c;
    for (Int i = 0; i < p; ++i) {
        out.entries[static_cast<std::size_t>(i)] = -m + phi_all[static_cast<std::size_t>(idx)];
        idx += hr;
        if (idx >= p) idx -= p;
    }
    return out;
}

Int reduced_coeff(Int p, Int q, Int h, Int i) {
    if (p == 1) return 1;
    const Int hr = reduce_mod(h, p).value;
    const Int c = reduce_mod(((hr + 1 + p) * (hr - 1)) / 2, p).value;
    return -alex_m(p, h) + phi_fast(p, q, h, reduce_mod(hr * reduce_mod(i, p).value + c, p).value);
}

std::optional<OsForm> os_form_check(const SymmetricPoly& poly) {
    OsForm form;
    Int expected = 1;  // walking down from the top coefficient
    for (Int i = poly.degree(); i >= 1; --i) {
        Int c = poly.coeff(i);
        if (c == 0) continue;
        if (c != expected) return std::nullopt;
        form.n.push_back(i);
        expected = -expected;
    }
    if (poly.coeff(0) != expected) return std::nullopt;
    form.k = static_cast<Int>(form.n.size());
    std::reverse(form.n.begin(), form.n.end());
    return form;
}

Int genus_from_reduced(const ReducedVector& v) {
    Int g = 0;
    for (Int i = 0; i <= v.p / 2; ++i)
        if (v[i] != 0) g = i;
    return g;
}

ReducedVector reduce(const SymmetricPoly& poly, Int p) {
    ReducedVector out{p, std::vector<Int>(static_cast<std::size_t>(p), 0)};
    for (Int e = -poly.degree(); e <= poly.degree(); ++e)
        out.entries[static_cast<std::size_t>(reduce_mod(e, p).value)] += poly.coeff(e);
    return out;
}

std::optional<SymmetricPoly> unreduce(const ReducedVector& v, Int g) {
    const Int p = v.p;
    if (g < 0 || 2 * g > p + 1) return std::nullopt;
    std::vector<Int> half(static_cast<std::size_t>(g + 1), 0);
    if (2 * g < p) {
        for (Int i = 0; i <= g; ++i) half[static_cast<std::size_t>(i)] = v[i];
    } else if (2 * g == p) {
        for (Int i = 0; i < g; ++i) half[static_cast<std::size_t>(i)] = v[i];
        // a_g and a_{-g} collide in the class of p/2.
        if (v[g] % 2 != 0) return std::nullopt;
        half[static_cast<std::size_t>(g)] = v[g] / 2;
    } else {
        // 2g = p + 1: t^g collides with t^{-(g-1)}; the alternating form fixes a_g = 1, a_{g-1} = -1.
        half[static_cast<std::size_t>(g)] = 1;
        if (g >= 1) half[static_cast<std::size_t>(g - 1)] += -1;
        for (Int i = 0; i + 2 <= g; ++i) half[static_cast<std::size_t>(i)] = v[i];
    }
    SymmetricPoly poly = SymmetricPoly::from_half(std::move(half));
    if (poly.eval_at_one() != 1) return std::nullopt;
    if (!(reduce(poly, p) == v)) return std::nullopt;
    if (!os_form_check(poly)) return std::nullopt;
    return poly;
}

TorsionVector torsion_from_poly(const SymmetricPoly& poly) {
    const Int n = poly.degree();
    TorsionVector out;
    out.entries.assign(static_cast<std::size_t>(n > 0 ? n : 1), 0);
    // t_i = S2(i) - i * S1(i) where S1 = sum_{k>i} a_k, S2 = sum_{k>i} k a_k.
    Int s1 = 0, s2 = 0;
    for (Int i = n - 1; i >= 0; --i) {
        s1 += poly.coeff(i + 1);
        s2 += (i + 1) * poly.coeff(i + 1);
        out.entries[static_cast<std::size_t>(i)] = s2 - i * s1;
    }
    return out;
}

Int dd1(const SymmetricPoly& poly) {
    Int s = 0;
    for (Int i = 1; i <= poly.degree(); ++i) s += 2 * i * i * poly.coeff(i);
    return s;
}

bool delta_relation_check(const SymmetricPoly& delta_s3, const SymmetricPoly& delta_y, Int p) {
    if (p % 2 == 0) throw std::invalid_argument("delta_relation_check: p must be odd");
    std::map<Int, Int> terms;
    for (Int e = -delta_s3.degree(); e <= delta_s3.degree(); ++e) terms[e] += delta_s3.coeff(e);
    const Int lo = (p - 1) / 2, hi = (p + 1) / 2;
    terms[lo] -= 1;
    terms[-lo] -= 1;
    terms[hi] += 1;
    terms[-hi] += 1;
    Int top = std::max(hi, delta_y.degree());
    for (Int e = -top; e <= top; ++e) {
        auto it = terms.find(e);
        Int expected = it == terms.end() ? 0 : it->second;
        if (expected != delta_y.coeff(e)) return false;
    }
    return true;
}

}  // namespace lenscert
