#pragma once

// Alexander-polynomial calculus for lens surgeries: the lattice count Phi,
// reduced coefficients, torsion coefficients, the alternating normal form,
// genus extraction and unreduction.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lenscert/arith.hpp"

namespace lenscert {

/// Symmetric Laurent polynomial sum a_i t^i with a_i = a_{-i}. Only a_0..a_deg are stored.
class SymmetricPoly {
public:
    SymmetricPoly() : half_{1} {}

    /// Coefficients a_0, a_1, ..., a_n. Trailing zeros are trimmed.
    static SymmetricPoly from_half(std::vector<Int> half);

    /// Builds from explicit exponent -> coefficient terms; throws std::invalid_argument
    /// if the terms are not symmetric.
    static SymmetricPoly from_terms(const std::map<Int, Int>& terms);

    Int degree() const { return static_cast<Int>(half_.size()) - 1; }
    Int coeff(Int i) const;
    const std::vector<Int>& half() const { return half_; }

    /// Sum of all coefficients, i.e. the value at t = 1.
    Int eval_at_one() const;

    /// e.g. "t^-4 - t^-3 + t^-1 - 1 + t - t^3 + t^4".
    std::string str() const;

    friend bool operator==(const SymmetricPoly&, const SymmetricPoly&) = default;

private:
    explicit SymmetricPoly(std::vector<Int> half) : half_(std::move(half)) {}
    std::vector<Int> half_;
};

/// Length-p vector of reduced coefficients indexed by Z/p.
struct ReducedVector {
    Int p = 1;
    std::vector<Int> entries;

    Int operator[](Int i) const { return entries[static_cast<std::size_t>(reduce_mod(i, p).value)]; }
    Int sum() const;
    friend bool operator==(const ReducedVector&, const ReducedVector&) = default;
};

/// Torsion coefficients t_0, t_1, ... ; t_{-i} = t_i and t_i = 0 beyond the stored range.
struct TorsionVector {
    std::vector<Int> entries;

    Int at(Int i) const;
    Int sum_over_z() const;  // sum_{i in Z} t_i
    bool nonnegative() const;
};

/// k and 0 < n_1 < ... < n_k with Delta = (-1)^k + sum_j (-1)^{k-j} (t^{n_j} + t^{-n_j}).
struct OsForm {
    Int k = 0;
    std::vector<Int> n;
};

/// #{ j in [1, h'] : [q j - k]_p in [1, h] } with h = [h]_p, h' = [h^{-1}]_p. Direct iteration.
Int phi(Int p, Int q, Int h, Int k);

/// Same count in O(log p) via floor sums.
Int phi_fast(Int p, Int q, Int h, Int k);

/// m = (h h' - 1) / p for h = [h]_p, h' = [h^{-1}]_p taken in [1, p].
Int alex_m(Int p, Int h);

/// reduced_a_i = -m + Phi^{hi+c}_{p,q}(h) for every i in Z/p.
ReducedVector reduced_coeffs(Int p, Int q, Int h);

/// Single entry i of reduced_coeffs, O(log p).
Int reduced_coeff(Int p, Int q, Int h, Int i);

std::optional<OsForm> os_form_check(const SymmetricPoly& poly);

/// max{ i in [0, floor(p/2)] : v_i != 0 }.
Int genus_from_reduced(const ReducedVector& v);

/// Sums coefficients into classes mod p.
ReducedVector reduce(const SymmetricPoly& poly, Int p);

/// Rebuilds Delta from its reduction given the genus (2g <= p + 1). Returns nullopt when the
/// result would not be symmetric, normalized, in alternating form, or consistent with v.
std::optional<SymmetricPoly> unreduce(const ReducedVector& v, Int g);

/// t_i = sum_{j >= 1} j a_{i+j}.
TorsionVector torsion_from_poly(const SymmetricPoly& poly);

/// Delta''(1) = sum_i i^2 a_i.
Int dd1(const SymmetricPoly& poly);

/// Delta_Y = Delta_S3 - (t^{(p-1)/2} + t^{-(p-1)/2}) + (t^{(p+1)/2} + t^{-(p+1)/2}), coefficientwise.
bool delta_relation_check(const SymmetricPoly& delta_s3, const SymmetricPoly& delta_y, Int p);

}  // namespace lenscert
