#pragma once

// Casson-Walker invariants of lens spaces, computed from correction terms and,
// independently, from Dedekind sums.

#include <vector>

#include "lenscert/alex.hpp"
#include "lenscert/arith.hpp"
#include "lenscert/dinv.hpp"

namespace lenscert {

/// lambda(L(p,q)) = -(1/2p) sum_i d(L(p,q), i). Lens spaces have vanishing reduced Floer homology,
/// so the Euler-characteristic term of the d-invariant formula drops out.
Rational lambda_rustamov(Int p, Int q);
Rational lambda_rustamov(const DVector& d);

/// Sign relating lambda to the Dedekind sum: lambda(L(p,q)) = sign * s(q,p) / 2.
inline constexpr Int kDedekindSign = -1;

/// lambda(L(p,q)) = kDedekindSign * s(q, p) / 2.
Rational lambda_dedekind(Int p, Int q);

struct SignCalibration {
    bool consistent = true;
    Int sign = 0;          // the single sign that works, or 0 if none
    Int witness_p = 0;     // first (p, q) that breaks consistency
    Int witness_q = 0;
};

/// Finds the global sign with lambda_rustamov = sign * s(q,p)/2 over all coprime 0 < q < p <= p_max.
SignCalibration calibrate_dedekind_sign(Int p_max);

/// p (d + 2 lambda(L(p,q)) - 2 lambda(L(p,1))) == Delta''(1), exactly.
bool euler_check(Int p, const Rational& d, const Rational& lambda_pq, const Rational& lambda_p1,
                 const SymmetricPoly& delta);

struct RasViolation {
    Int p;
    Int q;
    Rational lhs;  // 2 lambda(L(p,q)) - 2 lambda(L(p,1))
};

struct RasReport {
    Int p_max = 0;
    Int pairs_checked = 0;
    Int pairs_below_threshold = 0;
    std::vector<RasViolation> violations;
};

/// For every 4 <= p <= p_max and coprime q: if 2 lambda(L(p,q)) - 2 lambda(L(p,1)) <= (p/4 - 1)/4
/// then L(p,q) must be L(p,1), L(p,2) or L(p,3) (up to q <-> q^{-1}).
RasReport ras_verify(Int p_max);

}  // namespace lenscert
