#include "lenscert/casson.hpp"

#include <stdexcept>

namespace lenscert {

Rational lambda_rustamov(const DVector& d) {
    Rational sum;
    for (const auto& v : d.values) sum += v;
    return -sum / Rational(2 * d.p);
}

Rational lambda_rustamov(Int p, Int q) {
    if (p == 1) return Rational(0);
    return lambda_rustamov(d_vector(p, q));
}

Rational lambda_dedekind(Int p, Int q) {
    if (p == 1) return Rational(0);
    return Rational(kDedekindSign) * dedekind_sum(q, p) / Rational(2);
}

SignCalibration calibrate_dedekind_sign(Int p_max) {
    SignCalibration out;
    bool plus_ok = true, minus_ok = true;
    for (Int p = 2; p <= p_max; ++p) {
        for (Int q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            Rational r = lambda_rustamov(p, q);
            Rational half_s = dedekind_sum(q, p) / Rational(2);
            plus_ok = plus_ok && r == half_s;
            minus_ok = minus_ok && r == -half_s;
            if (!plus_ok && !minus_ok) {
                out.consistent = false;
                out.witness_p = p;
                out.witness_q = q;
                return out;
            }
        }
    }
    // Both can hold only when every lambda vanishes, which p = 3 already rules out.
    out.sign = minus_ok ? -1 : 1;
    return out;
}

bool euler_check(Int p, const Rational& d, const Rational& lambda_pq, const Rational& lambda_p1,
                 const SymmetricPoly& delta) {
    Rational lhs = Rational(p) * (d + Rational(2) * lambda_pq - Rational(2) * lambda_p1);
    return lhs == Rational(dd1(delta));
}

RasReport ras_verify(Int p_max) {
    if (p_max < 4) throw std::invalid_argument("ras_verify: p_max must be at least 4");
    RasReport report;
    report.p_max = p_max;
    for (Int p = 4; p <= p_max; ++p) {
        const Rational lambda_p1 = lambda_rustamov(p, 1);
        const Rational threshold = Rational(p - 4, 16);  // (1/4)(p/4 - 1)
        for (Int q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            ++report.pairs_checked;
            Rational lhs = Rational(2) * lambda_rustamov(p, q) - Rational(2) * lambda_p1;
            if (lhs > threshold) continue;
            ++report.pairs_below_threshold;
            Int qi = mod_inverse(q, p).value;
            bool allowed = false;
            for (Int r : {Int{1}, Int{2}, Int{3}})
                if (r < p && (q == r || qi == r)) allowed = true;
            if (!allowed) report.violations.push_back({p, q, lhs});
        }
    }
    return report;
}

}  // namespace lenscert
