#include "lenscert/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "lenscert/casson.hpp"

namespace lenscert {

std::string_view stage_name(RejectStage stage) {
    switch (stage) {
        case RejectStage::coprimality: return "coprimality";
        case RejectStage::square_test: return "square-test";
        case RejectStage::os_form: return "os-form";
        case RejectStage::negative_torsion: return "negative-torsion";
        case RejectStage::non_integral_d: return "non-integral-d";
        case RejectStage::odd_d: return "odd-d";
        case RejectStage::correction_mismatch: return "correction-mismatch";
        case RejectStage::bound_violation: return "bound-violation";
    }
    return "unknown";
}

std::string_view lift_name(Lift lift) { return lift == Lift::standard ? "standard" : "top"; }

std::string_view bound_status_name(BoundStatus s) {
    switch (s) {
        case BoundStatus::holds: return "holds";
        case BoundStatus::lower_fails: return "lower-bound";
        case BoundStatus::upper_fails: return "upper-bound";
        case BoundStatus::nonpositive_denominator: return "g+2d<=0";
    }
    return "unknown";
}

bool operator==(const Certificate& a, const Certificate& b) {
    return a.datum == b.datum && a.lens_q == b.lens_q && a.class_h == b.class_h && a.lift == b.lift &&
           a.boundary == b.boundary && a.reduced == b.reduced && a.poly == b.poly &&
           a.torsions.entries == b.torsions.entries && a.lambda_pq == b.lambda_pq &&
           a.lambda_p1 == b.lambda_p1 && a.checks == b.checks;
}

Int canonical_q(Int p, Int q) {
    if (p == 1) return 0;
    Int r = reduce_mod(q, p).value;
    return std::min(r, mod_inverse(r, p).value);
}

std::set<Int> h_class_set(Int p, Int h) {
    if (gcd(h, p) != 1) throw std::invalid_argument("h_class_set: gcd(h, p) must be 1");
    auto lift = [p](Int x) {
        Int r = reduce_mod(x, p).value;
        return r == 0 ? p : r;
    };
    Int hi = mod_inverse(h, p).value;
    return {lift(h), lift(-h), lift(hi), lift(-hi)};
}

Int canonical_h(Int p, Int h) { return *h_class_set(p, h).begin(); }

BoundStatus bounds_check(Int g, Int d, Int p) {
    if (2 * g - 1 > p) return BoundStatus::lower_fails;
    if (g + 2 * d <= 0) return BoundStatus::nonpositive_denominator;
    // p < 4g(g+1)/(g+2d) with g+2d > 0
    if (p * (g + 2 * d) >= 4 * g * (g + 1)) return BoundStatus::upper_fails;
    return BoundStatus::holds;
}

namespace {

struct Lifted {
    ReducedVector reduced;
    Int genus = 0;
    std::optional<SymmetricPoly> poly;
};

Lifted lift_poly(Int p, Int q, Int h, Lift lift) {
    Lifted out;
    out.reduced = reduced_coeffs(p, q, h);
    if (lift == Lift::standard) {
        out.genus = genus_from_reduced(out.reduced);
    } else {
        if (p % 2 == 0) return out;
        out.genus = (p + 1) / 2;
    }
    out.poly = unreduce(out.reduced, out.genus);
    return out;
}

/// t~_r = sum_{j = r mod p} t_j over all j in Z.
std::vector<Int> reduced_torsions(const TorsionVector& t, Int p) {
    std::vector<Int> out(static_cast<std::size_t>(p), 0);
    const Int n = static_cast<Int>(t.entries.size());
    for (Int j = -(n - 1); j <= n - 1; ++j) out[static_cast<std::size_t>(reduce_mod(j, p).value)] += t.at(j);
    return out;
}

Rational d_from_label_zero(Int p, const DVector& dq, const SpinCMap& Q, const std::vector<Int>& tt) {
    return Rational(2 * tt[0]) + dq[Q(0)] - d_lens_p1(p, 0);
}

CertifyResult run(Int p, Int q, Int h, const CertifyOptions& options, DVectorCache* cache) {
    if (p < 2) throw std::invalid_argument("certify: p must be at least 2");
    auto reject = [&](RejectStage s, std::string detail = {}) {
        return CertifyResult{Rejection{p, q, h, s, std::move(detail)}};
    };
    if (gcd(p, q) != 1 || gcd(p, h) != 1) return reject(RejectStage::coprimality);
    if (!is_square_mod(q, p)) return reject(RejectStage::square_test, "q is not a square mod p");

    const Int qr = reduce_mod(q, p).value;
    const Int hr = reduce_mod(h, p).value;
    Lifted lifted = lift_poly(p, qr, hr, options.lift);
    if (!lifted.poly) return reject(RejectStage::os_form);
    const SymmetricPoly& poly = *lifted.poly;
    const Int g = poly.degree();

    TorsionVector torsions = torsion_from_poly(poly);
    if (!torsions.nonnegative()) return reject(RejectStage::negative_torsion);

    DVector local;
    const DVector* dq;
    if (cache) {
        dq = &cache->get(p, qr);
    } else {
        local = d_vector(p, qr);
        dq = &local;
    }
    const SpinCMap Q(hr, p);
    const std::vector<Int> tt = reduced_torsions(torsions, p);
    const Rational d = d_from_label_zero(p, *dq, Q, tt);
    if (!d.is_integer()) return reject(RejectStage::non_integral_d, "d = " + d.str());
    if (options.require_even_d && d.num() % 2 != 0) return reject(RejectStage::odd_d, "d = " + d.str());

    for (Int i = 0; i < p; ++i) {
        if (d - (*dq)[Q(i)] + d_lens_p1(p, i) != Rational(2 * tt[static_cast<std::size_t>(i)]))
            return reject(RejectStage::correction_mismatch, "label " + std::to_string(i));
    }

    Certificate cert;
    cert.checks.push_back({"coprimality", true});
    cert.checks.push_back({"square-test", true});
    cert.checks.push_back({"os-form", true});
    cert.checks.push_back({"torsion-nonnegative", true});
    cert.checks.push_back({"d-integral", true});
    if (options.require_even_d) cert.checks.push_back({"d-even", true});
    cert.checks.push_back({"correction", true});

    const Int dy = d.num();
    if (2 * g - 1 > p) return reject(RejectStage::bound_violation, "2g-1 > p");
    cert.checks.push_back({"lower-bound", true});
    if (g >= 1) {
        BoundStatus b = bounds_check(g, dy, p);
        if (b != BoundStatus::holds) return reject(RejectStage::bound_violation, std::string(bound_status_name(b)));
        cert.checks.push_back({"upper-bound", true});
    }

    cert.lambda_pq = lambda_rustamov(*dq);
    Rational sum_p1;
    for (Int i = 0; i < p; ++i) sum_p1 += d_lens_p1(p, i);
    cert.lambda_p1 = -sum_p1 / Rational(2 * p);
    // Implied by the label-wise identities; a failure here means an internal inconsistency.
    if (!euler_check(p, d, cert.lambda_pq, cert.lambda_p1, poly))
        return reject(RejectStage::correction_mismatch, "euler identity");
    cert.checks.push_back({"euler", true});

    cert.datum = {p, canonical_q(p, qr), canonical_h(p, hr), dy, g};
    cert.lens_q = qr;
    cert.class_h = hr;
    cert.lift = options.lift;
    cert.boundary = (2 * g - 1 == p);
    cert.reduced = std::move(lifted.reduced);
    cert.poly = poly;
    cert.torsions = std::move(torsions);
    return cert;
}

}  // namespace

Rational derive_d(Int p, Int q, Int h, Lift lift) {
    if (gcd(p, q) != 1 || gcd(p, h) != 1) throw std::invalid_argument("derive_d: need gcd(p,q) = gcd(p,h) = 1");
    if (p == 1) return Rational(0);
    const Int qr = reduce_mod(q, p).value;
    const Int hr = reduce_mod(h, p).value;
    Lifted lifted = lift_poly(p, qr, hr, lift);
    if (!lifted.poly) throw std::domain_error("derive_d: reduced coefficients do not lift");
    TorsionVector torsions = torsion_from_poly(*lifted.poly);
    return d_from_label_zero(p, d_vector(p, qr), SpinCMap(hr, p), reduced_torsions(torsions, p));
}

CertifyResult certify(Int p, Int q, Int h, const CertifyOptions& options) { return run(p, q, h, options, nullptr); }

CertifyResult certify(Int p, Int q, Int h, const CertifyOptions& options, DVectorCache& cache) {
    return run(p, q, h, options, &cache);
}

CertifyResult certify_class(Int p, Int q, Int h, const CertifyOptions& options) {
    CertifyResult first = certify(p, q, h, options);
    if (accepted(first) || gcd(p, h) != 1 || gcd(p, q) != 1) return first;
    CertifyResult second = certify(p, q, mod_inverse(h, p).value, options);
    return accepted(second) ? second : first;
}

}  // namespace lenscert
