#pragma once

// Certification pipeline for a candidate lens surgery (p, q, h): derive the
// correction term d(Y) of the homology sphere forced by the surgery formula
// and run every numerical obstruction against it.

#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lenscert/alex.hpp"
#include "lenscert/arith.hpp"
#include "lenscert/dinv.hpp"

namespace lenscert {

enum class RejectStage {
    coprimality,
    square_test,
    os_form,
    negative_torsion,
    non_integral_d,
    odd_d,
    correction_mismatch,
    bound_violation,
};

inline constexpr RejectStage kAllStages[] = {
    RejectStage::coprimality,      RejectStage::square_test,   RejectStage::os_form,
    RejectStage::negative_torsion, RejectStage::non_integral_d, RejectStage::odd_d,
    RejectStage::correction_mismatch, RejectStage::bound_violation,
};

std::string_view stage_name(RejectStage stage);

/// How the Alexander polynomial is lifted from its reduction mod p.
///   standard: genus = largest index in [0, p/2] with a nonzero reduced coefficient (2g <= p).
///   top:      genus = (p+1)/2 with leading terms t^g - t^{g-1} (p odd, 2g - 1 = p).
enum class Lift { standard, top };

std::string_view lift_name(Lift lift);

/// Canonical surgery datum. q = min([q]_p, [q^{-1}]_p); h is the least element of {+-h^{+-1}} in [1, p].
struct SurgeryDatum {
    Int p = 0;
    Int q = 0;
    Int h = 0;
    Int d = 0;
    Int g = 0;

    friend bool operator==(const SurgeryDatum&, const SurgeryDatum&) = default;
    friend auto operator<=>(const SurgeryDatum&, const SurgeryDatum&) = default;
};

struct CheckRecord {
    std::string name;
    bool passed = false;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Certificate {
    SurgeryDatum datum;
    Int lens_q = 0;   // lens parameter the computation ran with
    Int class_h = 0;  // dual class the computation ran with
    Lift lift = Lift::standard;
    bool boundary = false;  // 2g - 1 = p; excluded from the d = 2 tables
    ReducedVector reduced;
    SymmetricPoly poly;
    TorsionVector torsions;
    Rational lambda_pq;
    Rational lambda_p1;
    std::vector<CheckRecord> checks;

    friend bool operator==(const Certificate& a, const Certificate& b);
};

struct Rejection {
    Int p = 0;
    Int q = 0;
    Int h = 0;
    RejectStage stage = RejectStage::coprimality;
    std::string detail;
};

using CertifyResult = std::variant<Certificate, Rejection>;

struct CertifyOptions {
    bool require_even_d = true;
    Lift lift = Lift::standard;
};

Int canonical_q(Int p, Int q);

/// {[h]_p, [-h]_p, [h^{-1}]_p, [-h^{-1}]_p} as integers in {1, ..., p}.
std::set<Int> h_class_set(Int p, Int h);
Int canonical_h(Int p, Int h);

enum class BoundStatus { holds, lower_fails, upper_fails, nonpositive_denominator };

std::string_view bound_status_name(BoundStatus s);

/// 2g - 1 <= p and p < 4g(g+1)/(g+2d), the latter requiring g + 2d > 0. Exact integer comparison.
BoundStatus bounds_check(Int g, Int d, Int p);

/// d(Y) forced by the surgery formula at Spin^c label 0. Throws std::domain_error when the
/// reduced coefficients do not lift to an alternating polynomial.
Rational derive_d(Int p, Int q, Int h, Lift lift = Lift::standard);

/// Runs every stage on exactly (p, q, h). Throws std::invalid_argument if p < 2.
CertifyResult certify(Int p, Int q, Int h, const CertifyOptions& options = {});

/// As certify, reusing correction terms from a shard-local cache.
CertifyResult certify(Int p, Int q, Int h, const CertifyOptions& options, DVectorCache& cache);

/// Certifies the lens space L(p, q) with dual class set {+-h^{+-1}}. Tries (q, h) and then
/// (q, h^{-1}), which together cover every labelling of the same datum; table rows
/// (p, q, h) are certified this way. On double failure returns the rejection of (q, h).
CertifyResult certify_class(Int p, Int q, Int h, const CertifyOptions& options = {});

inline bool accepted(const CertifyResult& r) { return std::holds_alternative<Certificate>(r); }

}  // namespace lenscert
