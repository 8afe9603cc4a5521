#pragma once

// Two-generator presentations of the homology sphere carrying a certified
// surgery, with coset enumeration and abelianization to identify the group.

#include <optional>
#include <string>
#include <vector>

#include "lenscert/certify.hpp"

namespace lenscert {

/// Letters are +-1 (x1 = a, x1^-1 = A) and +-2 (x2 = b, x2^-1 = B).
using Word = std::vector<int>;

struct GroupPresentation {
    int generators = 2;
    std::vector<Word> relators;
};

/// Subscript of the reduced coefficient e in the last syllable x1 x2^{-e} of relator 2.
enum class IndexConvention {
    hinv_c_minus_h,         // [h'c - h]_p
    neg_hinv_c_minus_hinv,  // [-h'c - h']_p
    hinv_c_minus_hinv,      // [h'c - h']_p
    neg_hinv_c_minus_h,     // [-h'c - h]_p
};

inline constexpr IndexConvention kAllConventions[] = {
    IndexConvention::hinv_c_minus_h,
    IndexConvention::neg_hinv_c_minus_hinv,
    IndexConvention::hinv_c_minus_hinv,
    IndexConvention::neg_hinv_c_minus_h,
};

/// The convention fixed by requiring |pi_1| = 120 on (8,1,3), (22,3,5), (38,7,7).
inline constexpr IndexConvention kPresentationConvention = IndexConvention::hinv_c_minus_h;

std::string_view convention_name(IndexConvention c);

/// 1 iff [k]_p lies in {1, ..., h}.
int delta_h(Int k, Int p, Int h);

/// Relator 1: prod_{i=1}^{p} x1 x2^{delta_h(qi+1)}.
/// Relator 2: (prod_{i=1}^{h'-1} x1 x2^{delta_h(qi+1)}) x1 x2^{-e}, e = reduced coefficient at the
/// convention's index.
GroupPresentation build_presentation(Int p, Int q, Int h, const ReducedVector& reduced,
                                     IndexConvention convention = kPresentationConvention);
GroupPresentation build_presentation(const Certificate& cert,
                                     IndexConvention convention = kPresentationConvention);

/// <x, y | (xy)^2 x^-3, x^3 y^-5>, the binary icosahedral group.
GroupPresentation binary_icosahedral_presentation();

/// Free and cyclic reduction.
Word reduce_word(const Word& w);
Word cyclically_reduce(const Word& w);
Word rotate_word(const Word& w, std::size_t shift);
Word invert_word(const Word& w);

/// One relator per line over a, A, b, B; the identity word prints as "1".
std::string format_presentation(const GroupPresentation& pres);

/// Inverse of format_presentation. Throws std::invalid_argument on other characters.
GroupPresentation parse_presentation(const std::string& text);

struct EnumerationResult {
    bool closed = false;  // false: coset table overflowed max_cosets
    Int order = 0;        // group order when closed
    Int cosets_defined = 0;
};

/// Felsch-style coset enumeration over the trivial subgroup with a deduction stack and
/// coincidence processing.
EnumerationResult todd_coxeter(const GroupPresentation& pres, Int max_cosets = 1'000'000);

/// Index of the subgroup generated by `subgroup` (the trivial subgroup when empty).
EnumerationResult coset_index(const GroupPresentation& pres, const std::vector<Word>& subgroup,
                              Int max_cosets = 1'000'000);

/// Same group with relators shortened by substring substitution: when rotations of u^{+-1} and v
/// share a prefix X with |X| > |u|/2, v = X V' is replaced by U'^-1 V' where u = X U'.
GroupPresentation simplify_relators(const GroupPresentation& pres);

/// Order of the group, enumerating the simplified presentation. If one generator alone has index 1 the group is cyclic, hence equal to
/// its abelianization; otherwise enumerates over the trivial subgroup.
EnumerationResult group_order(const GroupPresentation& pres, Int max_cosets = 1'000'000);

/// |det| of the 2x2 exponent-sum matrix; 0 when the abelianization is infinite.
Int abelianization_order(const GroupPresentation& pres);

}  // namespace lenscert
