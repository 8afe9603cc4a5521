#pragma once

// Correction terms of lens spaces and the Spin^c relabeling used by the
// surgery formula.
//
// L(p, q) is p/q surgery on the unknot. Spin^c structures are labelled by
// residues i in [0, p).

#include <map>
#include <utility>
#include <vector>

#include "lenscert/arith.hpp"

namespace lenscert {

/// d(L(p, 1), i) = ((2i - p)^2 - p) / (4p).
Rational d_lens_p1(Int p, Int i);

/// d(L(p, q), i) via the Euclidean recursion
///   d(p, q, i) = ((2i + 1 - p - q)^2 - pq) / (4pq) - d(q, [p]_q, [i]_q),  d(1, 0, 0) = 0.
/// Requires gcd(p, q) = 1, 0 < q < p (or p = 1, q = 0), 0 <= i < p.
Rational d_lens(Int p, Int q, Int i);

/// All p correction terms of L(p, q), indexed by Spin^c label.
struct DVector {
    Int p = 1;
    Int q = 0;
    std::vector<Rational> values;

    const Rational& operator[](Int i) const { return values[static_cast<std::size_t>(i)]; }
};

DVector d_vector(Int p, Int q);

/// Shard-local memo of DVectors keyed by (p, q). Not thread-safe; give each worker its own.
class DVectorCache {
public:
    const DVector& get(Int p, Int q);
    void clear() { cache_.clear(); }
    std::size_t size() const { return cache_.size(); }

private:
    std::map<std::pair<Int, Int>, DVector> cache_;
};

/// Q(i) = h i + c with c = (h + 1 + p)(h - 1) / 2, all mod p.
struct SpinCMap {
    Int p;
    Int h;
    Residue c;

    SpinCMap(Int h, Int p);
    Residue operator()(Int i) const;
};

Residue spin_c_Q(Int h, Int p, Int i);

}  // namespace lenscert
