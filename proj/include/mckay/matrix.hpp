// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mckay/cyclotomic.hpp"

#include <string>
#include <vector>

namespace mckay {

/// Square matrix over Q(zeta_N); all entries are kept at the matrix conductor.
class CycMatrix {
public:
    CycMatrix() : dim_(0), conductor_(1) {}
    /// Zero matrix of the given size.
    CycMatrix(int dim, int conductor);

    static CycMatrix identity(int dim, int conductor);
    /// (dim+1) x (dim+1) matrix with `a` in the upper-left block and `corner`
    /// in the lower-right entry.
    static CycMatrix with_corner(const CycMatrix& a, const CycElem& corner);

    int dim() const { return dim_; }
    int conductor() const { return conductor_; }

    const CycElem& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
    /// The value is lifted to the matrix conductor (which must be a multiple
    /// of the value's conductor).
    void set(int i, int j, const CycElem& value);

    /// Rewrite all entries in Q(zeta_M); requires conductor | M.
    CycMatrix lifted_to(int m) const;
    /// Upper-left k x k block.
    CycMatrix upper_left(int k) const;

    CycElem trace() const;
    /// Exact determinant by Gaussian elimination.
    CycElem det() const;
    bool is_diagonal() const;

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    CycMatrix operator*(const CycElem& scalar) const;

    friend bool operator==(const CycMatrix& a, const CycMatrix& b);
    friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

    /// Exact serialization ("dim|conductor|entry keys"); equal matrices at the
    /// same conductor have equal keys.
    std::string key() const;

private:
    int dim_;
    int conductor_;
    std::vector<CycElem> entries_; // row-major, dim*dim
};

} // namespace mckay
