// SPDX-License-Identifier: Apache-2.0
#include "mckay/matrix.hpp"

#include "mckay/error.hpp"

#include <numeric>
#include <utility>

namespace mckay {

CycMatrix::CycMatrix(int dim, int conductor) : dim_(dim), conductor_(conductor) {
    entries_.assign(static_cast<std::size_t>(dim) * dim, CycElem::zero(conductor));
}

CycMatrix CycMatrix::identity(int dim, int conductor) {
    CycMatrix m(dim, conductor);
    for (int i = 0; i < dim; ++i) m.set(i, i, CycElem::one(conductor));
    return m;
}

CycMatrix CycMatrix::with_corner(const CycMatrix& a, const CycElem& corner) {
    int n = std::lcm(a.conductor(), corner.conductor());
    CycMatrix m(a.dim() + 1, n);
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) m.set(i, j, a.at(i, j));
    }
    m.set(a.dim(), a.dim(), corner);
    return m;
}

void CycMatrix::set(int i, int j, const CycElem& value) {
    entries_[static_cast<std::size_t>(i) * dim_ + j] = value.lifted_to(conductor_);
}

CycMatrix CycMatrix::lifted_to(int m) const {
    if (m == conductor_) return *this;
    CycMatrix out(dim_, m);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].lifted_to(m);
    return out;
}

CycMatrix CycMatrix::upper_left(int k) const {
    CycMatrix out(k, conductor_);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) out.set(i, j, at(i, j));
    }
    return out;
}

CycElem CycMatrix::trace() const {
    CycElem t = CycElem::zero(conductor_);
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

CycElem CycMatrix::det() const {
    std::vector<CycElem> a = entries_;
    const int n = dim_;
    auto e = [&](int i, int j) -> CycElem& { return a[static_cast<std::size_t>(i) * n + j]; };
    CycElem result = CycElem::one(conductor_);
    bool negate = false;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (!e(row, col).is_zero()) { pivot = row; break; }
        }
        if (pivot < 0) return CycElem::zero(conductor_);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(e(pivot, j), e(col, j));
            negate = !negate;
        }
        result *= e(col, col);
        CycElem inv = e(col, col).inverse();
        for (int row = col + 1; row < n; ++row) {
            if (e(row, col).is_zero()) continue;
            CycElem factor = e(row, col) * inv;
            for (int j = col; j < n; ++j) e(row, j) -= factor * e(col, j);
        }
    }
    return negate ? -result : result;
}

bool CycMatrix::is_diagonal() const {
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            if (i != j && !at(i, j).is_zero()) return false;
        }
    }
    return true;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.dim() != b.dim()) fail("DimensionMismatch", "matrix product of unequal sizes");
    int n = std::lcm(a.conductor(), b.conductor());
    CycMatrix x = a.lifted_to(n), y = b.lifted_to(n);
    CycMatrix out(x.dim(), n);
    for (int i = 0; i < x.dim(); ++i) {
        for (int j = 0; j < x.dim(); ++j) {
            CycElem acc = CycElem::zero(n);
            for (int k = 0; k < x.dim(); ++k) {
                if (!x.at(i, k).is_zero() && !y.at(k, j).is_zero()) acc += x.at(i, k) * y.at(k, j);
            }
            out.entries_[static_cast<std::size_t>(i) * out.dim_ + j] = std::move(acc);
        }
    }
    return out;
}

CycMatrix CycMatrix::operator*(const CycElem& scalar) const {
    int n = std::lcm(conductor_, scalar.conductor());
    CycMatrix out = lifted_to(n);
    CycElem s = scalar.lifted_to(n);
    for (auto& e : out.entries_) e *= s;
    return out;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            if (a.at(i, j) != b.at(i, j)) return false;
        }
    }
    return true;
}

std::string CycMatrix::key() const {
    std::string s = std::to_string(dim_) + "|" + std::to_string(conductor_) + "|";
    for (const CycElem& e : entries_) {
        s += e.key();
        s += ";";
    }
    return s;
}

} // namespace mckay
