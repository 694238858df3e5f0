// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mckay/matrix.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace mckay {

/// Conjugacy data.  Classes are ordered by their representative, which is the
/// least element index in the class; class 0 is always {identity}.
struct ConjugacyInfo {
    std::vector<std::vector<int>> members; ///< class -> ascending element indices
    std::vector<int> class_of;             ///< element -> class
    std::vector<int> representative;       ///< class -> least element index
    std::vector<int> inverse_class;        ///< class of the inverses; an involution
    std::vector<int> rep_order;            ///< multiplicative order of the representative
    std::vector<std::vector<int>> power_map; ///< power_map[c][j] = class of rep^j, j in [0, rep_order[c])
};

/// A finite subgroup of GL(m, Q(zeta_N)), enumerated by breadth-first closure
/// from its generators.  Element 0 is the identity; element order is the BFS
/// discovery order, so it is deterministic given the generator list.
class FiniteMatrixGroup {
public:
    /// Breadth-first closure under left multiplication with exact
    /// canonical-form deduplication.  Populates conjugacy data, determinants,
    /// inverses, and the exponent.
    static FiniteMatrixGroup enumerate(std::vector<CycMatrix> generators, int max_order = 10000,
                                       std::string description = "");

    int dim() const { return dim_; }
    int conductor() const { return conductor_; }
    int order() const { return static_cast<int>(elements_.size()); }
    int exponent() const { return exponent_; }
    const std::string& description() const { return description_; }

    const CycMatrix& element(int i) const { return elements_[i]; }
    const std::vector<CycMatrix>& generators() const { return gens_; }
    const std::vector<int>& generator_indices() const { return gen_idx_; }
    const std::vector<CycElem>& dets() const { return dets_; }
    const ConjugacyInfo& classes() const { return classes_; }
    int class_count() const { return static_cast<int>(classes_.members.size()); }

    /// Index of a*b, computed from the BFS factorization of a (no matrix work).
    int multiply(int a, int b) const;
    int inverse(int a) const { return inv_[a]; }
    /// col[y] = index of y*b for every y, in one O(|G|) pass.
    std::vector<int> column(int b) const;
    int element_order(int i) const;

    /// Index of the given matrix, or -1 when it is not an element.  Handles
    /// any entry conductor by comparing in the least common field.
    int element_index(const CycMatrix& m) const;

    bool in_special_linear() const;

private:
    FiniteMatrixGroup() = default;
    void compute_conjugacy();

    int dim_ = 0;
    int conductor_ = 1;
    int exponent_ = 1;
    std::string description_;
    std::vector<CycMatrix> gens_;
    std::vector<int> gen_idx_;
    std::vector<CycMatrix> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<int> parent_;                  ///< x = gens_[parent_gen_[x]] * parent_[x]
    std::vector<int> parent_gen_;
    std::vector<std::vector<int>> left_;       ///< left_[g][x] = index of gens_[g] * x
    std::vector<int> inv_;
    std::vector<CycElem> dets_;
    ConjugacyInfo classes_;
};

using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

GroupPtr enumerate_group(std::vector<CycMatrix> generators, int max_order = 10000,
                         std::string description = "");

/// A normal subgroup realized inside an ambient group, with the element
/// inclusion and the class fusion maps.
struct NormalEmbedding {
    GroupPtr ambient;
    GroupPtr sub;
    std::vector<int> inclusion; ///< sub element index -> ambient element index
    std::vector<int> fusion;    ///< sub class index -> ambient class index
};

/// Locate `sub` inside `ambient` and verify normality (closure of the image
/// under conjugation by the ambient generators).
NormalEmbedding embed_subgroup(GroupPtr ambient, GroupPtr sub);

/// The subgroup of determinant-1 elements, as a NormalEmbedding.
NormalEmbedding sl_kernel(GroupPtr g);

/// Order r of ambient/sub together with the least ambient element index whose
/// coset generates the quotient; throws QuotientNotCyclic otherwise.
std::pair<int, int> cyclic_quotient(const NormalEmbedding& emb);

/// The group generated by `n` (required to lie in SL) and the scalar matrix
/// zeta_k * I.
GroupPtr scalar_extend(GroupPtr n, int k, int max_order = 10000);

struct EmbedResult {
    GroupPtr image;             ///< the image group inside SL(m+1)
    std::vector<int> elem_map;  ///< source element index -> image element index
};

/// g |-> blockdiag(g, det(g)^{-1}), an isomorphism onto a subgroup of SL(m+1).
EmbedResult embed_det_inverse(GroupPtr g);

/// Upper-left (m-1)-blocks of a diagonal special-linear group; the left
/// inverse of embed_det_inverse on such groups.
GroupPtr strip_diagonal(GroupPtr g);

} // namespace mckay
