// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mckay/group.hpp"

#include <cstdint>
#include <vector>

namespace mckay {

/// A function constant on conjugacy classes, one exact value per class.
struct ClassFunction {
    GroupPtr group;
    std::vector<CycElem> values;
};

/// chi_V: trace of each class representative.
ClassFunction natural_character(const GroupPtr& g);

/// The one-dimensional character g |-> det(g).
ClassFunction det_character(const GroupPtr& g);

/// Entrywise product (the character of a tensor product).
ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b);

/// <a, b> = (1/|G|) sum_k |C_k| a(C_k) conj(b(C_k)), exact.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

bool same_values(const ClassFunction& a, const ClassFunction& b);

/// c[j][k][l] = number of pairs (x, y) in C_j x C_k with x*y equal to a fixed
/// element of C_l; independent of the chosen element.
std::vector<std::vector<std::vector<long long>>> class_structure_constants(const FiniteMatrixGroup& g);

/// Exact irreducible character table.  Rows are computed modulo a prime by
/// simultaneous diagonalization of the class-multiplication matrices, then
/// lifted to cyclotomic values through the eigenvalue-multiplicity transform.
/// Row order is canonical: trivial character first, then ascending degree,
/// ties broken by the lexicographic order of the mod-p rows.
struct CharacterTable {
    GroupPtr group;
    std::uint64_t prime = 0;     ///< p == 1 (mod lcm(conductor, exponent)), p > 2 m |G|
    std::uint64_t generator = 0; ///< primitive root mod p
    std::vector<std::vector<std::uint64_t>> modp_rows; ///< k x k values in GF(p)
    std::vector<int> degrees;
    std::vector<ClassFunction> rows; ///< exact values, conductor = group exponent

    static CharacterTable compute(const GroupPtr& g);

    /// Index of the row with exactly these values, or -1.
    int row_index(const ClassFunction& f) const;
};

/// Restriction analysis of an embedding: how each ambient irreducible row
/// decomposes over the subgroup, which subgroup rows extend, and the
/// one-dimensional ambient rows trivial on the subgroup (the deck characters).
struct RestrictionReport {
    std::vector<std::vector<long long>> constituents; ///< ambient row -> multiplicities per sub row
    std::vector<bool> extendible;                     ///< per sub row
    std::vector<int> extension_of;                    ///< per sub row: an ambient row restricting to exactly it, or -1
    std::vector<int> deck_characters;                 ///< ambient row indices, ascending
};

RestrictionReport restrict_and_check_extendible(const NormalEmbedding& emb,
                                                const CharacterTable& ambient_table,
                                                const CharacterTable& sub_table);

} // namespace mckay
