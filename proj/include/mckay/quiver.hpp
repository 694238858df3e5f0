// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mckay/chartab.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mckay {

/// A permutation of {0, ..., n-1} given by its list of images.
struct Permutation {
    std::vector<int> images;

    int size() const { return static_cast<int>(images.size()); }
    int apply(int i) const { return images[i]; }
    bool is_identity() const;
    Permutation inverse() const;
    int order() const;
    /// Disjoint-cycle notation, fixed points omitted; "()" for the identity.
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// True iff images is a bijection of {0, ..., n-1}.
bool is_bijection(const std::vector<int>& images);

/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

/// A McKay quiver: one vertex per irreducible character with its degree,
/// arrows[i][j] = multiplicity of S_j in V tensor S_i, and optionally the
/// determinant-twist permutation of the vertices.
struct Quiver {
    std::vector<int> degrees;
    std::vector<std::vector<long long>> arrows;
    std::optional<Permutation> nakayama;
    std::string provenance;

    int vertex_count() const { return static_cast<int>(degrees.size()); }
};

/// Arrow multiplicities from the character table of the generating group:
/// arrows[i][j] = <chi_V * chi_i, chi_j>, with the determinant twist attached.
Quiver build_mckay(const CharacterTable& table);
/// Convenience: compute the table, then build.
Quiver build_mckay(const GroupPtr& g);

/// sigma(i) = the unique row j with chi_j = chi_i * det.
Permutation nakayama_translation(const CharacterTable& table);

/// Add one arrow sigma(i) -> i per vertex and clear the permutation field.
Quiver add_nakayama_arrows(const Quiver& q);

/// True iff arrows[p(i)][p(j)] = arrows[i][j] and degrees[p(i)] = degrees[i].
bool is_automorphism(const Quiver& q, const Permutation& p);

/// True iff degrees and arrows agree under the vertex matching a -> b.
bool quiver_equal(const Quiver& a, const Quiver& b, const Permutation& matching);

std::string export_dot(const Quiver& q);
std::string export_json(const Quiver& q);
Quiver parse_quiver_json(const std::string& text);

/// Row matching induced by a group isomorphism, given as an element index map
/// (elem_map[a] = index in the to-group of the image of element a): row i of
/// `from` is sent to the row of `to` with the same values on matched classes.
Permutation induced_matching(const CharacterTable& from, const CharacterTable& to,
                             const std::vector<int>& elem_map);

} // namespace mckay
