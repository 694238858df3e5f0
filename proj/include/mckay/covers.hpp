// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mckay/quiver.hpp"

namespace mckay {

/// A covering of McKay quivers induced by a normal subgroup with cyclic
/// quotient: pi sends each source vertex to the vertex its character restricts
/// to, and the deck transformations are the twists by the one-dimensional
/// characters trivial on the subgroup.
struct CoveringMap {
    Quiver source;
    Quiver target;
    std::vector<int> vertex_map;    ///< pi: source vertex -> target vertex
    std::vector<Permutation> deck;  ///< twist actions; empty for unverified composites
    int deck_order = 0;
};

/// Outcome of the independent covering checks; empty violations means ok.
struct CoverReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Build the covering source -> target from an embedding whose quotient is
/// cyclic and whose subgroup characters all extend.
CoveringMap build_covering(const NormalEmbedding& emb, const CharacterTable& ambient_table,
                           const CharacterTable& sub_table, const Quiver& source,
                           const Quiver& target);

/// Check the covering axioms from scratch: fiber sizes, free and transitive
/// deck action, arrow bijections fiber by fiber, degree compatibility.
CoverReport verify_regular_covering(const CoveringMap& c);

/// Composite with vertex map c2.pi after c1.pi; the deck is left empty and the
/// composite should be confirmed with verify_regular_covering.
CoveringMap compose_coverings(const CoveringMap& c1, const CoveringMap& c2);

/// Composite whose deck is regenerated from the embedding of the composite
/// tower (sub of c2 inside ambient of c1).
CoveringMap compose_coverings(const CoveringMap& c1, const CoveringMap& c2,
                              const NormalEmbedding& composite_emb,
                              const CharacterTable& ambient_table,
                              const CharacterTable& sub_table);

} // namespace mckay
