// SPDX-License-Identifier: Apache-2.0
#include "mckay/covers.hpp"

#include "mckay/error.hpp"

#include <algorithm>
#include <sstream>

namespace mckay {

CoveringMap build_covering(const NormalEmbedding& emb, const CharacterTable& ambient_table,
                           const CharacterTable& sub_table, const Quiver& source,
                           const Quiver& target) {
    const int kg = static_cast<int>(ambient_table.rows.size());
    const int kl = static_cast<int>(sub_table.rows.size());
    auto [r, coset_gen] = cyclic_quotient(emb);
    (void)coset_gen;

    RestrictionReport rep = restrict_and_check_extendible(emb, ambient_table, sub_table);
    for (int j = 0; j < kl; ++j) {
        if (!rep.extendible[j]) {
            fail("NotExtendible", "subgroup character " + std::to_string(j) + " (degree " +
                                      std::to_string(sub_table.degrees[j]) +
                                      ") does not extend to the ambient group");
        }
    }
    if (kg != kl * r) {
        fail("InternalError", "vertex counts are incompatible with the quotient order");
    }

    CoveringMap c;
    c.source = source;
    c.target = target;
    c.deck_order = r;

    // pi: each ambient row restricts to an irreducible row of the subgroup.
    for (int i = 0; i < kg; ++i) {
        ClassFunction restricted;
        restricted.group = emb.sub;
        for (int cc = 0; cc < emb.sub->class_count(); ++cc) {
            restricted.values.push_back(ambient_table.rows[i].values[emb.fusion[cc]]);
        }
        int j = sub_table.row_index(restricted);
        if (j < 0) {
            fail("RowNotFound", "restriction of ambient row " + std::to_string(i) +
                                    " is not an irreducible subgroup row");
        }
        c.vertex_map.push_back(j);
    }

    // Deck transformations: twist by each one-dimensional character trivial on
    // the subgroup (the trivial row is always first).
    if (static_cast<int>(rep.deck_characters.size()) != r) {
        fail("InternalError", "number of deck characters differs from the quotient order");
    }
    for (int beta : rep.deck_characters) {
        Permutation p;
        for (int i = 0; i < kg; ++i) {
            int image = ambient_table.row_index(
                pointwise_product(ambient_table.rows[i], ambient_table.rows[beta]));
            if (image < 0) {
                fail("RowNotFound", "twist of row " + std::to_string(i) + " by deck character " +
                                        std::to_string(beta) + " is not an irreducible row");
            }
            p.images.push_back(image);
        }
        c.deck.push_back(std::move(p));
    }

    // The deck group must be cyclic of order r: some element generates it.
    bool cyclic = false;
    for (const Permutation& d : c.deck) {
        Permutation acc = d;
        std::vector<std::vector<int>> powers = {acc.images};
        while (!acc.is_identity()) {
            acc = compose(d, acc);
            powers.push_back(acc.images);
        }
        if (static_cast<int>(powers.size()) != r) continue;
        bool all_found = true;
        for (const Permutation& other : c.deck) {
            if (std::find(powers.begin(), powers.end(), other.images) == powers.end()) {
                all_found = false;
                break;
            }
        }
        if (all_found) {
            cyclic = true;
            break;
        }
    }
    if (!cyclic) fail("InternalError", "deck transformations do not form a cyclic group");
    return c;
}

namespace {

void complain(CoverReport& rep, std::string what) {
    rep.ok = false;
    rep.violations.push_back(std::move(what));
}

} // namespace

CoverReport verify_regular_covering(const CoveringMap& c) {
    CoverReport rep;
    const int ks = c.source.vertex_count();
    const int kt = c.target.vertex_count();

    if (static_cast<int>(c.vertex_map.size()) != ks) {
        complain(rep, "vertex map does not cover every source vertex");
        return rep;
    }
    for (int v = 0; v < ks; ++v) {
        if (c.vertex_map[v] < 0 || c.vertex_map[v] >= kt) {
            complain(rep, "vertex map sends " + std::to_string(v) + " outside the target");
            return rep;
        }
    }

    std::vector<std::vector<int>> fiber(kt);
    for (int v = 0; v < ks; ++v) fiber[c.vertex_map[v]].push_back(v);
    for (int w = 0; w < kt; ++w) {
        if (static_cast<int>(fiber[w].size()) != c.deck_order) {
            complain(rep, "fiber over target vertex " + std::to_string(w) + " has size " +
                              std::to_string(fiber[w].size()) + ", expected " +
                              std::to_string(c.deck_order));
        }
    }

    for (int v = 0; v < ks; ++v) {
        if (c.source.degrees[v] != c.target.degrees[c.vertex_map[v]]) {
            complain(rep, "degree of source vertex " + std::to_string(v) +
                              " differs from its image");
        }
    }

    if (!c.deck.empty()) {
        for (std::size_t t = 0; t < c.deck.size(); ++t) {
            const Permutation& d = c.deck[t];
            if (!is_automorphism(c.source, d)) {
                complain(rep, "deck transformation " + std::to_string(t) +
                                  " is not an automorphism of the source quiver");
                continue;
            }
            for (int v = 0; v < ks; ++v) {
                if (c.vertex_map[d.apply(v)] != c.vertex_map[v]) {
                    complain(rep, "deck transformation " + std::to_string(t) +
                                      " does not preserve the fibers");
                    break;
                }
            }
        }
        // free and transitive on each fiber: every ordered pair is connected by
        // exactly one deck transformation
        for (int w = 0; w < kt; ++w) {
            for (int v : fiber[w]) {
                for (int u : fiber[w]) {
                    int count = 0;
                    for (const Permutation& d : c.deck) {
                        if (d.size() == ks && d.apply(v) == u) ++count;
                    }
                    if (count != 1) {
                        complain(rep, "deck action is not free and transitive on the fiber over " +
                                          std::to_string(w) + ": " + std::to_string(count) +
                                          " transformations send " + std::to_string(v) + " to " +
                                          std::to_string(u));
                    }
                }
            }
        }
    }

    // Arrow counts: arrows out of v into a whole fiber match the target, and
    // the same for arrows into v from a whole fiber.
    for (int v = 0; v < ks; ++v) {
        for (int w = 0; w < kt; ++w) {
            long long out_sum = 0, in_sum = 0;
            for (int u : fiber[w]) {
                out_sum += c.source.arrows[v][u];
                in_sum += c.source.arrows[u][v];
            }
            if (out_sum != c.target.arrows[c.vertex_map[v]][w]) {
                complain(rep, "arrows out of " + std::to_string(v) + " into the fiber over " +
                                  std::to_string(w) + " sum to " + std::to_string(out_sum) +
                                  ", target has " +
                                  std::to_string(c.target.arrows[c.vertex_map[v]][w]));
            }
            if (in_sum != c.target.arrows[w][c.vertex_map[v]]) {
                complain(rep, "arrows from the fiber over " + std::to_string(w) + " into " +
                                  std::to_string(v) + " sum to " + std::to_string(in_sum) +
                                  ", target has " +
                                  std::to_string(c.target.arrows[w][c.vertex_map[v]]));
            }
        }
    }
    return rep;
}

namespace {

void check_composable(const CoveringMap& c1, const CoveringMap& c2) {
    const Quiver& mid1 = c1.target;
    const Quiver& mid2 = c2.source;
    if (mid1.vertex_count() != mid2.vertex_count() || mid1.degrees != mid2.degrees ||
        mid1.arrows != mid2.arrows) {
        fail("TargetSourceMismatch",
             "target of the first covering differs from the source of the second");
    }
}

} // namespace

CoveringMap compose_coverings(const CoveringMap& c1, const CoveringMap& c2) {
    check_composable(c1, c2);
    CoveringMap c;
    c.source = c1.source;
    c.target = c2.target;
    for (int v : c1.vertex_map) c.vertex_map.push_back(c2.vertex_map[v]);
    c.deck_order = c1.deck_order * c2.deck_order;
    return c;
}

CoveringMap compose_coverings(const CoveringMap& c1, const CoveringMap& c2,
                              const NormalEmbedding& composite_emb,
                              const CharacterTable& ambient_table,
                              const CharacterTable& sub_table) {
    CoveringMap plain = compose_coverings(c1, c2);
    CoveringMap rebuilt =
        build_covering(composite_emb, ambient_table, sub_table, plain.source, plain.target);
    if (rebuilt.vertex_map != plain.vertex_map || rebuilt.deck_order != plain.deck_order) {
        fail("InternalError", "composite covering disagrees with the direct construction");
    }
    return rebuilt;
}

} // namespace mckay
