// SPDX-License-Identifier: Apache-2.0
#include "mckay/group.hpp"

#include "mckay/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace mckay {

FiniteMatrixGroup FiniteMatrixGroup::enumerate(std::vector<CycMatrix> generators, int max_order,
                                               std::string description) {
    if (generators.empty()) fail("InternalError", "group enumeration needs at least one generator");
    if (max_order < 1) fail("GroupTooLarge", "max_order must be positive");

    const int dim = generators[0].dim();
    const int cond = generators[0].conductor();
    for (const CycMatrix& g : generators) {
        if (g.dim() != dim) fail("DimensionMismatch", "generators of unequal dimension");
        if (g.conductor() != cond) fail("ConductorMismatch", "generators of unequal conductor");
    }
    std::vector<CycElem> gen_dets;
    gen_dets.reserve(generators.size());
    for (const CycMatrix& g : generators) {
        CycElem d = g.det();
        if (d.is_zero()) fail("NotInvertible", "generator with zero determinant");
        gen_dets.push_back(std::move(d));
    }

    FiniteMatrixGroup grp;
    grp.dim_ = dim;
    grp.conductor_ = cond;
    grp.description_ = std::move(description);
    grp.gens_ = std::move(generators);
    const int ng = static_cast<int>(grp.gens_.size());

    grp.elements_.push_back(CycMatrix::identity(dim, cond));
    grp.index_.emplace(grp.elements_[0].key(), 0);
    grp.dets_.push_back(CycElem::one(cond));
    grp.parent_.push_back(-1);
    grp.parent_gen_.push_back(-1);
    grp.left_.assign(ng, {});

    for (std::size_t x = 0; x < grp.elements_.size(); ++x) {
        for (int gi = 0; gi < ng; ++gi) {
            CycMatrix y = grp.gens_[gi] * grp.elements_[x];
            std::string k = y.key();
            auto it = grp.index_.find(k);
            int yi;
            if (it == grp.index_.end()) {
                yi = static_cast<int>(grp.elements_.size());
                if (yi >= max_order) {
                    fail("GroupTooLarge",
                         "closure exceeds " + std::to_string(max_order) + " elements");
                }
                grp.index_.emplace(std::move(k), yi);
                grp.dets_.push_back(gen_dets[gi] * grp.dets_[x]);
                grp.elements_.push_back(std::move(y));
                grp.parent_.push_back(static_cast<int>(x));
                grp.parent_gen_.push_back(gi);
            } else {
                yi = it->second;
            }
            grp.left_[gi].push_back(yi);
        }
    }

    const int n = grp.order();
    grp.gen_idx_.reserve(ng);
    for (int gi = 0; gi < ng; ++gi) grp.gen_idx_.push_back(grp.left_[gi][0]);

    // Inverses: order of each generator gives its inverse as a power; then
    // (g*p)^{-1} = p^{-1}*g^{-1} walks down the BFS tree.
    std::vector<int> gen_inv(ng);
    for (int gi = 0; gi < ng; ++gi) {
        int prev = 0, cur = grp.left_[gi][0];
        while (cur != 0) {
            prev = cur;
            cur = grp.left_[gi][cur];
        }
        gen_inv[gi] = prev;
    }
    grp.inv_.assign(n, 0);
    for (int x = 1; x < n; ++x) {
        grp.inv_[x] = grp.multiply(grp.inv_[grp.parent_[x]], gen_inv[grp.parent_gen_[x]]);
    }

    grp.compute_conjugacy();
    return grp;
}

int FiniteMatrixGroup::multiply(int a, int b) const {
    std::vector<int> word;
    while (a != 0) {
        word.push_back(parent_gen_[a]);
        a = parent_[a];
    }
    int r = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = left_[*it][r];
    return r;
}

std::vector<int> FiniteMatrixGroup::column(int b) const {
    std::vector<int> col(elements_.size());
    col[0] = b;
    for (std::size_t x = 1; x < elements_.size(); ++x) {
        col[x] = left_[parent_gen_[x]][col[parent_[x]]];
    }
    return col;
}

int FiniteMatrixGroup::element_order(int i) const {
    if (i == 0) return 1;
    std::vector<int> col = column(i);
    int cur = i, order = 1;
    while (cur != 0) {
        cur = col[cur];
        ++order;
    }
    return order;
}

int FiniteMatrixGroup::element_index(const CycMatrix& m) const {
    if (m.dim() != dim_) return -1;
    if (m.conductor() == conductor_) {
        auto it = index_.find(m.key());
        return it == index_.end() ? -1 : it->second;
    }
    if (conductor_ % m.conductor() == 0) {
        auto it = index_.find(m.lifted_to(conductor_).key());
        return it == index_.end() ? -1 : it->second;
    }
    // Incommensurate written conductors: compare in the compositum.
    const int big = std::lcm(conductor_, m.conductor());
    CycMatrix lifted = m.lifted_to(big);
    for (int i = 0; i < order(); ++i) {
        if (elements_[i].lifted_to(big) == lifted) return i;
    }
    return -1;
}

bool FiniteMatrixGroup::in_special_linear() const {
    return std::all_of(dets_.begin(), dets_.end(), [](const CycElem& d) { return d.is_one(); });
}

void FiniteMatrixGroup::compute_conjugacy() {
    const int n = order();
    const int ng = static_cast<int>(gens_.size());

    // conj_by_gen[gi][h] = g h g^{-1} in O(1) per element via one column pass.
    std::vector<std::vector<int>> conj(ng);
    for (int gi = 0; gi < ng; ++gi) {
        std::vector<int> col = column(inv_[gen_idx_[gi]]);
        conj[gi].resize(n);
        for (int h = 0; h < n; ++h) conj[gi][h] = left_[gi][col[h]];
    }

    classes_.class_of.assign(n, -1);
    for (int seed = 0; seed < n; ++seed) {
        if (classes_.class_of[seed] >= 0) continue;
        const int cid = static_cast<int>(classes_.members.size());
        std::vector<int> orbit;
        std::queue<int> work;
        classes_.class_of[seed] = cid;
        work.push(seed);
        while (!work.empty()) {
            int h = work.front();
            work.pop();
            orbit.push_back(h);
            for (int gi = 0; gi < ng; ++gi) {
                int image = conj[gi][h];
                if (classes_.class_of[image] < 0) {
                    classes_.class_of[image] = cid;
                    work.push(image);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes_.representative.push_back(orbit.front());
        classes_.members.push_back(std::move(orbit));
    }

    const int k = class_count();
    classes_.inverse_class.resize(k);
    classes_.rep_order.resize(k);
    classes_.power_map.resize(k);
    exponent_ = 1;
    for (int c = 0; c < k; ++c) {
        int rep = classes_.representative[c];
        classes_.inverse_class[c] = classes_.class_of[inv_[rep]];
        std::vector<int> col = column(rep);
        std::vector<int> powers;
        int cur = 0;
        do {
            powers.push_back(classes_.class_of[cur]);
            cur = col[cur];
        } while (cur != 0);
        classes_.rep_order[c] = static_cast<int>(powers.size());
        classes_.power_map[c] = std::move(powers);
        exponent_ = std::lcm(exponent_, classes_.rep_order[c]);
    }
}

GroupPtr enumerate_group(std::vector<CycMatrix> generators, int max_order, std::string description) {
    return std::make_shared<const FiniteMatrixGroup>(
        FiniteMatrixGroup::enumerate(std::move(generators), max_order, std::move(description)));
}

namespace {

/// Ambient indices of every sub element; throws when some element is missing.
std::vector<int> locate_elements(const FiniteMatrixGroup& ambient, const FiniteMatrixGroup& sub) {
    if (sub.dim() != ambient.dim()) {
        fail("DimensionMismatch", "subgroup dimension " + std::to_string(sub.dim()) +
                                      " differs from ambient dimension " + std::to_string(ambient.dim()));
    }
    std::vector<int> inc(sub.order());
    for (int s = 0; s < sub.order(); ++s) {
        int a = ambient.element_index(sub.element(s));
        if (a < 0) {
            fail("NotNormal", "element " + std::to_string(s) + " of '" + sub.description() +
                                  "' is not contained in '" + ambient.description() + "'");
        }
        inc[s] = a;
    }
    return inc;
}

void check_normal(const FiniteMatrixGroup& ambient, const std::vector<int>& inclusion) {
    std::vector<char> in_image(ambient.order(), 0);
    for (int a : inclusion) in_image[a] = 1;
    for (int gidx : ambient.generator_indices()) {
        int ginv = ambient.inverse(gidx);
        for (int a : inclusion) {
            int image = ambient.multiply(gidx, ambient.multiply(a, ginv));
            if (!in_image[image]) {
                fail("NotNormal", "subgroup is not closed under conjugation in '" +
                                      ambient.description() + "'");
            }
        }
    }
}

std::vector<int> fusion_map(const FiniteMatrixGroup& ambient, const FiniteMatrixGroup& sub,
                            const std::vector<int>& inclusion) {
    std::vector<int> fus(sub.class_count());
    for (int c = 0; c < sub.class_count(); ++c) {
        fus[c] = ambient.classes().class_of[inclusion[sub.classes().representative[c]]];
    }
    return fus;
}

} // namespace

NormalEmbedding embed_subgroup(GroupPtr ambient, GroupPtr sub) {
    NormalEmbedding emb;
    emb.ambient = std::move(ambient);
    emb.sub = std::move(sub);
    emb.inclusion = locate_elements(*emb.ambient, *emb.sub);
    check_normal(*emb.ambient, emb.inclusion);
    emb.fusion = fusion_map(*emb.ambient, *emb.sub, emb.inclusion);
    return emb;
}

NormalEmbedding sl_kernel(GroupPtr g) {
    // Greedy generating set for the determinant-1 elements, scanned in index
    // order so the result is deterministic.
    std::vector<int> kernel;
    for (int i = 0; i < g->order(); ++i) {
        if (g->dets()[i].is_one()) kernel.push_back(i);
    }
    std::vector<int> gen_indices;
    std::vector<char> closed(g->order(), 0);
    closed[0] = 1;
    for (int cand : kernel) {
        if (closed[cand]) continue;
        gen_indices.push_back(cand);
        // redo the closure of the chosen generators over ambient indices
        std::fill(closed.begin(), closed.end(), 0);
        closed[0] = 1;
        std::queue<int> work;
        work.push(0);
        while (!work.empty()) {
            int x = work.front();
            work.pop();
            for (int gi : gen_indices) {
                int y = g->multiply(gi, x);
                if (!closed[y]) {
                    closed[y] = 1;
                    work.push(y);
                }
            }
        }
    }

    std::vector<CycMatrix> gens;
    for (int gi : gen_indices) gens.push_back(g->element(gi));
    if (gens.empty()) gens.push_back(CycMatrix::identity(g->dim(), g->conductor()));
    GroupPtr sub = enumerate_group(std::move(gens), g->order() + 1,
                                   "sl_kernel(" + g->description() + ")");
    return embed_subgroup(std::move(g), std::move(sub));
}

std::pair<int, int> cyclic_quotient(const NormalEmbedding& emb) {
    const FiniteMatrixGroup& g = *emb.ambient;
    const int n = g.order();
    std::vector<int> coset_of(n, -1);
    std::vector<int> coset_rep;
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        const int cid = static_cast<int>(coset_rep.size());
        coset_rep.push_back(x);
        for (int l : emb.inclusion) {
            coset_of[g.multiply(x, l)] = cid;
        }
    }
    const int r = static_cast<int>(coset_rep.size());
    if (r * emb.sub->order() != n) fail("InternalError", "coset partition size mismatch");

    auto coset_mul = [&](int c1, int c2) { return coset_of[g.multiply(coset_rep[c1], coset_rep[c2])]; };
    for (int c = 0; c < r; ++c) {
        int cur = c, ord = 1;
        while (cur != 0) {
            cur = coset_mul(cur, c);
            ++ord;
        }
        if (ord == r) return {r, coset_rep[c]};
    }
    fail("QuotientNotCyclic", "quotient of '" + g.description() + "' by '" + emb.sub->description() +
                                  "' of order " + std::to_string(r) + " is not cyclic");
}

GroupPtr scalar_extend(GroupPtr n, int k, int max_order) {
    if (k < 1) fail("InternalError", "scalar order must be positive");
    if (!n->in_special_linear()) {
        fail("NotSpecialLinear", "'" + n->description() + "' has an element with determinant != 1");
    }
    const int cond = std::lcm(n->conductor(), k);
    std::vector<CycMatrix> gens;
    for (const CycMatrix& g : n->generators()) gens.push_back(g.lifted_to(cond));
    gens.push_back(CycMatrix::identity(n->dim(), cond) * CycElem::root_of_unity(k, 1).lifted_to(cond));
    return enumerate_group(std::move(gens), max_order,
                           "extend(" + n->description() + ", k=" + std::to_string(k) + ")");
}

EmbedResult embed_det_inverse(GroupPtr g) {
    std::vector<CycMatrix> gens;
    for (std::size_t i = 0; i < g->generators().size(); ++i) {
        const CycMatrix& m = g->generators()[i];
        gens.push_back(CycMatrix::with_corner(m, m.det().inverse()));
    }
    EmbedResult result;
    result.image = enumerate_group(std::move(gens), g->order() + 1, "embed(" + g->description() + ")");
    if (result.image->order() != g->order()) {
        fail("InternalError", "determinant embedding changed the group order");
    }
    result.elem_map.resize(g->order());
    for (int i = 0; i < g->order(); ++i) {
        CycMatrix fm = CycMatrix::with_corner(g->element(i), g->dets()[i].inverse());
        int idx = result.image->element_index(fm);
        if (idx < 0) fail("InternalError", "embedded element missing from the image group");
        result.elem_map[i] = idx;
    }
    return result;
}

GroupPtr strip_diagonal(GroupPtr g) {
    if (g->dim() < 2) fail("DimensionMismatch", "stripping needs dimension at least 2");
    for (int i = 0; i < g->order(); ++i) {
        if (!g->element(i).is_diagonal()) {
            fail("NotDiagonal", "element " + std::to_string(i) + " of '" + g->description() +
                                    "' is not diagonal");
        }
    }
    if (!g->in_special_linear()) {
        fail("NotSpecialLinear", "'" + g->description() + "' has an element with determinant != 1");
    }
    std::vector<CycMatrix> gens;
    for (const CycMatrix& m : g->generators()) gens.push_back(m.upper_left(g->dim() - 1));
    GroupPtr out = enumerate_group(std::move(gens), g->order() + 1, "strip(" + g->description() + ")");
    if (out->order() != g->order()) {
        fail("InternalError", "diagonal stripping changed the group order");
    }
    return out;
}

} // namespace mckay
