// SPDX-License-Identifier: Apache-2.0
#include "mckay/acceptance.hpp"

#include "mckay/covers.hpp"
#include "mckay/error.hpp"
#include "mckay/numeric.hpp"
#include "mckay/presets.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

namespace mckay {

namespace {

// ---------------------------------------------------------------------------
// quiver-shape helpers

/// For a quiver whose rows each have a single nonzero entry of the given
/// multiplicity at distinct columns: the successor map.
std::optional<Permutation> successor_permutation(const Quiver& q, long long multiplicity) {
    Permutation s;
    for (int i = 0; i < q.vertex_count(); ++i) {
        int target = -1;
        for (int j = 0; j < q.vertex_count(); ++j) {
            if (q.arrows[i][j] == 0) continue;
            if (q.arrows[i][j] != multiplicity || target != -1) return std::nullopt;
            target = j;
        }
        if (target == -1) return std::nullopt;
        s.images.push_back(target);
    }
    if (!is_bijection(s.images)) return std::nullopt;
    return s;
}

bool is_single_cycle(const Permutation& p) {
    int i = 0, steps = 0;
    do {
        i = p.apply(i);
        ++steps;
    } while (i != 0 && steps <= p.size());
    return steps == p.size();
}

Permutation perm_power(const Permutation& p, int n) {
    Permutation acc;
    acc.images.resize(p.images.size());
    std::iota(acc.images.begin(), acc.images.end(), 0);
    for (int t = 0; t < n; ++t) acc = compose(p, acc);
    return acc;
}

/// Backtracking search for a degree-preserving vertex matching a -> b.
bool find_matching(const Quiver& a, const Quiver& b, Permutation& out) {
    const int k = a.vertex_count();
    if (b.vertex_count() != k) return false;
    std::vector<int> img(k, -1);
    std::vector<char> used(k, 0);
    auto consistent = [&](int i) {
        if (b.degrees[img[i]] != a.degrees[i]) return false;
        for (int j = 0; j < k; ++j) {
            if (img[j] == -1) continue;
            if (b.arrows[img[i]][img[j]] != a.arrows[i][j]) return false;
            if (b.arrows[img[j]][img[i]] != a.arrows[j][i]) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int v = 0; v < k; ++v) {
            if (used[v]) continue;
            img[i] = v;
            used[v] = 1;
            if (consistent(i) && self(self, i + 1)) return true;
            img[i] = -1;
            used[v] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return false;
    out.images = img;
    return true;
}

// ---------------------------------------------------------------------------
// reference diagrams: doubled affine ADE adjacency with vertex marks

struct Diagram {
    std::vector<int> marks;
    std::vector<std::pair<int, int>> edges; ///< undirected; doubled on both directions
};

Quiver diagram_double_quiver(const Diagram& d) {
    Quiver q;
    q.degrees = d.marks;
    const int k = static_cast<int>(d.marks.size());
    q.arrows.assign(k, std::vector<long long>(k, 0));
    for (auto [u, v] : d.edges) {
        ++q.arrows[u][v];
        ++q.arrows[v][u];
    }
    return q;
}

Diagram affine_a(int n) { // n >= 2 vertices in a cycle; n = 2 degenerates to a double edge
    Diagram d;
    d.marks.assign(n, 1);
    if (n == 2) {
        d.edges = {{0, 1}, {0, 1}};
    } else {
        for (int i = 0; i < n; ++i) d.edges.push_back({i, (i + 1) % n});
    }
    return d;
}

Diagram affine_d(int m) { // m >= 4; m+1 vertices: a path with forks at both ends
    Diagram d;
    const int mids = m - 3;
    // vertices: 0,1 fork | 2 .. mids+1 path | mids+2, mids+3 fork
    d.marks.assign(m + 1, 2);
    d.marks[0] = d.marks[1] = d.marks[mids + 2] = d.marks[mids + 3] = 1;
    d.edges.push_back({0, 2});
    d.edges.push_back({1, 2});
    for (int i = 2; i < mids + 1; ++i) d.edges.push_back({i, i + 1});
    d.edges.push_back({mids + 1, mids + 2});
    d.edges.push_back({mids + 1, mids + 3});
    return d;
}

Diagram affine_e(int rank) { // 6, 7, or 8
    Diagram d;
    auto arm = [&](int center, const std::vector<int>& marks) {
        int prev = center;
        for (int mk : marks) {
            int v = static_cast<int>(d.marks.size());
            d.marks.push_back(mk);
            d.edges.push_back({prev, v});
            prev = v;
        }
    };
    if (rank == 6) {
        d.marks = {3};
        arm(0, {2, 1});
        arm(0, {2, 1});
        arm(0, {2, 1});
    } else if (rank == 7) {
        d.marks = {4};
        arm(0, {3, 2, 1});
        arm(0, {3, 2, 1});
        arm(0, {2});
    } else {
        d.marks = {6};
        arm(0, {5, 4, 3, 2, 1});
        arm(0, {4, 2});
        arm(0, {3});
    }
    return d;
}

// ---------------------------------------------------------------------------
// the preset sweep shared by several checks

struct Entry {
    GroupPtr group;
    CharacterTable table;
    Quiver quiver;
};

std::vector<Entry> sweep_presets() {
    std::vector<Entry> entries;
    auto add = [&](const std::string& name, int n) {
        Entry e{.group = build_preset(name, n), .table = {}, .quiver = {}};
        e.table = CharacterTable::compute(e.group);
        e.quiver = build_mckay(e.table);
        entries.push_back(std::move(e));
    };
    for (const PresetInfo& p : preset_catalog()) {
        if (!p.parameterized) {
            add(p.name, 0);
        } else if (p.name == "binary_dihedral") {
            for (int n = 2; n <= 5; ++n) add(p.name, n);
        } else if (p.name == "trivial") {
            for (int n = 1; n <= 4; ++n) add(p.name, n);
        } else {
            for (int n = 2; n <= 8; ++n) add(p.name, n);
        }
    }
    return entries;
}

const Entry* find_entry(const std::vector<Entry>& entries, const std::string& desc) {
    for (const Entry& e : entries) {
        if (e.group->description() == desc) return &e;
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// individual checks; each returns true and leaves `detail` empty on success

bool check_ade(const std::vector<Entry>& entries, std::string& detail) {
    struct Case {
        std::string desc;
        Diagram diagram;
    };
    std::vector<Case> cases;
    for (int n = 2; n <= 8; ++n) {
        cases.push_back({"cyclic_sl2(" + std::to_string(n) + ")", affine_a(n)});
    }
    for (int n = 2; n <= 5; ++n) {
        cases.push_back({"binary_dihedral(" + std::to_string(n) + ")", affine_d(n + 2)});
    }
    cases.push_back({"binary_tetrahedral", affine_e(6)});
    cases.push_back({"binary_octahedral", affine_e(7)});
    cases.push_back({"binary_icosahedral", affine_e(8)});
    for (const Case& c : cases) {
        const Entry* e = find_entry(entries, c.desc);
        if (e == nullptr) {
            detail = c.desc + ": preset missing from the sweep";
            return false;
        }
        const Quiver& q = e->quiver;
        for (int i = 0; i < q.vertex_count(); ++i) {
            for (int j = 0; j < q.vertex_count(); ++j) {
                if (q.arrows[i][j] != q.arrows[j][i]) {
                    detail = c.desc + ": arrow matrix is not symmetric";
                    return false;
                }
            }
            long long row = 0;
            for (int j = 0; j < q.vertex_count(); ++j) row += q.arrows[i][j] * q.degrees[j];
            if (row != 2ll * q.degrees[i]) {
                detail = c.desc + ": arrow sums do not double the degrees";
                return false;
            }
        }
        if (!q.nakayama || !q.nakayama->is_identity()) {
            detail = c.desc + ": determinant twist is not the identity";
            return false;
        }
        Quiver ref = diagram_double_quiver(c.diagram);
        Permutation m;
        if (!find_matching(q, ref, m)) {
            detail = c.desc + ": no degree-preserving matching onto the reference diagram";
            return false;
        }
    }
    return true;
}

bool check_gl1_tower(std::string& detail) {
    for (int n = 2; n <= 8; ++n) {
        const std::string tag = "cyclic_gl1(" + std::to_string(n) + ")";
        GroupPtr g = build_preset("cyclic_gl1", n);
        CharacterTable t = CharacterTable::compute(g);
        Quiver q = build_mckay(t);
        auto s = successor_permutation(q, 1);
        if (!s || !is_single_cycle(*s)) {
            detail = tag + ": quiver is not a single-arrow oriented cycle";
            return false;
        }
        if (!q.nakayama || q.nakayama->images != s->images) {
            detail = tag + ": twist does not step one vertex along the cycle";
            return false;
        }
        Quiver doubled = add_nakayama_arrows(q);
        Permutation m;
        if (!find_matching(doubled, diagram_double_quiver(affine_a(n)), m)) {
            detail = tag + ": twist arrows do not produce the doubled cycle";
            return false;
        }
        EmbedResult emb = embed_det_inverse(g);
        CharacterTable te = CharacterTable::compute(emb.image);
        Permutation match = induced_matching(t, te, emb.elem_map);
        if (!quiver_equal(doubled, build_mckay(te), match)) {
            detail = tag + ": embedded quiver differs from the twist-arrow quiver";
            return false;
        }
    }
    return true;
}

bool check_order4_fixtures(const std::vector<Entry>& entries, std::string& detail) {
    const Entry* neg = find_entry(entries, "neg_identity_sl2");
    const Entry* sc = find_entry(entries, "scalar_i_gl2");
    const Entry* kl = find_entry(entries, "klein_gl2");
    if (neg == nullptr || sc == nullptr || kl == nullptr) {
        detail = "an order-4 fixture is missing from the sweep";
        return false;
    }
    if (neg->quiver.arrows != std::vector<std::vector<long long>>{{0, 2}, {2, 0}}) {
        detail = "neg_identity_sl2: arrows differ from the doubled pair";
        return false;
    }

    auto s4 = successor_permutation(sc->quiver, 2);
    if (!s4 || !is_single_cycle(*s4)) {
        detail = "scalar_i_gl2: not a doubled oriented 4-cycle";
        return false;
    }
    if (!sc->quiver.nakayama || sc->quiver.nakayama->images != perm_power(*s4, 2).images) {
        detail = "scalar_i_gl2: twist is not the double step";
        return false;
    }

    {
        const Quiver& q = kl->quiver;
        const Permutation& sigma = *q.nakayama;
        if (sigma.order() != 2) {
            detail = "klein_gl2: twist is not an involution";
            return false;
        }
        for (int i = 0; i < 4; ++i) {
            long long out = 0;
            for (int j = 0; j < 4; ++j) {
                if (q.arrows[i][j] != q.arrows[j][i] || q.arrows[i][j] > 1) {
                    detail = "klein_gl2: not a single-arrow double cycle";
                    return false;
                }
                out += q.arrows[i][j];
            }
            if (out != 2 || q.arrows[i][i] != 0 || sigma.apply(i) == i ||
                q.arrows[i][sigma.apply(i)] != 0) {
                detail = "klein_gl2: twist does not send each vertex to the opposite one";
                return false;
            }
        }
    }

    // embedded images: doubled oriented 4-cycle gains the chords sigma(i) -> i,
    // and the Klein double cycle becomes all-ones off the diagonal
    {
        EmbedResult emb = embed_det_inverse(sc->group);
        Quiver q = build_mckay(emb.image);
        auto s = successor_permutation(sc->quiver, 2);
        Permutation match = induced_matching(sc->table, CharacterTable::compute(emb.image), emb.elem_map);
        Quiver expected = sc->quiver;
        expected.nakayama.reset();
        for (int i = 0; i < 4; ++i) ++expected.arrows[sc->quiver.nakayama->apply(i)][i];
        if (!quiver_equal(expected, q, match)) {
            detail = "embedded scalar_i_gl2: adjacency differs from cycle plus chords";
            return false;
        }
        // structural shape in successor coordinates: 2 to s(i), 1 to s^2(i)
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                long long want = 0;
                if (j == s->apply(i)) want = 2;
                if (j == s->apply(s->apply(i))) want = 1;
                if (expected.arrows[i][j] != want) {
                    detail = "embedded scalar_i_gl2: chord pattern mismatch";
                    return false;
                }
            }
        }
    }
    {
        EmbedResult emb = embed_det_inverse(kl->group);
        Quiver q = build_mckay(emb.image);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                if (q.arrows[i][j] != (i == j ? 0 : 1)) {
                    detail = "embedded klein_gl2: adjacency is not all-ones off the diagonal";
                    return false;
                }
            }
        }
        if (!q.nakayama->is_identity()) {
            detail = "embedded klein_gl2: twist of the special linear image is not trivial";
            return false;
        }
    }
    return true;
}

bool check_scalar6_pipeline(std::string& detail) {
    GroupPtr triv = build_preset("trivial", 4);
    Quiver qt = build_mckay(triv);
    if (qt.arrows != std::vector<std::vector<long long>>{{4}}) {
        detail = "trivial(4): quiver is not a single vertex with four loops";
        return false;
    }
    GroupPtr ext = scalar_extend(triv, 6);
    CharacterTable t = CharacterTable::compute(ext);
    Quiver q = build_mckay(t);
    auto s = successor_permutation(q, 4);
    if (!s || !is_single_cycle(*s) || q.vertex_count() != 6) {
        detail = "extension by the sixth roots: quiver is not a 6-cycle with 4-fold arrows";
        return false;
    }
    if (!q.nakayama || q.nakayama->images != perm_power(*s, 4).images) {
        detail = "extension by the sixth roots: twist is not the four-step rotation";
        return false;
    }
    EmbedResult emb = embed_det_inverse(ext);
    CharacterTable te = CharacterTable::compute(emb.image);
    Quiver qe = build_mckay(te);
    Permutation match = induced_matching(t, te, emb.elem_map);
    Quiver expected = q;
    expected.nakayama.reset();
    for (int i = 0; i < 6; ++i) ++expected.arrows[q.nakayama->apply(i)][i];
    if (!quiver_equal(expected, qe, match)) {
        detail = "embedded extension: adjacency differs from the expected weighted cycle";
        return false;
    }
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            long long want = 0;
            if (j == s->apply(i)) want = 4;
            int two = s->apply(s->apply(i));
            if (j == two) want += 1;
            if (expected.arrows[i][j] != want) {
                detail = "embedded extension: chord pattern mismatch";
                return false;
            }
        }
    }
    return true;
}

struct BuiltCover {
    CoveringMap map;
    int expected_order = 0;
};

BuiltCover make_cover(const GroupPtr& big, const GroupPtr& small) {
    NormalEmbedding emb = embed_subgroup(big, small);
    CharacterTable tg = CharacterTable::compute(big);
    CharacterTable tl = CharacterTable::compute(small);
    BuiltCover b;
    b.map = build_covering(emb, tg, tl, build_mckay(tg), build_mckay(tl));
    b.expected_order = big->order() / small->order();
    return b;
}

bool check_coverings(std::string& detail) {
    struct Pair {
        std::string tag;
        GroupPtr big, small;
    };
    std::vector<Pair> pairs;
    pairs.push_back({"scalar_i_gl2 over neg_identity_sl2", build_preset("scalar_i_gl2"),
                     build_preset("neg_identity_sl2")});
    pairs.push_back({"dbrane_scalar6 over trivial(4)", build_preset("dbrane_scalar6"),
                     build_preset("trivial", 4)});
    pairs.push_back({"klein_gl2 over neg_identity_sl2", build_preset("klein_gl2"),
                     build_preset("neg_identity_sl2")});
    for (int n = 2; n <= 5; ++n) {
        for (int k = 2; k <= 4; ++k) {
            GroupPtr base = build_preset("cyclic_sl2", n);
            pairs.push_back({"extend(cyclic_sl2(" + std::to_string(n) + "), k=" + std::to_string(k) +
                                 ") over its base",
                             scalar_extend(base, k), base});
        }
    }
    for (int k = 2; k <= 4; ++k) {
        GroupPtr base = build_preset("binary_tetrahedral");
        pairs.push_back(
            {"extend(binary_tetrahedral, k=" + std::to_string(k) + ") over its base",
             scalar_extend(base, k), base});
    }
    for (const Pair& p : pairs) {
        BuiltCover b;
        try {
            b = make_cover(p.big, p.small);
        } catch (const Error& e) {
            detail = p.tag + ": " + e.what();
            return false;
        }
        if (b.map.deck_order != b.expected_order) {
            detail = p.tag + ": deck order " + std::to_string(b.map.deck_order) + ", expected " +
                     std::to_string(b.expected_order);
            return false;
        }
        CoverReport rep = verify_regular_covering(b.map);
        if (!rep.ok) {
            detail = p.tag + ": " + rep.violations.front();
            return false;
        }
    }
    return true;
}

bool check_composition(std::string& detail) {
    GroupPtr top = build_preset("scalar_i_gl2");
    GroupPtr mid = build_preset("neg_identity_sl2");
    GroupPtr bottom = build_preset("trivial", 2);
    CoveringMap c1 = make_cover(top, mid).map;
    CoveringMap c2 = make_cover(mid, bottom).map;
    CoveringMap direct = make_cover(top, bottom).map;
    CoveringMap comp = compose_coverings(c1, c2);
    if (comp.vertex_map != direct.vertex_map) {
        detail = "composite vertex map differs from the direct covering";
        return false;
    }
    if (comp.deck_order != 4 || direct.deck_order != 4) {
        detail = "composite deck order is not 4";
        return false;
    }
    return true;
}

bool check_not_extendible(std::string& detail) {
    GroupPtr big = build_preset("q8");
    GroupPtr small = build_preset("cyclic4");
    CharacterTable tg = CharacterTable::compute(big);
    CharacterTable tl = CharacterTable::compute(small);
    if (tg.rows.size() != 5 || tl.rows.size() != 4) {
        detail = "vertex counts are not 5 over 4";
        return false;
    }
    NormalEmbedding emb = embed_subgroup(big, small);
    try {
        build_covering(emb, tg, tl, build_mckay(tg), build_mckay(tl));
    } catch (const Error& e) {
        if (e.name() == std::string("NotExtendible")) return true;
        detail = std::string("unexpected error: ") + e.what();
        return false;
    }
    detail = "covering was built although two characters cannot extend";
    return false;
}

bool check_character_invariants(const std::vector<Entry>& entries, std::string& detail) {
    for (const Entry& e : entries) {
        const CharacterTable& t = e.table;
        const int k = e.group->class_count();
        long long sum = 0;
        for (int d : t.degrees) sum += static_cast<long long>(d) * d;
        if (sum != e.group->order()) {
            detail = e.group->description() + ": degree squares sum to " + std::to_string(sum);
            return false;
        }
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                if (inner_product(t.rows[a], t.rows[b]) != Rational(a == b ? 1 : 0)) {
                    detail = e.group->description() + ": row orthogonality fails";
                    return false;
                }
            }
        }
        for (int c = 0; c < k; ++c) {
            for (int cp = 0; cp < k; ++cp) {
                CycElem acc;
                for (int i = 0; i < k; ++i) {
                    acc += t.rows[i].values[c] * t.rows[i].values[cp].conjugate();
                }
                Rational expect =
                    (c == cp)
                        ? Rational(e.group->order()) / Rational(e.group->classes().members[c].size())
                        : Rational(0);
                if (!acc.is_rational() || acc.rational_value() != expect) {
                    detail = e.group->description() + ": column orthogonality fails";
                    return false;
                }
            }
        }
        for (int i = 0; i < k; ++i) {
            for (int c = 0; c < k; ++c) {
                if (t.rows[i].values[c].to_modp(t.prime, t.generator).value != t.modp_rows[i][c]) {
                    detail = e.group->description() + ": lifted row disagrees with its residue";
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_numeric_oracle(const std::vector<Entry>& entries, std::string& detail) {
    for (const Entry& e : entries) {
        const int k = e.group->class_count();
        // numeric character values and numeric traces of the class representatives
        std::vector<std::vector<std::complex<double>>> rows(k,
                                                            std::vector<std::complex<double>>(k));
        std::vector<std::complex<double>> chi(k);
        for (int i = 0; i < k; ++i) {
            for (int c = 0; c < k; ++c) rows[i][c] = numeric_value(e.table.rows[i].values[c]);
        }
        for (int c = 0; c < k; ++c) {
            const CycMatrix& rep = e.group->element(e.group->classes().representative[c]);
            std::complex<double> tr = 0;
            for (int d = 0; d < rep.dim(); ++d) tr += numeric_value(rep.at(d, d));
            chi[c] = tr;
        }
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                std::complex<double> acc = 0;
                for (int c = 0; c < k; ++c) {
                    acc += static_cast<double>(e.group->classes().members[c].size()) * chi[c] *
                           rows[i][c] * std::conj(rows[j][c]);
                }
                acc /= static_cast<double>(e.group->order());
                double exact = static_cast<double>(e.quiver.arrows[i][j]);
                if (std::abs(acc.real() - exact) > 1e-6 || std::abs(acc.imag()) > 1e-6) {
                    detail = e.group->description() + ": numeric multiplicity differs at (" +
                             std::to_string(i) + ", " + std::to_string(j) + ")";
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_embedding_identity(const std::vector<Entry>& entries, std::string& detail) {
    for (const Entry& e : entries) {
        if (e.group->dim() > 4) continue;
        EmbedResult emb = embed_det_inverse(e.group);
        CharacterTable te = CharacterTable::compute(emb.image);
        Permutation match = induced_matching(e.table, te, emb.elem_map);
        if (!quiver_equal(add_nakayama_arrows(e.quiver), build_mckay(te), match)) {
            detail = e.group->description() + ": embedded quiver differs from the twist-arrow quiver";
            return false;
        }
    }
    return true;
}

bool check_twist_automorphism(const std::vector<Entry>& entries, std::string& detail) {
    for (const Entry& e : entries) {
        if (!e.quiver.nakayama || !is_automorphism(e.quiver, *e.quiver.nakayama)) {
            detail = e.group->description() + ": twist is not a quiver automorphism";
            return false;
        }
    }
    return true;
}

struct ItemOutcome {
    bool ok = true;
};

ItemOutcome run_items(std::ostream& out) {
    ItemOutcome outcome;
    int index = 0;
    auto report = [&](const std::string& label, bool ok, const std::string& detail) {
        ++index;
        out << (ok ? "PASS" : "FAIL") << " " << index << ": " << label;
        if (!ok && !detail.empty()) out << " — " << detail;
        out << "\n";
        outcome.ok = outcome.ok && ok;
    };
    auto guarded = [&](const std::string& label, auto&& fn) {
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        report(label, ok, detail);
    };

    std::vector<Entry> entries = sweep_presets();

    guarded("special linear presets give doubled affine ADE diagrams with trivial twist",
            [&](std::string& d) { return check_ade(entries, d); });
    guarded("rank-one cyclic tower: oriented cycle, one-step twist, doubled cycle, embedding",
            [&](std::string& d) { return check_gl1_tower(d); });
    guarded("order-4 fixtures and their special linear images",
            [&](std::string& d) { return check_order4_fixtures(entries, d); });
    guarded("scalar sixth-root pipeline up to the weighted projective quiver",
            [&](std::string& d) { return check_scalar6_pipeline(d); });
    guarded("regular coverings build and verify for the scalar towers",
            [&](std::string& d) { return check_coverings(d); });
    guarded("covering composition matches the directly built four-fold covering",
            [&](std::string& d) { return check_composition(d); });
    guarded("non-extendible subgroup characters are rejected",
            [&](std::string& d) { return check_not_extendible(d); });
    guarded("character tables: degree sums, orthogonality, residue consistency",
            [&](std::string& d) { return check_character_invariants(entries, d); });
    guarded("floating-point cross-check reproduces every arrow multiplicity",
            [&](std::string& d) { return check_numeric_oracle(entries, d); });
    guarded("block-diagonal embedding equals adding twist arrows on every preset",
            [&](std::string& d) { return check_embedding_identity(entries, d); });
    guarded("determinant twist is an automorphism of every preset quiver",
            [&](std::string& d) { return check_twist_automorphism(entries, d); });
    return outcome;
}

} // namespace

bool run_acceptance(std::ostream& out) {
    std::ostringstream first, second;
    ItemOutcome items = run_items(first);
    run_items(second);
    out << first.str();

    std::string detail;
    bool deterministic = first.str() == second.str();
    if (!deterministic) detail = "two in-process runs produced different logs";
    if (deterministic) {
        Quiver q1 = build_mckay(build_preset("q8"));
        Quiver q2 = build_mckay(build_preset("q8"));
        if (export_json(q1) != export_json(q2) || export_dot(q1) != export_dot(q2)) {
            deterministic = false;
            detail = "repeated exports differ";
        }
    }
    out << (deterministic ? "PASS" : "FAIL") << " 12: repeated runs are byte-identical";
    if (!deterministic) out << " — " << detail;
    out << "\n";
    return items.ok && deterministic;
}

} // namespace mckay
