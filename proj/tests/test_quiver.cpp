// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mckay/error.hpp"
#include "mckay/groupfile.hpp"
#include "mckay/quiver.hpp"

#include <algorithm>
#include <numeric>

using namespace mckay;

namespace {

GroupPtr group_of(const std::string& text, const std::string& desc) {
    return enumerate_group(parse_group_text(text).generators, 10000, desc);
}

GroupPtr trivial_gl(int m) {
    std::string rows = "[";
    for (int i = 0; i < m; ++i) {
        rows += "[";
        for (int j = 0; j < m; ++j) {
            rows += (i == j) ? "\"1\"" : "\"0\"";
            if (j + 1 < m) rows += ", ";
        }
        rows += "]";
        if (i + 1 < m) rows += ", ";
    }
    rows += "]";
    return group_of("conductor = 1\ndimension = " + std::to_string(m) +
                        "\n[[generator]]\nrows = " + rows + "\n",
                    "trivial(" + std::to_string(m) + ")");
}

GroupPtr neg_identity_sl2() {
    return group_of("conductor = 2\ndimension = 2\n[[generator]]\nrows = [[\"-1\", \"0\"], [\"0\", \"-1\"]]\n",
                    "neg_identity_sl2");
}

GroupPtr scalar_i_gl2() {
    return group_of("conductor = 4\ndimension = 2\n[[generator]]\nrows = [[\"z\", \"0\"], [\"0\", \"z\"]]\n",
                    "scalar_i_gl2");
}

GroupPtr klein_gl2() {
    return group_of("conductor = 2\ndimension = 2\n"
                    "[[generator]]\nrows = [[\"-1\", \"0\"], [\"0\", \"-1\"]]\n"
                    "[[generator]]\nrows = [[\"1\", \"0\"], [\"0\", \"-1\"]]\n",
                    "klein_gl2");
}

GroupPtr cyclic_sl2(int n) {
    return group_of("conductor = " + std::to_string(n) + "\ndimension = 2\n[[generator]]\nrows = [[\"z\", \"0\"], [\"0\", \"z^" +
                        std::to_string(n - 1) + "\"]]\n",
                    "cyclic_sl2(" + std::to_string(n) + ")");
}

GroupPtr cyclic_gl1(int n) {
    return group_of("conductor = " + std::to_string(n) + "\ndimension = 1\n[[generator]]\nrows = [[\"z\"]]\n",
                    "cyclic_gl1(" + std::to_string(n) + ")");
}

GroupPtr q8() {
    return group_of("conductor = 4\ndimension = 2\n"
                    "[[generator]]\nrows = [[\"z\", \"0\"], [\"0\", \"z^3\"]]\n"
                    "[[generator]]\nrows = [[\"0\", \"1\"], [\"-1\", \"0\"]]\n",
                    "q8");
}

GroupPtr dbrane_scalar6() {
    return group_of("conductor = 6\ndimension = 4\n"
                    "[[generator]]\nrows = [[\"z\", \"0\", \"0\", \"0\"], [\"0\", \"z\", \"0\", \"0\"],"
                    " [\"0\", \"0\", \"z\", \"0\"], [\"0\", \"0\", \"0\", \"z\"]]\n",
                    "dbrane_scalar6");
}

/// For a quiver whose rows each have a single nonzero entry c at distinct
/// columns: the successor map, or nullopt.
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

Permutation power(const Permutation& p, int n) {
    Permutation acc;
    acc.images.resize(p.images.size());
    std::iota(acc.images.begin(), acc.images.end(), 0);
    for (int t = 0; t < n; ++t) acc = compose(p, acc);
    return acc;
}

bool find_matching(const Quiver& a, const Quiver& b, Permutation& out) {
    const int k = a.vertex_count();
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

} // namespace

TEST_CASE("permutation basics") {
    Permutation p{{1, 2, 3, 0}};
    CHECK(!p.is_identity());
    CHECK(p.order() == 4);
    CHECK(p.inverse().images == std::vector<int>{3, 0, 1, 2});
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(p.cycle_string() == "(0 1 2 3)");
    Permutation swap2{{2, 3, 0, 1}};
    CHECK(swap2.cycle_string() == "(0 2)(1 3)");
    CHECK(swap2.order() == 2);
    Permutation id{{0, 1, 2}};
    CHECK(id.cycle_string() == "()");
    CHECK(id.order() == 1);
    CHECK(is_bijection({1, 0, 2}));
    CHECK(!is_bijection({1, 1, 2}));
    CHECK(!is_bijection({0, 1, 3}));
    CHECK_THROWS_WITH_AS(compose(p, id), doctest::Contains("SizeMismatch"), Error);
}

TEST_CASE("one vertex with m loops for the trivial group") {
    Quiver q = build_mckay(trivial_gl(4));
    REQUIRE(q.vertex_count() == 1);
    CHECK(q.degrees == std::vector<int>{1});
    CHECK(q.arrows == std::vector<std::vector<long long>>{{4}});
    REQUIRE(q.nakayama.has_value());
    CHECK(q.nakayama->is_identity());
    CHECK(q.provenance == "trivial(4)");
}

TEST_CASE("doubled two-vertex quiver for the center of SL(2)") {
    Quiver q = build_mckay(neg_identity_sl2());
    CHECK(q.arrows == std::vector<std::vector<long long>>{{0, 2}, {2, 0}});
    CHECK(q.degrees == std::vector<int>{1, 1});
    CHECK(q.nakayama->is_identity());
}

TEST_CASE("doubled oriented 4-cycle for the scalar fourth roots") {
    Quiver q = build_mckay(scalar_i_gl2());
    REQUIRE(q.vertex_count() == 4);
    auto s = successor_permutation(q, 2);
    REQUIRE(s.has_value());
    CHECK(is_single_cycle(*s));
    // determinant twist advances two steps around the cycle
    REQUIRE(q.nakayama.has_value());
    CHECK(q.nakayama->images == power(*s, 2).images);
    CHECK(!q.nakayama->is_identity());
}

TEST_CASE("double 4-cycle with opposite-vertex twist for the diagonal Klein group") {
    Quiver q = build_mckay(klein_gl2());
    REQUIRE(q.vertex_count() == 4);
    // every vertex has two single out-arrows, two single in-arrows, symmetric
    for (int i = 0; i < 4; ++i) {
        long long out = 0;
        for (int j = 0; j < 4; ++j) {
            CHECK(q.arrows[i][j] == q.arrows[j][i]);
            CHECK(q.arrows[i][j] <= 1);
            out += q.arrows[i][j];
        }
        CHECK(out == 2);
        CHECK(q.arrows[i][i] == 0);
    }
    // the twist sends each vertex to the unique one it is NOT adjacent to
    REQUIRE(q.nakayama.has_value());
    const Permutation& sigma = *q.nakayama;
    CHECK(sigma.order() == 2);
    for (int i = 0; i < 4; ++i) {
        CHECK(sigma.apply(i) != i);
        CHECK(q.arrows[i][sigma.apply(i)] == 0);
    }
}

TEST_CASE("cyclic quiver with four parallel arrows for the scalar sixth roots") {
    Quiver q = build_mckay(dbrane_scalar6());
    REQUIRE(q.vertex_count() == 6);
    auto s = successor_permutation(q, 4);
    REQUIRE(s.has_value());
    CHECK(is_single_cycle(*s));
    REQUIRE(q.nakayama.has_value());
    CHECK(q.nakayama->images == power(*s, 4).images);
}

TEST_CASE("determinant twist is the identity exactly on special linear groups") {
    for (const auto& g : {neg_identity_sl2(), q8(), cyclic_sl2(5)}) {
        CharacterTable t = CharacterTable::compute(g);
        CHECK(nakayama_translation(t).is_identity());
    }
    for (const auto& g : {scalar_i_gl2(), klein_gl2(), cyclic_gl1(3)}) {
        CharacterTable t = CharacterTable::compute(g);
        CHECK(!nakayama_translation(t).is_identity());
    }
}

TEST_CASE("twist order divides the order of the determinant character") {
    for (const auto& g : {scalar_i_gl2(), klein_gl2(), dbrane_scalar6(), cyclic_gl1(6)}) {
        CharacterTable t = CharacterTable::compute(g);
        Permutation sigma = nakayama_translation(t);
        auto emb = sl_kernel(g);
        int det_order = g->order() / emb.sub->order();
        CHECK(det_order % sigma.order() == 0);
    }
}

TEST_CASE("adding twist arrows") {
    SUBCASE("identity twist adds one loop per vertex") {
        Quiver q = build_mckay(q8());
        Quiver plus = add_nakayama_arrows(q);
        for (int i = 0; i < q.vertex_count(); ++i) {
            for (int j = 0; j < q.vertex_count(); ++j) {
                CHECK(plus.arrows[i][j] == q.arrows[i][j] + (i == j ? 1 : 0));
            }
        }
        CHECK(!plus.nakayama.has_value());
        CHECK(plus.degrees == q.degrees);
    }
    SUBCASE("oriented cycle becomes the doubled undirected cycle") {
        for (int n : {2, 3, 4, 7}) {
            Quiver q = build_mckay(cyclic_gl1(n));
            auto s = successor_permutation(q, 1);
            REQUIRE(s.has_value());
            CHECK(is_single_cycle(*s));
            CHECK(q.nakayama->images == s->images);
            Quiver dbl = add_nakayama_arrows(q);
            // now one arrow i -> s(i) and one arrow s(i) -> i (n = 2: both doubled)
            for (int i = 0; i < n; ++i) {
                int j = s->apply(i);
                if (n == 2) {
                    CHECK(dbl.arrows[i][j] == 2);
                } else {
                    CHECK(dbl.arrows[i][j] == 1);
                    CHECK(dbl.arrows[j][i] == 1);
                }
            }
        }
    }
    SUBCASE("missing twist is an error") {
        Quiver q = build_mckay(q8());
        Quiver plus = add_nakayama_arrows(q);
        CHECK_THROWS_WITH_AS(add_nakayama_arrows(plus), doctest::Contains("MissingNakayama"), Error);
    }
}

TEST_CASE("automorphism checks") {
    Quiver q = build_mckay(klein_gl2());
    Permutation id{{0, 1, 2, 3}};
    CHECK(is_automorphism(q, id));
    CHECK(is_automorphism(q, *q.nakayama));
    // a transposition of two adjacent vertices breaks the 4-cycle
    const Permutation& sigma = *q.nakayama;
    int neighbor = -1;
    for (int j = 0; j < 4; ++j) {
        if (q.arrows[0][j] == 1) neighbor = j;
    }
    REQUIRE(neighbor >= 0);
    Permutation bad{{0, 1, 2, 3}};
    std::swap(bad.images[0], bad.images[neighbor]);
    // swapping vertex 0 with a neighbor while fixing the rest is not an automorphism
    CHECK(!is_automorphism(q, bad));
    // wrong size and non-bijections are rejected, not thrown
    CHECK(!is_automorphism(q, Permutation{{0, 1, 2}}));
    CHECK(!is_automorphism(q, Permutation{{0, 0, 2, 3}}));
    // twist is an automorphism across sample quivers
    for (const auto& g : {scalar_i_gl2(), q8(), dbrane_scalar6(), cyclic_gl1(5)}) {
        Quiver qq = build_mckay(g);
        CHECK(is_automorphism(qq, *qq.nakayama));
    }
}

TEST_CASE("quiver equality under an explicit matching") {
    Quiver q = build_mckay(q8());
    Permutation id{{0, 1, 2, 3, 4}};
    CHECK(quiver_equal(q, q, id));
    Quiver other = build_mckay(klein_gl2());
    CHECK_THROWS_WITH_AS(quiver_equal(q, other, id), doctest::Contains("SizeMismatch"), Error);
}

TEST_CASE("the Klein quiver matches the quiver of the special linear 4-cycle") {
    // same adjacency under a degree-preserving matching; the twists differ
    Quiver a = build_mckay(cyclic_sl2(4));
    Quiver b = build_mckay(klein_gl2());
    Permutation m;
    REQUIRE(find_matching(a, b, m));
    CHECK(quiver_equal(a, b, m));
    CHECK(a.nakayama->is_identity());
    CHECK(!b.nakayama->is_identity());
}

TEST_CASE("arrow counts weighted by degrees reproduce the dimension") {
    for (const auto& g : {neg_identity_sl2(), scalar_i_gl2(), klein_gl2(), q8(), cyclic_sl2(6),
                          dbrane_scalar6(), cyclic_gl1(4), trivial_gl(3)}) {
        Quiver q = build_mckay(g);
        const int m = g->dim();
        const int k = q.vertex_count();
        for (int i = 0; i < k; ++i) {
            long long row = 0, col = 0;
            for (int j = 0; j < k; ++j) {
                row += q.arrows[i][j] * q.degrees[j];
                col += q.arrows[j][i] * q.degrees[j];
            }
            CHECK(row == static_cast<long long>(m) * q.degrees[i]);
            CHECK(col == static_cast<long long>(m) * q.degrees[i]);
        }
        // adding the twist arrows realizes the identity for dimension m+1
        Quiver plus = add_nakayama_arrows(q);
        for (int i = 0; i < k; ++i) {
            long long row = 0;
            for (int j = 0; j < k; ++j) row += plus.arrows[i][j] * plus.degrees[j];
            CHECK(row == static_cast<long long>(m + 1) * plus.degrees[i]);
        }
    }
}

TEST_CASE("block-diagonal embedding realizes the twist as arrows") {
    for (const auto& g : {scalar_i_gl2(), klein_gl2(), q8(), cyclic_gl1(3), dbrane_scalar6()}) {
        CAPTURE(g->description());
        CharacterTable tg = CharacterTable::compute(g);
        EmbedResult emb = embed_det_inverse(g);
        CharacterTable te = CharacterTable::compute(emb.image);
        Permutation m = induced_matching(tg, te, emb.elem_map);
        Quiver lifted = build_mckay(te);
        Quiver transformed = add_nakayama_arrows(build_mckay(tg));
        CHECK(quiver_equal(transformed, lifted, m));
        // the embedded group is special linear, so its own twist is trivial
        CHECK(lifted.nakayama->is_identity());
    }
}

TEST_CASE("DOT export") {
    Quiver q = build_mckay(neg_identity_sl2());
    std::string dot = export_dot(q);
    CHECK(dot == "digraph mckay {\n"
                 "  label=\"neg_identity_sl2\";\n"
                 "  v0 [label=\"0 (d=1)\"];\n"
                 "  v1 [label=\"1 (d=1)\"];\n"
                 "  v0 -> v1;\n"
                 "  v0 -> v1;\n"
                 "  v1 -> v0;\n"
                 "  v1 -> v0;\n"
                 "  v0 -> v0 [style=dashed, color=gray, constraint=false];\n"
                 "  v1 -> v1 [style=dashed, color=gray, constraint=false];\n"
                 "}\n");
    Quiver loops = build_mckay(trivial_gl(4));
    std::string dot4 = export_dot(loops);
    CHECK(std::count(dot4.begin(), dot4.end(), '>') == 5); // 4 loops + 1 dashed
}

TEST_CASE("JSON export and round trip") {
    for (const auto& g : {neg_identity_sl2(), klein_gl2(), q8(), dbrane_scalar6()}) {
        Quiver q = build_mckay(g);
        std::string text = export_json(q);
        Quiver back = parse_quiver_json(text);
        CHECK(back.degrees == q.degrees);
        CHECK(back.arrows == q.arrows);
        REQUIRE(back.nakayama.has_value());
        CHECK(back.nakayama->images == q.nakayama->images);
        CHECK(back.provenance == q.provenance);
        CHECK(export_json(back) == text);
    }
    // cleared twist serializes as null
    Quiver q = add_nakayama_arrows(build_mckay(q8()));
    std::string text = export_json(q);
    CHECK(text.find("\"nakayama\": null") != std::string::npos);
    CHECK(!parse_quiver_json(text).nakayama.has_value());
    // field order is fixed
    std::string first = export_json(build_mckay(neg_identity_sl2()));
    CHECK(first.find("\"vertices\"") < first.find("\"arrows\""));
    CHECK(first.find("\"arrows\"") < first.find("\"nakayama\""));
    CHECK(first.find("\"nakayama\"") < first.find("\"provenance\""));
}

TEST_CASE("JSON parse rejections") {
    CHECK_THROWS_WITH_AS(parse_quiver_json("not json"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_quiver_json("{}"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(
        parse_quiver_json(R"({"vertices":[{"index":0,"degree":1}],"arrows":[[-1]],"nakayama":null})"),
        doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(
        parse_quiver_json(R"({"vertices":[{"index":0,"degree":1}],"arrows":[[0],[0]],"nakayama":null})"),
        doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(
        parse_quiver_json(R"({"vertices":[{"index":0,"degree":1}],"arrows":[[1]],"nakayama":[1]})"),
        doctest::Contains("ParseError"), Error);
}
