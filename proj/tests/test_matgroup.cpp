// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mckay/error.hpp"
#include "mckay/group.hpp"
#include "mckay/groupfile.hpp"
#include "mckay/matrix.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace mckay;

namespace {

CycMatrix from_rows(int conductor, const std::vector<std::vector<std::string>>& rows) {
    CycMatrix m(static_cast<int>(rows.size()), conductor);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m.set(static_cast<int>(i), static_cast<int>(j), parse_cyc(rows[i][j], conductor));
        }
    }
    return m;
}

GroupPtr group_of(int conductor, const std::vector<std::vector<std::vector<std::string>>>& gens,
                  const std::string& name) {
    std::vector<CycMatrix> ms;
    for (const auto& g : gens) ms.push_back(from_rows(conductor, g));
    return enumerate_group(std::move(ms), 10000, name);
}

GroupPtr neg_identity_sl2() { return group_of(2, {{{"-1", "0"}, {"0", "-1"}}}, "neg_identity_sl2"); }
GroupPtr scalar_i_gl2() { return group_of(4, {{{"z", "0"}, {"0", "z"}}}, "scalar_i_gl2"); }
GroupPtr klein_gl2() {
    return group_of(2, {{{"-1", "0"}, {"0", "-1"}}, {{"1", "0"}, {"0", "-1"}}}, "klein_gl2");
}
GroupPtr q8() {
    return group_of(4, {{{"z", "0"}, {"0", "z^3"}}, {{"0", "1"}, {"-1", "0"}}}, "q8");
}
GroupPtr dbrane_scalar6() {
    return group_of(6,
                    {{{"z", "0", "0", "0"},
                      {"0", "z", "0", "0"},
                      {"0", "0", "z", "0"},
                      {"0", "0", "0", "z"}}},
                    "dbrane_scalar6");
}
GroupPtr binary_tetrahedral() {
    return group_of(4,
                    {{{"z", "0"}, {"0", "z^3"}},
                     {{"0", "1"}, {"-1", "0"}},
                     {{"-1/2+1/2*z", "1/2+1/2*z"}, {"-1/2+1/2*z", "-1/2-1/2*z"}}},
                    "binary_tetrahedral");
}

std::multiset<int> class_sizes(const FiniteMatrixGroup& g) {
    std::multiset<int> out;
    for (const auto& c : g.classes().members) out.insert(static_cast<int>(c.size()));
    return out;
}

} // namespace

TEST_CASE("matrix basics") {
    CycMatrix i2 = CycMatrix::identity(2, 4);
    CHECK(i2.trace() == CycElem::from_rational(Rational(2)));
    CHECK(i2.det().is_one());
    CHECK(i2.is_diagonal());

    CycMatrix j = from_rows(4, {{"0", "1"}, {"-1", "0"}});
    CHECK(j.det().is_one());
    CHECK(j.trace().is_zero());
    CHECK(!j.is_diagonal());
    CHECK((j * j) == from_rows(4, {{"-1", "0"}, {"0", "-1"}}));

    // determinant is multiplicative on random small matrices
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        CycMatrix a(2, 4), b(2, 4);
        for (int i = 0; i < 2; ++i) {
            for (int jj = 0; jj < 2; ++jj) {
                a.set(i, jj, CycElem::from_rational(Rational(coef(rng))) +
                                 CycElem::root_of_unity(4, 1) * CycElem::from_rational(Rational(coef(rng))));
                b.set(i, jj, CycElem::from_rational(Rational(coef(rng))));
            }
        }
        CHECK((a * b).det() == a.det() * b.det());
    }

    CycMatrix c = CycMatrix::with_corner(j, CycElem::root_of_unity(4, 1));
    CHECK(c.dim() == 3);
    CHECK(c.at(2, 2) == CycElem::root_of_unity(4, 1));
    CHECK(c.at(0, 1).is_one());
    CHECK(c.at(2, 0).is_zero());
    CHECK(c.upper_left(2) == j);
}

TEST_CASE("group file parsing") {
    const char* text = R"(# a cyclic group in SL(2)
conductor = 4
dimension = 2

[[generator]]
rows = [["z", "0"], ["0", "z^-1"]]
)";
    GroupFileData data = parse_group_text(text);
    CHECK(data.conductor == 4);
    CHECK(data.dimension == 2);
    CHECK(data.generators.size() == 1);
    CHECK(data.generators[0].at(0, 0) == CycElem::root_of_unity(4, 1));
    CHECK(data.generators[0].at(1, 1) == CycElem::root_of_unity(4, 3));

    CHECK_THROWS_AS(parse_group_text("conductor = 4\n"), ParseError); // missing dimension
    CHECK_THROWS_AS(parse_group_text("conductor = 4\ndimension = 2\n"), ParseError); // no generators
    CHECK_THROWS_AS(
        parse_group_text("conductor = 4\ndimension = 2\n[[generator]]\nrows = [[\"z^^2\",\"0\"],[\"0\",\"1\"]]\n"),
        ParseError);
    CHECK_THROWS_WITH_AS(
        parse_group_text("conductor = 4\ndimension = 2\n[[generator]]\nrows = [[\"z\",\"0\"]]\n"),
        doctest::Contains("DimensionMismatch"), Error);
    CHECK_THROWS_WITH_AS(
        parse_group_text("conductor = 4\ndimension = 2\n[[generator]]\nrows = [[\"z\"],[\"0\"]]\n"),
        doctest::Contains("DimensionMismatch"), Error);

    // line/column reporting
    try {
        parse_group_text("conductor = 4\nbogus\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("enumeration of small groups") {
    CHECK(neg_identity_sl2()->order() == 2);
    CHECK(scalar_i_gl2()->order() == 4);
    CHECK(klein_gl2()->order() == 4);
    CHECK(q8()->order() == 8);
    CHECK(dbrane_scalar6()->order() == 6);
    CHECK(binary_tetrahedral()->order() == 24);

    GroupPtr bt = binary_tetrahedral();
    CHECK(bt->class_count() == 7);
    CHECK(class_sizes(*bt) == std::multiset<int>{1, 1, 4, 4, 4, 4, 6});
    CHECK(bt->exponent() == 12);
    CHECK(bt->in_special_linear());

    GroupPtr k = klein_gl2();
    CHECK(k->class_count() == 4); // abelian: singleton classes
    CHECK(!k->in_special_linear());

    GroupPtr quat = q8();
    CHECK(quat->class_count() == 5);
    CHECK(class_sizes(*quat) == std::multiset<int>{1, 1, 2, 2, 2});
}

TEST_CASE("enumeration errors") {
    CycMatrix singular(2, 1);
    singular.set(0, 0, CycElem::one(1));
    CHECK_THROWS_WITH_AS(FiniteMatrixGroup::enumerate({singular}), doctest::Contains("NotInvertible"),
                         Error);

    CHECK_THROWS_WITH_AS(
        FiniteMatrixGroup::enumerate({CycMatrix::identity(2, 2), CycMatrix::identity(2, 4)}),
        doctest::Contains("ConductorMismatch"), Error);
    CHECK_THROWS_WITH_AS(
        FiniteMatrixGroup::enumerate({CycMatrix::identity(2, 4), CycMatrix::identity(3, 4)}),
        doctest::Contains("DimensionMismatch"), Error);

    // order-12 group against a bound of 8
    CycMatrix z12 = from_rows(12, {{"z", "0"}, {"0", "z^-1"}});
    CHECK_THROWS_WITH_AS(FiniteMatrixGroup::enumerate({z12}, 8), doctest::Contains("GroupTooLarge"),
                         Error);
}

TEST_CASE("multiplication infrastructure") {
    GroupPtr bt = binary_tetrahedral();
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, bt->order() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        int a = pick(rng), b = pick(rng);
        // index-level product agrees with matrix product
        int ab = bt->multiply(a, b);
        CHECK(bt->element(ab) == bt->element(a) * bt->element(b));
        // closure and inverses
        CHECK(bt->multiply(a, bt->inverse(a)) == 0);
        CHECK(bt->multiply(bt->inverse(a), a) == 0);
    }
    // column agrees with multiply
    int b = 5 % bt->order();
    std::vector<int> col = bt->column(b);
    for (int y = 0; y < bt->order(); ++y) CHECK(col[y] == bt->multiply(y, b));

    // determinants are multiplicative
    for (int trial = 0; trial < 50; ++trial) {
        int a = pick(rng), c = pick(rng);
        CHECK(bt->dets()[bt->multiply(a, c)] == bt->dets()[a] * bt->dets()[c]);
    }

    // Lagrange: class sizes and element orders divide |G|
    for (const auto& cls : bt->classes().members) CHECK(bt->order() % cls.size() == 0);
    for (int i = 0; i < bt->order(); ++i) CHECK(bt->order() % bt->element_order(i) == 0);

    // inverse_class is an involution; power_map starts at the identity class
    const ConjugacyInfo& ci = bt->classes();
    for (int c = 0; c < bt->class_count(); ++c) {
        CHECK(ci.inverse_class[ci.inverse_class[c]] == c);
        CHECK(ci.power_map[c][0] == 0);
        CHECK(static_cast<int>(ci.power_map[c].size()) == ci.rep_order[c]);
        if (ci.rep_order[c] > 1) CHECK(ci.power_map[c][1] == c);
    }
}

TEST_CASE("sl kernel and cyclic quotient") {
    // G inside SL already: kernel is everything
    GroupPtr neg = neg_identity_sl2();
    NormalEmbedding all = sl_kernel(neg);
    CHECK(all.sub->order() == 2);
    CHECK(cyclic_quotient(all) == std::pair<int, int>{1, 0});

    // <zeta_6 I_4>: kernel {I, -I}, quotient of order 3
    NormalEmbedding d6 = sl_kernel(dbrane_scalar6());
    CHECK(d6.sub->order() == 2);
    auto [r6, coset_gen6] = cyclic_quotient(d6);
    CHECK(r6 == 3);
    CHECK(coset_gen6 != 0);

    // <iI_2>: kernel {I, -I}, quotient of order 2
    NormalEmbedding di = sl_kernel(scalar_i_gl2());
    CHECK(di.sub->order() == 2);
    CHECK(cyclic_quotient(di).first == 2);

    // Q8 over its center: quotient is the Klein four group, not cyclic
    GroupPtr quat = q8();
    GroupPtr center = group_of(4, {{{"-1", "0"}, {"0", "-1"}}}, "center");
    NormalEmbedding ctr = embed_subgroup(quat, center);
    CHECK_THROWS_WITH_AS(cyclic_quotient(ctr), doctest::Contains("QuotientNotCyclic"), Error);

    // sl_kernel of any group admits a cyclic quotient
    for (GroupPtr g : {klein_gl2(), q8(), scalar_i_gl2(), binary_tetrahedral()}) {
        CHECK_NOTHROW(cyclic_quotient(sl_kernel(g)));
    }
}

TEST_CASE("subgroup embedding") {
    GroupPtr quat = q8();
    GroupPtr rot = group_of(4, {{{"z", "0"}, {"0", "z^3"}}}, "cyclic4");
    NormalEmbedding emb = embed_subgroup(quat, rot);
    CHECK(emb.sub->order() == 4);
    // inclusion respects multiplication on all pairs
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            CHECK(emb.inclusion[emb.sub->multiply(a, b)] ==
                  quat->multiply(emb.inclusion[a], emb.inclusion[b]));
        }
    }
    // the two faithful classes of Z4 fuse into one class of Q8
    CHECK(emb.sub->class_count() == 4);
    std::map<int, int> hits;
    for (int c = 0; c < 4; ++c) ++hits[emb.fusion[c]];
    int fused = 0;
    for (auto& [amb, cnt] : hits) {
        if (cnt == 2) ++fused;
    }
    CHECK(fused == 1);

    // {+-I} inside <iI2>: central classes stay singletons
    NormalEmbedding c2 = embed_subgroup(scalar_i_gl2(), neg_identity_sl2());
    CHECK(c2.fusion[0] != c2.fusion[1]);

    // a non-subgroup is rejected
    CHECK_THROWS_WITH_AS(embed_subgroup(quat, klein_gl2()), doctest::Contains("NotNormal"), Error);
}

TEST_CASE("scalar extension") {
    // trivial in SL(4) extended by zeta_6
    GroupPtr triv4 = group_of(1, {{{"1", "0", "0", "0"},
                                   {"0", "1", "0", "0"},
                                   {"0", "0", "1", "0"},
                                   {"0", "0", "0", "1"}}},
                              "trivial(4)");
    GroupPtr ext = scalar_extend(triv4, 6);
    CHECK(ext->order() == 6);
    CHECK(ext->conductor() == 6);

    // {+-I} in SL(2) extended by i
    GroupPtr ext2 = scalar_extend(neg_identity_sl2(), 4);
    CHECK(ext2->order() == 4);

    // extending a non-SL group is rejected
    CHECK_THROWS_WITH_AS(scalar_extend(klein_gl2(), 2), doctest::Contains("NotSpecialLinear"),
                         Error);
}

TEST_CASE("determinant inverse embedding") {
    // diag(1,-1) |-> diag(1,-1,-1)
    GroupPtr k = klein_gl2();
    EmbedResult e = embed_det_inverse(k);
    CHECK(e.image->dim() == 3);
    CHECK(e.image->order() == k->order());
    CHECK(e.image->in_special_linear());
    CHECK(e.image->class_count() == k->class_count());
    int d_idx = k->element_index(from_rows(2, {{"1", "0"}, {"0", "-1"}}));
    REQUIRE(d_idx >= 0);
    CycMatrix expected = from_rows(2, {{"1", "0"}, {"0", "-1"}});
    CHECK(e.image->element(e.elem_map[d_idx]) ==
          CycMatrix::with_corner(expected, CycElem::from_rational(Rational(-1), 2)));

    // zeta_6 I_4 |-> diag(zeta_6 x4, zeta_6^2)
    GroupPtr d6 = dbrane_scalar6();
    EmbedResult e6 = embed_det_inverse(d6);
    int z_idx = -1;
    for (int i = 0; i < d6->order(); ++i) {
        if (d6->element(i).at(0, 0) == CycElem::root_of_unity(6, 1)) z_idx = i;
    }
    REQUIRE(z_idx >= 0);
    const CycMatrix& img = e6.image->element(e6.elem_map[z_idx]);
    CHECK(img.at(4, 4) == CycElem::root_of_unity(6, 2));

    // the embedding is a homomorphism on sampled pairs
    GroupPtr quat = q8();
    EmbedResult eq = embed_det_inverse(quat);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> pick(0, quat->order() - 1);
    for (int t = 0; t < 40; ++t) {
        int a = pick(rng), b = pick(rng);
        CHECK(eq.elem_map[quat->multiply(a, b)] ==
              eq.image->multiply(eq.elem_map[a], eq.elem_map[b]));
    }

    // sl_kernel of the image is the whole image
    CHECK(sl_kernel(e.image).sub->order() == e.image->order());
}

TEST_CASE("diagonal stripping") {
    // {diag(z_n^k, z_n^-k)} in SL(2) -> Z_n in GL(1)
    GroupPtr c5 = group_of(5, {{{"z", "0"}, {"0", "z^-1"}}}, "cyclic_sl2(5)");
    GroupPtr stripped = strip_diagonal(c5);
    CHECK(stripped->dim() == 1);
    CHECK(stripped->order() == 5);

    // strip is a left inverse of embed on diagonal SL groups
    GroupPtr d6 = dbrane_scalar6();
    EmbedResult e6 = embed_det_inverse(d6);
    GroupPtr back = strip_diagonal(e6.image);
    CHECK(back->order() == d6->order());
    CHECK(back->dim() == d6->dim());
    for (int i = 0; i < back->order(); ++i) {
        CHECK(d6->element_index(back->element(i)) >= 0);
    }

    CHECK_THROWS_WITH_AS(strip_diagonal(q8()), doctest::Contains("NotDiagonal"), Error);
    GroupPtr c4diag = group_of(4, {{{"z", "0"}, {"0", "z"}}}, "scalars");
    CHECK_THROWS_WITH_AS(strip_diagonal(c4diag), doctest::Contains("NotSpecialLinear"), Error);
}

TEST_CASE("binary polyhedral orders") {
    GroupPtr bo = group_of(8,
                           {{{"z^2", "0"}, {"0", "z^6"}},
                            {{"0", "1"}, {"-1", "0"}},
                            {{"-1/2+1/2*z^2", "1/2+1/2*z^2"}, {"-1/2+1/2*z^2", "-1/2-1/2*z^2"}},
                            {{"z", "0"}, {"0", "z^7"}}},
                           "binary_octahedral");
    CHECK(bo->order() == 48);
    CHECK(class_sizes(*bo) == std::multiset<int>{1, 1, 6, 6, 6, 8, 8, 12});
    CHECK(bo->in_special_linear());

    GroupPtr bi = group_of(5,
                           {{{"z^3", "0"}, {"0", "z^2"}},
                            {{"-1/5 - 2/5*z - 3/5*z^2 + 1/5*z^3", "2/5 + 4/5*z + 1/5*z^2 + 3/5*z^3"},
                             {"2/5 + 4/5*z + 1/5*z^2 + 3/5*z^3", "1/5 + 2/5*z + 3/5*z^2 - 1/5*z^3"}}},
                           "binary_icosahedral");
    CHECK(bi->order() == 120);
    CHECK(class_sizes(*bi) == std::multiset<int>{1, 1, 12, 12, 12, 12, 20, 20, 30});
    CHECK(bi->in_special_linear());
}
