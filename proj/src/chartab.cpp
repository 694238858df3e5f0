// SPDX-License-Identifier: Apache-2.0
#include "mckay/chartab.hpp"

#include "mckay/error.hpp"

#include <algorithm>
#include <numeric>

namespace mckay {

ClassFunction natural_character(const GroupPtr& g) {
    ClassFunction f;
    f.group = g;
    for (int c = 0; c < g->class_count(); ++c) {
        f.values.push_back(g->element(g->classes().representative[c]).trace());
    }
    return f;
}

ClassFunction det_character(const GroupPtr& g) {
    ClassFunction f;
    f.group = g;
    for (int c = 0; c < g->class_count(); ++c) {
        f.values.push_back(g->dets()[g->classes().representative[c]]);
    }
    return f;
}

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.values.size() != b.values.size()) fail("SizeMismatch", "class functions of unequal length");
    ClassFunction f;
    f.group = a.group;
    for (std::size_t c = 0; c < a.values.size(); ++c) f.values.push_back(a.values[c] * b.values[c]);
    return f;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.values.size() != b.values.size()) fail("SizeMismatch", "class functions of unequal length");
    const FiniteMatrixGroup& g = *a.group;
    CycElem acc;
    for (int c = 0; c < g.class_count(); ++c) {
        CycElem term = a.values[c] * b.values[c].conjugate();
        acc += term * CycElem::from_rational(Rational(g.classes().members[c].size()));
    }
    if (!acc.is_rational()) fail("InternalError", "inner product is not rational: " + acc.str());
    return acc.rational_value() / Rational(g.order());
}

bool same_values(const ClassFunction& a, const ClassFunction& b) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t c = 0; c < a.values.size(); ++c) {
        if (a.values[c] != b.values[c]) return false;
    }
    return true;
}

std::vector<std::vector<std::vector<long long>>> class_structure_constants(const FiniteMatrixGroup& g) {
    const int k = g.class_count();
    std::vector tensor(k, std::vector(k, std::vector<long long>(k, 0)));
    for (int l = 0; l < k; ++l) {
        const int z = g.classes().representative[l];
        std::vector<int> col_z = g.column(z);
        for (int j = 0; j < k; ++j) {
            for (int x : g.classes().members[j]) {
                int y = col_z[g.inverse(x)]; // x^{-1} z
                ++tensor[j][g.classes().class_of[y]][l];
            }
        }
    }
    return tensor;
}

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

u64 mat_det(Mat a, u64 p) {
    const std::size_t n = a.size();
    u64 det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = p - det;
            if (det == p) det = 0;
        }
        det = modp::mul(det, a[col][col], p);
        const u64 inv = modp::inv(a[col][col], p);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            const u64 f = modp::mul(a[row][col], inv, p);
            for (std::size_t j = col; j < n; ++j) {
                a[row][j] = modp::sub(a[row][j], modp::mul(f, a[col][j], p), p);
            }
        }
    }
    return det;
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
std::pair<Mat, std::vector<int>> rref(Mat rows, u64 p) {
    if (rows.empty()) return {rows, {}};
    const std::size_t width = rows[0].size();
    std::size_t rank = 0;
    std::vector<int> pivots;
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        const u64 inv = modp::inv(rows[rank][col], p);
        for (std::size_t j = 0; j < width; ++j) rows[rank][j] = modp::mul(rows[rank][j], inv, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const u64 f = rows[r][col];
            for (std::size_t j = 0; j < width; ++j) {
                rows[r][j] = modp::sub(rows[r][j], modp::mul(f, rows[rank][j], p), p);
            }
        }
        pivots.push_back(static_cast<int>(col));
        ++rank;
    }
    rows.resize(rank);
    return {rows, pivots};
}

/// Deterministic kernel basis: one vector per free column, ascending.
Mat kernel_basis(const Mat& a, u64 p) {
    auto [rows, pivots] = rref(a, p);
    const std::size_t width = a.empty() ? 0 : a[0].size();
    std::vector<char> is_pivot(width, 0);
    for (int c : pivots) is_pivot[c] = 1;
    Mat basis;
    for (std::size_t f = 0; f < width; ++f) {
        if (is_pivot[f]) continue;
        Vec v(width, 0);
        v[f] = 1;
        for (std::size_t t = 0; t < rows.size(); ++t) {
            if (rows[t][f] != 0) v[pivots[t]] = p - rows[t][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec matvec(const Mat& m, const Vec& v, u64 p) {
    Vec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        u64 acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (m[i][j] != 0 && v[j] != 0) acc = modp::add(acc, modp::mul(m[i][j], v[j], p), p);
        }
        out[i] = acc;
    }
    return out;
}

struct Subspace {
    Mat basis;          ///< reduced row echelon rows
    std::vector<int> pivots;
};

/// Coordinates of w in an rref basis; w must lie in the span.
Vec coords_in(const Subspace& sp, const Vec& w, u64 p) {
    Vec c(sp.basis.size());
    Vec residual = w;
    for (std::size_t t = 0; t < sp.basis.size(); ++t) {
        c[t] = residual[sp.pivots[t]];
        if (c[t] != 0) {
            for (std::size_t j = 0; j < residual.size(); ++j) {
                residual[j] = modp::sub(residual[j], modp::mul(c[t], sp.basis[t][j], p), p);
            }
        }
    }
    for (u64 x : residual) {
        if (x != 0) fail("InternalError", "class-algebra subspace is not invariant");
    }
    return c;
}

u64 smallest_admissible_prime(u64 modulus, u64 lower_bound) {
    const u64 search_bound = 1000000;
    u64 p = modulus + 1;
    while (p <= lower_bound || !modp::is_prime(p)) {
        p += modulus;
        if (p > search_bound) {
            fail("NoPrimeFound", "no prime == 1 (mod " + std::to_string(modulus) + ") above " +
                                     std::to_string(lower_bound) + " within 1000000");
        }
    }
    return p;
}

} // namespace

CharacterTable CharacterTable::compute(const GroupPtr& g) {
    const int k = g->class_count();
    const int n = g->order();
    const u64 modulus = std::lcm(g->conductor(), g->exponent());
    const u64 p = smallest_admissible_prime(modulus, 2ull * g->dim() * n);
    const u64 root = modp::primitive_root(p);

    auto tensor = class_structure_constants(*g);
    std::vector<Mat> mult(k, Mat(k, Vec(k, 0)));
    for (int j = 0; j < k; ++j) {
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) mult[j][a][b] = static_cast<u64>(tensor[j][a][b]) % p;
        }
    }

    // Simultaneous diagonalization by iterative eigenspace splitting.
    std::vector<Subspace> spaces;
    {
        Mat full(k, Vec(k, 0));
        for (int i = 0; i < k; ++i) full[i][i] = 1;
        std::vector<int> pivots(k);
        std::iota(pivots.begin(), pivots.end(), 0);
        spaces.push_back({std::move(full), std::move(pivots)});
    }
    for (int j = 1; j < k; ++j) {
        std::vector<Subspace> next;
        for (Subspace& sp : spaces) {
            const std::size_t s = sp.basis.size();
            if (s == 1) {
                next.push_back(std::move(sp));
                continue;
            }
            // action of mult[j] restricted to the subspace
            Mat action(s, Vec(s, 0));
            for (std::size_t b = 0; b < s; ++b) {
                Vec image = matvec(mult[j], sp.basis[b], p);
                Vec c = coords_in(sp, image, p);
                for (std::size_t a = 0; a < s; ++a) action[a][b] = c[a];
            }
            // deterministic eigenvalue scan over GF(p)
            std::size_t found = 0;
            for (u64 lambda = 0; lambda < p && found < s; ++lambda) {
                Mat shifted = action;
                for (std::size_t i = 0; i < s; ++i) {
                    shifted[i][i] = modp::sub(shifted[i][i], lambda, p);
                }
                if (mat_det(shifted, p) != 0) continue;
                Mat kern = kernel_basis(shifted, p);
                Mat lifted;
                for (const Vec& kv : kern) {
                    Vec v(k, 0);
                    for (std::size_t t = 0; t < s; ++t) {
                        if (kv[t] == 0) continue;
                        for (int col = 0; col < k; ++col) {
                            v[col] = modp::add(v[col], modp::mul(kv[t], sp.basis[t][col], p), p);
                        }
                    }
                    lifted.push_back(std::move(v));
                }
                auto [rows, pivots] = rref(std::move(lifted), p);
                found += rows.size();
                next.push_back({std::move(rows), std::move(pivots)});
            }
            if (found != s) fail("InternalError", "eigenspace splitting lost dimensions");
        }
        spaces = std::move(next);
    }
    for (const Subspace& sp : spaces) {
        if (sp.basis.size() != 1) {
            fail("InternalError", "class-multiplication matrices failed to separate characters");
        }
    }

    // Normalize to central characters (value 1 on the identity class), then
    // recover degrees from the orthogonality relation.
    const auto& classes = g->classes();
    std::vector<u64> class_size_inv(k);
    for (int c = 0; c < k; ++c) {
        class_size_inv[c] = modp::inv(static_cast<u64>(classes.members[c].size()) % p, p);
    }
    CharacterTable table;
    table.group = g;
    table.prime = p;
    table.generator = root;
    for (Subspace& sp : spaces) {
        Vec u = std::move(sp.basis[0]);
        if (u[0] == 0) fail("InternalError", "central character vanishes on the identity class");
        const u64 scale = modp::inv(u[0], p);
        for (u64& x : u) x = modp::mul(x, scale, p);

        u64 s = 0;
        for (int c = 0; c < k; ++c) {
            u64 term = modp::mul(u[c], u[classes.inverse_class[c]], p);
            s = modp::add(s, modp::mul(term, class_size_inv[c], p), p);
        }
        const u64 d2 = modp::mul(static_cast<u64>(n) % p, modp::inv(s, p), p);
        int degree = 0;
        for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
            if (modp::mul(d, d, p) == d2) {
                degree = d;
                break;
            }
        }
        if (degree == 0) fail("InternalError", "no integer degree matches the orthogonality sum");

        Vec row(k);
        for (int c = 0; c < k; ++c) {
            row[c] = modp::mul(static_cast<u64>(degree), modp::mul(u[c], class_size_inv[c], p), p);
        }
        table.modp_rows.push_back(std::move(row));
        table.degrees.push_back(degree);
    }

    // Canonical order: trivial first, then ascending degree, then lex mod-p row.
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    auto is_trivial = [&](int i) {
        return std::all_of(table.modp_rows[i].begin(), table.modp_rows[i].end(),
                           [](u64 v) { return v == 1; });
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
        return table.modp_rows[a] < table.modp_rows[b];
    });
    {
        std::vector<std::vector<u64>> rows_sorted;
        std::vector<int> degrees_sorted;
        for (int i : order) {
            rows_sorted.push_back(std::move(table.modp_rows[i]));
            degrees_sorted.push_back(table.degrees[i]);
        }
        table.modp_rows = std::move(rows_sorted);
        table.degrees = std::move(degrees_sorted);
    }

    long long degree_square_sum = 0;
    for (int d : table.degrees) degree_square_sum += static_cast<long long>(d) * d;
    if (degree_square_sum != n) fail("InternalError", "degree squares do not sum to the group order");

    // Lift each row to exact cyclotomic values through the eigenvalue
    // multiplicities of each class representative.
    const int e = g->exponent();
    for (int i = 0; i < k; ++i) {
        ClassFunction row;
        row.group = g;
        const int d = table.degrees[i];
        for (int c = 0; c < k; ++c) {
            const int o = classes.rep_order[c];
            const u64 z = modp::pow(root, (p - 1) / static_cast<u64>(o), p);
            const u64 zinv = modp::inv(z, p);
            const u64 oinv = modp::inv(static_cast<u64>(o) % p, p);
            std::vector<Rational> mults(o);
            long long mult_sum = 0;
            for (int t = 0; t < o; ++t) {
                u64 acc = 0;
                for (int j = 0; j < o; ++j) {
                    const u64 theta = table.modp_rows[i][classes.power_map[c][j]];
                    acc = modp::add(acc, modp::mul(theta, modp::pow(zinv, static_cast<u64>(j) * t, p), p), p);
                }
                const u64 m = modp::mul(oinv, acc, p);
                if (m > static_cast<u64>(d)) {
                    fail("LiftOutOfRange", "eigenvalue multiplicity " + std::to_string(m) +
                                               " exceeds degree " + std::to_string(d));
                }
                mults[t] = Rational(static_cast<long long>(m));
                mult_sum += static_cast<long long>(m);
            }
            if (mult_sum != d) fail("InternalError", "eigenvalue multiplicities do not sum to the degree");
            row.values.push_back(CycElem::from_poly(o, std::move(mults)).lifted_to(e));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

int CharacterTable::row_index(const ClassFunction& f) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (same_values(rows[i], f)) return static_cast<int>(i);
    }
    return -1;
}

RestrictionReport restrict_and_check_extendible(const NormalEmbedding& emb,
                                                const CharacterTable& ambient_table,
                                                const CharacterTable& sub_table) {
    const int kg = static_cast<int>(ambient_table.rows.size());
    const int kl = static_cast<int>(sub_table.rows.size());
    RestrictionReport report;
    report.constituents.assign(kg, std::vector<long long>(kl, 0));
    report.extendible.assign(kl, false);
    report.extension_of.assign(kl, -1);

    std::vector<ClassFunction> restricted(kg);
    for (int i = 0; i < kg; ++i) {
        restricted[i].group = emb.sub;
        for (int c = 0; c < kl; ++c) {
            restricted[i].values.push_back(ambient_table.rows[i].values[emb.fusion[c]]);
        }
    }

    for (int i = 0; i < kg; ++i) {
        for (int j = 0; j < kl; ++j) {
            Rational m = inner_product(restricted[i], sub_table.rows[j]);
            if (!is_integer(m) || m < 0) {
                fail("NonIntegerMultiplicity", "restriction of row " + std::to_string(i) +
                                                   " has multiplicity " + rational_str(m) +
                                                   " against subgroup row " + std::to_string(j));
            }
            report.constituents[i][j] = to_int64(rat_num(m));
        }
    }
    for (int j = 0; j < kl; ++j) {
        for (int i = 0; i < kg; ++i) {
            if (same_values(restricted[i], sub_table.rows[j])) {
                report.extendible[j] = true;
                report.extension_of[j] = i;
                break;
            }
        }
    }
    const ClassFunction& sub_trivial = sub_table.rows[0];
    for (int i = 0; i < kg; ++i) {
        if (ambient_table.degrees[i] == 1 && same_values(restricted[i], sub_trivial)) {
            report.deck_characters.push_back(i);
        }
    }
    return report;
}

} // namespace mckay
