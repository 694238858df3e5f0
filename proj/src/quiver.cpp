// SPDX-License-Identifier: Apache-2.0
#include "mckay/quiver.hpp"

#include "mckay/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mckay {

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i) {
        if (images[i] != i) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images.resize(images.size());
    for (int i = 0; i < size(); ++i) p.images[images[i]] = i;
    return p;
}

int Permutation::order() const {
    Permutation acc = *this;
    int n = 1;
    while (!acc.is_identity()) {
        acc = compose(*this, acc);
        ++n;
    }
    return n;
}

std::string Permutation::cycle_string() const {
    std::ostringstream out;
    std::vector<char> seen(images.size(), 0);
    bool any = false;
    for (int i = 0; i < size(); ++i) {
        if (seen[i] || images[i] == i) continue;
        out << '(' << i;
        seen[i] = 1;
        for (int j = images[i]; j != i; j = images[j]) {
            out << ' ' << j;
            seen[j] = 1;
        }
        out << ')';
        any = true;
    }
    if (!any) return "()";
    return out.str();
}

bool is_bijection(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> hit(n, 0);
    for (int v : images) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) fail("SizeMismatch", "composing permutations of unequal size");
    Permutation p;
    p.images.reserve(b.images.size());
    for (int i = 0; i < b.size(); ++i) p.images.push_back(a.images[b.images[i]]);
    return p;
}

Permutation nakayama_translation(const CharacterTable& table) {
    ClassFunction det = det_character(table.group);
    Permutation sigma;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        int j = table.row_index(pointwise_product(table.rows[i], det));
        if (j < 0) {
            fail("RowNotFound", "determinant twist of row " + std::to_string(i) +
                                    " is not an irreducible row");
        }
        sigma.images.push_back(j);
    }
    return sigma;
}

Quiver build_mckay(const CharacterTable& table) {
    const int k = static_cast<int>(table.rows.size());
    ClassFunction chi = natural_character(table.group);
    Quiver q;
    q.degrees = table.degrees;
    q.arrows.assign(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; ++i) {
        ClassFunction tensored = pointwise_product(chi, table.rows[i]);
        for (int j = 0; j < k; ++j) {
            Rational m = inner_product(tensored, table.rows[j]);
            if (!is_integer(m) || m < 0) {
                fail("NonIntegerMultiplicity", "multiplicity of row " + std::to_string(j) +
                                                   " in V tensor row " + std::to_string(i) +
                                                   " is " + rational_str(m));
            }
            q.arrows[i][j] = to_int64(rat_num(m));
        }
    }
    q.nakayama = nakayama_translation(table);
    q.provenance = table.group->description();
    return q;
}

Quiver build_mckay(const GroupPtr& g) { return build_mckay(CharacterTable::compute(g)); }

Quiver add_nakayama_arrows(const Quiver& q) {
    if (!q.nakayama) fail("MissingNakayama", "quiver carries no determinant-twist permutation");
    Quiver out = q;
    for (int i = 0; i < q.vertex_count(); ++i) {
        ++out.arrows[q.nakayama->apply(i)][i];
    }
    out.nakayama.reset();
    return out;
}

bool is_automorphism(const Quiver& q, const Permutation& p) {
    const int k = q.vertex_count();
    if (p.size() != k || !is_bijection(p.images)) return false;
    for (int i = 0; i < k; ++i) {
        if (q.degrees[p.apply(i)] != q.degrees[i]) return false;
        for (int j = 0; j < k; ++j) {
            if (q.arrows[p.apply(i)][p.apply(j)] != q.arrows[i][j]) return false;
        }
    }
    return true;
}

bool quiver_equal(const Quiver& a, const Quiver& b, const Permutation& matching) {
    const int k = a.vertex_count();
    if (b.vertex_count() != k || matching.size() != k) {
        fail("SizeMismatch", "comparing quivers of unequal vertex count");
    }
    if (!is_bijection(matching.images)) return false;
    for (int i = 0; i < k; ++i) {
        if (b.degrees[matching.apply(i)] != a.degrees[i]) return false;
        for (int j = 0; j < k; ++j) {
            if (b.arrows[matching.apply(i)][matching.apply(j)] != a.arrows[i][j]) return false;
        }
    }
    return true;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string export_dot(const Quiver& q) {
    std::ostringstream out;
    out << "digraph mckay {\n";
    if (!q.provenance.empty()) out << "  label=\"" << dot_escape(q.provenance) << "\";\n";
    for (int i = 0; i < q.vertex_count(); ++i) {
        out << "  v" << i << " [label=\"" << i << " (d=" << q.degrees[i] << ")\"];\n";
    }
    for (int i = 0; i < q.vertex_count(); ++i) {
        for (int j = 0; j < q.vertex_count(); ++j) {
            for (long long t = 0; t < q.arrows[i][j]; ++t) {
                out << "  v" << i << " -> v" << j << ";\n";
            }
        }
    }
    if (q.nakayama) {
        for (int i = 0; i < q.vertex_count(); ++i) {
            out << "  v" << i << " -> v" << q.nakayama->apply(i)
                << " [style=dashed, color=gray, constraint=false];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string export_json(const Quiver& q) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int i = 0; i < q.vertex_count(); ++i) {
        j["vertices"].push_back({{"index", i}, {"degree", q.degrees[i]}});
    }
    j["arrows"] = q.arrows;
    if (q.nakayama) {
        j["nakayama"] = q.nakayama->images;
    } else {
        j["nakayama"] = nullptr;
    }
    j["provenance"] = q.provenance;
    return j.dump(2) + "\n";
}

Quiver parse_quiver_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail("ParseError", std::string("invalid quiver JSON: ") + e.what());
    }
    Quiver q;
    try {
        const auto& verts = j.at("vertices");
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (verts[i].at("index").get<int>() != static_cast<int>(i)) {
                fail("ParseError", "vertex indices must be 0..k-1 in order");
            }
            int d = verts[i].at("degree").get<int>();
            if (d < 1) fail("ParseError", "vertex degree must be positive");
            q.degrees.push_back(d);
        }
        const int k = q.vertex_count();
        for (const auto& row : j.at("arrows")) {
            std::vector<long long> r;
            for (const auto& v : row) {
                long long a = v.get<long long>();
                if (a < 0) fail("ParseError", "arrow multiplicities must be nonnegative");
                r.push_back(a);
            }
            if (static_cast<int>(r.size()) != k) fail("ParseError", "arrow matrix is not k x k");
            q.arrows.push_back(std::move(r));
        }
        if (static_cast<int>(q.arrows.size()) != k) fail("ParseError", "arrow matrix is not k x k");
        const auto& nak = j.at("nakayama");
        if (!nak.is_null()) {
            Permutation p;
            for (const auto& v : nak) p.images.push_back(v.get<int>());
            if (p.size() != k || !is_bijection(p.images)) {
                fail("ParseError", "nakayama field is not a permutation of the vertices");
            }
            q.nakayama = std::move(p);
        }
        if (j.contains("provenance")) q.provenance = j.at("provenance").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        fail("ParseError", std::string("invalid quiver JSON: ") + e.what());
    }
    return q;
}

Permutation induced_matching(const CharacterTable& from, const CharacterTable& to,
                             const std::vector<int>& elem_map) {
    const int k = static_cast<int>(from.rows.size());
    if (static_cast<int>(to.rows.size()) != k) {
        fail("SizeMismatch", "matched groups have different numbers of irreducible rows");
    }
    std::vector<int> class_map(k);
    for (int c = 0; c < k; ++c) {
        class_map[c] =
            to.group->classes().class_of[elem_map[from.group->classes().representative[c]]];
    }
    Permutation m;
    for (int i = 0; i < k; ++i) {
        ClassFunction f;
        f.group = to.group;
        f.values.resize(k);
        for (int c = 0; c < k; ++c) f.values[class_map[c]] = from.rows[i].values[c];
        int j = to.row_index(f);
        if (j < 0) {
            fail("RowNotFound", "row " + std::to_string(i) +
                                    " has no counterpart with equal values in the matched table");
        }
        m.images.push_back(j);
    }
    if (!is_bijection(m.images)) fail("InternalError", "induced matching is not a bijection");
    return m;
}

} // namespace mckay
