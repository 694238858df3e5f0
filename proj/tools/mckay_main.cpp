// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: compute McKay quivers of finite matrix groups,
// character tables, scalar extensions, determinant-twist embeddings, and
// regular quiver coverings.

#include "mckay/acceptance.hpp"
#include "mckay/covers.hpp"
#include "mckay/error.hpp"
#include "mckay/groupfile.hpp"
#include "mckay/presets.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using mckay::GroupPtr;
using mckay::Quiver;

/// Command-line misuse distinct from domain errors; exits with status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_max_order() {
    const char* env = std::getenv("MCKAY_MAX_ORDER");
    if (env == nullptr || *env == '\0') return 10000;
    std::string s(env);
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw UsageError("MCKAY_MAX_ORDER must be a positive integer, got '" + s + "'");
        }
    }
    try {
        long long v = std::stoll(s);
        if (v < 1 || v > 1000000000) throw std::out_of_range("range");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw UsageError("MCKAY_MAX_ORDER must be a positive integer, got '" + s + "'");
    }
}

/// Options shared by every subcommand that needs an input group.
struct GroupOpts {
    std::string preset;
    int n = 0;
    std::string file;
    int max_order = 10000;

    void attach(CLI::App* cmd, bool group_alias = false) {
        cmd->add_option(group_alias ? "--preset,--group" : "--preset", preset,
                        "built-in group (see 'presets')");
        cmd->add_option("--n,--dim", n, "parameter for parameterized presets");
        cmd->add_option("--file", file, "group file with conductor, dimension, generators");
        cmd->add_option("--max-order", max_order,
                        "enumeration bound (default: MCKAY_MAX_ORDER or 10000)")
            ->capture_default_str();
    }

    GroupPtr resolve() const {
        if (preset.empty() == file.empty()) {
            throw UsageError("choose exactly one of --preset or --file");
        }
        if (!preset.empty()) {
            if (!mckay::is_preset(preset)) {
                throw UsageError("unknown preset '" + preset +
                                 "' (run 'mckay presets' for the list)");
            }
            return mckay::build_preset(preset, n, max_order);
        }
        mckay::GroupFileData data = mckay::parse_group_file(file);
        return mckay::enumerate_group(data.generators, max_order, file);
    }
};

/// Output-file options for quiver-producing subcommands; "-" means stdout.
struct OutputOpts {
    std::string dot_path;
    std::string json_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--dot", dot_path, "write Graphviz output to a file ('-' for stdout)");
        cmd->add_option("--json", json_path, "write JSON output to a file ('-' for stdout)");
    }

    bool any() const { return !dot_path.empty() || !json_path.empty(); }
};

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) mckay::fail("IoError", "cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) mckay::fail("IoError", "cannot write '" + path + "'");
}

template <typename T>
std::string join(const std::vector<T>& v, const char* sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += sep;
        if constexpr (std::is_same_v<T, std::string>) {
            s += v[i];
        } else {
            s += std::to_string(v[i]);
        }
    }
    return s;
}

void print_quiver_summary(const Quiver& q, const GroupPtr& g) {
    std::cout << "group: " << g->description() << "\n";
    std::cout << "order: " << g->order() << "\n";
    std::cout << "vertices: " << q.vertex_count() << "\n";
    std::cout << "degrees: " << join(q.degrees) << "\n";
    std::cout << "arrows (rows are sources):\n";
    for (const auto& row : q.arrows) {
        std::cout << " ";
        for (long long a : row) std::cout << " " << a;
        std::cout << "\n";
    }
    if (q.nakayama) {
        std::cout << "twist: " << q.nakayama->cycle_string() << "\n";
    } else {
        std::cout << "twist: absorbed into arrows\n";
    }
}

void emit_quiver(const Quiver& q, const GroupPtr& g, const OutputOpts& out) {
    if (!out.dot_path.empty()) write_output(out.dot_path, mckay::export_dot(q));
    if (!out.json_path.empty()) write_output(out.json_path, mckay::export_json(q));
    if (!out.any()) print_quiver_summary(q, g);
}

int cmd_presets() {
    for (const mckay::PresetInfo& p : mckay::preset_catalog()) {
        std::cout << p.name << (p.parameterized ? "(n)" : "") << " — " << p.summary << "\n";
    }
    return 0;
}

int cmd_quiver(const GroupOpts& gopt, const OutputOpts& out, bool embed) {
    GroupPtr g = gopt.resolve();
    if (embed) g = mckay::embed_det_inverse(g).image;
    emit_quiver(mckay::build_mckay(g), g, out);
    return 0;
}

int cmd_chartab(const GroupOpts& gopt) {
    GroupPtr g = gopt.resolve();
    mckay::CharacterTable t = mckay::CharacterTable::compute(g);
    const auto& cls = g->classes();
    std::cout << "group: " << g->description() << "\n";
    std::cout << "order: " << g->order() << "\n";
    std::cout << "dimension: " << g->dim() << "\n";
    std::cout << "conductor: " << g->conductor() << "\n";
    std::cout << "exponent: " << g->exponent() << "\n";
    std::cout << "classes: " << g->class_count() << "\n";
    std::cout << "prime: " << t.prime << "\n";
    std::vector<int> sizes, orders;
    for (const auto& m : cls.members) sizes.push_back(static_cast<int>(m.size()));
    for (int c = 0; c < g->class_count(); ++c) orders.push_back(cls.rep_order[c]);
    std::cout << "class sizes: " << join(sizes) << "\n";
    std::cout << "class orders: " << join(orders) << "\n";
    std::cout << "degrees: " << join(t.degrees) << "\n";
    std::cout << "rows (one irreducible per line, values per class):\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        std::vector<std::string> vals;
        for (const auto& v : t.rows[i].values) vals.push_back(v.str());
        std::cout << "  chi_" << i << ": " << join(vals) << "\n";
    }
    return 0;
}

int cmd_extend(const GroupOpts& gopt, const OutputOpts& out, int scalar, bool embed) {
    GroupPtr g = gopt.resolve();
    GroupPtr ext = mckay::scalar_extend(g, scalar, gopt.max_order);
    if (embed) ext = mckay::embed_det_inverse(ext).image;
    emit_quiver(mckay::build_mckay(ext), ext, out);
    return 0;
}

int cmd_strip(const GroupOpts& gopt, const OutputOpts& out, bool embed) {
    GroupPtr g = mckay::strip_diagonal(gopt.resolve());
    if (embed) g = mckay::embed_det_inverse(g).image;
    emit_quiver(mckay::build_mckay(g), g, out);
    return 0;
}

int cmd_cover(const GroupOpts& gopt, const std::string& subgroup, int subgroup_n,
              const std::string& json_path) {
    GroupPtr ambient = gopt.resolve();
    mckay::NormalEmbedding emb;
    if (subgroup == "sl-kernel") {
        emb = mckay::sl_kernel(ambient);
    } else {
        GroupPtr sub;
        if (subgroup == "trivial") {
            int n = subgroup_n > 0 ? subgroup_n : ambient->dim();
            sub = mckay::build_preset("trivial", n, gopt.max_order);
        } else {
            if (!mckay::is_preset(subgroup)) {
                throw UsageError("unknown subgroup '" + subgroup +
                                 "' (a preset name, 'sl-kernel', or 'trivial')");
            }
            sub = mckay::build_preset(subgroup, subgroup_n, gopt.max_order);
        }
        emb = mckay::embed_subgroup(ambient, sub);
    }
    mckay::CharacterTable tg = mckay::CharacterTable::compute(emb.ambient);
    mckay::CharacterTable tl = mckay::CharacterTable::compute(emb.sub);
    Quiver source = mckay::build_mckay(tg);
    Quiver target = mckay::build_mckay(tl);
    mckay::CoveringMap cover = mckay::build_covering(emb, tg, tl, source, target);
    mckay::CoverReport report = mckay::verify_regular_covering(cover);

    std::cout << "ambient: " << emb.ambient->description() << " (order " << emb.ambient->order()
              << ", " << source.vertex_count() << " vertices)\n";
    std::cout << "subgroup: " << emb.sub->description() << " (order " << emb.sub->order() << ", "
              << target.vertex_count() << " vertices)\n";
    std::cout << "deck order: " << cover.deck_order << "\n";
    std::cout << "vertex map: " << join(cover.vertex_map) << "\n";
    std::cout << "deck transformations:\n";
    for (const auto& d : cover.deck) std::cout << "  " << d.cycle_string() << "\n";
    std::cout << "verified: " << (report.ok ? "yes" : "NO") << "\n";
    for (const auto& v : report.violations) std::cerr << "violation: " << v << "\n";

    if (!json_path.empty()) {
        nlohmann::ordered_json j;
        j["ambient"] = emb.ambient->description();
        j["subgroup"] = emb.sub->description();
        j["deck_order"] = cover.deck_order;
        j["pi"] = cover.vertex_map;
        auto deck = nlohmann::ordered_json::array();
        for (const auto& d : cover.deck) deck.push_back(d.images);
        j["deck"] = deck;
        j["verified"] = report.ok;
        write_output(json_path, j.dump(2) + "\n");
    }
    return report.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact McKay quivers of finite matrix groups over cyclotomic fields"};
    app.require_subcommand(1);

    CLI::App* c_presets = app.add_subcommand("presets", "list the built-in groups");

    GroupOpts g_quiver;
    OutputOpts o_quiver;
    bool embed_quiver = false;
    CLI::App* c_quiver = app.add_subcommand("quiver", "McKay quiver of a group");
    g_quiver.attach(c_quiver);
    o_quiver.attach(c_quiver);
    c_quiver->add_flag("--embed", embed_quiver,
                       "block-diagonal special-linear embedding: trade the twist for arrows");

    GroupOpts g_chartab;
    CLI::App* c_chartab = app.add_subcommand("chartab", "exact irreducible character table");
    g_chartab.attach(c_chartab);

    GroupOpts g_extend;
    OutputOpts o_extend;
    bool embed_extend = false;
    int scalar = 0;
    CLI::App* c_extend =
        app.add_subcommand("extend", "adjoin a scalar root of unity, then the quiver");
    g_extend.attach(c_extend);
    o_extend.attach(c_extend);
    c_extend->add_option("--scalar", scalar, "adjoin zeta_k times the identity")
        ->required()
        ->check(CLI::PositiveNumber);
    c_extend->add_flag("--embed", embed_extend,
                       "block-diagonal special-linear embedding: trade the twist for arrows");

    GroupOpts g_strip;
    OutputOpts o_strip;
    bool embed_strip = false;
    CLI::App* c_strip = app.add_subcommand(
        "strip", "drop the trailing diagonal entries of a diagonal-corner group, then the quiver");
    g_strip.attach(c_strip);
    o_strip.attach(c_strip);
    c_strip->add_flag("--embed", embed_strip,
                      "block-diagonal special-linear embedding: trade the twist for arrows");

    GroupOpts g_cover;
    std::string subgroup;
    int subgroup_n = 0;
    std::string cover_json;
    CLI::App* c_cover =
        app.add_subcommand("cover", "regular covering of quivers over a normal subgroup");
    g_cover.attach(c_cover, /*group_alias=*/true);
    c_cover
        ->add_option("--subgroup", subgroup,
                     "normal subgroup: a preset name, 'sl-kernel', or 'trivial'")
        ->required();
    c_cover->add_option("--subgroup-n", subgroup_n, "parameter for a parameterized subgroup");
    c_cover->add_option("--json", cover_json, "write the covering as JSON ('-' for stdout)");

    CLI::App* c_check =
        app.add_subcommand("check", "run the built-in verification suite and report PASS/FAIL");

    try {
        int max_order = default_max_order();
        g_quiver.max_order = g_chartab.max_order = g_extend.max_order = g_strip.max_order =
            g_cover.max_order = max_order;

        app.parse(argc, argv);

        if (c_presets->parsed()) return cmd_presets();
        if (c_quiver->parsed()) return cmd_quiver(g_quiver, o_quiver, embed_quiver);
        if (c_chartab->parsed()) return cmd_chartab(g_chartab);
        if (c_extend->parsed()) return cmd_extend(g_extend, o_extend, scalar, embed_extend);
        if (c_strip->parsed()) return cmd_strip(g_strip, o_strip, embed_strip);
        if (c_cover->parsed()) return cmd_cover(g_cover, subgroup, subgroup_n, cover_json);
        if (c_check->parsed()) return mckay::run_acceptance(std::cout) ? 0 : 1;
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const mckay::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
