// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests of the command-line binary: exit codes, output formats,
// stream separation, and byte determinism across processes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mckay/presets.hpp"
#include "mckay/quiver.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef MCKAY_BIN_PATH
#error "MCKAY_BIN_PATH must point at the built command-line binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

/// Run the binary through the shell, capturing whatever reaches stdout
/// (callers add their own stream redirections); `env` is prepended verbatim.
RunResult run(const std::string& args, const std::string& env = "") {
    RunResult r;
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" + MCKAY_BIN_PATH + "\" " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("presets subcommand lists every built-in group") {
    RunResult r = run("presets");
    CHECK(r.exit_code == 0);
    for (const mckay::PresetInfo& p : mckay::preset_catalog()) {
        CHECK(contains(r.output, p.name));
    }
}

TEST_CASE("quiver --json on stdout matches the in-process export byte for byte") {
    RunResult r = run("quiver --preset neg_identity_sl2 --json -");
    CHECK(r.exit_code == 0);
    CHECK(r.output == mckay::export_json(mckay::build_mckay(mckay::build_preset("neg_identity_sl2"))));
}

TEST_CASE("quiver --dot on stdout is well-formed and deterministic") {
    RunResult a = run("quiver --preset klein_gl2 --dot -");
    RunResult b = run("quiver --preset klein_gl2 --dot -");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.rfind("digraph mckay {", 0) == 0);
    CHECK(contains(a.output, "style=dashed"));
}

TEST_CASE("quiver human summary reports vertices, degrees, and the twist") {
    RunResult r = run("quiver --preset q8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "vertices: 5"));
    CHECK(contains(r.output, "degrees: 1, 1, 1, 1, 2"));
    CHECK(contains(r.output, "twist: ()"));
}

TEST_CASE("quiver --embed reports the twist traded for arrows") {
    RunResult plain = run("quiver --preset scalar_i_gl2");
    RunResult embedded = run("quiver --preset scalar_i_gl2 --embed");
    CHECK(plain.exit_code == 0);
    CHECK(embedded.exit_code == 0);
    CHECK(contains(plain.output, "twist: ("));
    CHECK(contains(plain.output, "twist: ()") == false); // scalars outside SL: nontrivial twist
    CHECK(contains(embedded.output, "twist: ()"));       // the embedded image lies in SL
    CHECK(contains(embedded.output, "embed("));
}

TEST_CASE("chartab prints the exact table") {
    RunResult r = run("chartab --preset q8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "order: 8"));
    CHECK(contains(r.output, "degrees: 1, 1, 1, 1, 2"));
    CHECK(contains(r.output, "chi_0: 1, 1, 1, 1, 1"));
    CHECK(contains(r.output, "2, 0, 0, -2, 0"));
}

TEST_CASE("extend builds the scalar extension quiver") {
    RunResult r = run("extend --preset trivial --dim 4 --scalar 6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "order: 6"));
    CHECK(contains(r.output, "vertices: 6"));
}

TEST_CASE("extend without --scalar is a usage error") {
    RunResult r = run("extend --preset trivial --dim 4 2>/dev/null");
    CHECK(r.exit_code == 2);
}

TEST_CASE("strip recovers the corner-free group from a file") {
    const std::string path = "cli_strip_input.toml";
    {
        std::ofstream f(path);
        f << "conductor = 4\ndimension = 2\n\n[[generator]]\nrows = [[\"z\", \"0\"], [\"0\", "
             "\"-z\"]]\n";
    }
    RunResult r = run("strip --file " + path + " 2>/dev/null");
    std::remove(path.c_str());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "order: 4"));
    CHECK(contains(r.output, "vertices: 4"));
    CHECK(contains(r.output, "twist: (0 2 3 1)"));
}

TEST_CASE("cover prints the deck and verifies") {
    RunResult r = run("cover --preset scalar_i_gl2 --subgroup neg_identity_sl2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "deck order: 2"));
    CHECK(contains(r.output, "vertex map: 0, 1, 1, 0"));
    CHECK(contains(r.output, "verified: yes"));
}

TEST_CASE("cover over a non-extendible subgroup fails with a clean stderr message") {
    RunResult out_only = run("cover --preset q8 --subgroup cyclic4 2>/dev/null");
    CHECK(out_only.exit_code == 1);
    CHECK(out_only.output.empty());
    RunResult err_only = run("cover --preset q8 --subgroup cyclic4 2>&1 1>/dev/null");
    CHECK(err_only.exit_code == 1);
    CHECK(contains(err_only.output, "NotExtendible"));
}

TEST_CASE("cover --subgroup sl-kernel works on a mixed-determinant group") {
    RunResult r = run("cover --preset scalar_i_gl2 --subgroup sl-kernel");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "deck order: 2"));
    CHECK(contains(r.output, "verified: yes"));
}

TEST_CASE("cover accepts --group as an alias for --preset") {
    RunResult r = run("cover --group klein_gl2 --subgroup neg_identity_sl2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "deck order: 2"));
    CHECK(contains(r.output, "verified: yes"));
}

TEST_CASE("unknown preset exits 2 with guidance on stderr") {
    RunResult r = run("quiver --preset nosuch 2>&1 1>/dev/null");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "unknown preset 'nosuch'"));
}

TEST_CASE("missing group selection exits 2") {
    RunResult r = run("quiver 2>/dev/null");
    CHECK(r.exit_code == 2);
}

TEST_CASE("help exits 0 and an unknown subcommand exits 2") {
    CHECK(run("--help >/dev/null 2>&1").exit_code == 0);
    CHECK(run("frobnicate >/dev/null 2>&1").exit_code == 2);
}

TEST_CASE("unwritable output path reports IoError and exits 1") {
    RunResult r = run("quiver --preset q8 --json /no_such_dir/x.json 2>&1 1>/dev/null");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "IoError"));
}

TEST_CASE("MCKAY_MAX_ORDER env variable bounds enumeration") {
    RunResult capped = run("quiver --preset q8 2>&1 1>/dev/null", "MCKAY_MAX_ORDER=7");
    CHECK(capped.exit_code == 1);
    CHECK(contains(capped.output, "GroupTooLarge"));
    RunResult roomy = run("quiver --preset q8 >/dev/null 2>&1", "MCKAY_MAX_ORDER=100");
    CHECK(roomy.exit_code == 0);
    RunResult invalid = run("quiver --preset q8 2>&1 1>/dev/null", "MCKAY_MAX_ORDER=abc");
    CHECK(invalid.exit_code == 2);
    CHECK(contains(invalid.output, "MCKAY_MAX_ORDER"));
    RunResult overridden =
        run("quiver --preset q8 --max-order 50 >/dev/null 2>&1", "MCKAY_MAX_ORDER=7");
    CHECK(overridden.exit_code == 0);
}

TEST_CASE("repeated runs are byte-identical across processes") {
    RunResult a = run("quiver --preset q8 --json -");
    RunResult b = run("quiver --preset q8 --json -");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    RunResult c = run("chartab --preset binary_tetrahedral");
    RunResult d = run("chartab --preset binary_tetrahedral");
    CHECK(c.exit_code == 0);
    CHECK(c.output == d.output);
}
