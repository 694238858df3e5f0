// SPDX-License-Identifier: Apache-2.0
#include "mckay/presets.hpp"

#include "mckay/error.hpp"
#include "mckay/groupfile.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mckay {

namespace {

struct RawPreset {
    const char* name;
    const char* text;
};

const RawPreset raw_presets[] = {
#include "preset_data.inc"
};

const char* fixed_summary(const std::string& name) {
    if (name == "neg_identity_sl2") return "center of SL(2): {I, -I}";
    if (name == "scalar_i_gl2") return "scalar fourth roots of unity in GL(2)";
    if (name == "klein_gl2") return "diagonal Klein four-group in GL(2)";
    if (name == "q8") return "quaternion group of order 8";
    if (name == "cyclic4") return "cyclic group of order 4 generated by diag(i, -i) in SL(2)";
    if (name == "binary_tetrahedral") return "binary tetrahedral group, order 24";
    if (name == "binary_octahedral") return "binary octahedral group, order 48";
    if (name == "binary_icosahedral") return "binary icosahedral group, order 120";
    if (name == "dbrane_scalar6") return "scalar sixth roots of unity in GL(4)";
    return "built-in group";
}

std::vector<PresetInfo> make_catalog() {
    std::vector<PresetInfo> catalog;
    for (const RawPreset& p : raw_presets) {
        catalog.push_back({p.name, false, fixed_summary(p.name)});
    }
    catalog.push_back({"binary_dihedral", true, "binary dihedral group of order 4n"});
    catalog.push_back({"cyclic_gl1", true, "cyclic group of order n in GL(1)"});
    catalog.push_back({"cyclic_sl2", true, "cyclic group diag(z, z^-1) in SL(2), z = primitive n-th root"});
    catalog.push_back({"trivial", true, "trivial group in GL(n); the parameter n is the dimension"});
    std::sort(catalog.begin(), catalog.end(),
              [](const PresetInfo& a, const PresetInfo& b) { return a.name < b.name; });
    return catalog;
}

const PresetInfo* find_preset(const std::string& name) {
    for (const PresetInfo& p : preset_catalog()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

std::string synthesize(const std::string& name, int n) {
    std::ostringstream out;
    if (name == "trivial") {
        out << "conductor = 1\ndimension = " << n << "\n\n[[generator]]\nrows = [";
        for (int i = 0; i < n; ++i) {
            out << "[";
            for (int j = 0; j < n; ++j) {
                out << (i == j ? "\"1\"" : "\"0\"") << (j + 1 < n ? ", " : "");
            }
            out << "]" << (i + 1 < n ? ", " : "");
        }
        out << "]\n";
    } else if (name == "cyclic_sl2") {
        out << "conductor = " << n << "\ndimension = 2\n\n[[generator]]\nrows = [[\"z\", \"0\"], [\"0\", \"z^"
            << (n - 1) << "\"]]\n";
    } else if (name == "cyclic_gl1") {
        out << "conductor = " << n << "\ndimension = 1\n\n[[generator]]\nrows = [[\"z\"]]\n";
    } else if (name == "binary_dihedral") {
        const int cond = std::lcm(2 * n, 4);
        const int e = cond / (2 * n);
        out << "conductor = " << cond << "\ndimension = 2\n\n[[generator]]\nrows = [[\"z^" << e
            << "\", \"0\"], [\"0\", \"z^" << (cond - e) << "\"]]\n\n[[generator]]\nrows = [[\"0\", \"1\"], [\"-1\", \"0\"]]\n";
    } else {
        fail("InternalError", "no synthesizer for preset '" + name + "'");
    }
    return out.str();
}

} // namespace

const std::vector<PresetInfo>& preset_catalog() {
    static const std::vector<PresetInfo> catalog = make_catalog();
    return catalog;
}

bool is_preset(const std::string& name) { return find_preset(name) != nullptr; }

bool preset_needs_parameter(const std::string& name) {
    const PresetInfo* p = find_preset(name);
    return p != nullptr && p->parameterized;
}

std::string preset_text(const std::string& name, int n) {
    const PresetInfo* p = find_preset(name);
    if (p == nullptr) fail("ParseError", "unknown preset '" + name + "'");
    if (!p->parameterized) {
        for (const RawPreset& r : raw_presets) {
            if (name == r.name) return r.text;
        }
        fail("InternalError", "preset '" + name + "' has no stored text");
    }
    if (n < 1) fail("ParseError", "preset '" + name + "' needs a parameter n >= 1");
    return synthesize(name, n);
}

GroupPtr build_preset(const std::string& name, int n, int max_order) {
    GroupFileData data = parse_group_text(preset_text(name, n));
    std::string desc = name;
    if (preset_needs_parameter(name)) desc += "(" + std::to_string(n) + ")";
    return enumerate_group(data.generators, max_order, desc);
}

} // namespace mckay
