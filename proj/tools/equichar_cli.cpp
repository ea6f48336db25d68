// equichar command-line driver. Links only the C interface.
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "equichar/equichar.h"

namespace {

struct Flags {
    std::string complex, group, pattern;
    int64_t p = 0, q = 0, m = 0, n = 0;
    bool json = false;
    bool force = false;
};

struct Handles {
    std::unique_ptr<eqc_complex, decltype(&eqc_complex_free)> complex{nullptr, eqc_complex_free};
    std::unique_ptr<eqc_complex, decltype(&eqc_complex_free)> pattern{nullptr, eqc_complex_free};
    std::unique_ptr<eqc_group, decltype(&eqc_group_free)> group{nullptr, eqc_group_free};
};

int fail(eqc_status s) {
    std::fprintf(stderr, "equichar: %s\n", eqc_last_error());
    return static_cast<int>(s);
}

int run(const std::string& command, const Flags& f) {
    Handles h;
    eqc_args args;
    eqc_args_init(&args);
    if (!f.complex.empty()) {
        eqc_complex* c = nullptr;
        if (eqc_status s = eqc_complex_load(f.complex.c_str(), &c); s != EQC_OK) return fail(s);
        h.complex.reset(c);
        args.complex = c;
    }
    if (!f.pattern.empty()) {
        eqc_complex* c = nullptr;
        if (eqc_status s = eqc_complex_load(f.pattern.c_str(), &c); s != EQC_OK) return fail(s);
        h.pattern.reset(c);
        args.pattern = c;
    }
    if (!f.group.empty()) {
        eqc_group* g = nullptr;
        if (eqc_status s = eqc_group_load(f.group.c_str(), &g); s != EQC_OK) return fail(s);
        h.group.reset(g);
        args.group = g;
    }
    args.p = f.p;
    args.q = f.q;
    args.m = f.m;
    args.n = f.n;
    args.force = f.force ? 1 : 0;

    eqc_report* r = nullptr;
    const eqc_status s = eqc_run(command.c_str(), &args, &r);
    if (s != EQC_OK && s != EQC_NEGATIVE) return fail(s);
    std::unique_ptr<eqc_report, decltype(&eqc_report_free)> report(r, eqc_report_free);
    if (f.json) std::printf("%s\n", eqc_report_json(r));
    else std::fputs(eqc_report_text(r), stdout);
    return static_cast<int>(s);
}

struct Spec {
    const char* name;
    const char* help;
    bool complex, group, pattern, p, q, m, n, force;
};

// clang-format off
const Spec kSpecs[] = {
    {"euler-class",      "Equivariant Euler class of K x A_L",                  true,  true,  false, false, false, false, false, false},
    {"euler-free-coeff", "Coefficient of [G/1] by two routes",                  true,  true,  false, false, false, false, false, false},
    {"acyclicity-check", "Every vertex fixed by a nontrivial proper subgroup?", true,  true,  false, false, false, false, false, true},
    {"cm-check",         "Cohen-Macaulay test with failing links",             true,  false, false, false, false, false, false, false},
    {"duality-report",   "Duality verdict, cohomology profile, Bredon scan",   true,  true,  false, false, false, false, false, false},
    {"double",           "Find a pattern, double along it, scan the result",    true,  false, true,  false, false, false, false, false},
    {"quillen-check",    "Nilpotent vs elementary abelian subgroup posets",     false, true,  false, false, false, false, false, false},
    {"weyl-check",       "Upper intervals vs Weyl group subgroup posets",       false, true,  false, false, false, false, false, false},
    {"poset-euler",      "Augmented Euler characteristic of S(G)",              false, true,  false, true,  false, false, true,  false},
    {"subgroups",        "Conjugacy classes of subgroups",                      false, true,  false, false, false, false, false, false},
    {"jones-verify",     "Chain-level check of the Moore space extension",      false, false, false, true,  true,  true,  false, false},
};
// clang-format on

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equichar: equivariant invariants of finite group actions on flag complexes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", eqc_version());
    Flags f;
    for (const Spec& s : kSpecs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_flag("--json", f.json, "Emit one JSON document instead of text");
        if (s.complex) sub->add_option("--complex", f.complex, "Complex file (JSON)")->check(CLI::ExistingFile);
        if (s.group) sub->add_option("--group", f.group, "Group file (JSON)")->check(CLI::ExistingFile);
        if (s.pattern) sub->add_option("--pattern", f.pattern, "Pattern complex file (JSON)")->check(CLI::ExistingFile);
        if (s.p) sub->add_option("--p", f.p, "Prime or cyclic group order");
        if (s.q) sub->add_option("--q", f.q, "Torsion order of the Moore space");
        if (s.m) sub->add_option("--m", f.m, "Degree of the Moore space");
        if (s.n) sub->add_option("--n", f.n, "Rank of the elementary abelian group");
        if (s.force) sub->add_flag("--force", f.force, "Accept any p-group of order at least p^2");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(EQC_INPUT_ERROR);
    }
    return run(app.get_subcommands().front()->get_name(), f);
}
