#include "equichar/equichar.h"

#include <exception>
#include <new>
#include <string>

#include "equichar/commands.hpp"
#include "equichar/error.hpp"

struct eqc_complex {
    equichar::ComplexFile file;
};

struct eqc_group {
    equichar::GroupFile file;
};

struct eqc_report {
    equichar::Report report;
};

namespace {

thread_local std::string last_error;

template <class F>
eqc_status guarded(F&& f) {
    try {
        last_error.clear();
        return f();
    } catch (const equichar::InputError& e) {
        last_error = e.what();
        return EQC_INPUT_ERROR;
    } catch (const equichar::PreconditionError& e) {
        last_error = e.what();
        return EQC_PRECONDITION_ERROR;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return EQC_INTERNAL_ERROR;
    } catch (const std::exception& e) {
        last_error = e.what();
        return EQC_INTERNAL_ERROR;
    } catch (...) {
        last_error = "unknown error";
        return EQC_INTERNAL_ERROR;
    }
}

eqc_status null_argument(const char* what) {
    last_error = std::string(what) + ": null argument";
    return EQC_INPUT_ERROR;
}

} // namespace

extern "C" {

const char* eqc_version(void) { return "1.0.0"; }

const char* eqc_last_error(void) { return last_error.c_str(); }

void eqc_args_init(eqc_args* args) {
    if (args) *args = eqc_args{nullptr, nullptr, nullptr, 0, 0, 0, 0, 0};
}

eqc_status eqc_complex_load(const char* path, eqc_complex** out) {
    if (!path || !out) return null_argument("eqc_complex_load");
    *out = nullptr;
    return guarded([&] {
        *out = new eqc_complex{equichar::load_complex_file(path)};
        return EQC_OK;
    });
}

eqc_status eqc_complex_parse(const char* json, eqc_complex** out) {
    if (!json || !out) return null_argument("eqc_complex_parse");
    *out = nullptr;
    return guarded([&] {
        *out = new eqc_complex{equichar::parse_complex_json(json)};
        return EQC_OK;
    });
}

void eqc_complex_free(eqc_complex* c) { delete c; }

size_t eqc_complex_vertex_count(const eqc_complex* c) { return c ? c->file.complex.vertex_count() : 0; }

int eqc_complex_dimension(const eqc_complex* c) { return c ? c->file.complex.dimension() : -1; }

int64_t eqc_complex_euler_characteristic(const eqc_complex* c) {
    return c ? equichar::euler_characteristic(c->file.complex) : 0;
}

eqc_status eqc_group_load(const char* path, eqc_group** out) {
    if (!path || !out) return null_argument("eqc_group_load");
    *out = nullptr;
    return guarded([&] {
        *out = new eqc_group{equichar::load_group_file(path)};
        return EQC_OK;
    });
}

eqc_status eqc_group_parse(const char* json, eqc_group** out) {
    if (!json || !out) return null_argument("eqc_group_parse");
    *out = nullptr;
    return guarded([&] {
        *out = new eqc_group{equichar::parse_group_json(json)};
        return EQC_OK;
    });
}

void eqc_group_free(eqc_group* g) { delete g; }

eqc_status eqc_group_order(const eqc_group* g, size_t* order) {
    if (!g || !order) return null_argument("eqc_group_order");
    return guarded([&] {
        *order = equichar::build_group(g->file).order();
        return EQC_OK;
    });
}

size_t eqc_command_count(void) { return equichar::command_names().size(); }

const char* eqc_command_name(size_t i) {
    const auto& names = equichar::command_names();
    return i < names.size() ? names[i].c_str() : nullptr;
}

eqc_status eqc_run(const char* command, const eqc_args* args, eqc_report** out) {
    if (!command || !args || !out) return null_argument("eqc_run");
    *out = nullptr;
    return guarded([&] {
        equichar::CommandOptions opt;
        if (args->complex) opt.complex = args->complex->file;
        if (args->group) opt.group = args->group->file;
        if (args->pattern) opt.pattern = args->pattern->file;
        if (args->p) opt.p = args->p;
        if (args->q) opt.q = args->q;
        if (args->m) opt.m = args->m;
        if (args->n) opt.n = args->n;
        opt.force = args->force != 0;
        auto* r = new eqc_report{equichar::run_command(command, opt)};
        *out = r;
        return r->report.verdict == equichar::Verdict::Ok ? EQC_OK : EQC_NEGATIVE;
    });
}

eqc_status eqc_report_verdict(const eqc_report* r) {
    if (!r) return null_argument("eqc_report_verdict");
    return r->report.verdict == equichar::Verdict::Ok ? EQC_OK : EQC_NEGATIVE;
}

const char* eqc_report_text(const eqc_report* r) { return r ? r->report.text.c_str() : ""; }

const char* eqc_report_json(const eqc_report* r) { return r ? r->report.json.c_str() : ""; }

void eqc_report_free(eqc_report* r) { delete r; }

} // extern "C"
