#include "cutjoin.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "cutjoin/class_algebra.hpp"
#include "cutjoin/hilbert.hpp"
#include "cutjoin/io.hpp"
#include "cutjoin/jack.hpp"
#include "cutjoin/verify.hpp"
#include "cutjoin/version.hpp"

using namespace cutjoin;

struct cj_symfun {
    SymFun f;
};

struct cj_operator {
    NOOperator op;
    std::string name;
};

namespace {

thread_local std::string g_last_error;

cj_status fail(cj_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Rational field_rat(const char* value, const char* what, long def) {
    if (!value) return Rational(def);
    auto r = parse_rational(value);
    if (!r) throw std::invalid_argument(std::string("malformed rational for ") + what);
    return *r;
}

// Errors from caps and parameter validation surface as CJ_EDOMAIN; parse
// and lookup problems as CJ_EINVAL.
template <typename F>
cj_status guard(F&& body, cj_status domain_code = CJ_EDOMAIN) {
    try {
        body();
        return CJ_OK;
    } catch (const std::invalid_argument& e) {
        return fail(domain_code, e.what());
    } catch (const std::exception& e) {
        return fail(CJ_EINTERNAL, e.what());
    }
}

NOOperator make_operator(const std::string& name, const cj_op_params* p) {
    cj_op_params defaults{};
    if (!p) p = &defaults;
    if (name == "W2") return build_W2();
    if (name == "C") return build_cut();
    if (name == "J") return build_join();
    if (name == "D") return build_D();
    if (name == "E") return build_E();
    if (name == "E1") return build_E1();
    if (name == "W0beta")
        return build_W0_beta(field_rat(p->beta, "beta", 1), field_rat(p->n_rat, "N", 0));
    if (name == "Ln")
        return build_Ln_beta(p->index, field_rat(p->beta, "beta", 1),
                             field_rat(p->n_rat, "N", 0), p->shifted != 0);
    if (name == "Wn") {
        int window = p->window > 0 ? p->window : 10;
        return hierarchy(p->index, window);
    }
    throw std::invalid_argument("unknown operator name: " + name);
}

Json params_meta(const std::string& op_name, const cj_op_params* p) {
    Json j = {{"op", op_name}};
    if (p) {
        if (p->beta) j["beta"] = p->beta;
        if (p->n_rat) j["N"] = p->n_rat;
        if (p->index) j["index"] = p->index;
        if (p->shifted) j["shifted"] = true;
        if (p->window) j["window"] = p->window;
        if (p->alpha) j["alpha"] = p->alpha;
        if (p->eps1) j["eps1"] = p->eps1;
        if (p->eps2) j["eps2"] = p->eps2;
    }
    return j;
}

}  // namespace

extern "C" {

const char* cj_version(void) { return kVersion; }

const char* cj_last_error(void) { return g_last_error.c_str(); }

void cj_string_free(char* s) { std::free(s); }

cj_status cj_symfun_parse(const char* text, cj_symfun** out) {
    if (!text || !out) return fail(CJ_EINVAL, "null argument");
    std::string error;
    auto f = parse_symfun(text, &error);
    if (!f) return fail(CJ_EINVAL, "parse error: " + error);
    *out = new cj_symfun{std::move(*f)};
    return CJ_OK;
}

cj_status cj_symfun_format(const cj_symfun* f, int v_coords, char** out) {
    if (!f || !out) return fail(CJ_EINVAL, "null argument");
    *out = dup_string(format_symfun(f->f, v_coords != 0));
    return CJ_OK;
}

cj_status cj_symfun_to_json(const cj_symfun* f, char** out) {
    if (!f || !out) return fail(CJ_EINVAL, "null argument");
    *out = dup_string(symfun_to_json(f->f).dump(2));
    return CJ_OK;
}

void cj_symfun_free(cj_symfun* f) { delete f; }

cj_status cj_op_create(const char* name, const cj_op_params* params, cj_operator** out) {
    if (!name || !out) return fail(CJ_EINVAL, "null argument");
    return guard(
        [&] { *out = new cj_operator{make_operator(name, params), name}; }, CJ_EINVAL);
}

cj_status cj_op_apply(const cj_operator* op, const cj_symfun* f, cj_symfun** out) {
    if (!op || !f || !out) return fail(CJ_EINVAL, "null argument");
    return guard([&] { *out = new cj_symfun{op->op.apply(f->f)}; });
}

cj_status cj_op_terms_json(const cj_operator* op, int degree, char** out) {
    if (!op || !out) return fail(CJ_EINVAL, "null argument");
    return guard([&] {
        Json doc = {{"op", op->name}, {"terms", terms_to_json(op->op.instantiate(degree))}};
        *out = dup_string(doc.dump(2));
    });
}

void cj_op_free(cj_operator* op) { delete op; }

cj_status cj_matrix(const char* op_name, const cj_op_params* params, int n, const char* basis,
                    const char* format, char** out) {
    if (!op_name || !basis || !format || !out) return fail(CJ_EINVAL, "null argument");
    return guard([&] {
        if (n < 0 || n > 16) throw std::invalid_argument("matrix: n must be in [0, 16]");
        NOOperator op = make_operator(op_name, params);
        std::string b = basis;
        OpMatrix m;
        if (b == "p") {
            m = matrix_in_basis(op, n, MatrixBasis::PowerSum);
        } else if (b == "v") {
            m = matrix_in_basis(op, n, MatrixBasis::NormalizedV);
        } else if (b == "jack") {
            Rational alpha = field_rat(params ? params->alpha : nullptr, "alpha", 1);
            m = jack_matrix(op, n, alpha);
        } else if (b == "fixed") {
            EquivParams p{field_rat(params ? params->eps1 : nullptr, "eps1", 1),
                          field_rat(params ? params->eps2 : nullptr, "eps2", -1)};
            m = fixed_point_transport(op, n, p);
        } else {
            throw std::invalid_argument("unknown basis: " + b);
        }
        Json meta_params = params_meta(op_name, params);
        meta_params["n"] = n;
        meta_params["basis"] = b;
        Json meta = make_meta("matrix", meta_params);
        std::string f = format;
        if (f == "json")
            *out = dup_string(dump_with_meta(matrix_to_json(m), meta));
        else if (f == "csv")
            *out = dup_string(matrix_to_csv(m, meta));
        else
            throw std::invalid_argument("unknown matrix format: " + f);
    });
}

cj_status cj_graph(int n, const char* format, char** out) {
    if (!format || !out) return fail(CJ_EINVAL, "null argument");
    return guard([&] {
        RimhookGraph g = rimhook_graph(n);
        Json meta = make_meta("graph", {{"n", n}});
        std::string f = format;
        if (f == "json")
            *out = dup_string(dump_with_meta(graph_to_json(g), meta));
        else if (f == "dot")
            *out = dup_string(graph_to_dot(g, meta));
        else
            throw std::invalid_argument("unknown graph format: " + f);
    });
}

cj_status cj_hierarchy(int n, int window, char** out) {
    if (!out) return fail(CJ_EINVAL, "null argument");
    return guard([&] {
        NOOperator op = hierarchy(n, window);
        auto shift = op.degree_shift();
        Json doc = {{"n", n},
                    {"window", window},
                    {"degree_shift", shift ? Json(*shift) : Json(nullptr)},
                    {"degree_shift_matches_n", shift && *shift == n},
                    {"terms", terms_to_json(op.instantiate(window))}};
        *out = dup_string(
            dump_with_meta(doc, make_meta("hierarchy", {{"n", n}, {"window", window}})));
    });
}

cj_status cj_moments(const char* params_json, char** out) {
    if (!out) return fail(CJ_EINVAL, "null argument");
    return guard([&] {
        Json p = params_json ? Json::parse(params_json) : Json::object();
        int N = p.value("N", 2);
        int beta = p.value("beta", 1);
        int d = p.value("d", 8);
        MomentTable t = build_moment_table(N, beta, d);
        *out = dup_string(dump_with_meta(moment_table_to_json(t),
                                         make_meta("moments", {{"N", N}, {"beta", beta}, {"d", d}})));
    });
}

cj_status cj_weights(int n, const char* eps1, const char* eps2, char** out) {
    if (!out) return fail(CJ_EINVAL, "null argument");
    return guard([&] {
        EquivParams p{field_rat(eps1, "eps1", 1), field_rat(eps2, "eps2", -1)};
        validate_params(p);
        Json meta = make_meta("weights", {{"n", n},
                                          {"eps1", rational_str(p.e1)},
                                          {"eps2", rational_str(p.e2)}});
        *out = dup_string(dump_with_meta(weight_table_to_json(n, p), meta));
    });
}

cj_status cj_verify(const char* suite, const char* params_json, char** report_json, int* passed) {
    if (!suite) return fail(CJ_EINVAL, "null suite");
    Json params;
    try {
        params = params_json && *params_json ? Json::parse(params_json) : Json::object();
    } catch (const std::exception& e) {
        return fail(CJ_EINVAL, std::string("params: ") + e.what());
    }
    return guard([&] {
        Report rep = run_suite(suite, params);
        if (passed) *passed = rep.passed ? 1 : 0;
        if (report_json)
            *report_json =
                dup_string(dump_with_meta(rep.to_json(), make_meta("verify", rep.params)));
    }, CJ_EINVAL);
}

}  // extern "C"
