// Batch front end for the cutjoin engine.  Links the C API only.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cutjoin.h"

namespace {

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { cj_string_free(s); }
};

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return usage_error("cannot open output file: " + path);
    out << content;
    return 0;
}

// Rational-valued flags stay strings end to end; empty means unset.
struct OpFlags {
    std::string beta, N, alpha, eps1, eps2;
    int index = 0;
    bool shifted = false;
    int window = 0;

    cj_op_params to_params() const {
        cj_op_params p{};
        p.beta = beta.empty() ? nullptr : beta.c_str();
        p.n_rat = N.empty() ? nullptr : N.c_str();
        p.index = index;
        p.shifted = shifted ? 1 : 0;
        p.window = window;
        p.alpha = alpha.empty() ? nullptr : alpha.c_str();
        p.eps1 = eps1.empty() ? nullptr : eps1.c_str();
        p.eps2 = eps2.empty() ? nullptr : eps2.c_str();
        return p;
    }
};

void add_op_flags(CLI::App* cmd, OpFlags& f) {
    cmd->add_option("--beta", f.beta, "deformation parameter, rational \"num/den\"");
    cmd->add_option("--N", f.N, "ensemble size parameter, rational");
    cmd->add_option("--index", f.index, "n for Ln / Wn");
    cmd->add_flag("--shifted", f.shifted, "Ln: include Gaussian and zero-mode terms");
    cmd->add_option("--window", f.window, "validity window for commutator-built operators");
    cmd->add_option("--alpha", f.alpha, "Jack parameter (basis=jack)");
    cmd->add_option("--eps1", f.eps1, "equivariant weight (basis=fixed)");
    cmd->add_option("--eps2", f.eps2, "equivariant weight (basis=fixed)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cut-and-join operator calculus"};
    app.require_subcommand(1);
    app.set_version_flag("--version", cj_version());

    std::string output;
    app.add_option("--output,-o", output, "output file (default stdout)")->capture_default_str();

    // apply
    auto* apply = app.add_subcommand("apply", "apply a named operator to a symmetric function");
    std::string apply_op, apply_input, apply_coords = "p";
    OpFlags apply_flags;
    apply->add_option("--op", apply_op, "W2|C|J|D|E|E1|W0beta|Ln|Wn")->required();
    apply->add_option("--input", apply_input, "e.g. \"3/2*p[2,1] + p[4]\"")->required();
    apply->add_option("--coords", apply_coords, "print in p or v coordinates")
        ->check(CLI::IsMember({"p", "v"}));
    add_op_flags(apply, apply_flags);

    // matrix
    auto* matrix = app.add_subcommand("matrix", "matrix of an operator on degree n");
    std::string matrix_op, matrix_basis = "v", matrix_format = "json";
    int matrix_n = 0;
    OpFlags matrix_flags;
    matrix->add_option("--op", matrix_op)->required();
    matrix->add_option("--n", matrix_n, "degree")->required();
    matrix->add_option("--basis", matrix_basis)->check(CLI::IsMember({"p", "v", "jack", "fixed"}));
    matrix->add_option("--format", matrix_format)->check(CLI::IsMember({"json", "csv"}));
    add_op_flags(matrix, matrix_flags);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite;
    OpFlags verify_flags;
    int verify_n = -1, verify_r = -1, verify_ensemble_n = -1;
    int verify_d = -1, verify_nmin = INT32_MIN, verify_nmax = INT32_MIN, verify_cap = -1;
    bool verify_unshifted = false;
    verify->add_option("--suite", verify_suite,
                       "cutjoin|ladder|jm|virasoro|w0constraint|jack|heisenberg|hurwitz|hierarchy")
        ->required();
    verify->add_option("--n", verify_n, "degree / group size cap");
    verify->add_option("--r", verify_r, "factorization length cap (hurwitz)");
    verify->add_option("--N", verify_ensemble_n, "ensemble size (virasoro/w0constraint)");
    verify->add_option("--beta", verify_flags.beta, "deformation, rational (jack) or integer");
    verify->add_option("--d", verify_d, "series truncation weight");
    verify->add_option("--nmin", verify_nmin, "lowest Virasoro index");
    verify->add_option("--nmax", verify_nmax, "highest Virasoro index / hierarchy depth");
    verify->add_flag("--unshifted", verify_unshifted, "virasoro: literal constraint form");
    verify->add_option("--cap", verify_cap, "degree cap (heisenberg)");
    verify->add_option("--window", verify_flags.window, "window (hierarchy)");
    verify->add_option("--eps1", verify_flags.eps1, "equivariant weight override");
    verify->add_option("--eps2", verify_flags.eps2, "equivariant weight override");

    // graph
    auto* graph = app.add_subcommand("graph", "rim-hook cut/join move graph of W2");
    int graph_n = 0;
    std::string graph_format = "dot";
    graph->add_option("--n", graph_n)->required();
    graph->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "json"}));

    // hierarchy
    auto* hier = app.add_subcommand("hierarchy", "emit W^(n) as a serialized term list");
    int hier_n = 1, hier_window = 10;
    hier->add_option("--n", hier_n)->required();
    hier->add_option("--window", hier_window);

    // moments
    auto* moments = app.add_subcommand("moments", "Gaussian beta-ensemble moment table");
    int mom_N = 2, mom_beta = 1, mom_d = 8;
    moments->add_option("--N", mom_N);
    moments->add_option("--beta", mom_beta);
    moments->add_option("--d", mom_d);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (apply->parsed()) {
        cj_symfun* input = nullptr;
        if (cj_symfun_parse(apply_input.c_str(), &input) != CJ_OK)
            return usage_error(cj_last_error());
        std::unique_ptr<cj_symfun, void (*)(cj_symfun*)> input_guard(input, cj_symfun_free);
        cj_op_params p = apply_flags.to_params();
        cj_operator* op = nullptr;
        if (cj_op_create(apply_op.c_str(), &p, &op) != CJ_OK) return usage_error(cj_last_error());
        std::unique_ptr<cj_operator, void (*)(cj_operator*)> op_guard(op, cj_op_free);
        cj_symfun* image = nullptr;
        if (cj_op_apply(op, input, &image) != CJ_OK) return usage_error(cj_last_error());
        std::unique_ptr<cj_symfun, void (*)(cj_symfun*)> image_guard(image, cj_symfun_free);
        StringGuard text;
        if (cj_symfun_format(image, apply_coords == "v" ? 1 : 0, &text.s) != CJ_OK)
            return usage_error(cj_last_error());
        return write_output(output, std::string(text.s) + "\n");
    }

    if (matrix->parsed()) {
        cj_op_params p = matrix_flags.to_params();
        StringGuard text;
        if (cj_matrix(matrix_op.c_str(), &p, matrix_n, matrix_basis.c_str(),
                      matrix_format.c_str(), &text.s) != CJ_OK)
            return usage_error(cj_last_error());
        return write_output(output, text.s);
    }

    if (verify->parsed()) {
        std::ostringstream params;
        params << "{";
        bool first = true;
        auto add = [&](const std::string& key, const std::string& value) {
            if (!first) params << ",";
            first = false;
            params << "\"" << key << "\":" << value;
        };
        if (verify_n >= 0) add("n", std::to_string(verify_n));
        if (verify_r >= 0) add("r", std::to_string(verify_r));
        if (verify_ensemble_n >= 0) add("N", std::to_string(verify_ensemble_n));
        if (!verify_flags.beta.empty()) add("beta", "\"" + verify_flags.beta + "\"");
        if (verify_d >= 0) add("d", std::to_string(verify_d));
        if (verify_nmin != INT32_MIN) add("nmin", std::to_string(verify_nmin));
        if (verify_nmax != INT32_MIN) add("nmax", std::to_string(verify_nmax));
        if (verify_unshifted) add("shifted", "false");
        if (verify_cap >= 0) add("cap", std::to_string(verify_cap));
        if (verify_flags.window > 0) add("window", std::to_string(verify_flags.window));
        if (!verify_flags.eps1.empty()) add("eps1", "\"" + verify_flags.eps1 + "\"");
        if (!verify_flags.eps2.empty()) add("eps2", "\"" + verify_flags.eps2 + "\"");
        params << "}";
        StringGuard report;
        int passed = 0;
        if (cj_verify(verify_suite.c_str(), params.str().c_str(), &report.s, &passed) != CJ_OK)
            return usage_error(cj_last_error());
        int rc = write_output(output, report.s);
        if (rc != 0) return rc;
        return passed ? 0 : 1;
    }

    if (graph->parsed()) {
        StringGuard text;
        if (cj_graph(graph_n, graph_format.c_str(), &text.s) != CJ_OK)
            return usage_error(cj_last_error());
        return write_output(output, text.s);
    }

    if (hier->parsed()) {
        StringGuard text;
        if (cj_hierarchy(hier_n, hier_window, &text.s) != CJ_OK)
            return usage_error(cj_last_error());
        return write_output(output, text.s);
    }

    if (moments->parsed()) {
        std::string params = "{\"N\":" + std::to_string(mom_N) +
                             ",\"beta\":" + std::to_string(mom_beta) +
                             ",\"d\":" + std::to_string(mom_d) + "}";
        StringGuard text;
        if (cj_moments(params.c_str(), &text.s) != CJ_OK) return usage_error(cj_last_error());
        return write_output(output, text.s);
    }

    return usage_error("no subcommand given");
}
