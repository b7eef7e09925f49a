// Acceptance suite: the exact-reproduction and property gates, one printed
// PASS/FAIL line per criterion.  Exercises the C API and the CLI binary for
// the external surfaces and the C++ core for the algebraic cross-checks.

#include "doctest.h"

#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "cutjoin.h"
#include "cutjoin/class_algebra.hpp"
#include "cutjoin/hilbert.hpp"
#include "cutjoin/jack.hpp"
#include "cutjoin/verify.hpp"

using namespace cutjoin;

namespace {

void criterion(int k, const std::string& desc, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k << ": " << desc << std::endl;
    CHECK_MESSAGE(ok, "criterion ", k, ": ", desc);
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    std::string cmd = std::string(CUTJOIN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    if (WIFEXITED(rc)) r.exit_code = WEXITSTATUS(rc);
    return r;
}

bool suite_passes(const std::string& name, const Json& params) {
    return run_suite(name, params).passed;
}

}  // namespace

TEST_CASE("criterion 1: degree-4 matrix reproduction through the CLI") {
    CliResult r = run_cli("matrix --op W2 --n 4 --basis v --format json");
    bool ok = r.exit_code == 0;
    Json expected_entries = Json::array();
    std::vector<std::vector<std::string>> rows{{"0", "3", "4", "0", "0"},
                                               {"4", "0", "0", "4", "0"},
                                               {"2", "0", "0", "1", "0"},
                                               {"0", "3", "2", "0", "6"},
                                               {"0", "0", "0", "1", "0"}};
    for (const auto& row : rows) expected_entries.push_back(row);
    if (ok) {
        Json doc = Json::parse(r.out, nullptr, false);
        ok = !doc.is_discarded() && doc["entries"] == expected_entries &&
             doc["row_labels"] == Json::parse("[[4],[3,1],[2,2],[2,1,1],[1,1,1,1]]");
    }
    criterion(1, "matrix --op W2 --n 4 --basis v equals the golden 5x5 matrix", ok);
}

TEST_CASE("criterion 2: spectrum of the degree-4 matrix") {
    OpMatrix m = matrix_in_basis(build_W2(), 4, MatrixBasis::NormalizedV);
    RVector expected_roots{Rational(6), Rational(2), Rational(0), Rational(-2), Rational(-6)};
    bool ok = charpoly(m.entries) == poly_from_roots(expected_roots);
    // and those roots are exactly the content sums of the five partitions
    RVector contents;
    for (const auto& lambda : enumerate_partitions(4))
        contents.push_back(Rational(content_sum(lambda)));
    ok = ok && poly_from_roots(contents) == poly_from_roots(expected_roots);
    criterion(2, "eigenvalues of the degree-4 matrix are {6,2,0,-2,-6}", ok);
}

TEST_CASE("criterion 3: class-algebra intertwining with the unnormalized witness") {
    bool ok = suite_passes("cutjoin", {{"n", 6}});
    criterion(3, "normalized intertwining for n <= 6 plus the n=3 witness", ok);
}

TEST_CASE("criterion 4: ladder and Jucys-Murphy lifting") {
    bool ok = suite_passes("ladder", {{"n", 6}}) && suite_passes("jm", {{"n", 6}});
    criterion(4, "scaled projection intertwines with E1 and centered = jm, n <= 6", ok);
}

TEST_CASE("criterion 5: commutator engine") {
    bool ok = suite_passes("hierarchy", {{"nmax", 4}, {"window", 10}});
    // apply-based confirmation of both identities on every p_lambda, |lambda| <= 10
    NOOperator e1_comm = commutator(build_W2(), build_p_mult(1), 10);
    NOOperator e1 = build_E1();
    NOOperator w1 = hierarchy(1, 10);
    NOOperator w1_display = NOOperator::finite(w1_closed_form(10), 10);
    for (int n = 0; n <= 10 && ok; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            SymFun f = SymFun::monomial(lambda);
            if (!(e1_comm.apply(f) == e1.apply(f)) ||
                !(w1.apply(f) == w1_display.apply(f))) {
                ok = false;
                break;
            }
        }
    criterion(5, "[W2,p1] = E1, [W2,E1] = W1 display on |lambda| <= 10, deg W^(n) = n", ok);
}

TEST_CASE("criterion 6: Virasoro and W constraints of the Gaussian beta-ensemble") {
    bool ok = true;
    for (int N = 1; N <= 3 && ok; ++N)
        for (int beta = 1; beta <= 2 && ok; ++beta) {
            ok = suite_passes("virasoro",
                              {{"N", N}, {"beta", beta}, {"d", 8}, {"nmin", -1}, {"nmax", 4}});
            ok = ok && suite_passes("w0constraint", {{"N", N}, {"beta", beta}, {"d", 8}});
        }
    criterion(6, "shifted L_n Z = 0 and the W constraint for (N,beta) in {1,2,3}x{1,2}, d=8",
              ok);
}

TEST_CASE("criterion 7: Jack diagonality") {
    bool ok = suite_passes("jack", {{"n", 6}});
    criterion(7, "beta C + J + ((1-beta)/2) D diagonal on Jack(1/beta), n <= 6, beta grid", ok);
}

TEST_CASE("criterion 8: localization layer") {
    bool ok = suite_passes("heisenberg", {{"cap", 6}, {"n", 5}});
    criterion(8, "Heisenberg relations at 3 generic pairs; W0 transport diagonal, n <= 5", ok);
}

TEST_CASE("criterion 9: Hurwitz cross-check") {
    bool ok = suite_passes("hurwitz", {{"n", 5}, {"r", 6}});
    criterion(9, "W^r coefficients match factorization counts for n <= 5, r <= 6", ok);
}

TEST_CASE("cli exit codes and determinism") {
    CHECK(run_cli("verify --suite hurwitz --n 3 --r 3").exit_code == 0);
    CHECK(run_cli("verify --suite cutjoin --n 4").exit_code == 0);
    CHECK(run_cli("verify --suite virasoro --N 2 --beta 1 --d 6").exit_code == 0);
    CHECK(run_cli("graph --n 42").exit_code == 2);
    CHECK(run_cli("apply --op nope --input p[2]").exit_code == 2);
    // a suite that promises a witness and is given an empty range fails
    CHECK(run_cli("verify --suite virasoro --unshifted --nmin 5 --nmax 4").exit_code == 1);

    CliResult a = run_cli("graph --n 5 --format json");
    CliResult b = run_cli("graph --n 5 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());

    CliResult apply = run_cli("apply --op W2 --input \"p[4]\"");
    CHECK(apply.exit_code == 0);
    CHECK(apply.out == "4*p[3,1] + 2*p[2,2]\n");

    CliResult e1 = run_cli("apply --op E1 --input \"p[1]\"");
    CHECK(e1.out == "p[2]\n");

    CliResult w0 = run_cli("apply --op W0beta --beta 1 --N 0 --input \"p[4]\"");
    CHECK(w0.out == "4*p[3,1] + 2*p[2,2]\n");

    // --output writes the same bytes to a file
    std::string tmp = "/tmp/cutjoin_accept_graph.json";
    CliResult redirected = run_cli("--output " + tmp + " graph --n 5 --format json");
    CHECK(redirected.exit_code == 0);
    FILE* fp = fopen(tmp.c_str(), "rb");
    REQUIRE(fp != nullptr);
    std::string content;
    char fbuf[4096];
    size_t fn;
    while ((fn = fread(fbuf, 1, sizeof fbuf, fp)) > 0) content.append(fbuf, fn);
    fclose(fp);
    std::remove(tmp.c_str());
    CHECK(content == a.out);
}
