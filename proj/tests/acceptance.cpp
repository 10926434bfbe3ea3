// Acceptance harness: one line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "fueterlab/appell.hpp"
#include "fueterlab/bargmann.hpp"
#include "fueterlab/json_io.hpp"
#include "fueterlab/suites.hpp"

using namespace fueterlab;
namespace fs = std::filesystem;

namespace {

using Job = std::function<VerificationReport()>;

struct Tally {
    size_t checks = 0;
    size_t failed = 0;
    size_t flagged = 0;
};

Tally tally(const std::vector<VerificationReport>& reports) {
    Tally t;
    t.checks = reports.size();
    for (const auto& r : reports) {
        if (r.status == VerificationReport::Status::fail) ++t.failed;
        if (r.status == VerificationReport::Status::flagged) ++t.flagged;
    }
    return t;
}

QuatE random_quat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    auto comp = [&] { return ExactScalar(Rational(num(rng), den(rng))); };
    return QuatE{comp(), comp(), comp(), comp()};
}

// 1. Appell identities, exact.
Tally run_appell() {
    std::vector<Job> jobs;
    for (int k = 1; k <= 12; ++k)
        jobs.push_back([k] { return check_appell_property(k); });
    for (int k = 0; k <= 12; ++k)
        jobs.push_back([k] {
            return VerificationReport::exact_check("appell_regularity", {{"k", k}},
                                                   fueter_D(appell_Q(k).body).is_zero());
        });
    for (int s = 0; s <= 10; ++s)
        for (int j = 1; j <= s; ++j)
            jobs.push_back([j, s] { return check_Dbar_power(j, s); });
    for (int k = 1; k <= 3; ++k)
        for (int s = k + 1; s <= 8; ++s)
            jobs.push_back([k, s] { return check_poly_appell(k, s); });
    return tally(run_checks(std::move(jobs)));
}

// 2. Fueter-map actions, the intertwining relation, and the lowering map.
Tally run_fueter() {
    std::vector<Job> jobs;
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= 8; ++j) {
                jobs.push_back([n, k, j] { return check_C_action(n, k, j); });
                jobs.push_back([n, k, j] { return check_tau_action(n, k, j); });
                if (j >= 2) jobs.push_back([n, k, j] { return check_Dn_M(n, k, j); });
            }
    std::mt19937 rng(12345);
    for (int n = 0; n <= 3; ++n)
        for (int rep = 0; rep < 20; ++rep) {
            SliceCoeffMatrix f(n + 1);
            for (int k = 0; k <= n; ++k)
                for (int j = 0; j <= 5; ++j) f.set_coeff(k, j, random_quat(rng));
            jobs.push_back([f] { return check_relation_R1(f); });
        }
    return tally(run_checks(std::move(jobs)));
}

// 3. Hermite closed form vs Rodrigues oracle, orthogonality, moment oracle.
Tally run_hermite() {
    std::vector<Job> jobs;
    for (int m = 0; m <= 5; ++m)
        for (int p = 0; p <= 5; ++p)
            jobs.push_back([m, p] { return check_qhermite_rodrigues(m, p); });
    for (int m = 0; m <= 4; ++m)
        for (int p = 0; p <= 4; ++p)
            for (int m2 = 0; m2 <= 4; ++m2)
                for (int p2 = 0; p2 <= 4; ++p2)
                    jobs.push_back([=] {
                        return check_qhermite_orthogonality(m, p, m2, p2);
                    });
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            jobs.push_back([a, b] { return check_gaussian_moment(a, b, 1e-10); });
    return tally(run_checks(std::move(jobs)));
}

// 4. Fock norms: series norm vs slice integral, and both range-space chains.
Tally run_fock() {
    std::vector<Job> jobs;
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> len(1, 6);
    for (int n = 0; n <= 3; ++n)
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<QuatE> alpha(len(rng));
            for (auto& a : alpha) a = random_quat(rng);
            jobs.push_back([alpha, n] { return check_fock_norm_consistency(alpha, n); });
            std::vector<QuatE> beta(n + 2 + len(rng));
            for (auto& b : beta) b = random_quat(rng);
            jobs.push_back([beta, n] { return check_range_C_norm(n, beta); });
            jobs.push_back([beta, n] { return check_range_tau_norm(n, beta); });
        }
    return tally(run_checks(std::move(jobs)));
}

// 5. Exact transform actions, compositions, and coefficient isometries.
Tally run_bargmann() {
    std::vector<Job> jobs;
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 10; ++k) {
            jobs.push_back([n, k] { return check_C_composition(n, k); });
            jobs.push_back([n, k] { return check_tau_composition(n, k); });
        }
    std::mt19937 rng(4242);
    for (int n = 0; n <= 3; ++n) {
        for (int k = n + 2; k <= n + 6; ++k) {
            std::vector<QuatE> a(k + 1);
            a[k] = QuatE::real(ExactScalar(1));
            jobs.push_back([n, a] { return isometry_C_check(n, a); });
            jobs.push_back([n, a] { return isometry_tau_check(n, a); });
        }
        std::vector<QuatE> a(n + 7);
        for (auto& c : a) c = random_quat(rng);
        jobs.push_back([n, a] { return isometry_C_check(n, a); });
        jobs.push_back([n, a] { return isometry_tau_check(n, a); });
    }
    for (int N = 0; N <= 2; ++N) {
        std::vector<std::vector<QuatE>> a(N + 1);
        for (int n = 0; n <= N; ++n) {
            a[n].assign(n + 6, QuatE{});
            for (auto& c : a[n]) c = random_quat(rng);
        }
        jobs.push_back([a] { return check_full_C_isometry(a); });
        jobs.push_back([a] { return check_full_tau_isometry(a); });
    }
    return tally(run_checks(std::move(jobs)));
}

// 6. Numeric kernels: series vs closed form, and quadrature of both
// integral transforms against the exact basis actions.
Tally run_kernel() {
    std::vector<Job> jobs;
    static const std::vector<QuatD> qs = {
        {0.0, 0.0, 0.0, 0.0},  {0.5, 0.0, 0.0, 0.0},   {0.0, 0.9, 0.0, 0.0},
        {0.3, 0.3, -0.3, 0.3}, {-0.4, 0.2, 0.5, -0.1}, {0.1, -0.6, 0.3, 0.2},
        {0.7, 0.1, 0.1, -0.2}};
    static const std::vector<double> xs = {-2.0, -0.7, 0.0, 0.9, 1.8};
    for (int n = 0; n <= 2; ++n)
        for (const auto& q : qs)
            for (double x : xs)
                jobs.push_back([n, q, x] {
                    KernelPair kp = kernel_K(n, q, x, 64);
                    return VerificationReport::float_check(
                        "kernel_series_vs_closed", {{"n", n}},
                        quat_abs(kp.series - kp.closed), 1e-8);
                });
    const QuatD q0{0.3, 0.2, -0.1, 0.15};
    for (int n = 0; n <= 2; ++n)
        for (int k = 0; k <= 6; ++k) {
            jobs.push_back([n, k, q0] {
                QuatD got = transform_quadrature(
                    KernelTag::K, n, [k](double x) { return eval_psi(k, x); }, q0);
                QuatD want = eval_qhermite(n, k, q0) *
                             bargmann_basis_action(n, k).normalizer.to_double();
                return VerificationReport::float_check("quadrature_K_basis",
                                                       {{"n", n}, {"k", k}},
                                                       quat_abs(got - want), 1e-6);
            });
            jobs.push_back([n, k, q0] {
                QuatD got = transform_quadrature(
                    KernelTag::Phi, n, [k](double x) { return eval_psi(k, x); }, q0);
                QuatD want = evaluate(bargmann_C_basis(n, k).scaled(), q0);
                return VerificationReport::float_check("quadrature_Phi_basis",
                                                       {{"n", n}, {"k", k}},
                                                       quat_abs(got - want), 1e-6);
            });
        }
    return tally(run_checks(std::move(jobs)));
}

// 7. Order-two reproducing kernel identities, exact term-by-term.
Tally run_kernel_identities() {
    std::vector<Job> jobs;
    jobs.push_back([] { return check_C2_of_K2(6, 9); });
    jobs.push_back([] { return check_tau2_of_K2(6, 9); });
    return tally(run_checks(std::move(jobs)));
}

// 8. Byte-identical reports for repeated runs with the same seed.
Tally run_determinism() {
    Tally t;
    t.checks = 1;
    const char* bin = std::getenv("FUETERLAB_BIN");
    std::string first, second;
    if (bin) {
        fs::path a = fs::temp_directory_path() / "fueterlab_acc_a.json";
        fs::path b = fs::temp_directory_path() / "fueterlab_acc_b.json";
        std::string base = std::string(bin) + " verify --suite all --seed 3 --json ";
        bool ok = std::system((base + a.string() + " 2>/dev/null").c_str()) == 0 &&
                  std::system((base + b.string() + " 2>/dev/null").c_str()) == 0;
        if (ok) {
            std::ostringstream sa, sb;
            sa << std::ifstream(a, std::ios::binary).rdbuf();
            sb << std::ifstream(b, std::ios::binary).rdbuf();
            first = sa.str();
            second = sb.str();
        }
        fs::remove(a);
        fs::remove(b);
        if (!ok || first.empty()) {
            t.failed = 1;
            return t;
        }
    } else {
        SuiteConfig cfg;
        cfg.seed = 3;
        for (std::string* s : {&first, &second}) {
            Json arr = Json::array();
            for (const auto& r : run_suite("all", cfg)) arr.push_back(to_json(r));
            *s = arr.dump(2);
        }
    }
    if (first != second) t.failed = 1;
    return t;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Tally (*run)();
    };
    const Criterion criteria[] = {
        {"appell identities (exact)", run_appell},
        {"fueter map actions and relations (exact)", run_fueter},
        {"hermite polynomials and moments", run_hermite},
        {"fock space norms (exact)", run_fock},
        {"transform actions and isometries (exact)", run_bargmann},
        {"kernel series and quadrature (numeric)", run_kernel},
        {"order-two reproducing kernel (exact)", run_kernel_identities},
        {"report determinism", run_determinism},
    };
    int idx = 0, failures = 0;
    for (const auto& c : criteria) {
        ++idx;
        auto t0 = std::chrono::steady_clock::now();
        Tally t = c.run();
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        bool pass = t.failed == 0;
        if (!pass) ++failures;
        std::printf("[%d/8] %s: %s (%zu checks, %zu failed, %zu flagged, %.1fs)\n",
                    idx, pass ? "PASS" : "FAIL", c.name, t.checks, t.failed,
                    t.flagged, secs);
        std::fflush(stdout);
    }
    return failures ? 1 : 0;
}
