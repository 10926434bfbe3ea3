#include "fueterlab/suites.hpp"

#include <atomic>
#include <cstdlib>
#include <random>
#include <thread>

#include "fueterlab/bargmann.hpp"

namespace fueterlab {

std::vector<VerificationReport> run_checks(
    std::vector<std::function<VerificationReport()>> jobs) {
    std::vector<VerificationReport> out(jobs.size());
    unsigned pool = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("FUETERLAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) pool = static_cast<unsigned>(v);
    }
    if (pool == 0) pool = 1;
    pool = std::min<unsigned>(pool, jobs.size() ? jobs.size() : 1);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
            out[i] = jobs[i]();
    };
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < pool; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    std::sort(out.begin(), out.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  if (a.check_name != b.check_name) return a.check_name < b.check_name;
                  return a.params < b.params;
              });
    return out;
}

bool suite_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.ok()) return false;
    return true;
}

// ---- deterministic random inputs ----

static QuatE random_quat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    auto s = [&] { return ExactScalar(Rational(num(rng), den(rng))); };
    return {s(), s(), s(), s()};
}

static std::vector<QuatE> random_alpha(std::mt19937& rng, int len) {
    std::vector<QuatE> a(len);
    for (auto& q : a) q = random_quat(rng);
    return a;
}

static std::vector<std::vector<QuatE>> random_matrix_coeffs(std::mt19937& rng,
                                                            int order, int cols) {
    std::vector<std::vector<QuatE>> m(order);
    for (auto& row : m) row = random_alpha(rng, cols);
    return m;
}

using Jobs = std::vector<std::function<VerificationReport()>>;

// ---- suite builders ----

static void build_appell(Jobs& jobs, const SuiteConfig& cfg) {
    for (int k = 1; k <= cfg.deg_max; ++k)
        jobs.push_back([k] { return check_appell_property(k); });
    for (int k = 0; k <= cfg.deg_max; ++k)
        jobs.push_back([k] {
            // Q_k lies in the kernel of the Cauchy-Fueter operator
            bool ok = fueter_D(appell_Q(k).body).is_zero();
            return VerificationReport::exact_check("appell_regularity", {{"k", k}}, ok);
        });
    for (int s = 0; s <= std::min(cfg.deg_max, 10); ++s)
        for (int j = 1; j <= s; ++j)
            jobs.push_back([j, s] { return check_Dbar_power(j, s); });
    for (int k = 1; k <= std::min(cfg.n_max, 3); ++k)
        for (int s = k + 1; s <= cfg.deg_max; ++s)
            jobs.push_back([k, s] { return check_poly_appell(k, s); });
}

static void build_fueter(Jobs& jobs, const SuiteConfig& cfg) {
    for (int n = 0; n <= cfg.n_max; ++n)
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= cfg.deg_max; ++j) {
                jobs.push_back([n, k, j] { return check_C_action(n, k, j); });
                jobs.push_back([n, k, j] { return check_tau_action(n, k, j); });
                if (j >= 2)
                    jobs.push_back([n, k, j] { return check_Dn_M(n, k, j); });
            }
    std::mt19937 rng(cfg.seed + 101);
    for (int n = 0; n <= cfg.n_max; ++n)
        for (int rep = 0; rep < 20; ++rep) {
            auto coeffs = random_matrix_coeffs(rng, n + 1, cfg.deg_max + 1);
            jobs.push_back([coeffs, rep] {
                auto r = check_relation_R1(matrix_from_coeffs(coeffs));
                r.params["rep"] = rep;
                return r;
            });
        }
    for (int n = 0; n <= cfg.n_max; ++n)
        for (int rep = 0; rep < 3; ++rep) {
            auto coeffs = random_matrix_coeffs(rng, n + 1, cfg.deg_max + 1);
            jobs.push_back([coeffs, rep] {
                auto r = check_range_C_series(coeffs);
                r.params["rep"] = rep;
                return r;
            });
            jobs.push_back([coeffs, rep] {
                auto r = check_range_tau_series(coeffs);
                r.params["rep"] = rep;
                return r;
            });
        }
}

static void build_hermite(Jobs& jobs, const SuiteConfig& cfg) {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            jobs.push_back([a, b] { return check_gaussian_moment(a, b, 1e-10); });
    for (int m = 0; m <= 5; ++m)
        for (int p = 0; p <= 5; ++p)
            jobs.push_back([m, p] { return check_qhermite_rodrigues(m, p); });
    for (int m = 0; m <= 4; ++m)
        for (int p = 0; p <= 4; ++p)
            for (int m2 = 0; m2 <= 4; ++m2)
                for (int p2 = 0; p2 <= 4; ++p2)
                    jobs.push_back([m, p, m2, p2] {
                        return check_qhermite_orthogonality(m, p, m2, p2);
                    });
    for (int k = 1; k <= 8; ++k)
        jobs.push_back([k] {
            // derivative relation P_k' = 2 nu k P_{k-1}, a consequence of
            // the recursion rather than its restatement
            ExactScalar nu = ExactScalar::two_pi_pow(1);
            Poly1 lhs = poly1_derivative(hermite_h(k, nu).poly);
            Poly1 rhs = hermite_h(k - 1, nu).poly;
            for (auto& c : rhs) c *= nu * ExactScalar(2 * k);
            return VerificationReport::exact_check("hermite_h_appell", {{"k", k}},
                                                   poly1_equal(lhs, rhs));
        });
    std::mt19937 rng(cfg.seed + 202);
    for (int n = 0; n <= cfg.n_max; ++n)
        for (int len = 1; len <= 6; ++len) {
            auto alpha = random_alpha(rng, len);
            jobs.push_back([alpha, n] { return check_fock_norm_consistency(alpha, n); });
        }
}

static void build_fock(Jobs& jobs, const SuiteConfig& cfg) {
    std::mt19937 rng(cfg.seed + 303);
    for (int n = 0; n <= cfg.n_max; ++n)
        for (int rep = 0; rep < 3; ++rep) {
            auto alpha = random_alpha(rng, n + 3 + rep);
            jobs.push_back([alpha, n, rep] {
                auto r = check_range_C_norm(n, alpha);
                r.params["rep"] = rep;
                return r;
            });
            jobs.push_back([alpha, n, rep] {
                auto r = check_range_tau_norm(n, alpha);
                r.params["rep"] = rep;
                return r;
            });
        }
    for (int n = 0; n <= cfg.n_max; ++n) {
        auto f = bargmann_C_image(n, random_alpha(rng, n + 6));
        auto g = bargmann_C_image(n, random_alpha(rng, n + 6));
        auto h = bargmann_C_image(n, random_alpha(rng, n + 6));
        jobs.push_back([f, g, h, n] {
            ASpaceElement sum = f;
            for (size_t r = 0; r < sum.beta.size(); ++r)
                for (size_t s = 0; s < sum.beta[r].size(); ++s)
                    sum.beta[r][s] = sum.beta[r][s] + g.beta[r][s];
            bool additive = inner_A(sum, h) == inner_A(f, h) + inner_A(g, h);
            bool symmetric = inner_A(f, g) == inner_A(g, f).conj();
            QuatE self = inner_A(f, f);
            bool positive = self.x.is_zero() && self.y.is_zero() && self.z.is_zero() &&
                            !self.w.is_zero() && self.w.to_double() > 0.0;
            return VerificationReport::exact_check("inner_A_sesquilinear", {{"n", n}},
                                                   additive && symmetric && positive);
        });
        auto tf = bargmann_tau_image(n, random_alpha(rng, n + 6));
        auto tg = bargmann_tau_image(n, random_alpha(rng, n + 6));
        jobs.push_back([tf, tg, n] {
            bool symmetric = inner_Atilde(tf, tg) == inner_Atilde(tg, tf).conj();
            QuatE self = inner_Atilde(tf, tf);
            bool positive = self.x.is_zero() && self.y.is_zero() && self.z.is_zero() &&
                            !self.w.is_zero() && self.w.to_double() > 0.0;
            return VerificationReport::exact_check("inner_Atilde_sesquilinear",
                                                   {{"n", n}}, symmetric && positive);
        });
    }
}

static void build_bargmann(Jobs& jobs, const SuiteConfig& cfg) {
    for (int n = 0; n <= cfg.n_max; ++n)
        for (int k = 0; k <= 10; ++k) {
            jobs.push_back([n, k] { return check_C_composition(n, k); });
            jobs.push_back([n, k] { return check_tau_composition(n, k); });
        }
    std::mt19937 rng(cfg.seed + 404);
    for (int n = 0; n <= cfg.n_max; ++n) {
        for (int k = n + 2; k <= n + 6; ++k) {
            std::vector<QuatE> a(k + 1);
            a[k] = QuatE::real(ExactScalar(1));
            jobs.push_back([a, n] { return isometry_C_check(n, a); });
            jobs.push_back([a, n] { return isometry_tau_check(n, a); });
        }
        auto a = random_alpha(rng, n + 8);
        jobs.push_back([a, n] {
            auto r = isometry_C_check(n, a);
            r.params["rep"] = 1;
            return r;
        });
        jobs.push_back([a, n] {
            auto r = isometry_tau_check(n, a);
            r.params["rep"] = 1;
            return r;
        });
    }
    for (int N = 0; N <= std::min(cfg.n_max, 2); ++N) {
        std::vector<std::vector<QuatE>> blocks;
        for (int n = 0; n <= N; ++n) blocks.push_back(random_alpha(rng, n + 6));
        jobs.push_back([blocks] { return check_full_C_isometry(blocks); });
        jobs.push_back([blocks] { return check_full_tau_isometry(blocks); });
    }
    jobs.push_back([] { return check_C2_of_K2(6, 9); });
    jobs.push_back([] { return check_tau2_of_K2(6, 9); });
}

static void build_kernel(Jobs& jobs, const SuiteConfig& cfg) {
    static const std::vector<QuatD> qs = {
        {0.0, 0.0, 0.0, 0.0},  {0.3, 0.2, 0.0, 0.0},  {-0.4, 0.1, 0.2, -0.3},
        {0.9, 0.0, 0.0, 0.0},  {0.1, -0.5, 0.4, 0.2}, {0.0, 0.7, -0.1, 0.3},
        {-0.2, -0.2, -0.2, 0.2}};
    static const std::vector<double> xs = {-2.0, -0.7, 0.0, 0.5, 1.7};
    int J = cfg.trunc;
    for (int n = 0; n <= std::min(cfg.n_max, 2); ++n)
        for (size_t qi = 0; qi < qs.size(); ++qi)
            for (size_t xi = 0; xi < xs.size(); ++xi)
                jobs.push_back([n, qi, xi, J, tol = cfg.tol] {
                    KernelPair p = kernel_K(n, qs[qi], xs[xi], J);
                    double err = quat_abs(p.series - p.closed);
                    return VerificationReport::float_check(
                        "kernel_K_series_vs_closed",
                        {{"n", n}, {"q", static_cast<long>(qi)},
                         {"x", static_cast<long>(xi)}},
                        err, tol);
                });
    const QuatD q0{0.3, 0.2, -0.1, 0.15};
    for (int n = 0; n <= std::min(cfg.n_max, 2); ++n)
        for (int k = 0; k <= 6; ++k) {
            jobs.push_back([n, k, q0, J] {
                QuatD got = transform_quadrature(
                    KernelTag::K, n, [k](double x) { return eval_psi(k, x); }, q0, 128,
                    J);
                BasisAction a = bargmann_basis_action(n, k);
                QuatD want = eval_qhermite(n, k, q0) * a.normalizer.to_double();
                return VerificationReport::float_check("quadrature_K_basis",
                                                       {{"n", n}, {"k", k}},
                                                       quat_abs(got - want), 1e-6);
            });
            jobs.push_back([n, k, q0, J] {
                QuatD got = transform_quadrature(
                    KernelTag::Phi, n, [k](double x) { return eval_psi(k, x); }, q0,
                    128, J);
                QuatD want = evaluate(bargmann_C_basis(n, k).scaled(), q0);
                return VerificationReport::float_check("quadrature_Phi_basis",
                                                       {{"n", n}, {"k", k}},
                                                       quat_abs(got - want), 1e-6);
            });
        }
}

std::vector<VerificationReport> run_suite(const std::string& suite,
                                          const SuiteConfig& cfg) {
    if (cfg.n_max < 0 || cfg.n_max > 4 || cfg.deg_max < 0 || cfg.deg_max > 12)
        throw std::invalid_argument("run_suite: grid out of range (n_max <= 4, deg_max <= 12)");
    Jobs jobs;
    bool known = false;
    auto want = [&](const char* name) {
        bool w = suite == name || suite == "all";
        known = known || suite == name;
        return w;
    };
    if (want("appell")) build_appell(jobs, cfg);
    if (want("fueter")) build_fueter(jobs, cfg);
    if (want("hermite")) build_hermite(jobs, cfg);
    if (want("fock")) build_fock(jobs, cfg);
    if (want("bargmann")) build_bargmann(jobs, cfg);
    if (want("kernel")) build_kernel(jobs, cfg);
    if (!known && suite != "all")
        throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    return run_checks(std::move(jobs));
}

}  // namespace fueterlab
