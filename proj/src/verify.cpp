#include "qmzv/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "qmzv/fixtures.hpp"
#include "qmzv/qstirling.hpp"
#include "qmzv/seqlib.hpp"

namespace qmzv {

namespace {

using Params = std::map<std::string, std::string>;

struct Case {
    Params params;
    std::function<std::vector<CaseFailure>()> run;
};

// Collects route comparisons inside one case.
struct Checker {
    std::vector<CaseFailure> failures;

    void equal(const std::string& expected_route, const Rat& expected, const std::string& actual_route,
               const Rat& actual) {
        if (expected == actual) return;
        failures.push_back({{}, expected.to_string(), actual.to_string(), {expected_route, actual_route}});
    }
    void equal(const std::string& expected_route, const RatPoly& expected, const std::string& actual_route,
               const RatPoly& actual) {
        if (expected == actual) return;
        failures.push_back({{}, expected.to_string("n"), actual.to_string("n"), {expected_route, actual_route}});
    }
    void holds(const std::string& route, bool ok, const std::string& detail) {
        if (ok) return;
        failures.push_back({{}, "true", detail, {route}});
    }
};

std::string str(unsigned v) { return std::to_string(v); }

unsigned pick(const std::optional<unsigned>& v, unsigned fallback) { return v.value_or(fallback); }

std::vector<Case> routes_cases(const VerifyConfig& cfg) {
    std::vector<Case> cases;
    const unsigned n_max = pick(cfg.n_max, 10);
    const unsigned s_max = pick(cfg.s_max, 3);
    const unsigned m_max = pick(cfg.m_max, 8);
    const std::uint64_t budget = cfg.budget;
    for (unsigned n = 2; n <= n_max; ++n) {
        for (unsigned s = 1; s <= s_max; ++s) {
            for (unsigned m = 0; m <= std::max(n - 1, m_max); ++m) {
                cases.push_back({{{"n", str(n)}, {"m", str(m)}, {"s", str(s)}, {"check", "routes"}}, [=] {
                                     Checker c;
                                     const ZetaParams p{n, m, s};
                                     const Rat ref = zeta_value(n, m, s);
                                     if (binomial(static_cast<long>(n) - 1, m) <= mpz_class(static_cast<unsigned long>(budget)))
                                         c.equal("product", ref, "brute", zeta_brute(p, budget).value);
                                     c.equal("product", ref, "stirling", zeta_via_stirling(p).value);
                                     c.equal("product", ref, "bell", zeta_bell(p).value);
                                     c.equal("product", ref, "det", zeta_det(p).value);
                                     return c.failures;
                                 }});
            }
            for (unsigned m = 1; m <= m_max; ++m) {
                cases.push_back({{{"n", str(n)}, {"m", str(m)}, {"s", str(s)}, {"check", "row_from_column"}}, [=] {
                                     Checker c;
                                     c.equal("product", zeta_value(n, 1, m * s), "row_from_column",
                                             zeta_row_from_column(n, m, s));
                                     return c.failures;
                                 }});
            }
        }
        for (unsigned s = 2; s <= 9; ++s) {
            cases.push_back({{{"n", str(n)}, {"s", str(s)}, {"check", "1s_det"}}, [=] {
                                 Checker c;
                                 c.equal("product", zeta_value(n, 1, s), "1s_det", zeta_1s_det(n, s));
                                 return c.failures;
                             }});
        }
    }
    return cases;
}

template <class R>
std::vector<CaseFailure> ortho_failures(unsigned n_max, unsigned r, unsigned s, const R& q) {
    const auto rep = orthogonality_check(n_max, r, s, q);
    Checker c;
    c.holds("orthogonality", rep.pass, rep.counterexample.value_or(""));
    return c.failures;
}

std::vector<Case> orthogonality_cases(const VerifyConfig& cfg) {
    std::vector<Case> cases;
    const unsigned n_max = pick(cfg.n_max, 10);
    const unsigned s_max = pick(cfg.s_max, 3);
    for (const std::string qtext : {"symbolic", "1", "zeta:7"}) {
        for (unsigned r = 1; r <= s_max; ++r) {
            for (unsigned s = 1; s <= s_max; ++s) {
                cases.push_back({{{"q", qtext}, {"r", str(r)}, {"s", str(s)}, {"n_max", str(n_max)}}, [=] {
                                     const QPoint q = parse_qpoint(qtext);
                                     return with_q(q, [&](const auto& qv) { return ortho_failures(n_max, r, s, qv); });
                                 }});
            }
        }
    }
    return cases;
}

std::vector<Rat> random_sequence(std::mt19937_64& rng, unsigned len) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rat> out;
    out.reserve(len);
    for (unsigned i = 0; i < len; ++i) out.emplace_back(num(rng), den(rng));
    return out;
}

std::string join(const std::vector<Rat>& v) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : " ") + x.to_string();
    return out;
}

std::vector<Case> gtrudi_cases(const VerifyConfig& cfg) {
    std::vector<Case> cases;
    const unsigned count = 50;
    const unsigned max_len = pick(cfg.m_max, 8);
    std::mt19937_64 rng(20240601);
    for (unsigned t = 0; t < count; ++t) {
        const unsigned len = 1 + t % max_len;
        const auto a = random_sequence(rng, len);
        cases.push_back({{{"trial", str(t)}, {"a", join(a)}}, [a, len] {
                             Checker c;
                             const std::span<const Rat> as(a);
                             const auto b = gtrudi_b_sequence<Rat>(as, len);
                             for (unsigned m = 1; m <= len; ++m) {
                                 const auto f = gtrudi_forward<Rat>(as, m);
                                 c.equal("recurrence(4)", f.recurrence, "partition(1)", f.partition_sum);
                                 c.equal("recurrence(4)", f.recurrence, "determinant(2)", f.determinant);
                                 const auto inv = gtrudi_inverse<Rat>(std::span<const Rat>(b), m);
                                 c.equal("a", a[m - 1], "determinant(3)", inv.determinant);
                                 c.equal("a", a[m - 1], "recurrence(5)", inv.recurrence);
                             }
                             return c.failures;
                         }});
    }
    return cases;
}

void add_polynomial_cases(std::vector<Case>& cases, unsigned s_filter) {
    for (const auto& d : displayed_polynomials()) {
        if (s_filter != 0 && d.s != s_filter) continue;
        cases.push_back({{{"display", d.label}, {"m", str(d.m)}, {"s", str(d.s)}}, [d] {
                             Checker c;
                             c.equal("displayed", d.poly, "interpolated", zeta_poly_in_n(d.m, d.s));
                             return c.failures;
                         }});
    }
}

std::vector<Case> s2_cases(const VerifyConfig& cfg) {
    std::vector<Case> cases;
    const unsigned n_max = pick(cfg.n_max, 25);
    const unsigned m_max = pick(cfg.m_max, 12);
    for (unsigned n = 2; n <= n_max; ++n) {
        for (unsigned m = 1; m <= m_max; ++m) {
            cases.push_back({{{"n", str(n)}, {"m", str(m)}}, [=] {
                                 Checker c;
                                 const Rat closed = zeta_m2_closed(n, m);
                                 c.equal("product", zeta_value(n, m, 2), "closed_s2", closed);
                                 const auto forms = zeta_m2_rstirling(n, m);
                                 c.equal("closed_s2", closed, "rstirling", forms.rstirling_sum);
                                 c.equal("closed_s2", closed, "harmonic", forms.harmonic_sum);
                                 return c.failures;
                             }});
        }
    }
    const auto inner = displayed_s2_inner_factors();
    for (unsigned m = 1; m <= inner.size(); ++m) {
        cases.push_back({{{"m", str(m)}, {"check", "inner_factor"}}, [m, inner] {
                             Checker c;
                             c.equal("displayed", inner[m - 1], "rstirling_inner", m2_rstirling_inner_poly(m));
                             return c.failures;
                         }});
    }
    add_polynomial_cases(cases, 2);
    return cases;
}

std::vector<Case> s3_cases(const VerifyConfig& cfg) {
    std::vector<Case> cases;
    const unsigned n_max = pick(cfg.n_max, 18);
    const unsigned m_max = pick(cfg.m_max, 6);
    for (unsigned n = 2; n <= n_max; ++n) {
        for (unsigned m = 1; m <= m_max; ++m) {
            cases.push_back({{{"n", str(n)}, {"m", str(m)}}, [=] {
                                 Checker c;
                                 c.equal("product", zeta_value(n, m, 3), "closed_s3", zeta_m3_closed(n, m));
                                 return c.failures;
                             }});
        }
    }
    add_polynomial_cases(cases, 3);
    return cases;
}

std::vector<Case> dgber_cases(const VerifyConfig& cfg) {
    std::vector<Case> cases;
    const unsigned n_max = pick(cfg.n_max, 20);
    const unsigned s_max = pick(cfg.s_max, 8);
    const std::uint64_t budget = cfg.budget;
    for (unsigned n = 2; n <= n_max; ++n) {
        for (unsigned s = 1; s <= s_max; ++s) {
            cases.push_back({{{"n", str(n)}, {"s", str(s)}}, [=] {
                                 Checker c;
                                 c.equal("brute", zeta_brute({n, 1, s}, budget).value, "dgber", zeta_1s_dgber(n, s));
                                 const auto rep = btt_decomposition_check(n, s);
                                 c.holds("btt_decomposition", rep.pass, rep.first_failure.value_or(""));
                                 return c.failures;
                             }});
        }
    }
    return cases;
}

std::vector<Case> btt26_cases(const VerifyConfig& cfg) {
    std::vector<Case> cases;
    const unsigned n_max = pick(cfg.n_max, 20);
    const unsigned j_max = pick(cfg.s_max, 6);
    for (unsigned n = 2; n <= n_max; ++n) {
        for (unsigned j = 1; j <= j_max; ++j) {
            cases.push_back({{{"n", str(n)}, {"j", str(j)}}, [=] {
                                 Checker c;
                                 const auto rep = btt26_check(n, j);
                                 c.holds("btt26", rep.pass, rep.first_failure.value_or(""));
                                 return c.failures;
                             }});
        }
    }
    return cases;
}

std::vector<Case> logf_cases(const VerifyConfig& cfg) {
    std::vector<Case> cases;
    const unsigned s_max = pick(cfg.s_max, 3);
    const unsigned trunc = pick(cfg.trunc, 12);
    for (unsigned s = 1; s <= s_max; ++s) {
        cases.push_back({{{"s", str(s)}, {"N", str(trunc)}}, [=] {
                             Checker c;
                             const auto rep = logf_identity_check(s, trunc);
                             c.holds("logf", rep.pass, rep.first_failure.value_or(""));
                             return c.failures;
                         }});
    }
    return cases;
}

std::vector<Case> polynomial_cases(const VerifyConfig&) {
    std::vector<Case> cases;
    add_polynomial_cases(cases, 0);
    const auto constants = displayed_constant_terms();
    for (unsigned s = 1; s <= constants.size(); ++s) {
        cases.push_back({{{"s", str(s)}, {"check", "constant_term"}}, [s, constants] {
                             Checker c;
                             const Rat listed = constants[s - 1];
                             c.equal("displayed", listed, "interpolated", zeta_poly_in_n(1, s).eval(Rat(0)));
                             c.equal("displayed", listed, "norlund",
                                     sign_pow(static_cast<long>(s) - 1) * norlund(s) / factorial_rat(s));
                             return c.failures;
                         }});
    }
    return cases;
}

using SuiteBuilder = std::vector<Case> (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteBuilder>>& builders() {
    static const std::vector<std::pair<std::string, SuiteBuilder>> table = {
        {"routes", routes_cases}, {"orthogonality", orthogonality_cases}, {"gtrudi", gtrudi_cases},
        {"s2", s2_cases},         {"s3", s3_cases},                       {"dgber", dgber_cases},
        {"logf", logf_cases},     {"polynomials", polynomial_cases},      {"btt26", btt26_cases},
    };
    return table;
}

std::vector<CaseFailure> run_one(const Case& c) {
    std::vector<CaseFailure> out;
    try {
        out = c.run();
    } catch (const std::exception& e) {
        out.push_back({{}, "no error", std::string("error: ") + e.what(), {"exception"}});
    }
    for (auto& f : out) f.params = c.params;
    return out;
}

void run_cases(const std::vector<Case>& cases, unsigned jobs, VerifyReport& report) {
    std::vector<std::vector<CaseFailure>> results(cases.size());
    if (jobs <= 1 || cases.size() <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) results[i] = run_one(cases[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(cases.size()));
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cases.size(); i = next++) results[i] = run_one(cases[i]);
            });
        }
        for (auto& t : pool) t.join();
    }
    report.cases += static_cast<unsigned>(cases.size());
    for (auto& r : results)
        for (auto& f : r) report.failures.push_back(std::move(f));
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : builders()) out.push_back(name);
        out.emplace_back("all");
        return out;
    }();
    return names;
}

VerifyReport run_suite(const std::string& name, const VerifyConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.suite = name;
    bool found = false;
    for (const auto& [suite, build] : builders()) {
        if (name != "all" && name != suite) continue;
        found = true;
        auto cases = build(cfg);
        if (name == "all")
            for (auto& c : cases) c.params["suite"] = suite;
        run_cases(cases, cfg.jobs, report);
    }
    if (!found) throw BadParams("unknown verification suite: " + name);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["cases"] = cases;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        nlohmann::ordered_json jf;
        jf["params"] = f.params;
        jf["expected"] = f.expected;
        jf["actual"] = f.actual;
        jf["routes"] = f.routes;
        j["failures"].push_back(std::move(jf));
    }
    j["elapsed_ms"] = static_cast<long long>(elapsed_ms);
    return j;
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << ": " << cases << " cases, " << failures.size() << " failures ("
       << static_cast<long long>(elapsed_ms) << " ms) " << (pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& f : failures) {
        os << "  FAIL";
        for (const auto& [k, v] : f.params) os << " " << k << "=" << v;
        os << " routes=";
        for (std::size_t i = 0; i < f.routes.size(); ++i) os << (i ? "/" : "") << f.routes[i];
        os << " expected=" << f.expected << " actual=" << f.actual << "\n";
    }
    return os.str();
}

}  // namespace qmzv
