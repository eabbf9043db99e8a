#include "fforge/verify.hpp"

#include "fforge/poly.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>

namespace fforge {

namespace {

using Task = std::function<CheckRecord()>;

struct Outcome {
    std::string status;
    std::string detail;
};

Outcome from_bool(bool ok, std::string detail = {}) { return {ok ? "pass" : "fail", ok ? std::string() : std::move(detail)}; }

Outcome from_comparison(const FracIdealComparison& c) {
    if (!c.equal)
        return {"fail", "fractional ideals differ"};
    return {c.projected ? "projected-pass" : "pass", {}};
}

// Wraps a check body with timing and the exception policy: precondition
// failures become skipped records, anything else a failure.
Task make_task(CheckRecord base, std::function<Outcome()> body) {
    return [base = std::move(base), body = std::move(body)]() {
        CheckRecord r = base;
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto o = body();
            r.status = o.status;
            r.detail = o.detail;
        } catch (const BoundExceeded& e) {
            r.status = "skipped";
            r.detail = e.what();
        } catch (const std::invalid_argument& e) {
            r.status = "skipped";
            r.detail = e.what();
        } catch (const std::exception& e) {
            r.status = "fail";
            r.detail = e.what();
        }
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return r;
    };
}

CheckRecord record(std::string claim, std::string anchor, std::string inputs) {
    CheckRecord r;
    r.claim = std::move(claim);
    r.anchor = std::move(anchor);
    r.inputs = std::move(inputs);
    return r;
}

CheckRecord model_record(std::string claim, std::string anchor, const DecompositionModel& m, int M) {
    auto r = record(std::move(claim), std::move(anchor), m.name);
    r.M = M;
    r.level_m = m.level_m;
    r.level_n = m.level_n;
    return r;
}

std::vector<DecompositionModel> models_for(const VerifyConfig& cfg) {
    auto models = cfg.models.empty() ? default_catalog(cfg.p) : cfg.models;
    for (auto& m : models) {
        if (cfg.level_m)
            m.level_m = *cfg.level_m;
        if (cfg.level_n)
            m.level_n = *cfg.level_n;
    }
    return models;
}

std::int64_t level_order(const DecompositionModel& m, int level) { return level_group(m, level).order(); }

// Largest level group the model checks will touch.
constexpr std::int64_t kMaxLevelOrder = 243;

void require_size(const DecompositionModel& m, int level) {
    if (level_order(m, level) > kMaxLevelOrder)
        throw std::invalid_argument("level group of order " + std::to_string(level_order(m, level)) +
                                    " exceeds " + std::to_string(kMaxLevelOrder));
}

void appendix_tasks(const VerifyConfig& cfg, std::vector<Task>& tasks) {
    const auto models = models_for(cfg);
    for (const auto& m : models)
        for (int M : cfg.M_values)
            tasks.push_back(make_task(model_record("C1", "kernel-generators", m, M), [m, M]() -> Outcome {
                const std::int64_t g = level_order(m, m.level_n);
                const std::int64_t entries = static_cast<std::int64_t>(m.r()) * g * g;
                if (entries > 10000)
                    return {"skipped", "flattened system has " + std::to_string(entries) + " entries"};
                return from_bool(resolution_exact(build_A_Q(m, M)), "span of the generators differs from the kernel");
            }));
    for (std::size_t k = 1; k <= 5; ++k)
        tasks.push_back(make_task(record("C2", "generic-k-minors-vanish", "k=" + std::to_string(k)),
                                  [k] { return from_bool(verify_minQ_zero(k), "a k-minor of Q_k is nonzero"); }));
    for (std::size_t k = 1; k <= 4; ++k)
        tasks.push_back(make_task(record("C2", "generic-minor-monomials", "k=" + std::to_string(k)), [k] {
            auto rep = classify_minor_monomials(k);
            return from_bool(rep.escapes == 0, std::to_string(rep.escapes) + " monomials escape");
        }));
    for (const auto& m : models)
        for (int M : cfg.M_values)
            tasks.push_back(make_task(model_record("C3", "r-minor-identity", m, M), [m, M]() -> Outcome {
                if (m.r() > 3)
                    return {"skipped", "r > 3"};
                require_size(m, m.level_m);
                auto res = build_A_Q(m, M);
                auto min_r = ideal_from_gens(res.group_m, res.ring, minors(res.A_lift, res.A_lift.rows()));
                return from_bool(min_r == rminor_ideal_explicit(res), "explicit generators span a different ideal");
            }));
    for (const auto& m : models)
        for (int M : cfg.M_values)
            tasks.push_back(
                make_task(model_record("C4", "shifted-fitting-triangle", m, M), [m, M, bound = cfg.bound]() -> Outcome {
                    require_size(m, m.level_m);
                    auto res = build_A_Q(m, M);
                    auto alt = shifted_fitt1_alternating(res);
                    auto rm = rminor_fractional(res);
                    auto in = intrinsic_ideal(m, M, bound);
                    auto a = frac_ideal_eq(alt, rm), b = frac_ideal_eq(rm, in), c = frac_ideal_eq(alt, in);
                    if (!a.equal)
                        return {"fail", "alternating-sum route differs from the r-minor route"};
                    if (!b.equal)
                        return {"fail", "r-minor route differs from the decomposition route"};
                    if (!c.equal)
                        return {"fail", "alternating-sum route differs from the decomposition route"};
                    return from_comparison({true, a.projected || b.projected || c.projected});
                }));
    for (const auto& m : models) {
        if (m.r() > 2)
            continue;
        const bool r1 = m.r() == 1;
        for (int M : cfg.M_values)
            tasks.push_back(make_task(model_record("C5", r1 ? "special-shape-rank-one" : "special-shape-cyclic-torsion", m, M),
                                      [m, M, r1] {
                                          require_size(m, m.level_m);
                                          return from_comparison(r1 ? rank_one_shape_check(m, M) : cyclic_torsion_shape_check(m, M));
                                      }));
    }
}

GrMatrix random_square(const FiniteAbelianGroup& g, const ResidueRing& k, std::size_t n, std::mt19937_64& rng) {
    GrMatrix m(g, k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Residue> c(g.order());
            for (auto& x : c)
                x = static_cast<Residue>(rng() % static_cast<std::uint64_t>(k.modulus()));
            // sparse entries keep the ideals away from the unit ideal
            if (rng() % 3 == 0)
                std::fill(c.begin(), c.end(), 0);
            else if (rng() % 2 == 0)
                for (auto& x : c)
                    x = k.mul(x, k.prime());
            m.set(i, j, gr_from(g, k, c));
        }
    return m;
}

void transpose_tasks(const VerifyConfig& cfg, std::vector<Task>& tasks) {
    const int p = cfg.p;
    struct Setup {
        FiniteAbelianGroup g;
        ResidueRing k;
        std::uint64_t seed;
    };
    std::vector<Setup> setups{{FiniteAbelianGroup({2, p}), ResidueRing(p, 2), 101},
                              {FiniteAbelianGroup({p * p}), ResidueRing(p, 1), 202}};
    for (const auto& s : setups) {
        std::string inputs = "50 random square presentations over (Z/" + std::to_string(s.k.modulus()) + ")[" +
                             s.g.to_string() + "], seed " + std::to_string(s.seed);
        auto r = record("C6", "transpose-invariance", inputs);
        r.M = s.k.exponent();
        tasks.push_back(make_task(r, [s] {
            std::mt19937_64 rng(s.seed);
            for (int t = 0; t < 50; ++t) {
                Presentation pres{random_square(s.g, s.k, 1 + t % 3, rng)};
                auto tr = transpose_presentation(pres);
                for (std::size_t e = 0; e <= pres.target_rank(); ++e)
                    if (!(fitt(pres, e) == fitt(tr, e)))
                        return from_bool(false, "presentation " + std::to_string(t) + ", e = " + std::to_string(e));
            }
            return from_bool(true);
        }));
    }
}

void limits_tasks(const VerifyConfig& cfg, std::vector<Task>& tasks) {
    for (const auto& m : models_for(cfg))
        for (int M : cfg.M_values)
            for (auto [lo, hi] : {std::pair{1, 2}, std::pair{2, 3}}) {
                auto r = model_record("C7", "tower-projection", m, M);
                r.inputs += " level " + std::to_string(hi) + "->" + std::to_string(lo);
                r.level_m = hi;
                tasks.push_back(make_task(r, [m, M, lo, hi] {
                    require_size(m, hi);
                    return from_bool(tower_fitt_compat(m, M, lo, hi), "Fitting ideals do not project");
                }));
            }

    const int p = cfg.p;
    struct Surjection {
        FiniteAbelianGroup source, target;
        std::vector<std::size_t> factors;
        std::uint64_t seed;
    };
    std::vector<Surjection> maps{{FiniteAbelianGroup({p * p, 2}), FiniteAbelianGroup({p, 2}), {0, 1}, 303},
                                 {FiniteAbelianGroup({p, p * p}), FiniteAbelianGroup({p}), {0}, 404}};
    for (const auto& s : maps) {
        auto r = record("C8", "unit-lifting",
                        "50 random units along " + s.source.to_string() + " -> " + s.target.to_string() + ", seed " +
                            std::to_string(s.seed));
        r.M = 2;
        tasks.push_back(make_task(r, [s, p] {
            ResidueRing k(p, 2);
            auto pi = GroupHom::reduction(s.source, s.target, s.factors);
            std::mt19937_64 rng(s.seed);
            int done = 0;
            for (int tries = 0; done < 50 && tries < 100000; ++tries) {
                std::vector<Residue> c(s.target.order());
                for (auto& x : c)
                    x = static_cast<Residue>(rng() % static_cast<std::uint64_t>(k.modulus()));
                auto u = gr_from(s.target, k, c);
                if (!is_unit(u))
                    continue;
                ++done;
                auto l = lift_unit(pi, u);
                if (!is_unit(l) || !(restrict_element(pi, l) == u))
                    return from_bool(false, "unit " + std::to_string(done) + " lifted incorrectly");
            }
            return from_bool(done == 50, "could not sample 50 units");
        }));
    }
}

std::string theta_inputs(int m, const std::set<std::int64_t>& S, const std::set<std::int64_t>& T) {
    std::ostringstream os;
    os << "m=" << m << " S={";
    for (auto v : S)
        os << v << ",";
    os << "inf} T={";
    bool first = true;
    for (auto v : T) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << "}";
    return os.str();
}

std::int64_t first_odd_prime_not_dividing(int m) {
    std::int64_t ell = 3;
    while (m % ell == 0 || !is_prime(ell))
        ell += 2;
    return ell;
}

void stickelberger_tasks(const VerifyConfig& cfg, std::vector<Task>& tasks) {
    const std::vector<int> conductors{3, 4, 5, 7, 8, 9, 11, 12, 15};
    for (int m : conductors)
        tasks.push_back(make_task(record("C9", "stickelberger-dual-path", "m=" + std::to_string(m)),
                                  [m] { return from_bool(theta_from_characters(m) == theta_min(m).value, "character side differs"); }));
    for (int m : conductors)
        tasks.push_back(make_task(record("C9", "stickelberger-plus-part", "m=" + std::to_string(m)), [m] {
            auto t = theta_min(m);
            std::int64_t ell = first_odd_prime_not_dividing(m);
            auto v = first_odd_prime_not_dividing(static_cast<int>(m * ell));
            bool ok = minus_pure(t) && minus_pure(smooth_T(t, {ell})) && minus_pure(deplete(smooth_T(t, {ell}), v));
            return from_bool(ok, "e+ theta is nonzero");
        }));

    std::vector<std::int64_t> primes{3, 5, 7};
    if (std::find(primes.begin(), primes.end(), cfg.p) == primes.end())
        primes.push_back(cfg.p);
    for (int m : conductors) {
        std::set<std::int64_t> T{first_odd_prime_not_dividing(m)};
        for (auto p : primes) {
            std::set<std::int64_t> S;
            for (int ell : prime_factors(m))
                S.insert(ell);
            auto r = record("C9", "stickelberger-integrality", theta_inputs(m, S, T) + " p=" + std::to_string(p));
            tasks.push_back(make_task(r, [m, T, p] {
                return from_bool(integrality_check(smooth_T(theta_min(m), T), p), "denominator divisible by p");
            }));
        }
    }

    struct Chain {
        std::vector<int> levels;
        std::set<std::int64_t> extra_S, T;
    };
    const std::vector<Chain> chains{{{27, 9, 3}, {}, {}},      {{27, 9, 3}, {2}, {7}}, {{16, 8, 4}, {}, {}},
                                    {{16, 8, 4}, {3}, {5}},    {{15, 3}, {}, {}},      {{15, 3}, {2}, {7}}};
    for (const auto& c : chains) {
        std::set<std::int64_t> S = c.extra_S;
        for (int ell : prime_factors(c.levels.front()))
            S.insert(ell);
        for (std::size_t i = 1; i < c.levels.size(); ++i) {
            int top = c.levels.front(), m1 = c.levels[i];
            auto r = record("C9", "stickelberger-tower", theta_inputs(top, S, c.T) + " -> m=" + std::to_string(m1));
            tasks.push_back(make_task(r, [top, m1, S, T = c.T] {
                return from_bool(restriction_compatible(theta_direct(top, S, T), m1), "restriction differs");
            }));
        }
    }
}

std::vector<CheckRecord> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
    std::vector<CheckRecord> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            out[i] = tasks[i]();
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::future<void>> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : pool)
        f.get();
    return out;
}

} // namespace

bool VerificationReport::ok() const { return count("fail") == 0; }

std::size_t VerificationReport::count(const std::string& status) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) { return r.status == status; }));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"appendix", "transpose", "limits", "stickelberger", "all"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

VerificationReport run_suite(const std::string& suite, const VerifyConfig& config) {
    if (!is_suite(suite))
        throw std::invalid_argument("unknown suite: " + suite);
    if (config.p < 3 || !is_prime(config.p))
        throw std::invalid_argument("verify: p must be an odd prime");
    for (int M : config.M_values)
        if (M < 1)
            throw std::invalid_argument("verify: M must be at least 1");
    if (config.level_m && config.level_n && *config.level_n > *config.level_m)
        throw std::invalid_argument("verify: need n <= m");
    std::vector<Task> tasks;
    const bool all = suite == "all";
    if (all || suite == "appendix")
        appendix_tasks(config, tasks);
    if (all || suite == "transpose")
        transpose_tasks(config, tasks);
    if (all || suite == "limits")
        limits_tasks(config, tasks);
    if (all || suite == "stickelberger")
        stickelberger_tasks(config, tasks);

    VerificationReport rep;
    rep.suite = suite;
    rep.config = config;
    rep.records = run_tasks(tasks, config.jobs);
    for (const auto& r : rep.records)
        if (r.status == "skipped")
            rep.warnings.push_back(r.claim + " " + r.anchor + " [" + r.inputs + "] skipped: " + r.detail);
    return rep;
}

Json report_to_json(const VerificationReport& report, bool with_timing) {
    Json records = Json::array();
    auto opt = [](const std::optional<int>& x) { return x ? Json(*x) : Json(nullptr); };
    for (const auto& r : report.records) {
        Json j{{"claim", r.claim},
               {"anchor", r.anchor},
               {"inputs", r.inputs},
               {"status", r.status},
               {"level", {{"M", opt(r.M)}, {"m", opt(r.level_m)}, {"n", opt(r.level_n)}}}};
        if (!r.detail.empty())
            j["detail"] = r.detail;
        if (with_timing)
            j["wall_ms"] = r.wall_ms;
        records.push_back(std::move(j));
    }
    const auto& c = report.config;
    Json out{{"schema", kSchema},
             {"suite", report.suite},
             {"config",
              {{"p", c.p},
               {"M", c.M_values},
               {"level_m", c.level_m ? Json(*c.level_m) : Json(nullptr)},
               {"level_n", c.level_n ? Json(*c.level_n) : Json(nullptr)},
               {"bound", c.bound}}},
             {"summary",
              {{"pass", report.count("pass")},
               {"projected-pass", report.count("projected-pass")},
               {"fail", report.count("fail")},
               {"skipped", report.count("skipped")}}},
             {"ok", report.ok()},
             {"records", std::move(records)},
             {"warnings", report.warnings}};
    return out;
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream os;
    for (const auto& r : report.records) {
        os << r.status << "  " << r.claim << " " << r.anchor << "  " << r.inputs;
        if (r.M)
            os << "  (M=" << *r.M << (r.level_m ? ", m=" + std::to_string(*r.level_m) : "")
               << (r.level_n ? ", n=" + std::to_string(*r.level_n) : "") << ")";
        if (!r.detail.empty())
            os << "  -- " << r.detail;
        os << "\n";
    }
    os << report.suite << ": " << report.count("pass") << " pass, " << report.count("projected-pass")
       << " projected-pass, " << report.count("fail") << " fail, " << report.count("skipped") << " skipped\n";
    return os.str();
}

} // namespace fforge
