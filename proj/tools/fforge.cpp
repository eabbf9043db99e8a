// fforge: command-line front end for the fitting-forge library.

#include "fforge/json_io.hpp"
#include "fforge/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

using namespace fforge;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitUsage = 64;

struct Options {
    std::string input;
    std::string suite = "all";
    std::optional<int> p, M, level_m, level_n;
    std::size_t bound = 16;
    std::string format = "json";
    unsigned jobs = 0;
    bool no_timestamp = false;
    std::size_t e = 0;
    int m = 0;
    std::vector<std::int64_t> S, T;
};

std::string utc_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

Json header(const std::string& command, const Options& o) {
    Json j{{"schema", kSchema}, {"command", command}};
    if (!o.no_timestamp)
        j["timestamp"] = utc_now();
    return j;
}

std::string element_text(const GroupRingElement& x) { return to_string(x); }

int cmd_fitt(const Options& o) {
    Json doc = read_json_file(o.input);
    Presentation pres = [&] {
        if (doc.is_object() && doc.contains("group_orders")) {
            auto model = model_from_json(doc);
            if (o.level_m)
                model.level_m = *o.level_m;
            if (o.level_n)
                model.level_n = *o.level_n;
            try {
                return Presentation{build_A_Q(model, o.M.value_or(1)).A_lift};
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        }
        return presentation_from_json(doc);
    }();
    const auto& ring = pres.relations.ring();
    if ((o.p && *o.p != ring.prime()) || (o.M && *o.M != ring.exponent()))
        throw InputError("modulus mismatch: the input is over Z/" + std::to_string(ring.prime()) + "^" +
                         std::to_string(ring.exponent()));
    auto ideal = fitt(pres, o.e);
    auto gens = ideal_generators(ideal);
    if (o.format == "text") {
        std::cout << "Fitt_" << o.e << " over (Z/" << ring.modulus() << ")[" << pres.relations.group().to_string()
                  << "]\n";
        for (const auto& g : gens)
            std::cout << "  " << element_text(g) << "\n";
        std::cout << "Howell rank " << ideal.howell().rank() << "\n";
        return 0;
    }
    Json out = header("fitt", o);
    out["e"] = o.e;
    out["modulus"] = {{"p", ring.prime()}, {"M", ring.exponent()}};
    out["group"] = group_to_json(pres.relations.group());
    out["shape"] = {pres.relations.rows(), pres.relations.cols()};
    Json jg = Json::array();
    for (const auto& g : gens)
        jg.push_back(g.coefficients());
    out["generators"] = std::move(jg);
    Json rows = Json::array();
    for (const auto& r : ideal.rows())
        rows.push_back(r.coefficients());
    out["howell"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const Options& o) {
    VerifyConfig cfg;
    if (o.p)
        cfg.p = *o.p;
    if (o.M)
        cfg.M_values = {*o.M};
    cfg.level_m = o.level_m;
    cfg.level_n = o.level_n;
    cfg.bound = o.bound;
    cfg.jobs = o.jobs ? o.jobs : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    if (!o.input.empty())
        cfg.models = models_from_json(read_json_file(o.input));
    VerificationReport rep;
    try {
        rep = run_suite(o.suite, cfg);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    for (const auto& w : rep.warnings)
        std::cerr << "warning: " << w << "\n";
    if (o.format == "text") {
        std::cout << report_to_text(rep);
    } else {
        Json out = header("verify", o);
        const Json body = report_to_json(rep, !o.no_timestamp);
        for (const auto& [k, v] : body.items())
            if (k != "schema")
                out[k] = v;
        std::cout << out.dump(2) << "\n";
    }
    return rep.ok() ? 0 : kExitFail;
}

int cmd_stickelberger(const Options& o) {
    StickelbergerRequest req;
    if (!o.input.empty())
        req = stickelberger_request_from_json(read_json_file(o.input));
    if (o.m)
        req.m = o.m;
    for (auto v : o.S)
        req.S.insert(v);
    for (auto v : o.T)
        req.T.insert(v);
    if (req.m == 0)
        throw InputError("stickelberger: give a conductor with --m or an input file");
    auto theta = build_stickelberger(req);
    if (o.format == "text") {
        std::cout << "theta for m = " << theta.conductor() << "\n";
        for (int i = 0; i < theta.units.group.order(); ++i)
            std::cout << "  sigma_" << theta.units.labels[i] << ": " << theta.value[i] << "\n";
        std::cout << "minus part only: " << (minus_pure(theta) ? "yes" : "no") << "\n";
        return 0;
    }
    Json out = header("stickelberger", o);
    const Json body = stickelberger_to_json(theta);
    for (const auto& [k, v] : body.items())
        out[k] = v;
    std::cout << out.dump(2) << "\n";
    return 0;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--p", o.p, "odd prime")->check(CLI::PositiveNumber);
    sub->add_option("--M", o.M, "coefficient exponent, Z/p^M")->check(CLI::PositiveNumber);
    sub->add_option("--level-m", o.level_m, "lift level m")->check(CLI::PositiveNumber);
    sub->add_option("--level-n", o.level_n, "base level n")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--no-timestamp", o.no_timestamp, "omit timestamps and timings");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fitting ideals over finite group rings and cyclotomic Stickelberger elements"};
    app.require_subcommand(1);
    Options o;

    auto* fitt_cmd = app.add_subcommand("fitt", "Fitting ideal of a presentation or of a model's lifted matrix");
    fitt_cmd->add_option("--input", o.input, "presentation or model JSON")->required();
    fitt_cmd->add_option("--e", o.e, "Fitting index");
    add_common(fitt_cmd, o);

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", o.suite, "appendix|limits|transpose|stickelberger|all")
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--input", o.input, "model JSON replacing the default catalog");
    verify_cmd->add_option("--bound", o.bound, "torsion enumeration bound");
    verify_cmd->add_option("--jobs", o.jobs, "worker threads (0 = automatic)");
    add_common(verify_cmd, o);

    auto* st_cmd = app.add_subcommand("stickelberger", "compute a Stickelberger element");
    st_cmd->add_option("--input", o.input, "{\"m\":..., \"S\":[...], \"T\":[...]}");
    st_cmd->add_option("--m", o.m, "conductor");
    st_cmd->add_option("--S", o.S, "extra primes in S");
    st_cmd->add_option("--T", o.T, "smoothing primes");
    add_common(st_cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (o.p && (*o.p < 3 || !is_prime(*o.p))) {
        std::cerr << "error: --p must be an odd prime\n";
        return kExitInput;
    }
    if (o.level_m && o.level_n && *o.level_n > *o.level_m) {
        std::cerr << "error: need --level-n <= --level-m\n";
        return kExitInput;
    }
    try {
        if (*fitt_cmd)
            return cmd_fitt(o);
        if (*verify_cmd)
            return cmd_verify(o);
        return cmd_stickelberger(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
}
