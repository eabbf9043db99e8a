#include "fforge/json_io.hpp"

#include <fstream>

namespace fforge {

namespace {

template <class T>
T get_field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string(what) + ": missing field \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(std::string(what) + ": field \"" + key + "\" has the wrong type");
    }
}

} // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

FiniteAbelianGroup group_from_json(const Json& j) {
    auto orders = get_field<std::vector<int>>(j, "cyclic_orders", "group");
    for (int d : orders)
        if (d < 1)
            throw InputError("group: cyclic orders must be positive");
    FiniteAbelianGroup g(orders);
    if (j.contains("gamma_factor_index")) {
        auto idx = get_field<int>(j, "gamma_factor_index", "group");
        if (idx < 0 || static_cast<std::size_t>(idx) >= orders.size())
            throw InputError("group: gamma_factor_index out of range");
    }
    if (j.contains("complex_conjugation")) {
        auto res = get_field<std::vector<int>>(j, "complex_conjugation", "group");
        if (res.size() != orders.size())
            throw InputError("group: complex_conjugation has the wrong length");
        int c = g.index_of(res);
        if (g.element_order(c) != 2)
            throw InputError("group: complex_conjugation must have order 2");
    }
    return g;
}

Json group_to_json(const FiniteAbelianGroup& g) { return Json{{"cyclic_orders", g.cyclic_orders()}}; }

GroupRingElement element_from_json(const Json& j, const FiniteAbelianGroup& g, const ResidueRing& k) {
    const Json& arr = j.is_object() ? j.value("coeffs", Json()) : j;
    if (!arr.is_array())
        throw InputError("element: expected a coefficient array");
    if (arr.size() != static_cast<std::size_t>(g.order()))
        throw InputError("element: expected " + std::to_string(g.order()) + " coefficients, got " +
                         std::to_string(arr.size()));
    std::vector<Residue> c;
    for (const auto& x : arr) {
        if (!x.is_number_integer())
            throw InputError("element: coefficients must be integers");
        c.push_back(k.reduce(x.get<std::int64_t>()));
    }
    return gr_from(g, k, std::move(c));
}

Json element_to_json(const GroupRingElement& x) { return Json{{"coeffs", x.coefficients()}}; }

Presentation presentation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("modulus") || !j.contains("matrix"))
        throw InputError("presentation: needs group, modulus and matrix");
    auto g = group_from_json(j["group"]);
    auto p = get_field<std::int64_t>(j["modulus"], "p", "modulus");
    auto M = get_field<int>(j["modulus"], "M", "modulus");
    if (p < 2 || !is_prime(p) || M < 1)
        throw InputError("modulus: need a prime p and M >= 1");
    ResidueRing k(p, M);
    const auto& rows = j["matrix"];
    if (!rows.is_array() || rows.empty() || !rows[0].is_array())
        throw InputError("presentation: matrix must be a nonempty list of rows");
    const std::size_t cols = rows[0].size();
    GrMatrix m(g, k, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != cols)
            throw InputError("presentation: ragged matrix");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(i, c, element_from_json(rows[i][c], g, k));
    }
    return Presentation{std::move(m)};
}

Json presentation_to_json(const Presentation& pres) {
    const auto& m = pres.relations;
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(i, c).coefficients());
        rows.push_back(std::move(row));
    }
    return Json{{"group", group_to_json(m.group())},
                {"modulus", {{"p", m.ring().prime()}, {"M", m.ring().exponent()}}},
                {"matrix", std::move(rows)}};
}

DecompositionModel model_from_json(const Json& j) {
    DecompositionModel m;
    m.name = j.value("name", std::string("model"));
    m.group_orders = get_field<std::vector<int>>(j, "group_orders", "model");
    m.p = get_field<int>(j, "p", "model");
    m.torsion_generators = j.contains("torsion_generators")
                               ? get_field<std::vector<std::vector<int>>>(j, "torsion_generators", "model")
                               : std::vector<std::vector<int>>{};
    m.y_torsion = get_field<std::vector<int>>(j, "y_torsion", "model");
    m.t = j.contains("t") ? get_field<std::int64_t>(j, "t", "model") : 1;
    m.level_n = j.contains("level_n") ? get_field<int>(j, "level_n", "model") : 1;
    m.level_m = j.contains("level_m") ? get_field<int>(j, "level_m", "model") : 2;
    try {
        validate_model(m);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return m;
}

Json model_to_json(const DecompositionModel& m) {
    return Json{{"name", m.name},       {"group_orders", m.group_orders},
                {"p", m.p},             {"torsion_generators", m.torsion_generators},
                {"y_torsion", m.y_torsion}, {"t", m.t},
                {"level_n", m.level_n}, {"level_m", m.level_m}};
}

std::vector<DecompositionModel> models_from_json(const Json& j) {
    std::vector<DecompositionModel> out;
    if (j.is_object() && j.contains("models")) {
        if (!j["models"].is_array())
            throw InputError("models: expected an array");
        for (const auto& x : j["models"])
            out.push_back(model_from_json(x));
    } else {
        out.push_back(model_from_json(j));
    }
    return out;
}

StickelbergerRequest stickelberger_request_from_json(const Json& j) {
    StickelbergerRequest r;
    r.m = get_field<int>(j, "m", "stickelberger");
    auto read_primes = [&](const char* key, std::set<std::int64_t>& out) {
        if (!j.contains(key))
            return;
        if (!j[key].is_array())
            throw InputError(std::string("stickelberger: ") + key + " must be an array");
        for (const auto& x : j[key]) {
            if (x.is_string() && x.get<std::string>() == "inf" && std::string(key) == "S")
                continue;
            if (!x.is_number_integer())
                throw InputError(std::string("stickelberger: bad entry in ") + key);
            out.insert(x.get<std::int64_t>());
        }
    };
    read_primes("S", r.S);
    read_primes("T", r.T);
    return r;
}

StickelbergerElement build_stickelberger(const StickelbergerRequest& req) {
    try {
        auto S = req.S;
        if (is_valid_conductor(req.m) && S.empty())
            for (int ell : prime_factors(req.m))
                S.insert(ell);
        return theta_direct(req.m, S, req.T);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::vector<std::int64_t> integral_primes(const StickelbergerElement& theta) {
    std::vector<std::int64_t> out;
    if (theta.T.empty())
        return out;
    const std::int64_t top = std::max<std::int64_t>(theta.conductor(), 31);
    for (std::int64_t p = 3; p <= top; p += 2)
        if (is_prime(p) && integrality_check(theta, p))
            out.push_back(p);
    return out;
}

Json stickelberger_to_json(const StickelbergerElement& theta) {
    Json coeffs = Json::array();
    for (const auto& c : theta.value.coefficients())
        coeffs.push_back(Json::array({boost::multiprecision::numerator(c).str(), boost::multiprecision::denominator(c).str()}));
    Json S = Json::array();
    for (auto v : theta.S)
        S.push_back(v);
    S.push_back("inf");
    return Json{{"m", theta.conductor()},
                {"S", std::move(S)},
                {"T", theta.T},
                {"labels", theta.units.labels},
                {"coeffs", std::move(coeffs)},
                {"integral_at", integral_primes(theta)},
                {"minus_pure", minus_pure(theta)}};
}

} // namespace fforge
