#include "nc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "nc/parse.hpp"
#include "nc/print.hpp"

namespace nc {

json matrix_to_json(const AlgebraMatrix& m) {
    json rows = json::array();
    for (unsigned i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (unsigned j = 0; j < m.size(); ++j)
            row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

AlgebraMatrix matrix_from_json(const json& j, Context ctx, unsigned n) {
    if (!j.is_array() || j.size() != n)
        throw Error(Errc::bad_model, "expected a " + std::to_string(n) + "-row matrix");
    AlgebraMatrix m(ctx, n);
    for (unsigned i = 0; i < n; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != n)
            throw Error(Errc::bad_model, "expected a " + std::to_string(n) + "-column row");
        for (unsigned k = 0; k < n; ++k)
            m.at(i, k) = parse_expression(row[k].get<std::string>(), ctx);
    }
    return m;
}

json form_to_json(const Form& w) {
    json out = json::object();
    for (unsigned b = 0; b < 4; ++b) {
        const auto& comp = w[static_cast<FormBasis>(b)];
        if (!comp.is_zero())
            out[basis_name(static_cast<FormBasis>(b))] = matrix_to_json(comp);
    }
    return out;
}

Form form_from_json(const json& j, Context ctx, unsigned n) {
    if (!j.is_object())
        throw Error(Errc::bad_model, "expected a form object");
    Form w(ctx, n);
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (unsigned b = 0; b < 4; ++b)
            if (key == basis_name(static_cast<FormBasis>(b))) {
                w[static_cast<FormBasis>(b)] = matrix_from_json(value, ctx, n);
                known = true;
            }
        if (!known)
            throw Error(Errc::bad_model, "unknown form key '" + key + "'");
    }
    return w;
}

json tower_to_json(const Tower& tower) {
    json out;
    out["depth"] = tower.depth();
    json chis = json::array();
    for (const auto& chi : tower.chis)
        chis.push_back(matrix_to_json(chi));
    out["chi"] = std::move(chis);
    json currents = json::array();
    for (const auto& j : tower.currents)
        currents.push_back(form_to_json(j));
    out["J"] = std::move(currents);
    json certs = json::array();
    for (const auto& cert : tower.certificates) {
        json c;
        c["step"] = cert.step;
        c["conservation"] = to_string(cert.conservation);
        c["closedness"] = to_string(cert.closedness);
        certs.push_back(std::move(c));
    }
    out["certificates"] = std::move(certs);
    return out;
}

namespace {

void require_keys(const json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
    for (const char* key : required)
        if (!j.contains(key))
            throw Error(Errc::bad_model, std::string("missing key '") + key + "'");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* k : required)
            known = known || key == k;
        for (const char* k : optional)
            known = known || key == k;
        if (!known)
            throw Error(Errc::bad_model, "unknown key '" + key + "'");
    }
}

} // namespace

ModelSpec model_from_json(const json& j) {
    require_keys(j, {"algebra", "matrix_size", "truncation_order", "source"},
                 {"seed", "depth", "perturbative"});
    ModelSpec spec;
    const std::string algebra = j["algebra"].get<std::string>();
    if (algebra == "heisenberg")
        spec.ctx.backend = Backend::heisenberg;
    else if (algebra == "moyal")
        spec.ctx.backend = Backend::moyal;
    else
        throw Error(Errc::bad_model, "unknown algebra '" + algebra + "'");
    spec.ctx.order = j["truncation_order"].get<unsigned>();
    spec.matrix_size = j["matrix_size"].get<unsigned>();
    if (spec.matrix_size == 0)
        throw Error(Errc::bad_model, "matrix_size must be positive");
    if (j.contains("seed"))
        spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("depth"))
        spec.depth = j["depth"].get<unsigned>();
    if (j.contains("perturbative"))
        spec.perturbative = j["perturbative"].get<bool>();

    const json& src = j["source"];
    if (!src.is_object() || !src.contains("type"))
        throw Error(Errc::bad_model, "source must be an object with a 'type'");
    const std::string type = src["type"].get<std::string>();
    if (type == "unitary") {
        require_keys(src, {"type", "X"}, {});
        spec.source = SourceKind::unitary;
        spec.generator = matrix_from_json(src["X"], spec.ctx, spec.matrix_size);
    } else if (type == "phi") {
        require_keys(src, {"type", "phi"}, {});
        spec.source = SourceKind::phi;
        spec.phi = matrix_from_json(src["phi"], spec.ctx, spec.matrix_size);
    } else if (type == "raw") {
        require_keys(src, {"type", "A"}, {});
        spec.source = SourceKind::raw;
        spec.raw = form_from_json(src["A"], spec.ctx, spec.matrix_size);
    } else {
        throw Error(Errc::bad_model, "unknown source type '" + type + "'");
    }
    return spec;
}

ModelSpec load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::bad_model, "cannot open model file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(Errc::bad_model, "model JSON: " + std::string(e.what()));
    }
    return model_from_json(j);
}

GaugeField realize_field(const ModelSpec& spec, const HodgeTable& table) {
    switch (spec.source) {
    case SourceKind::unitary: {
        if (spec.perturbative)
            return solve_sigma_perturbative(*spec.generator, spec.ctx.order, table).field;
        return pure_gauge(unitary_pair(*spec.generator));
    }
    case SourceKind::phi: {
        if (spec.perturbative)
            return from_phi(solve_chiral_perturbative(*spec.phi, spec.ctx.order), table);
        return from_phi(*spec.phi, table);
    }
    case SourceKind::raw:
        return raw_field(*spec.raw);
    }
    throw Error(Errc::bad_model, "unreachable source kind");
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace nc
