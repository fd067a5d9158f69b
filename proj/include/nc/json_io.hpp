#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "nc/chiral.hpp"
#include "nc/tower.hpp"

namespace nc {

using nlohmann::json;

json matrix_to_json(const AlgebraMatrix& m);
AlgebraMatrix matrix_from_json(const json& j, Context ctx, unsigned n);

/// { "deg0": [[expr..]..], "dq": ..., "dp": ..., "dqdp": ... }; absent keys
/// mean zero and zero components are omitted on output.
json form_to_json(const Form& w);
Form form_from_json(const json& j, Context ctx, unsigned n);

/// { "depth": M, "chi": [...], "J": [...], "certificates": [...] }
json tower_to_json(const Tower& tower);

enum class SourceKind { unitary, phi, raw };

/// Parsed model file. `perturbative` marks the unitary/phi entry as a
/// t-free seed for the matching solver rather than a finished field.
struct ModelSpec {
    Context ctx;
    unsigned matrix_size = 1;
    SourceKind source = SourceKind::raw;
    std::optional<AlgebraMatrix> generator; // unitary source
    std::optional<AlgebraMatrix> phi;       // phi source
    std::optional<Form> raw;                // raw source
    std::uint64_t seed = 12345;
    unsigned depth = 4;
    bool perturbative = false;
};

/// Strict parse: unknown keys are rejected.
ModelSpec model_from_json(const json& j);
ModelSpec load_model(const std::string& path);

/// Build the gauge field a model describes, running the perturbative
/// solver first when the model asks for it.
GaugeField realize_field(const ModelSpec& spec, const HodgeTable& table);

std::string fnv1a_hex(const std::string& bytes);

} // namespace nc
