#pragma once

#include <stdexcept>
#include <string>

namespace nc {

enum class Errc {
    backend_mismatch,
    truncation_mismatch,
    shape_mismatch,
    wrong_degree,
    not_closed,
    not_conserved,
    not_harmonic,
    not_flat,
    invalid_inverse_pair,
    not_antihermitian,
    pole_at_unit_lambda,
    seed_not_harmonic,
    obstruction_nonintegrable,
    star_table_singular,
    division_by_zero,
    parse_error,
    truncation_exceeded,
    bad_model,
};

const char* errc_name(Errc c);

/// Library-wide exception. `witness` carries the printed offending value
/// (the nonzero residual for not_closed/not_conserved/..., the token for
/// parse errors); `step` is the tower step index where applicable.
class Error : public std::runtime_error {
  public:
    Error(Errc code, std::string message, std::string witness = {}, int step = -1)
        : std::runtime_error(std::move(message)), code_(code),
          witness_(std::move(witness)), step_(step) {}

    Errc code() const { return code_; }
    const std::string& witness() const { return witness_; }
    int step() const { return step_; }

  private:
    Errc code_;
    std::string witness_;
    int step_;
};

} // namespace nc
