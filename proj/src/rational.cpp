#include "nc/rational.hpp"

#include <sstream>

namespace nc {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::backend_mismatch: return "BackendMismatch";
    case Errc::truncation_mismatch: return "TruncationMismatch";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::wrong_degree: return "WrongDegree";
    case Errc::not_closed: return "NotClosed";
    case Errc::not_conserved: return "NotConserved";
    case Errc::not_harmonic: return "NotHarmonic";
    case Errc::not_flat: return "NotFlat";
    case Errc::invalid_inverse_pair: return "InvalidInversePair";
    case Errc::not_antihermitian: return "NotAntiHermitian";
    case Errc::pole_at_unit_lambda: return "PoleAtUnitLambda";
    case Errc::seed_not_harmonic: return "SeedNotHarmonic";
    case Errc::obstruction_nonintegrable: return "ObstructionNonintegrable";
    case Errc::star_table_singular: return "StarTableSingular";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::parse_error: return "ParseError";
    case Errc::truncation_exceeded: return "TruncationExceeded";
    case Errc::bad_model: return "BadModel";
    }
    return "Unknown";
}

std::string GaussianRational::str() const {
    std::ostringstream os;
    if (is_zero())
        return "0";
    if (re_ != 0) {
        os << re_.get_str();
        if (im_ > 0)
            os << "+";
    }
    if (im_ != 0) {
        if (im_ == -1)
            os << "-i";
        else if (im_ == 1)
            os << "i";
        else
            os << im_.get_str() << "*i";
    }
    return os.str();
}

GaussianRational i_pow(unsigned k) {
    switch (k % 4) {
    case 0: return {1};
    case 1: return GaussianRational::i();
    case 2: return {-1};
    default: return {0, -1};
    }
}

mpq_class make_rational(long num, long den) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

} // namespace nc
