#pragma once

#include <stdexcept>
#include <string>

namespace resrun {

/// Failure categories surfaced by the library. The CLI maps these to exit
/// code 2 (usage / domain errors); InternalError and NonUnique signal a
/// broken invariant and should never fire on valid builds.
enum class Errc {
    non_prime,
    even_characteristic,
    degree_zero,
    capacity_exceeded,
    not_monic,
    not_irreducible,
    division_by_zero,
    index_out_of_range,
    wrong_residue_class,
    zero_argument,
    zero_discriminant,
    wrong_characteristic,
    run_too_long,
    run_too_short,
    non_integer_result,
    non_unique,
    no_closed_form,
    internal_error,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::non_prime: return "NonPrime";
    case Errc::even_characteristic: return "EvenCharacteristic";
    case Errc::degree_zero: return "DegreeZero";
    case Errc::capacity_exceeded: return "CapacityExceeded";
    case Errc::not_monic: return "NotMonic";
    case Errc::not_irreducible: return "NotIrreducible";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::wrong_residue_class: return "WrongResidueClass";
    case Errc::zero_argument: return "ZeroArgument";
    case Errc::zero_discriminant: return "ZeroDiscriminant";
    case Errc::wrong_characteristic: return "WrongCharacteristic";
    case Errc::run_too_long: return "RunTooLong";
    case Errc::run_too_short: return "RunTooShort";
    case Errc::non_integer_result: return "NonIntegerResult";
    case Errc::non_unique: return "NonUnique";
    case Errc::no_closed_form: return "NoClosedForm";
    case Errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace resrun
