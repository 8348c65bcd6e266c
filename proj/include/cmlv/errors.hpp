#pragma once

#include <stdexcept>
#include <string>

namespace cmlv {

// Machine-readable reasons carried by input_error so callers (and the CLI)
// can distinguish failure classes without parsing messages.
enum class errc {
    ok = 0,
    d_zero,              // D = 0
    d_fourth_power,      // D divisible by a fourth power
    d_power_of_two,      // D = +-2^a, no odd prime factor
    zero_input,
    even_input,          // modulus/argument with even norm where odd required
    not_coprime,
    bad_prime,           // p fails a congruence / divisibility precondition
    bad_argument,        // generic precondition violation
    lattice_point,       // pole of the Weierstrass function
    unsupported_shape,   // torsion_field_degree outside the covered lemmas
    file_not_found,
    bad_format,
    version_mismatch,
};

class input_error : public std::runtime_error {
  public:
    input_error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

// Exact or numeric verification gates that failed: a computed object does not
// satisfy an identity it must satisfy.  Always a bug or precision exhaustion,
// never a user mistake.
class verify_error : public std::runtime_error {
  public:
    explicit verify_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cmlv
