#pragma once

#include "crmoser/forms.hpp"
#include "crmoser/normal_form.hpp"

#include <stdexcept>
#include <string>

namespace crmoser {

/// Syntax or validation error in a surface expression; position is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// expression := term (('+'|'-') term)*
// term       := rational? factor ('*'? factor)*
// factor     := 'u' pow? | 'Q' pow? | '|z' index '|^' even | 'z' index pow? | '~z' index pow?
// Q expands to <z,z> of the given form, ~z is the conjugate variable.
Poly parse_expression(const std::string& text, const HermitianForm& form);

// Parses and validates reality and the k, l >= 2 condition.
Hypersurface parse_surface(const std::string& text, const HermitianForm& form, unsigned max_weight = 0);

// Inverse of parse_expression for polynomials with rational coefficients.
// Throws std::invalid_argument if a coefficient has a nonzero imaginary part.
std::string serialize_expression(const Poly& p);

}  // namespace crmoser
