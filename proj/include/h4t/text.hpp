#pragma once

#include "h4t/context.hpp"
#include "h4t/envelope.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace h4t {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::invalid_argument("at offset " + std::to_string(offset) + ": " + what)
        , offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/* element := term (('+'|'-') term)*  |  '0'
 * term    := [scalar '*'] (factor '*')* 'w'
 * factor  := generator ('^' posint)?      generator: A(n) B(n) c(n) d(n) k
 * scalar  := rational | '(' polynomial in k ')'
 * E and F are read as A and B. Throws ParseError.
 */
std::vector<Word> parse_element(std::string_view text);

/* Parses "3/2*k^2-k+1" style polynomials. Throws ParseError. */
PolyK parse_polynomial(std::string_view text);

/* Sum of the reduced words, in the coefficient ring of ctx. */
ModuleVector<Rational> evaluate(const std::vector<Word>& element, const ModuleContext& ctx);
ModuleVector<PolyK> evaluate_universal(const std::vector<Word>& element, const ModuleContext& ctx);

/* Unreduced display of a word sum: "2*A(2)*B(-1)*w - k*w". */
std::string format_words(const std::vector<Word>& element);

} // namespace h4t
