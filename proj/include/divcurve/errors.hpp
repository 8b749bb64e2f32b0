#ifndef DIVCURVE_ERRORS_HPP
#define DIVCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divcurve {

// The point fails the norm hypothesis of the approximation statement.
struct hypothesis_not_met : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search exhausted without a certificate; indicates an implementation bug,
// not a property of the input.
struct no_certificate_found : std::logic_error {
    using std::logic_error::logic_error;
};

struct curve_is_coset : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degenerate_elimination : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    int line, column;
    parse_error(const std::string& msg, int ln, int col)
        : std::runtime_error(msg + " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")"),
          line(ln),
          column(col) {}
};

}  // namespace divcurve

#endif
