#pragma once

#include <stdexcept>
#include <string>

namespace nw {

// Base for all domain errors so callers can catch the whole family at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rows of different orders were combined in one operation.
struct MixedOrders : Error {
    using Error::Error;
};

// A construction that requires the additivity identity was handed a quadruple
// that fails it.
struct NotAdditive : Error {
    using Error::Error;
};

// A matrix entry expected to be a unit (+1/-1, or a Gaussian unit) is not.
struct NonUnitEntry : Error {
    using Error::Error;
};

// An order that must be odd is even.
struct EvenOrder : Error {
    using Error::Error;
};

// A requested symmetric-row sum cannot be realized at this order.
struct InfeasibleSum : Error {
    using Error::Error;
};

// The multiplier u of an index automorphism x -> u*x must satisfy gcd(u,n)=1.
struct NotAUnit : Error {
    using Error::Error;
};

// Text-format parse failure, with 1-based position of the offending input.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// A row that must be symmetric (B, C, or D) is not.
struct SymmetryViolation : Error {
    std::string row_label;
    SymmetryViolation(const std::string& msg, std::string label)
        : Error(msg), row_label(std::move(label)) {}
};

}  // namespace nw
