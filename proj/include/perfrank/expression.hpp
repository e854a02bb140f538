#pragma once

// Tiny arithmetic language for user-defined two-class scores:
//   identifiers ptn pfp pfn ptp, numeric literals, + - * / ^ (right
//   associative), unary minus, sqrt(...), log(...), parentheses.
// Division by zero, log of a non-positive value, sqrt of a negative value and
// non-finite intermediate results put the point outside the score's domain.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "perfrank/core.hpp"

namespace perfrank {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    /// 0-based offset into the source text.
    std::size_t position() const noexcept { return position_; }
    /// Message followed by the source and a caret under the offending column.
    std::string annotated(const std::string& source) const;

private:
    std::size_t position_;
};

class ScoreExpression {
public:
    /// Throws ParseError.
    static ScoreExpression parse(const std::string& source);

    const std::string& source() const noexcept { return source_; }
    std::optional<double> evaluate(std::span<const double> probs) const;
    /// Two-class score named after the source text.
    Score to_score() const;

    enum class Op : unsigned char { Push, Var, Add, Sub, Mul, Div, Pow, Neg, Sqrt, Log };
    struct Instr {
        Op op;
        double value;  // literal for Push, sample index for Var
    };

private:
    std::string source_;
    std::vector<Instr> code_;  // postfix
    std::size_t max_stack_ = 0;
};

}  // namespace perfrank
