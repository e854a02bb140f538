#include "perfrank/expression.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace perfrank {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message), position_(position) {}

std::string ParseError::annotated(const std::string& source) const {
    return std::string("parse error at column ") + std::to_string(position_ + 1) + ": " + what() + "\n  " +
           source + "\n  " + std::string(position_, ' ') + "^";
}

namespace {

using Op = ScoreExpression::Op;
using Instr = ScoreExpression::Instr;

// Recursive descent:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?
//   atom   := number | ident | func '(' expr ')' | '(' expr ')'
class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    std::vector<Instr> run() {
        expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return std::move(code_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (accept(c)) return;
        fail(std::string("expected '") + c + "'" + (pos_ < s_.size() ? "" : " before end of input"));
    }

    void expr() {
        term();
        for (;;) {
            if (accept('+')) {
                term();
                code_.push_back({Op::Add, 0});
            } else if (accept('-')) {
                term();
                code_.push_back({Op::Sub, 0});
            } else {
                return;
            }
        }
    }

    void term() {
        unary();
        for (;;) {
            if (accept('*')) {
                unary();
                code_.push_back({Op::Mul, 0});
            } else if (accept('/')) {
                unary();
                code_.push_back({Op::Div, 0});
            } else {
                return;
            }
        }
    }

    void unary() {
        if (accept('-')) {
            unary();
            code_.push_back({Op::Neg, 0});
            return;
        }
        power();
    }

    void power() {
        atom();
        if (accept('^')) {
            unary();
            code_.push_back({Op::Pow, 0});
        }
    }

    void atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.c_str() + pos_;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin) fail("malformed number");
            pos_ += static_cast<std::size_t>(end - begin);
            code_.push_back({Op::Push, v});
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string id = s_.substr(start, pos_ - start);
            static const char* vars[] = {"ptn", "pfp", "pfn", "ptp"};
            for (int k = 0; k < 4; ++k) {
                if (id == vars[k]) {
                    code_.push_back({Op::Var, static_cast<double>(k)});
                    return;
                }
            }
            if (id == "sqrt" || id == "log") {
                expect('(');
                expr();
                expect(')');
                code_.push_back({id == "sqrt" ? Op::Sqrt : Op::Log, 0});
                return;
            }
            pos_ = start;
            fail("unknown identifier '" + id + "'");
        }
        if (accept('(')) {
            expr();
            expect(')');
            return;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::vector<Instr> code_;
};

}  // namespace

ScoreExpression ScoreExpression::parse(const std::string& source) {
    ScoreExpression e;
    e.source_ = source;
    e.code_ = Parser(source).run();
    std::size_t depth = 0;
    for (const auto& in : e.code_) {
        if (in.op == Op::Push || in.op == Op::Var) {
            e.max_stack_ = std::max(e.max_stack_, ++depth);
        } else if (in.op != Op::Neg && in.op != Op::Sqrt && in.op != Op::Log) {
            --depth;
        }
    }
    return e;
}

std::optional<double> ScoreExpression::evaluate(std::span<const double> p) const {
    double stack[64];
    std::vector<double> heap;
    double* st = stack;
    if (max_stack_ > 64) {
        heap.resize(max_stack_);
        st = heap.data();
    }
    std::size_t top = 0;
    for (const auto& in : code_) {
        switch (in.op) {
            case Op::Push: st[top++] = in.value; break;
            case Op::Var: st[top++] = p[static_cast<std::size_t>(in.value)]; break;
            case Op::Neg: st[top - 1] = -st[top - 1]; break;
            case Op::Sqrt:
                if (st[top - 1] < 0.0) return std::nullopt;
                st[top - 1] = std::sqrt(st[top - 1]);
                break;
            case Op::Log:
                if (st[top - 1] <= 0.0) return std::nullopt;
                st[top - 1] = std::log(st[top - 1]);
                break;
            default: {
                const double b = st[--top];
                double& a = st[top - 1];
                switch (in.op) {
                    case Op::Add: a += b; break;
                    case Op::Sub: a -= b; break;
                    case Op::Mul: a *= b; break;
                    case Op::Div:
                        if (b == 0.0) return std::nullopt;
                        a /= b;
                        break;
                    case Op::Pow: a = std::pow(a, b); break;
                    default: break;
                }
            }
        }
        if (!std::isfinite(st[top - 1])) return std::nullopt;
    }
    return st[0];
}

Score ScoreExpression::to_score() const {
    auto self = *this;
    return Score(source_, 4, [self](std::span<const double> p) { return self.evaluate(p); });
}

}  // namespace perfrank
