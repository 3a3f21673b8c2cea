#include "plucker/parse.hpp"

#include <cctype>
#include <string>

namespace plucker {

namespace {

struct Token {
    enum class Kind { Integer, Variable, Punct, End };
    Kind kind = Kind::End;
    std::string digits;  // Integer
    char var = 0;        // Variable letter
    int index = 0;       // Variable index
    char punct = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Kind::Integer;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                tok_.digits.push_back(text_[pos_]);
                bump();
            }
            return;
        }
        if (c == 'x' || c == 'y') {
            tok_.kind = Token::Kind::Variable;
            tok_.var = c;
            bump();
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError(line_, col_, std::string("expected index digits after '") +
                                                  c + "'");
            long idx = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                idx = idx * 10 + (text_[pos_] - '0');
                if (idx > 1'000'000)
                    throw ParseError(tok_.line, tok_.col, "variable index overflow");
                bump();
            }
            tok_.index = static_cast<int>(idx);
            return;
        }
        if (std::string_view("+-*^/()[],").find(c) != std::string_view::npos) {
            tok_.kind = Token::Kind::Punct;
            tok_.punct = c;
            bump();
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

class Parser {
public:
    Parser(std::string_view text, const JobConfig& cfg) : lex_(text), cfg_(cfg) {}

    Expression parse() {
        Expression e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw ParseError(t.line, t.col, "unexpected trailing input");
        return e;
    }

private:
    bool at_punct(char c) const {
        return lex_.peek().kind == Token::Kind::Punct && lex_.peek().punct == c;
    }

    Token expect_punct(char c, const std::string& what) {
        if (!at_punct(c)) {
            const Token& t = lex_.peek();
            throw ParseError(t.line, t.col, "expected '" + std::string(1, c) + "' " + what);
        }
        return lex_.take();
    }

    mpz_class expect_integer(const char* what) {
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Integer)
            throw ParseError(t.line, t.col, std::string("expected ") + what);
        return mpz_class(lex_.take().digits, 10);
    }

    int expect_index(const char* what) {
        const Token& t = lex_.peek();
        mpz_class v = expect_integer(what);
        if (v < 1 || v > cfg_.n)
            throw ParseError(t.line, t.col,
                             "index " + v.get_str() + " exceeds n = " + std::to_string(cfg_.n));
        return static_cast<int>(v.get_si());
    }

    Expression expr() {
        Expression lhs = term();
        while (at_punct('+') || at_punct('-')) {
            Token op = lex_.take();
            Expression node;
            node.kind = op.punct == '+' ? Expression::Kind::Add : Expression::Kind::Subtract;
            node.line = op.line;
            node.col = op.col;
            node.children.push_back(std::move(lhs));
            node.children.push_back(term());
            lhs = std::move(node);
        }
        return lhs;
    }

    Expression term() {
        Expression lhs = factor();
        while (at_punct('*')) {
            Token op = lex_.take();
            Expression node;
            node.kind = Expression::Kind::Multiply;
            node.line = op.line;
            node.col = op.col;
            node.children.push_back(std::move(lhs));
            node.children.push_back(factor());
            lhs = std::move(node);
        }
        return lhs;
    }

    Expression factor() {
        Expression base = atom();
        if (at_punct('^')) {
            Token op = lex_.take();
            const Token& t = lex_.peek();
            mpz_class e = expect_integer("exponent after '^'");
            if (e > kMaxExponent)
                throw ParseError(t.line, t.col, "exponent overflow (limit " +
                                                    std::to_string(kMaxExponent) + ")");
            Expression node;
            node.kind = Expression::Kind::Power;
            node.line = op.line;
            node.col = op.col;
            node.exponent = e.get_si();
            node.children.push_back(std::move(base));
            return node;
        }
        return base;
    }

    Expression atom() {
        const Token& t = lex_.peek();
        if (at_punct('-')) {
            Token op = lex_.take();
            Expression node;
            node.kind = Expression::Kind::Negate;
            node.line = op.line;
            node.col = op.col;
            node.children.push_back(atom());
            return node;
        }
        if (at_punct('(')) {
            lex_.take();
            Expression node = expr();
            expect_punct(')', "to close '('");
            return node;
        }
        if (at_punct('[')) {
            Token open = lex_.take();
            Expression node;
            node.kind = Expression::Kind::Bracket;
            node.line = open.line;
            node.col = open.col;
            node.index = expect_index("bracket index");
            expect_punct(',', "between bracket indices");
            node.second = expect_index("bracket index");
            expect_punct(']', "to close the bracket");
            return node;
        }
        if (t.kind == Token::Kind::Integer) {
            Token lit = lex_.take();
            Expression node;
            node.line = lit.line;
            node.col = lit.col;
            if (at_punct('/')) {
                lex_.take();
                const Token& dt = lex_.peek();
                mpz_class den = expect_integer("denominator after '/'");
                if (den == 0)
                    throw ParseError(dt.line, dt.col, "zero denominator in rational literal");
                node.kind = Expression::Kind::Rational;
                node.num = mpz_class(lit.digits, 10);
                node.den = den;
            } else {
                node.kind = Expression::Kind::Integer;
                node.integer = mpz_class(lit.digits, 10);
            }
            return node;
        }
        if (t.kind == Token::Kind::Variable) {
            Token var = lex_.take();
            if (var.index < 1 || var.index > cfg_.n)
                throw ParseError(var.line, var.col,
                                 "index " + std::to_string(var.index) +
                                     " exceeds n = " + std::to_string(cfg_.n));
            Expression node;
            node.kind = Expression::Kind::Variable;
            node.line = var.line;
            node.col = var.col;
            node.var = var.var;
            node.index = var.index;
            return node;
        }
        throw ParseError(t.line, t.col, "expected a value");
    }

    Lexer lex_;
    const JobConfig& cfg_;
};

enum class Atoms { None = 0, Vars = 1, Brackets = 2, Both = 3 };

Atoms operator|(Atoms a, Atoms b) {
    return static_cast<Atoms>(static_cast<int>(a) | static_cast<int>(b));
}

Atoms atoms_in(const Expression& e) {
    Atoms found = Atoms::None;
    if (e.kind == Expression::Kind::Variable) found = Atoms::Vars;
    if (e.kind == Expression::Kind::Bracket) found = Atoms::Brackets;
    for (const Expression& child : e.children) found = found | atoms_in(child);
    return found;
}

template <class Value, class AtomFn>
Value eval(const Expression& e, const RingContext& ctx, AtomFn&& atom_value) {
    switch (e.kind) {
        case Expression::Kind::Integer:
            return Value::constant(ctx, Scalar::of(ctx.field, e.integer));
        case Expression::Kind::Rational:
            return Value::constant(ctx, Scalar::ratio(ctx.field, e.num, e.den));
        case Expression::Kind::Negate:
            return -eval<Value>(e.children[0], ctx, atom_value);
        case Expression::Kind::Add:
            return eval<Value>(e.children[0], ctx, atom_value) +
                   eval<Value>(e.children[1], ctx, atom_value);
        case Expression::Kind::Subtract:
            return eval<Value>(e.children[0], ctx, atom_value) -
                   eval<Value>(e.children[1], ctx, atom_value);
        case Expression::Kind::Multiply:
            return eval<Value>(e.children[0], ctx, atom_value) *
                   eval<Value>(e.children[1], ctx, atom_value);
        case Expression::Kind::Power:
            return eval<Value>(e.children[0], ctx, atom_value).pow(e.exponent);
        default:
            return atom_value(e);
    }
}

}  // namespace

Expression parse_expression(std::string_view text, const JobConfig& cfg) {
    return Parser(text, cfg).parse();
}

Polynomial elaborate_polynomial(const Expression& e, const JobConfig& cfg) {
    RingContext ctx{cfg.n, cfg.field};
    return eval<Polynomial>(e, ctx, [&](const Expression& atom) -> Polynomial {
        if (atom.kind == Expression::Kind::Bracket)
            throw MixedExpression("bracket [" + std::to_string(atom.index) + "," +
                                  std::to_string(atom.second) +
                                  "] in a polynomial expression");
        return atom.var == 'x' ? Polynomial::x(ctx, atom.index)
                               : Polynomial::y(ctx, atom.index);
    });
}

BracketPolynomial elaborate_bracket(const Expression& e, const JobConfig& cfg) {
    RingContext ctx{cfg.n, cfg.field};
    return eval<BracketPolynomial>(e, ctx, [&](const Expression& atom) -> BracketPolynomial {
        if (atom.kind == Expression::Kind::Variable)
            throw MixedExpression(std::string("variable ") + atom.var +
                                  std::to_string(atom.index) + " in a bracket expression");
        return BracketPolynomial::bracket(ctx, atom.index, atom.second);
    });
}

std::variant<Polynomial, BracketPolynomial> elaborate(const Expression& e,
                                                      const JobConfig& cfg) {
    Atoms found = atoms_in(e);
    if (found == Atoms::Both)
        throw MixedExpression("expression mixes brackets with x/y variables");
    if (found == Atoms::Brackets) return elaborate_bracket(e, cfg);
    return elaborate_polynomial(e, cfg);
}

}  // namespace plucker
