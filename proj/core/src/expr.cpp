#include "qkw/expr.hpp"

#include <cctype>
#include <vector>

namespace qkw {

namespace {

struct Token {
    enum class Kind { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, Underscore, End };
    Kind kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
            out.push_back({Token::Kind::Int, std::move(num), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) id += s[i++];
            out.push_back({Token::Kind::Ident, std::move(id), start});
            continue;
        }
        switch (c) {
            case '+': out.push_back({Token::Kind::Plus, "+", start}); break;
            case '-': out.push_back({Token::Kind::Minus, "-", start}); break;
            case '*': out.push_back({Token::Kind::Star, "*", start}); break;
            case '^': out.push_back({Token::Kind::Caret, "^", start}); break;
            case '(': out.push_back({Token::Kind::LParen, "(", start}); break;
            case ')': out.push_back({Token::Kind::RParen, ")", start}); break;
            default:
                throw ParseError(start, "unexpected character '" + std::string(1, c) + "'");
        }
        ++i;
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

constexpr int kMaxExponent = 1 << 20;

class Parser {
public:
    Parser(std::vector<Token> toks, const ExprContext& ctx) : toks_(std::move(toks)), ctx_(ctx) {}

    ExprPtr run() {
        ExprPtr e = expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Token::Kind k, const std::string& what) {
        if (!accept(k)) throw ParseError(peek().offset, "expected " + what);
    }

    static ExprPtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (true) {
            if (accept(Token::Kind::Plus)) {
                ExprNode n{ExprNode::Kind::Add, Int(0), {}, 0, lhs, term()};
                lhs = make(std::move(n));
            } else if (accept(Token::Kind::Minus)) {
                ExprNode n{ExprNode::Kind::Sub, Int(0), {}, 0, lhs, term()};
                lhs = make(std::move(n));
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (accept(Token::Kind::Star)) {
            ExprNode n{ExprNode::Kind::Mul, Int(0), {}, 0, lhs, factor()};
            lhs = make(std::move(n));
        }
        return lhs;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (!accept(Token::Kind::Caret)) return base;
        bool negative = accept(Token::Kind::Minus);
        const Token& t = peek();
        if (t.kind != Token::Kind::Int) throw ParseError(t.offset, "expected an integer exponent");
        advance();
        long e = 0;
        try {
            e = std::stol(t.text);
        } catch (const std::exception&) {
            throw ParseError(t.offset, "exponent overflow");
        }
        if (e > kMaxExponent) throw ParseError(t.offset, "exponent overflow");
        if (negative) {
            if (base->kind != ExprNode::Kind::Var || base->var.type != VarRef::Type::T)
                throw ParseError(t.offset, "negative exponents are reserved for equivariant parameters");
            e = -e;
        }
        ExprNode n{ExprNode::Kind::Pow, Int(0), {}, static_cast<int>(e), base, nullptr};
        return make(std::move(n));
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Int: {
                advance();
                ExprNode n{ExprNode::Kind::Int, Int(t.text), {}, 0, nullptr, nullptr};
                return make(std::move(n));
            }
            case Token::Kind::Minus: {
                advance();
                ExprNode n{ExprNode::Kind::Neg, Int(0), {}, 0, atom(), nullptr};
                return make(std::move(n));
            }
            case Token::Kind::LParen: {
                advance();
                ExprPtr e = expr();
                expect(Token::Kind::RParen, "')'");
                return e;
            }
            case Token::Kind::Ident:
                return variable();
            default:
                throw ParseError(t.offset, "expected a value");
        }
    }

    static bool split_prefix_number(const std::string& s, char prefix, int& out) {
        if (s.size() < 2 || s[0] != prefix) return false;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        out = std::stoi(s.substr(1));
        return true;
    }

    ExprPtr variable() {
        const Token& t = advance();
        const std::string& id = t.text;
        int num = 0;
        VarRef ref;

        auto shape_required = [&]() -> const FlagShape& {
            if (!ctx_.shape) throw ParseError(t.offset, "variable '" + id + "' needs an active shape");
            return *ctx_.shape;
        };

        if (split_prefix_number(id, 'T', num)) {
            const FlagShape& sh = shape_required();
            if (num < 1 || num > sh.n())
                throw ParseError(t.offset, "unknown variable 'T" + std::to_string(num) + "' (n = " +
                                               std::to_string(sh.n()) + ")");
            ref = {VarRef::Type::T, 0, num, "T" + std::to_string(num)};
        } else if (split_prefix_number(id, 'q', num)) {
            const FlagShape& sh = shape_required();
            if (!ctx_.allow_q) throw ParseError(t.offset, "quantum parameter '" + id + "' not allowed here");
            if (num < 1 || num > sh.k())
                throw ParseError(t.offset, "unknown quantum parameter 'q" + std::to_string(num) + "'");
            ref = {VarRef::Type::Q, num, 0, "q" + std::to_string(num)};
        } else if (id.size() >= 2 && id[0] == 'e' && std::isdigit(static_cast<unsigned char>(id[1]))) {
            std::size_t p = 1;
            while (p < id.size() && std::isdigit(static_cast<unsigned char>(id[p]))) ++p;
            if (p != id.size()) throw ParseError(t.offset, "malformed variable '" + id + "'");
            int l = std::stoi(id.substr(1));
            expect(Token::Kind::LParen, "'(' after e" + std::to_string(l));
            const Token& inner = peek();
            if (inner.kind != Token::Kind::Ident) throw ParseError(inner.offset, "expected a block name");
            advance();
            expect(Token::Kind::RParen, "')'");
            const FlagShape& sh = shape_required();
            if (inner.text == "T") {
                if (l < 1 || l > sh.n())
                    throw ParseError(inner.offset, "e" + std::to_string(l) + "(T) is out of range");
                ref = {VarRef::Type::ET, 0, l, "e" + std::to_string(l) + "(T)"};
            } else {
                int j = 0;
                char kind = inner.text.empty() ? '?' : inner.text[0];
                if (!split_prefix_number(inner.text, kind, j) || (kind != 'X' && kind != 'Y'))
                    throw ParseError(inner.offset, "expected X<j>, Y<j> or T inside e" + std::to_string(l));
                if (j < 1 || j > sh.k())
                    throw ParseError(inner.offset, "block index " + std::to_string(j) + " out of range");
                int rank = kind == 'X' ? sh.r_at(j) : sh.delta(j);
                if (l < 1 || l > rank)
                    throw ParseError(t.offset, "unknown variable 'e" + std::to_string(l) + "(" + inner.text +
                                                   ")' (block rank " + std::to_string(rank) + ")");
                ref = {VarRef::Type::EVar, j, l,
                       "e" + std::to_string(l) + "(" + std::string(1, kind) + std::to_string(j) + ")"};
            }
        } else if ((id[0] == 'X' || id[0] == 'Y') && id.find('_') != std::string::npos) {
            auto us = id.find('_');
            std::string head = id.substr(0, us), tail = id.substr(us + 1);
            int j = 0, l = 0;
            if (!split_prefix_number(head, id[0], j)) throw ParseError(t.offset, "malformed variable '" + id + "'");
            try {
                l = std::stoi(tail);
            } catch (const std::exception&) {
                throw ParseError(t.offset, "malformed variable '" + id + "'");
            }
            const FlagShape& sh = shape_required();
            if (j < 1 || j > sh.k()) throw ParseError(t.offset, "block index " + std::to_string(j) + " out of range");
            int rank = id[0] == 'X' ? sh.r_at(j) : sh.delta(j);
            if (rank != 1 || l != 1)
                throw ParseError(t.offset, "'" + id + "' is only defined for rank-1 blocks (rank " +
                                               std::to_string(rank) + ")");
            ref = {VarRef::Type::EVar, j, 1, "e1(" + std::string(1, id[0]) + std::to_string(j) + ")"};
        } else {
            throw ParseError(t.offset, "unknown variable '" + id + "'");
        }

        ExprNode n{ExprNode::Kind::Var, Int(0), std::move(ref), 0, nullptr, nullptr};
        return make(std::move(n));
    }

    std::vector<Token> toks_;
    const ExprContext& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& text, const ExprContext& ctx) {
    return Parser(lex(text), ctx).run();
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprNode::Kind::Int:
            return a->value == b->value;
        case ExprNode::Kind::Var:
            return a->var.canonical == b->var.canonical;
        case ExprNode::Kind::Neg:
            return expr_equal(a->lhs, b->lhs);
        case ExprNode::Kind::Pow:
            return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
        default:
            return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

}  // namespace qkw
