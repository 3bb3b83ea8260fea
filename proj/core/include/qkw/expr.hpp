// qkw/expr.hpp -- the CLI expression grammar.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' ('-')? nat)?
//   atom   := int | var | '(' expr ')' | '-' atom
//   var    := T<i> | q<j> | e<l>(X<j>) | e<l>(Y<j>) | e<l>(T) | X<j>_1 | Y<j>_1
//
// The underscore forms alias e1 of rank-1 blocks. References are validated
// against the active shape at parse time; negative exponents are reserved
// for invertible scalars (the equivariant parameters).
#pragma once

#include <memory>
#include <string>

#include "qkw/flag_shape.hpp"
#include "qkw/mpoly.hpp"
#include "qkw/whitney.hpp"

namespace qkw {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct VarRef {
    enum class Type { T, Q, EVar, ET };
    Type type = Type::T;
    int block = 0;  // j for Q/EVar
    int index = 0;  // i for T, l for EVar/ET
    std::string canonical;
};

struct ExprNode {
    enum class Kind { Int, Var, Neg, Add, Sub, Mul, Pow };
    Kind kind;
    Int value;        // Int payload
    VarRef var;       // Var payload
    int exponent = 0; // Pow payload
    ExprPtr lhs, rhs;
};

struct ExprContext {
    const FlagShape* shape = nullptr;
    bool allow_q = false;
};

// Parse and validate references against the context.
ExprPtr parse_expr(const std::string& text, const ExprContext& ctx);

// Structural equality of ASTs.
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Evaluate onto a presentation table (q-extended when the expression uses
// quantum parameters). T_i references become coefficient scalars.
template <class K>
K t_scalar(int n, int i);

template <>
inline Rat t_scalar<Rat>(int, int) {
    return Rat(1);  // nonequivariant limit T_i = 1
}

template <>
inline RatFun t_scalar<RatFun>(int n, int i) {
    return RatFun::t_var(n, i - 1);
}

template <class K>
K int_to_scalar(const Int& v);

template <>
inline Rat int_to_scalar<Rat>(const Int& v) {
    return Rat(v);
}

template <>
inline RatFun int_to_scalar<RatFun>(const Int& v) {
    ZPoly p = ZPoly::constant(0, v);
    return RatFun::from_zpoly(std::move(p));
}

template <class K>
MPoly<K> eval_expr(const ExprPtr& node, const FlagShape& shape, const VarTable::Ptr& table) {
    using Kind = ExprNode::Kind;
    switch (node->kind) {
        case Kind::Int:
            return MPoly<K>::constant(table, int_to_scalar<K>(node->value));
        case Kind::Var: {
            const VarRef& r = node->var;
            switch (r.type) {
                case VarRef::Type::T:
                    return MPoly<K>::constant(table, t_scalar<K>(shape.n(), r.index));
                case VarRef::Type::ET:
                    return MPoly<K>::constant(table, e_T_scalar<K>(shape.n(), r.index));
                case VarRef::Type::Q: {
                    int idx = table->find("q" + std::to_string(r.block));
                    if (idx < 0) throw QVariablePresent("quantum parameter '" + r.canonical +
                                                        "' is not available in this context");
                    return MPoly<K>::var(table, idx);
                }
                case VarRef::Type::EVar: {
                    int idx = table->find(r.canonical);
                    if (idx < 0) throw DomainError("variable '" + r.canonical + "' missing from table");
                    return MPoly<K>::var(table, idx);
                }
            }
            throw DomainError("unreachable variable kind");
        }
        case Kind::Neg:
            return -eval_expr<K>(node->lhs, shape, table);
        case Kind::Add:
            return eval_expr<K>(node->lhs, shape, table) + eval_expr<K>(node->rhs, shape, table);
        case Kind::Sub:
            return eval_expr<K>(node->lhs, shape, table) - eval_expr<K>(node->rhs, shape, table);
        case Kind::Mul:
            return eval_expr<K>(node->lhs, shape, table) * eval_expr<K>(node->rhs, shape, table);
        case Kind::Pow: {
            MPoly<K> base = eval_expr<K>(node->lhs, shape, table);
            if (node->exponent >= 0) return base.pow(node->exponent);
            if (!base.is_constant())
                throw DomainError("negative powers are only defined for invertible scalars");
            K inv = FOps<K>::inv(base.constant_value());
            MPoly<K> p = MPoly<K>::constant(table, std::move(inv));
            return p.pow(-node->exponent);
        }
    }
    throw DomainError("unreachable expression kind");
}

}  // namespace qkw
