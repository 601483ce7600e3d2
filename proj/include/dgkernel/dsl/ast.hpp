#pragma once

#include <string>
#include <variant>
#include <vector>

namespace dgk {
namespace dsl {

struct Pos {
    int line = 1;
    int col = 1;
};

struct ScalarLit {
    long long num = 0;
    long long den = 1;
    bool operator==(const ScalarLit& o) const { return num == o.num && den == o.den; }
};

struct TermLit {
    int sign = 1; // +1 or -1
    ScalarLit coeff{1, 1};
    std::string basis;
    bool operator==(const TermLit& o) const
    {
        return sign == o.sign && coeff == o.coeff && basis == o.basis;
    }
};

struct LinCombLit {
    std::vector<TermLit> terms; // empty = 0
    bool operator==(const LinCombLit& o) const { return terms == o.terms; }
};

struct ArgNode;

struct ExprNode {
    std::string name; // callee or plain reference
    bool is_call = false;
    std::vector<ArgNode> args;
    Pos pos;
    bool operator==(const ExprNode& o) const;
};

struct ArgNode {
    enum class Kind { expr, integer, string, list, lincomb };
    Kind kind = Kind::expr;
    ExprNode expr;
    long long int_val = 0;
    std::string str_val;
    std::vector<std::string> list_val;
    LinCombLit lincomb;
    Pos pos;
    bool operator==(const ArgNode& o) const;
};

struct FieldDecl {
    std::string name;
    bool rationals = true;
    long long p = 0;
    Pos pos;
    bool operator==(const FieldDecl& o) const
    {
        return name == o.name && rationals == o.rationals && p == o.p;
    }
};

struct BasisDecl {
    std::string name;
    int degree = 0;
    bool operator==(const BasisDecl& o) const { return name == o.name && degree == o.degree; }
};

struct PairRule { // mul a*b = ... | act a*m = ...
    std::string left, right;
    LinCombLit rhs;
    Pos pos;
    bool operator==(const PairRule& o) const
    {
        return left == o.left && right == o.right && rhs == o.rhs;
    }
};

struct UnaryRule { // d a = ... | delta m = ...
    std::string basis;
    LinCombLit rhs;
    Pos pos;
    bool operator==(const UnaryRule& o) const { return basis == o.basis && rhs == o.rhs; }
};

struct AlgebraDecl {
    std::string name, field;
    std::vector<BasisDecl> basis;
    std::string unit;
    bool default_zero = false;
    std::vector<PairRule> mul;
    std::vector<UnaryRule> diff;
    Pos pos;
    bool operator==(const AlgebraDecl& o) const
    {
        return name == o.name && field == o.field && basis == o.basis && unit == o.unit &&
               default_zero == o.default_zero && mul == o.mul && diff == o.diff;
    }
};

struct LaurentTermLit {
    int sign = 1;
    ScalarLit coeff{1, 1};
    std::string basis;
    int power = 0;
    bool operator==(const LaurentTermLit& o) const
    {
        return sign == o.sign && coeff == o.coeff && basis == o.basis && power == o.power;
    }
};

struct LaurentDecl {
    std::string name, field, r0;
    std::vector<std::vector<ScalarLit>> sigma;
    int degx = 1;
    std::vector<LaurentTermLit> dx; // empty = 0
    Pos pos;
    bool operator==(const LaurentDecl& o) const
    {
        return name == o.name && field == o.field && r0 == o.r0 && sigma == o.sigma &&
               degx == o.degx && dx == o.dx;
    }
};

struct ModuleDecl {
    std::string name, algebra;
    std::vector<BasisDecl> basis;
    bool default_zero = false;
    std::vector<PairRule> action;
    std::vector<UnaryRule> delta;
    Pos pos;
    bool operator==(const ModuleDecl& o) const
    {
        return name == o.name && algebra == o.algebra && basis == o.basis &&
               default_zero == o.default_zero && action == o.action && delta == o.delta;
    }
};

struct LetDecl {
    std::string name;
    ExprNode expr;
    Pos pos;
    bool operator==(const LetDecl& o) const { return name == o.name && expr == o.expr; }
};

struct RunCmd {
    std::string op;
    std::vector<ArgNode> args;
    bool json = false;
    Pos pos;
    bool operator==(const RunCmd& o) const
    {
        return op == o.op && args == o.args && json == o.json;
    }
};

using Stmt = std::variant<FieldDecl, AlgebraDecl, LaurentDecl, ModuleDecl, LetDecl, RunCmd>;

struct SpecFile {
    std::vector<Stmt> stmts;
    bool operator==(const SpecFile& o) const { return stmts == o.stmts; }
};

/// Parse error with a precise location.
struct ParseError : std::runtime_error {
    Pos pos;
    ParseError(const Pos& p, const std::string& msg)
        : std::runtime_error("line " + std::to_string(p.line) + ", col " + std::to_string(p.col) +
                             ": " + msg),
          pos(p)
    {
    }
};

} // namespace dsl
} // namespace dgk
