#pragma once

#include "dgkernel/dsl/ast.hpp"

namespace dgk {
namespace dsl {

enum class TokKind {
    identifier,
    integer,
    string,
    flag, // --json, --text
    punct,
    end,
};

struct Token {
    TokKind kind = TokKind::end;
    std::string text;
    long long value = 0; // for integers
    Pos pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text);
    const Token& peek() const { return tokens_[index_]; }
    const Token& peek2() const { return tokens_[std::min(index_ + 1, tokens_.size() - 1)]; }
    Token next() { return tokens_[index_ == tokens_.size() - 1 ? index_ : index_++]; }
    bool at_end() const { return tokens_[index_].kind == TokKind::end; }

private:
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

} // namespace dsl
} // namespace dgk
