// Copyright 2026 The qphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Concrete syntax for `.qph` source files.
//
//   file    := def* expr
//   def     := "def" IDENT "=" expr
//   expr    := tens (";" tens)*
//   tens    := post ("x" post)*
//   post    := atom ("^" exponent)?
//   atom    := "ph" "(" angle ")" | "id" "(" INT ")" | "id"
//            | "if" pattern "{" expr "}" | "inv" "(" expr ")"
//            | IDENT | "(" expr ")"
//   pattern := pcomp ("x" pcomp)*
//   pcomp   := patom ("." patom)*
//   patom   := "|0>" | "|1>" | "|+>" | "|->" | atom | "(" pattern ")"
//   angle   := REAL | ["-"] [REAL "*"] "pi" ["/" INT]
//   exponent:= ["-"] (REAL | INT "/" INT)
//
// All binary operators are left-associative. Inside a pattern a
// parenthesised group is read as a pattern when it parses as one, and as a
// term otherwise. `//` starts a line comment.
//
// Parsing yields a surface tree with names, `inv` and `^` still present;
// elaborate() resolves names and applies the meta-operations.

#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qphase/ast.hpp"
#include "qphase/metaops.hpp"
#include "qphase/typecheck.hpp"

namespace qphase {

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

inline std::string to_string(const SourcePos& p) { return std::to_string(p.line) + ":" + std::to_string(p.column); }

/// Lexical or syntax error.
class ParseError : public std::runtime_error {
   public:
    ParseError(SourcePos pos, const std::string& what)
        : std::runtime_error(to_string(pos) + ": " + what), pos_(pos) {}
    SourcePos pos() const { return pos_; }

   private:
    SourcePos pos_;
};

/// Name resolution, meta-operation, or typing failure during elaboration.
class ElaborationError : public std::runtime_error {
   public:
    ElaborationError(SourcePos pos, const std::string& what)
        : std::runtime_error(to_string(pos) + ": " + what), pos_(pos) {}
    SourcePos pos() const { return pos_; }

   private:
    SourcePos pos_;
};

namespace syntax {

struct Expr;
struct Pat;
using ExprPtr = std::shared_ptr<const Expr>;
using PatPtr = std::shared_ptr<const Pat>;

struct Phase {
    double radians;
};
struct Id {
    std::size_t qubits;
};
struct Seq {
    ExprPtr first, second;
};
struct Tensor {
    ExprPtr left, right;
};
struct If {
    PatPtr pattern;
    ExprPtr body;
};
struct Inv {
    ExprPtr operand;
};
struct Pow {
    ExprPtr base;
    double exponent;
};
struct Name {
    std::string name;
};

struct Expr {
    std::variant<Phase, Id, Seq, Tensor, If, Inv, Pow, Name> value;
    SourcePos pos;
};

struct KetPat {
    Basis basis;
};
struct TermPat {
    ExprPtr term;
};
struct ComposePat {
    PatPtr outer, inner;
};
struct TensorPat {
    PatPtr left, right;
};

struct Pat {
    std::variant<KetPat, TermPat, ComposePat, TensorPat> value;
    SourcePos pos;
};

}  // namespace syntax

struct Definition {
    std::string name;
    syntax::ExprPtr body;
    SourcePos pos;
};

struct SourceFile {
    std::vector<Definition> defs;
    syntax::ExprPtr main;  // null for a definitions-only library
};

namespace detail {

enum class Tok {
    Ident,
    Int,
    Real,
    Def,
    Ph,
    Id,
    If,
    Inv,
    Pi,
    X,
    Ket0,
    Ket1,
    KetPlus,
    KetMinus,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Semi,
    Dot,
    Caret,
    Equals,
    Slash,
    Star,
    Minus,
    End,
};

inline const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Ident:
            return "identifier";
        case Tok::Int:
            return "integer";
        case Tok::Real:
            return "number";
        case Tok::Def:
            return "'def'";
        case Tok::Ph:
            return "'ph'";
        case Tok::Id:
            return "'id'";
        case Tok::If:
            return "'if'";
        case Tok::Inv:
            return "'inv'";
        case Tok::Pi:
            return "'pi'";
        case Tok::X:
            return "'x'";
        case Tok::Ket0:
            return "'|0>'";
        case Tok::Ket1:
            return "'|1>'";
        case Tok::KetPlus:
            return "'|+>'";
        case Tok::KetMinus:
            return "'|->'";
        case Tok::LParen:
            return "'('";
        case Tok::RParen:
            return "')'";
        case Tok::LBrace:
            return "'{'";
        case Tok::RBrace:
            return "'}'";
        case Tok::Semi:
            return "';'";
        case Tok::Dot:
            return "'.'";
        case Tok::Caret:
            return "'^'";
        case Tok::Equals:
            return "'='";
        case Tok::Slash:
            return "'/'";
        case Tok::Star:
            return "'*'";
        case Tok::Minus:
            return "'-'";
        case Tok::End:
            return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

inline std::vector<Token> lex(const std::string& src) {
    static const std::map<std::string, Tok> keywords = {
        {"def", Tok::Def}, {"ph", Tok::Ph}, {"id", Tok::Id}, {"if", Tok::If},
        {"inv", Tok::Inv}, {"pi", Tok::Pi}, {"x", Tok::X},
    };
    std::vector<Token> out;
    std::size_t i = 0;
    SourcePos pos;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
            if (src[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') {
                advance(1);
            }
            continue;
        }
        SourcePos start = pos;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                ++j;
            }
            std::string word = src.substr(i, j - i);
            auto kw = keywords.find(word);
            out.push_back({kw == keywords.end() ? Tok::Ident : kw->second, word, start});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            bool real = false;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                real = true;
                ++j;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                    ++j;
                }
            }
            if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) {
                    ++k;
                }
                if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
                    real = true;
                    j = k;
                    while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                        ++j;
                    }
                }
            }
            out.push_back({real ? Tok::Real : Tok::Int, src.substr(i, j - i), start});
            advance(j - i);
            continue;
        }
        if (c == '|') {
            if (i + 2 < src.size() && src[i + 2] == '>') {
                char k = src[i + 1];
                Tok t = k == '0' ? Tok::Ket0 : k == '1' ? Tok::Ket1 : k == '+' ? Tok::KetPlus : k == '-' ? Tok::KetMinus : Tok::End;
                if (t != Tok::End) {
                    out.push_back({t, src.substr(i, 3), start});
                    advance(3);
                    continue;
                }
            }
            throw ParseError(start, "malformed ket '" + src.substr(i, std::min<std::size_t>(3, src.size() - i)) + "'");
        }
        Tok t;
        switch (c) {
            case '(':
                t = Tok::LParen;
                break;
            case ')':
                t = Tok::RParen;
                break;
            case '{':
                t = Tok::LBrace;
                break;
            case '}':
                t = Tok::RBrace;
                break;
            case ';':
                t = Tok::Semi;
                break;
            case '.':
                t = Tok::Dot;
                break;
            case '^':
                t = Tok::Caret;
                break;
            case '=':
                t = Tok::Equals;
                break;
            case '/':
                t = Tok::Slash;
                break;
            case '*':
                t = Tok::Star;
                break;
            case '-':
                t = Tok::Minus;
                break;
            default:
                throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
        out.push_back({t, std::string(1, c), start});
        advance(1);
    }
    out.push_back({Tok::End, "", pos});
    return out;
}

class Parser {
   public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    SourceFile file(bool require_main) {
        SourceFile f;
        std::set<std::string> names;
        while (peek().kind == Tok::Def) {
            next();
            const Token& name = expect(Tok::Ident);
            if (!names.insert(name.text).second) {
                throw ParseError(name.pos, "duplicate definition '" + name.text + "'");
            }
            expect(Tok::Equals);
            auto body = expr();
            f.defs.push_back({name.text, std::move(body), name.pos});
        }
        if (peek().kind != Tok::End || require_main) {
            f.main = expr();
        }
        if (peek().kind != Tok::End) {
            fail("end of input");
        }
        return f;
    }

    syntax::PatPtr pattern_only() {
        auto p = pattern();
        if (peek().kind != Tok::End) {
            fail("end of input");
        }
        return p;
    }

   private:
    using ExprPtr = syntax::ExprPtr;
    using PatPtr = syntax::PatPtr;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool accept(Tok t) {
        if (peek().kind == t) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.pos, "expected " + expected + ", found " + found);
    }
    const Token& expect(Tok t) {
        if (peek().kind != t) {
            fail(tok_name(t));
        }
        return next();
    }

    static ExprPtr mk(syntax::Expr e) { return std::make_shared<const syntax::Expr>(std::move(e)); }
    static PatPtr mkp(syntax::Pat p) { return std::make_shared<const syntax::Pat>(std::move(p)); }

    ExprPtr expr() {
        auto lhs = tens();
        while (peek().kind == Tok::Semi) {
            SourcePos p = next().pos;
            auto rhs = tens();
            lhs = mk({syntax::Seq{lhs, rhs}, p});
        }
        return lhs;
    }

    ExprPtr tens() {
        auto lhs = post();
        while (peek().kind == Tok::X) {
            SourcePos p = next().pos;
            auto rhs = post();
            lhs = mk({syntax::Tensor{lhs, rhs}, p});
        }
        return lhs;
    }

    ExprPtr post() {
        auto base = atom();
        if (peek().kind == Tok::Caret) {
            SourcePos p = next().pos;
            double e = exponent();
            return mk({syntax::Pow{base, e}, p});
        }
        return base;
    }

    double number() {
        const Token& t = peek();
        if (t.kind != Tok::Int && t.kind != Tok::Real) {
            fail("a number");
        }
        next();
        double v = std::strtod(t.text.c_str(), nullptr);
        if (!std::isfinite(v)) {
            throw ParseError(t.pos, "number out of range '" + t.text + "'");
        }
        return v;
    }

    double exponent() {
        bool neg = accept(Tok::Minus);
        double v;
        if (peek().kind == Tok::Int && toks_[pos_ + 1].kind == Tok::Slash) {
            double num = number();
            next();
            const Token& den_tok = expect(Tok::Int);
            double den = std::strtod(den_tok.text.c_str(), nullptr);
            if (den == 0.0) {
                throw ParseError(den_tok.pos, "zero denominator in exponent");
            }
            v = num / den;
        } else {
            v = number();
        }
        return neg ? -v : v;
    }

    double angle() {
        bool neg = accept(Tok::Minus);
        double v;
        if (peek().kind == Tok::Pi || ((peek().kind == Tok::Int || peek().kind == Tok::Real) &&
                                       toks_[pos_ + 1].kind == Tok::Star)) {
            double coef = 1.0;
            if (peek().kind != Tok::Pi) {
                coef = number();
                expect(Tok::Star);
            }
            expect(Tok::Pi);
            double den = 1.0;
            if (accept(Tok::Slash)) {
                const Token& d = expect(Tok::Int);
                den = std::strtod(d.text.c_str(), nullptr);
                if (den == 0.0) {
                    throw ParseError(d.pos, "zero denominator in angle");
                }
            }
            v = std::numbers::pi * coef / den;
        } else {
            v = number();
        }
        return neg ? -v : v;
    }

    ExprPtr atom() {
        const Token& t = peek();
        SourcePos p = t.pos;
        switch (t.kind) {
            case Tok::Ph: {
                next();
                expect(Tok::LParen);
                double a = angle();
                expect(Tok::RParen);
                return mk({syntax::Phase{a}, p});
            }
            case Tok::Id: {
                next();
                if (accept(Tok::LParen)) {
                    const Token& n = expect(Tok::Int);
                    char* end = nullptr;
                    unsigned long long q = std::strtoull(n.text.c_str(), &end, 10);
                    if (q > 4096) {
                        throw ParseError(n.pos, "identity width too large");
                    }
                    expect(Tok::RParen);
                    return mk({syntax::Id{static_cast<std::size_t>(q)}, p});
                }
                return mk({syntax::Id{1}, p});
            }
            case Tok::If: {
                next();
                auto pat = pattern();
                expect(Tok::LBrace);
                auto body = expr();
                expect(Tok::RBrace);
                return mk({syntax::If{pat, body}, p});
            }
            case Tok::Inv: {
                next();
                expect(Tok::LParen);
                auto e = expr();
                expect(Tok::RParen);
                return mk({syntax::Inv{e}, p});
            }
            case Tok::Ident:
                next();
                return mk({syntax::Name{t.text}, p});
            case Tok::LParen: {
                next();
                auto e = expr();
                expect(Tok::RParen);
                return e;
            }
            default:
                fail("a term");
        }
    }

    PatPtr pattern() {
        auto lhs = pcomp();
        while (peek().kind == Tok::X) {
            SourcePos p = next().pos;
            auto rhs = pcomp();
            lhs = mkp({syntax::TensorPat{lhs, rhs}, p});
        }
        return lhs;
    }

    PatPtr pcomp() {
        auto lhs = patom();
        while (peek().kind == Tok::Dot) {
            SourcePos p = next().pos;
            auto rhs = patom();
            lhs = mkp({syntax::ComposePat{lhs, rhs}, p});
        }
        return lhs;
    }

    PatPtr patom() {
        const Token& t = peek();
        SourcePos p = t.pos;
        switch (t.kind) {
            case Tok::Ket0:
                next();
                return mkp({syntax::KetPat{Basis::Zero}, p});
            case Tok::Ket1:
                next();
                return mkp({syntax::KetPat{Basis::One}, p});
            case Tok::KetPlus:
                next();
                return mkp({syntax::KetPat{Basis::Plus}, p});
            case Tok::KetMinus:
                next();
                return mkp({syntax::KetPat{Basis::Minus}, p});
            case Tok::LParen: {
                std::size_t saved = pos_;
                try {
                    next();
                    auto inner = pattern();
                    expect(Tok::RParen);
                    return inner;
                } catch (const ParseError&) {
                    pos_ = saved;
                }
                return mkp({syntax::TermPat{atom()}, p});
            }
            case Tok::Ph:
            case Tok::Id:
            case Tok::If:
            case Tok::Inv:
            case Tok::Ident:
                return mkp({syntax::TermPat{atom()}, p});
            default:
                fail("a pattern");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a complete source file (definitions followed by a main term).
inline SourceFile parse_file(const std::string& text) {
    return detail::Parser(detail::lex(text)).file(true);
}

/// Parses a definitions-only library such as the prelude.
inline SourceFile parse_library(const std::string& text) {
    return detail::Parser(detail::lex(text)).file(false);
}

/// Parses a standalone pattern, e.g. "S . |+> x |0>".
inline syntax::PatPtr parse_pattern(const std::string& text) {
    return detail::Parser(detail::lex(text)).pattern_only();
}

namespace detail {

using Env = std::map<std::string, Term>;

Term elab_expr(const syntax::Expr& e, const Env& env);

inline Pattern elab_pat(const syntax::Pat& p, const Env& env) {
    return std::visit(detail::overloaded{
                          [](const syntax::KetPat& k) { return Pattern::ket(k.basis); },
                          [&](const syntax::TermPat& t) { return Pattern::unitary(elab_expr(*t.term, env)); },
                          [&](const syntax::ComposePat& c) {
                              return Pattern::compose(elab_pat(*c.outer, env), elab_pat(*c.inner, env));
                          },
                          [&](const syntax::TensorPat& t) {
                              return Pattern::tensor(elab_pat(*t.left, env), elab_pat(*t.right, env));
                          },
                      },
                      p.value);
}

inline Term elab_expr(const syntax::Expr& e, const Env& env) {
    return std::visit(
        detail::overloaded{
            [](const syntax::Phase& x) { return Term::phase(Angle(x.radians)); },
            [](const syntax::Id& x) { return Term::identity(x.qubits); },
            [&](const syntax::Seq& x) { return Term::seq(elab_expr(*x.first, env), elab_expr(*x.second, env)); },
            [&](const syntax::Tensor& x) { return Term::tensor(elab_expr(*x.left, env), elab_expr(*x.right, env)); },
            [&](const syntax::If& x) { return Term::if_let(elab_pat(*x.pattern, env), elab_expr(*x.body, env)); },
            [&](const syntax::Inv& x) {
                Term t = elab_expr(*x.operand, env);
                try {
                    return invert(t);
                } catch (const TypeCheckError& err) {
                    throw ElaborationError(e.pos, std::string("inv of an ill-typed term: ") + err.what());
                }
            },
            [&](const syntax::Pow& x) {
                Term t = elab_expr(*x.base, env);
                try {
                    return exponentiate(t, x.exponent);
                } catch (const CompositionPresentError& err) {
                    throw ElaborationError(e.pos, err.what());
                } catch (const TypeCheckError& err) {
                    throw ElaborationError(e.pos, std::string("exponent of an ill-typed term: ") + err.what());
                }
            },
            [&](const syntax::Name& x) {
                auto it = env.find(x.name);
                if (it == env.end()) {
                    throw ElaborationError(e.pos, "unknown name '" + x.name + "'");
                }
                return it->second;
            },
        },
        e.value);
}

inline void elab_defs(const SourceFile& f, Env& env) {
    std::set<std::string> local;
    for (const auto& d : f.defs) {
        if (!local.insert(d.name).second) {
            throw ElaborationError(d.pos, "duplicate definition '" + d.name + "'");
        }
        env.insert_or_assign(d.name, elab_expr(*d.body, env));
    }
}

}  // namespace detail

/// Resolves names against the prelude then the file's own definitions (in
/// order; later definitions may shadow prelude names), desugars `inv` and
/// `^`, and returns the Ref-free main term.
inline Term elaborate(const SourceFile& file, const SourceFile& prelude) {
    if (!file.main) {
        throw ElaborationError({}, "source file has no main term");
    }
    detail::Env env;
    detail::elab_defs(prelude, env);
    detail::elab_defs(file, env);
    return detail::elab_expr(*file.main, env);
}

/// Elaborates a standalone pattern against the prelude's definitions.
inline Pattern elaborate_pattern(const syntax::Pat& pat, const SourceFile& prelude) {
    detail::Env env;
    detail::elab_defs(prelude, env);
    return detail::elab_pat(pat, env);
}

/// Elaborates every definition of a library, in order.
inline std::vector<std::pair<std::string, Term>> elaborate_definitions(const SourceFile& lib) {
    detail::Env env;
    std::vector<std::pair<std::string, Term>> out;
    for (const auto& d : lib.defs) {
        Term t = detail::elab_expr(*d.body, env);
        env.insert_or_assign(d.name, t);
        out.emplace_back(d.name, t);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pretty printing

namespace detail {

inline std::string format_angle(const Angle& a) {
    const double theta = a.radians();
    // Prefer a rational multiple of pi when it reads back bit-exactly.
    for (std::int64_t den = 1; den <= 64; ++den) {
        double num_f = std::round(theta * static_cast<double>(den) / std::numbers::pi);
        if (num_f == 0.0 || std::abs(num_f) > 1024.0) {
            continue;
        }
        auto num = static_cast<std::int64_t>(num_f);
        double coef = std::abs(num_f);
        double back = std::numbers::pi * coef / static_cast<double>(den);
        if (num < 0) {
            back = -back;
        }
        if (Angle(back) == a) {
            std::string s = num < 0 ? "-" : "";
            if (coef != 1.0) {
                s += std::to_string(static_cast<std::int64_t>(coef)) + "*";
            }
            s += "pi";
            if (den != 1) {
                s += "/" + std::to_string(den);
            }
            return s;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", theta);
    return buf;
}

enum class Prec { Seq = 0, Tensor = 1, Atom = 2 };

std::string pretty_term(const Term& t, Prec ctx);
std::string pretty_pattern(const Pattern& p, Prec ctx);

inline std::string paren_if(bool cond, std::string s) { return cond ? "(" + s + ")" : s; }

inline std::string pretty_term(const Term& t, Prec ctx) {
    return t.visit(detail::overloaded{
        [](const term::Phase& x) { return "ph(" + format_angle(x.theta) + ")"; },
        [](const term::Identity& x) { return "id(" + std::to_string(x.qubits) + ")"; },
        [&](const term::Seq& x) {
            return paren_if(ctx > Prec::Seq,
                            pretty_term(x.first, Prec::Seq) + "; " + pretty_term(x.second, Prec::Tensor));
        },
        [&](const term::Tensor& x) {
            return paren_if(ctx > Prec::Tensor,
                            pretty_term(x.left, Prec::Tensor) + " x " + pretty_term(x.right, Prec::Atom));
        },
        [](const term::IfLet& x) {
            return "if " + pretty_pattern(x.pattern, Prec::Seq) + " { " + pretty_term(x.body, Prec::Seq) + " }";
        },
    });
}

// Pattern precedence reuses the enum: Seq = tensor level, Tensor = compose
// level, Atom = atom level.
inline std::string pretty_pattern(const Pattern& p, Prec ctx) {
    return p.visit(detail::overloaded{
        [](const pattern::Ket& k) -> std::string {
            switch (k.basis) {
                case Basis::Zero:
                    return "|0>";
                case Basis::One:
                    return "|1>";
                case Basis::Plus:
                    return "|+>";
                case Basis::Minus:
                    return "|->";
            }
            return "?";
        },
        [](const pattern::Unitary& u) -> std::string {
            return u.term.visit(detail::overloaded{
                [&](const term::Seq&) { return "(" + pretty_term(u.term, Prec::Seq) + ")"; },
                // A parenthesised tensor would read back as a pattern tensor;
                // inv(inv(t)) is the same term and stays on the term side.
                [&](const term::Tensor&) { return "inv(inv(" + pretty_term(u.term, Prec::Seq) + "))"; },
                [&](const auto&) { return pretty_term(u.term, Prec::Atom); },
            });
        },
        [&](const pattern::Compose& c) {
            return paren_if(ctx > Prec::Tensor,
                            pretty_pattern(c.outer, Prec::Tensor) + " . " + pretty_pattern(c.inner, Prec::Atom));
        },
        [&](const pattern::Tensor& t) {
            return paren_if(ctx > Prec::Seq,
                            pretty_pattern(t.left, Prec::Seq) + " x " + pretty_pattern(t.right, Prec::Tensor));
        },
    });
}

}  // namespace detail

/// Source text that parses and elaborates back to a structurally equal term.
inline std::string pretty(const Term& t) { return detail::pretty_term(t, detail::Prec::Seq); }

inline std::string pretty(const Pattern& p) { return detail::pretty_pattern(p, detail::Prec::Seq); }

}  // namespace qphase
