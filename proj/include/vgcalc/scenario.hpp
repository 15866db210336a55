#pragma once

// The scenario language: a small line-oriented DSL for declaring polynomials,
// strata, pages, differentials and long-exact-sequence ledgers, running them
// in order and checking assertions. Scenario files use the .vgl extension;
// `#` starts a comment.
//
//   let NAME = EXPR;
//   stratum NAME { base = EXPR; simplex = INT; rank = INT; }
//   page NAME homological|cohomological { col INT = EXPR; ... }
//   page NAME cohomological { base = EXPR; fiber = EXPR; }
//   diff PAGENAME r=INT at (p,q) image = EXPR;
//   les NAME mode=bm|gysin { A = EXPR|?; X = EXPR|?; U = EXPR|?;
//                            connect k=INT image = EXPR; ... }
//   dual NAME = alexander(EXPR, M=INT);
//   divide NAME = EXPR / EXPR;
//   assert EXPR == EXPR;
//   emit poly|table NAME;
//
// Expressions are built from s[parts], L, t, integers, + - * ^ ( ), names of
// earlier bindings, and the calls coh(ID), bm(ID), bconf(K, ID), total(PAGE),
// cone(E), betti(E), echar(E), twist(E, M), rev(E). Space ids: pt, A(n),
// Gm, P(n), Gr(k,N), F2P1, F2P1alt, F2P2, GL3, PGL3.
//
// In a bm-mode les block, `connect k=K` declares the image of the connecting
// map out of degree K of U (landing in degree K-1 of A); in gysin mode, out
// of degree K of X (landing in the twisted U term at degree K-1).

#include "vgcalc/catalog.hpp"
#include "vgcalc/spectral.hpp"
#include "vgcalc/strata.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <variant>

namespace vgcalc {

struct ParseError : CalcError {
    int line, col;
    ParseError(int line_, int col_, const std::string& msg)
        : CalcError(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

namespace dsl {

// --------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Int, Sym, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    i64 value = 0;
    int line = 1, col = 1;
};

inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto peek = [&]() { return i < src.size() ? src[i] : '\0'; };
    auto advance = [&]() {
        char c = src[i++];
        if (c == '\n') { ++line; col = 1; } else { ++col; }
        return c;
    };
    while (i < src.size()) {
        char c = peek();
        if (c == '#') {
            while (i < src.size() && peek() != '\n') advance();
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance();
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                s += advance();
            t.kind = Tok::Ident;
            t.text = s;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(peek())))
                s += advance();
            t.kind = Tok::Int;
            t.text = s;
            try {
                t.value = std::stoll(s);
            } catch (const std::out_of_range&) {
                throw ParseError(t.line, t.col, "integer literal out of range");
            }
        } else {
            advance();
            t.kind = Tok::Sym;
            if (c == '=' && peek() == '=') {
                advance();
                t.text = "==";
            } else {
                const std::string singles = "+-*/^()[]{}=;,?";
                if (singles.find(c) == std::string::npos)
                    throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
                t.text = std::string(1, c);
            }
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// --------------------------------------------------------------------------
// AST

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
    enum class Kind {
        Num,       // value
        Irrep,     // parts
        LSym,
        TSym,
        Name,      // text
        Add, Sub, Mul, Neg, Pow,   // kids (Pow: kids[0], value = exponent)
        CohSpace, BmSpace,         // space
        BConf,     // value = k, space
        Total,     // text = page name
        Cone, Betti, Echar, Rev,   // kids[0]
        Twist,     // kids[0], value = m
    };
    Kind kind;
    i64 value = 0;
    std::string text;
    std::vector<int> parts;
    SpaceId space;
    std::vector<ExprPtr> kids;
    int line = 1, col = 1;
};

struct LetStmt { std::string name; ExprPtr expr; };
struct StratumStmt { std::string name; ExprPtr base; int simplex = 0; int rank = 0; };
struct PageStmt {
    std::string name;
    Variance variance = Variance::homological;
    std::vector<std::pair<int, ExprPtr>> cols;
    ExprPtr product_base, product_fiber;  // set for the outer-product form
};
struct DiffStmt { std::string page; int r = 1; PagePos pos; ExprPtr image; };
struct LesStmt {
    std::string name;
    LesMode mode = LesMode::bm;
    ExprPtr a, x, u;  // null = '?'
    bool a_set = false, x_set = false, u_set = false;
    std::vector<std::pair<int, ExprPtr>> connect;
};
struct DualStmt { std::string name; ExprPtr arg; int m = 1; };
struct DivideStmt { std::string name; ExprPtr num, den; };
struct AssertStmt { ExprPtr lhs, rhs; };
struct EmitStmt { bool table = false; std::string name; };

struct Statement {
    std::variant<LetStmt, StratumStmt, PageStmt, DiffStmt, LesStmt, DualStmt, DivideStmt,
                 AssertStmt, EmitStmt>
        node;
    int line = 1;
    std::string summary;  // e.g. "let eq3"
};

}  // namespace dsl

struct Scenario {
    std::string source_name;
    std::vector<dsl::Statement> statements;
};

namespace dsl {

// --------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    Scenario parse(const std::string& source_name) {
        Scenario sc;
        sc.source_name = source_name;
        while (!at_end())
            sc.statements.push_back(statement());
        return sc;
    }

    // Parses a single expression with no names in scope.
    ExprPtr parse_expression() {
        ExprPtr e = expr();
        if (!at_end()) fail("trailing input after expression");
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    // name -> true for pages, false for polynomials
    std::map<std::string, bool> defined_;

    static const std::set<std::string>& keywords() {
        static const std::set<std::string> kw = {
            "let",  "stratum", "page",   "diff",  "les",    "dual",   "divide", "assert",
            "emit", "homological", "cohomological", "mode",  "at",     "image",  "col",
            "base", "fiber", "simplex", "rank",  "connect", "k",      "r",      "M",
            "bm",   "gysin", "total",   "cone",  "betti",   "echar",  "twist",  "rev",
            "coh",  "bconf", "Bconf", "alexander", "poly", "table", "L",      "t",
            "s",    "A",     "X",     "U"};
        return kw;
    }

    const Token& cur() const { return toks_[pos_]; }
    bool at_end() const { return cur().kind == Tok::End; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(cur().line, cur().col, msg);
    }

    Token take() { return toks_[pos_++]; }

    bool is_sym(const char* s) const { return cur().kind == Tok::Sym && cur().text == s; }
    bool is_kw(const char* s) const { return cur().kind == Tok::Ident && cur().text == s; }

    void expect_sym(const char* s) {
        if (!is_sym(s)) fail(std::string("expected '") + s + "'");
        take();
    }
    void expect_kw(const char* s) {
        if (!is_kw(s)) fail(std::string("expected '") + s + "'");
        take();
    }

    std::string fresh_name() {
        if (cur().kind != Tok::Ident) fail("expected a name");
        if (keywords().count(cur().text)) fail("'" + cur().text + "' is a reserved word");
        if (defined_.count(cur().text)) fail("'" + cur().text + "' is already defined");
        return take().text;
    }

    int integer() {
        bool neg = false;
        if (is_sym("-")) { take(); neg = true; }
        if (cur().kind != Tok::Int) fail("expected an integer");
        i64 v = take().value;
        return static_cast<int>(neg ? -v : v);
    }

    ExprPtr make(Expr::Kind kind) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->line = cur().line;
        e->col = cur().col;
        return e;
    }

    // expr := term (('+'|'-') term)*
    ExprPtr expr() {
        ExprPtr e = term();
        while (is_sym("+") || is_sym("-")) {
            auto node = make(cur().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub);
            take();
            node->kids = {e, term()};
            e = node;
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (is_sym("*")) {
            auto node = make(Expr::Kind::Mul);
            take();
            node->kids = {e, factor()};
            e = node;
        }
        return e;
    }

    ExprPtr factor() {
        if (is_sym("-")) {
            auto node = make(Expr::Kind::Neg);
            take();
            node->kids = {factor()};
            return node;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (is_sym("^")) {
            auto node = make(Expr::Kind::Pow);
            take();
            node->value = integer();
            node->kids = {base};
            return node;
        }
        return base;
    }

    SpaceId space_id() {
        if (cur().kind != Tok::Ident) fail("expected a space id");
        const Token t = take();
        const std::string& s = t.text;
        auto args1 = [&]() {
            expect_sym("(");
            int v = integer();
            expect_sym(")");
            return v;
        };
        if (s == "pt") return space_point();
        if (s == "A") return space_affine(args1());
        if (s == "P") return space_projective(args1());
        if (s == "Gm") return space_torus();
        if (s == "Gr") {
            expect_sym("(");
            int k = integer();
            expect_sym(",");
            int N = integer();
            expect_sym(")");
            return space_grassmannian(k, N);
        }
        if (s == "F2P1") return {SpaceKind::f2_projective_line, 0, 0};
        if (s == "F2P1alt") return {SpaceKind::f2_projective_line_alt, 0, 0};
        if (s == "F2P2") return {SpaceKind::f2_projective_plane, 0, 0};
        if (s == "GL3") return {SpaceKind::gl3, 0, 0};
        if (s == "PGL3") return {SpaceKind::pgl3, 0, 0};
        throw ParseError(t.line, t.col, "unknown space id '" + s + "'");
    }

    ExprPtr atom() {
        if (cur().kind == Tok::Int) {
            auto node = make(Expr::Kind::Num);
            node->value = take().value;
            return node;
        }
        if (is_sym("(")) {
            take();
            ExprPtr e = expr();
            expect_sym(")");
            return e;
        }
        if (cur().kind != Tok::Ident) fail("expected an expression");
        if (is_kw("s")) {
            auto node = make(Expr::Kind::Irrep);
            take();
            expect_sym("[");
            node->parts.push_back(integer());
            while (is_sym(",")) {
                take();
                node->parts.push_back(integer());
            }
            expect_sym("]");
            return node;
        }
        if (is_kw("L")) { auto node = make(Expr::Kind::LSym); take(); return node; }
        if (is_kw("t")) { auto node = make(Expr::Kind::TSym); take(); return node; }
        if (is_kw("coh") || is_kw("bm")) {
            auto node = make(is_kw("coh") ? Expr::Kind::CohSpace : Expr::Kind::BmSpace);
            take();
            expect_sym("(");
            node->space = space_id();
            expect_sym(")");
            return node;
        }
        if (is_kw("bconf") || is_kw("Bconf")) {
            auto node = make(Expr::Kind::BConf);
            take();
            expect_sym("(");
            node->value = integer();
            expect_sym(",");
            node->space = space_id();
            expect_sym(")");
            return node;
        }
        if (is_kw("total")) {
            auto node = make(Expr::Kind::Total);
            take();
            expect_sym("(");
            node->text = page_ref();
            expect_sym(")");
            return node;
        }
        if (is_kw("cone") || is_kw("betti") || is_kw("echar") || is_kw("rev")) {
            Expr::Kind k = is_kw("cone")    ? Expr::Kind::Cone
                           : is_kw("betti") ? Expr::Kind::Betti
                           : is_kw("echar") ? Expr::Kind::Echar
                                            : Expr::Kind::Rev;
            auto node = make(k);
            take();
            expect_sym("(");
            node->kids = {expr()};
            expect_sym(")");
            return node;
        }
        if (is_kw("twist")) {
            auto node = make(Expr::Kind::Twist);
            take();
            expect_sym("(");
            node->kids = {expr()};
            expect_sym(",");
            node->value = integer();
            expect_sym(")");
            return node;
        }
        if (keywords().count(cur().text)) fail("unexpected '" + cur().text + "' in expression");
        auto node = make(Expr::Kind::Name);
        node->text = cur().text;
        auto it = defined_.find(node->text);
        if (it == defined_.end()) fail("unknown name '" + node->text + "'");
        if (it->second) fail("'" + node->text + "' is a page, not a polynomial");
        take();
        return node;
    }

    std::string page_ref() {
        if (cur().kind != Tok::Ident) fail("expected a page name");
        auto it = defined_.find(cur().text);
        if (it == defined_.end()) fail("unknown name '" + cur().text + "'");
        if (!it->second) fail("'" + cur().text + "' is not a page");
        return take().text;
    }

    Statement statement() {
        Statement st;
        st.line = cur().line;
        if (is_kw("let")) {
            take();
            LetStmt s;
            s.name = fresh_name();
            expect_sym("=");
            s.expr = expr();
            expect_sym(";");
            defined_[s.name] = false;
            st.summary = "let " + s.name;
            st.node = std::move(s);
        } else if (is_kw("stratum")) {
            take();
            StratumStmt s;
            s.name = fresh_name();
            expect_sym("{");
            expect_kw("base");
            expect_sym("=");
            s.base = expr();
            expect_sym(";");
            expect_kw("simplex");
            expect_sym("=");
            s.simplex = integer();
            expect_sym(";");
            expect_kw("rank");
            expect_sym("=");
            s.rank = integer();
            expect_sym(";");
            expect_sym("}");
            defined_[s.name] = false;
            st.summary = "stratum " + s.name;
            st.node = std::move(s);
        } else if (is_kw("page")) {
            take();
            PageStmt s;
            s.name = fresh_name();
            if (is_kw("homological")) {
                s.variance = Variance::homological;
            } else if (is_kw("cohomological")) {
                s.variance = Variance::cohomological;
            } else {
                fail("expected 'homological' or 'cohomological'");
            }
            take();
            expect_sym("{");
            if (is_kw("base")) {
                take();
                expect_sym("=");
                s.product_base = expr();
                expect_sym(";");
                expect_kw("fiber");
                expect_sym("=");
                s.product_fiber = expr();
                expect_sym(";");
            } else {
                while (is_kw("col")) {
                    take();
                    int p = integer();
                    expect_sym("=");
                    s.cols.emplace_back(p, expr());
                    if (is_sym(",") || is_sym(";")) take();
                    else fail("expected ',' or ';' after a column");
                }
                if (s.cols.empty()) fail("expected 'col' or 'base' in page body");
            }
            expect_sym("}");
            defined_[s.name] = true;
            st.summary = "page " + s.name;
            st.node = std::move(s);
        } else if (is_kw("diff")) {
            take();
            DiffStmt s;
            s.page = page_ref();
            expect_kw("r");
            expect_sym("=");
            s.r = integer();
            expect_kw("at");
            expect_sym("(");
            s.pos.p = integer();
            expect_sym(",");
            s.pos.q = integer();
            expect_sym(")");
            expect_kw("image");
            expect_sym("=");
            s.image = expr();
            expect_sym(";");
            st.summary = "diff " + s.page + " r=" + std::to_string(s.r) + " at " + pos_str(s.pos);
            st.node = std::move(s);
        } else if (is_kw("les")) {
            take();
            LesStmt s;
            s.name = fresh_name();
            expect_kw("mode");
            expect_sym("=");
            if (is_kw("bm")) s.mode = LesMode::bm;
            else if (is_kw("gysin")) s.mode = LesMode::gysin;
            else fail("expected 'bm' or 'gysin'");
            take();
            expect_sym("{");
            while (!is_sym("}")) {
                if (is_kw("A") || is_kw("X") || is_kw("U")) {
                    const std::string role = take().text;
                    bool& flag = role == "A" ? s.a_set : role == "X" ? s.x_set : s.u_set;
                    ExprPtr& slot = role == "A" ? s.a : role == "X" ? s.x : s.u;
                    if (flag) fail("role '" + role + "' given twice");
                    flag = true;
                    expect_sym("=");
                    if (is_sym("?")) take();
                    else slot = expr();
                    expect_sym(";");
                } else if (is_kw("connect")) {
                    take();
                    expect_kw("k");
                    expect_sym("=");
                    int k = integer();
                    expect_kw("image");
                    expect_sym("=");
                    s.connect.emplace_back(k, expr());
                    expect_sym(";");
                } else {
                    fail("expected 'A', 'X', 'U', 'connect' or '}'");
                }
            }
            take();
            if (!s.a_set || !s.x_set || !s.u_set)
                fail("les block must give all of A, X, U (one of them '?')");
            int unknowns = (!s.a ? 1 : 0) + (!s.x ? 1 : 0) + (!s.u ? 1 : 0);
            if (unknowns != 1) fail("les block must mark exactly one of A, X, U as '?'");
            defined_[s.name] = false;
            st.summary = "les " + s.name;
            st.node = std::move(s);
        } else if (is_kw("dual")) {
            take();
            DualStmt s;
            s.name = fresh_name();
            expect_sym("=");
            expect_kw("alexander");
            expect_sym("(");
            s.arg = expr();
            expect_sym(",");
            expect_kw("M");
            expect_sym("=");
            s.m = integer();
            expect_sym(")");
            expect_sym(";");
            defined_[s.name] = false;
            st.summary = "dual " + s.name;
            st.node = std::move(s);
        } else if (is_kw("divide")) {
            take();
            DivideStmt s;
            s.name = fresh_name();
            expect_sym("=");
            s.num = expr();
            expect_sym("/");
            s.den = expr();
            expect_sym(";");
            defined_[s.name] = false;
            st.summary = "divide " + s.name;
            st.node = std::move(s);
        } else if (is_kw("assert")) {
            take();
            AssertStmt s;
            s.lhs = expr();
            if (!is_sym("==")) fail("expected '=='");
            take();
            s.rhs = expr();
            expect_sym(";");
            st.summary = "assert";
            st.node = std::move(s);
        } else if (is_kw("emit")) {
            take();
            EmitStmt s;
            if (is_kw("poly")) s.table = false;
            else if (is_kw("table")) s.table = true;
            else fail("expected 'poly' or 'table'");
            take();
            if (cur().kind != Tok::Ident) fail("expected a name");
            auto it = defined_.find(cur().text);
            if (it == defined_.end()) fail("unknown name '" + cur().text + "'");
            if (it->second != s.table)
                fail(s.table ? "'" + cur().text + "' is not a page"
                             : "'" + cur().text + "' is not a polynomial");
            s.name = take().text;
            expect_sym(";");
            st.summary = std::string("emit ") + (s.table ? "table " : "poly ") + s.name;
            st.node = std::move(s);
        } else {
            fail("expected a statement");
        }
        return st;
    }
};

// Expression evaluation over an environment; `lookup` resolves polynomial
// names, `total` resolves total(PAGE).
inline HGPoly eval_expr(const ExprPtr& e,
                        const std::function<HGPoly(const std::string&)>& lookup,
                        const std::function<HGPoly(const std::string&)>& total) {
    using K = Expr::Kind;
    auto sub = [&](const ExprPtr& kid) { return eval_expr(kid, lookup, total); };
    switch (e->kind) {
        case K::Num:
            return e->value == 0 ? HGPoly() : HGPoly::from_class(MotiveClass::unit(0, e->value));
        case K::Irrep:
            return HGPoly::from_class(MotiveClass::term(Partition(e->parts), 0));
        case K::LSym:
            return HGPoly::from_class(MotiveClass::unit(1));
        case K::TSym:
            return HGPoly::from_class(MotiveClass::unit(0), 1);
        case K::Name:
            return lookup(e->text);
        case K::Add:
            return sub(e->kids[0]) + sub(e->kids[1]);
        case K::Sub:
            return sub(e->kids[0]) - sub(e->kids[1]);
        case K::Mul:
            return sub(e->kids[0]) * sub(e->kids[1]);
        case K::Neg:
            return sub(e->kids[0]).negated();
        case K::Pow: {
            HGPoly base = sub(e->kids[0]);
            i64 exp = e->value;
            if (exp >= 0) {
                HGPoly acc = HGPoly::unit();
                for (i64 i = 0; i < exp; ++i) acc = acc * base;
                return acc;
            }
            // negative exponents only for invertible monomials
            if (base.coeffs().size() == 1) {
                const auto& [deg, cls] = *base.coeffs().begin();
                if (cls.terms().size() == 1) {
                    const auto& [key, coeff] = *cls.terms().begin();
                    if (key.rep.empty() && (coeff == 1 || coeff == -1)) {
                        HGPoly acc = HGPoly::unit();
                        HGPoly inv = HGPoly::from_class(MotiveClass::unit(-key.tate, coeff), -deg);
                        for (i64 i = 0; i < -exp; ++i) acc = acc * inv;
                        return acc;
                    }
                }
            }
            throw CalcError("negative power of a non-invertible expression");
        }
        case K::CohSpace:
            return coh_poly(e->space);
        case K::BmSpace:
            return bm_poly(e->space);
        case K::BConf: {
            if (e->space.kind == SpaceKind::affine)
                return twisted_config_bm(static_cast<int>(e->value), Ambient::affine, e->space.a);
            if (e->space.kind == SpaceKind::projective)
                return twisted_config_bm(static_cast<int>(e->value), Ambient::projective,
                                         e->space.a);
            throw CalcError("bconf: ambient must be A(n) or P(n)");
        }
        case K::Total:
            return total(e->text);
        case K::Cone:
            return cone_bm(sub(e->kids[0]));
        case K::Betti:
            return betti(sub(e->kids[0]));
        case K::Echar: {
            i64 chi = euler_characteristic(sub(e->kids[0]));
            return chi == 0 ? HGPoly() : HGPoly::from_class(MotiveClass::unit(0, chi));
        }
        case K::Rev:
            return t_reverse(sub(e->kids[0]));
        case K::Twist:
            return tate_twist(sub(e->kids[0]), static_cast<int>(e->value));
    }
    throw CalcError("unreachable expression kind");
}

}  // namespace dsl

inline Scenario parse_scenario(const std::string& source, const std::string& name = "<scenario>") {
    return dsl::Parser(source).parse(name);
}

// Parses and evaluates a closed polynomial expression (no names in scope);
// handy for building literal values.
inline HGPoly parse_poly(const std::string& text) {
    dsl::Parser p(text);
    const dsl::ExprPtr e = p.parse_expression();
    auto no_name = [](const std::string& n) -> HGPoly {
        throw CalcError("unknown name '" + n + "' in standalone expression");
    };
    return dsl::eval_expr(e, no_name, no_name);
}

// --------------------------------------------------------------------------
// Runner

struct Emission {
    bool table = false;
    std::string name;
    std::string text;  // exact expected golden file content
};

struct Report {
    std::string scenario_name;
    std::vector<std::string> lines;   // per-statement log, in order
    std::vector<Emission> emissions;
    std::vector<std::string> warnings;
    int statements = 0;
    int assertions_passed = 0;
    int assertions_failed = 0;
    bool failed_assertion() const { return assertions_failed > 0; }
    bool runtime_error = false;
    std::string error_message;

    std::string render(bool quiet = false) const {
        std::string out = "scenario " + scenario_name + "\n";
        for (const auto& l : lines) {
            const bool important = l.find("FAIL") != std::string::npos ||
                                   l.find("error") != std::string::npos;
            if (!quiet || important) out += l + "\n";
        }
        for (const auto& w : warnings) out += "warning: " + w + "\n";
        out += "summary: " + std::to_string(statements) + " statements, " +
               std::to_string(assertions_passed) + "/" +
               std::to_string(assertions_passed + assertions_failed) +
               " assertions passed, " + std::to_string(warnings.size()) + " warnings\n";
        return out;
    }
};

namespace dsl {

class Runner {
public:
    Report run(const Scenario& sc) {
        report_ = Report{};
        report_.scenario_name = sc.source_name;
        for (const auto& st : sc.statements) {
            try {
                exec(st);
                ++report_.statements;
            } catch (const CalcError& e) {
                report_.runtime_error = true;
                report_.error_message =
                    sc.source_name + ":" + std::to_string(st.line) + ": " + e.what();
                report_.lines.push_back("line " + std::to_string(st.line) + ": error: " +
                                        e.what());
                break;
            }
        }
        return report_;
    }

private:
    struct PageState {
        Page initial{Variance::homological};
        std::vector<DifferentialDecl> decls;
        bool converged = false;
        ApplyResult limit;
    };

    Report report_;
    std::map<std::string, HGPoly> polys_;
    std::map<std::string, std::shared_ptr<PageState>> pages_;

    void note(int line, const std::string& what) {
        report_.lines.push_back("line " + std::to_string(line) + ": " + what);
    }

    HGPoly eval(const ExprPtr& e) {
        return eval_expr(
            e, [&](const std::string& name) { return polys_.at(name); },
            [&](const std::string& name) { return total_poly(converge(name).limit.page); });
    }

    MotiveClass eval_class(const ExprPtr& e) {
        HGPoly p = eval(e);
        if (p.is_zero()) return MotiveClass();
        if (p.coeffs().size() != 1 || p.coeffs().begin()->first != 0)
            throw CalcError("expected a pure class (a degree-0 polynomial)");
        return p.coeff(0);
    }

    PageState& converge(const std::string& name) {
        PageState& ps = *pages_.at(name);
        if (!ps.converged) {
            ps.limit = apply_differentials(ps.initial, ps.decls);
            ps.converged = true;
            for (const auto& w : ps.limit.warnings)
                report_.warnings.push_back("page " + name + ": " + w);
        }
        return ps;
    }

    void exec(const Statement& st) {
        std::visit([&](const auto& s) { exec_node(st.line, s); }, st.node);
    }

    void exec_node(int line, const LetStmt& s) {
        polys_[s.name] = eval(s.expr);
        note(line, "let " + s.name + " ok");
    }

    void exec_node(int line, const StratumStmt& s) {
        StratumDescriptor d{s.name, eval(s.base), s.simplex, s.rank};
        polys_[s.name] = stratum_bm(d);
        note(line, "stratum " + s.name + " ok");
    }

    void exec_node(int line, const PageStmt& s) {
        auto ps = std::make_shared<PageState>();
        if (s.product_base) {
            if (s.variance != Variance::cohomological)
                throw CalcError("outer-product pages are cohomological");
            ps->initial = fibration_page(eval(s.product_base), eval(s.product_fiber));
        } else {
            std::vector<std::pair<int, HGPoly>> cols;
            for (const auto& [p, e] : s.cols) cols.emplace_back(p, eval(e));
            ps->initial = assemble_page(cols, s.variance);
        }
        pages_[s.name] = ps;
        note(line, "page " + s.name + " ok");
    }

    void exec_node(int line, const DiffStmt& s) {
        PageState& ps = *pages_.at(s.page);
        if (ps.converged)
            throw CalcError("page '" + s.page + "' has already been read; declare all "
                            "differentials before total()/emit");
        ps.decls.push_back(DifferentialDecl{s.r, s.pos, eval_class(s.image)});
        note(line, "diff " + s.page + " r=" + std::to_string(s.r) + " at " + pos_str(s.pos) +
                       " ok");
    }

    void exec_node(int line, const LesStmt& s) {
        LesProblem prob;
        prob.mode = s.mode;
        if (s.a) prob.a = eval(s.a);
        if (s.x) prob.x = eval(s.x);
        if (s.u) prob.u = eval(s.u);
        for (const auto& [k, e] : s.connect)
            prob.connecting.push_back(ConnectingDecl{k, eval_class(e)});
        polys_[s.name] = les_solve(prob);
        note(line, "les " + s.name + " ok");
    }

    void exec_node(int line, const DualStmt& s) {
        polys_[s.name] = alexander_dual(eval(s.arg), s.m);
        note(line, "dual " + s.name + " ok");
    }

    void exec_node(int line, const DivideStmt& s) {
        polys_[s.name] = exact_divide(eval(s.num), eval(s.den));
        note(line, "divide " + s.name + " ok");
    }

    void exec_node(int line, const AssertStmt& s) {
        HGPoly lhs = eval(s.lhs);
        HGPoly rhs = eval(s.rhs);
        if (lhs == rhs) {
            ++report_.assertions_passed;
            note(line, "assert ok");
        } else {
            ++report_.assertions_failed;
            note(line, "assert FAILED");
            report_.lines.push_back("  left  = " + lhs.str());
            report_.lines.push_back("  right = " + rhs.str());
        }
    }

    void exec_node(int line, const EmitStmt& s) {
        Emission em;
        em.table = s.table;
        em.name = s.name;
        if (s.table) {
            em.text = render_page(pages_.at(s.name)->initial);
        } else {
            em.text = polys_.at(s.name).str() + "\n";
        }
        report_.emissions.push_back(std::move(em));
        note(line, "emit " + s.name + " ok");
    }
};

}  // namespace dsl

inline Report run(const Scenario& sc) {
    return dsl::Runner().run(sc);
}

// --------------------------------------------------------------------------
// Golden comparison

struct GoldenResult {
    int compared = 0;
    int matched = 0;
    std::vector<std::string> lines;  // one per emission
    bool missing_file = false;
    bool all_ok() const { return !missing_file && matched == compared; }
};

// Byte-exact comparison of every emission against <dir>/<name>.txt.
inline GoldenResult compare_golden(const Report& report, const std::string& golden_dir) {
    GoldenResult res;
    for (const auto& em : report.emissions) {
        const std::string path = golden_dir + "/" + em.name + ".txt";
        ++res.compared;
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            res.missing_file = true;
            res.lines.push_back("golden " + em.name + ": MISSING file " + path);
            continue;
        }
        std::string expected((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
        if (expected == em.text) {
            ++res.matched;
            res.lines.push_back("golden " + em.name + ": ok");
            continue;
        }
        // locate the first differing line
        std::string diff = "golden " + em.name + ": MISMATCH";
        std::istringstream got(em.text), want(expected);
        std::string gl, wl;
        int lineno = 0;
        while (true) {
            ++lineno;
            const bool g = static_cast<bool>(std::getline(got, gl));
            const bool w = static_cast<bool>(std::getline(want, wl));
            if (!g && !w) break;
            if (!g) gl.clear();
            if (!w) wl.clear();
            if (gl != wl || g != w) {
                diff += " at line " + std::to_string(lineno) + "\n  got:      " + gl +
                        "\n  expected: " + wl;
                break;
            }
        }
        res.lines.push_back(diff);
    }
    return res;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CalcError("cannot open file: " + path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace vgcalc
