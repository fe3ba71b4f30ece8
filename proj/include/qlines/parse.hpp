// Text format for quartic surfaces: an optional field directive ("field Q" or
// "field F p k") followed by a homogeneous quartic in x1..x4 (aliases
// x, y, z, w), with integer or rational coefficients, '^' for powers and an
// explicit '*' for every product.  '#' starts a comment.  Errors carry the
// line and column of the offending token.

#ifndef QLINES_PARSE_HPP
#define QLINES_PARSE_HPP

#include "qlines/rational.hpp"
#include "qlines/surface.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace qlines {

struct parse_error : std::runtime_error {
    int line, col;
    parse_error(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_),
          col(col_) {}
};

inline const QF* rational_field() {
    static const QF q;
    return &q;
}

struct ParsedQuartic {
    std::optional<FieldSpec> field;  // from the directive, if present
    MultiPoly<QF> poly;              // homogeneous of degree 4 over Q
};

namespace detail {

struct Token {
    enum Kind { Number, Var, Caret, Star, Plus, Minus, LParen, RParen, Word, End } kind;
    std::string text;  // digits for Number, canonical word otherwise
    int var = -1;      // 0..3 for Var
    int line = 1, col = 1;
};

inline int variable_index(const std::string& w) {
    if (w == "x1" || w == "x") return 0;
    if (w == "x2" || w == "y") return 1;
    if (w == "x3" || w == "z") return 2;
    if (w == "x4" || w == "w") return 3;
    return -1;
}

inline std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t j = 0; j < n; ++j, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace((unsigned char)c)) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isdigit((unsigned char)c)) {
            size_t j = i;
            while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
            t.kind = Token::Number;
            t.text = text.substr(i, j - i);
            advance(j - i);
        } else if (std::isalpha((unsigned char)c)) {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum((unsigned char)text[j]) || text[j] == '_'))
                ++j;
            t.text = text.substr(i, j - i);
            t.var = variable_index(t.text);
            t.kind = t.var >= 0 ? Token::Var : Token::Word;
            advance(j - i);
        } else {
            switch (c) {
                case '^': t.kind = Token::Caret; break;
                case '*': t.kind = Token::Star; break;
                case '+': t.kind = Token::Plus; break;
                case '-': t.kind = Token::Minus; break;
                case '(': t.kind = Token::LParen; break;
                case ')': t.kind = Token::RParen; break;
                case '/':
                    // only valid directly after an integer; handled by the parser
                    t.kind = Token::Word;
                    t.text = "/";
                    break;
                default:
                    throw parse_error(std::string("unexpected character '") + c + "'", line, col);
            }
            t.text = c;
            advance(1);
        }
        out.push_back(std::move(t));
    }
    out.push_back(Token{Token::End, "", -1, line, col});
    return out;
}

inline bool small_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// recursive-descent parser over Q
class QuarticParser {
  public:
    explicit QuarticParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ParsedQuartic run() {
        ParsedQuartic out{std::nullopt, MultiPoly<QF>(rational_field(), 4)};
        if (peek().kind == Token::Word && peek().text == "field") out.field = directive();
        out.poly = expression(/*top_level=*/true);
        if (peek().kind != Token::End)
            throw parse_error("trailing input after the polynomial", peek().line, peek().col);
        if (out.poly.is_zero())
            throw parse_error("polynomial vanishes identically", peek().line, peek().col);
        return out;
    }

  private:
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    FieldSpec directive() {
        take();  // "field"
        const Token& t = take();
        if (t.kind == Token::Word && t.text == "Q") return FieldSpec::rationals();
        if (t.kind == Token::Word && t.text == "F") {
            const Token& tp = take();
            if (tp.kind != Token::Number)
                throw parse_error("field directive: expected a prime after F", tp.line, tp.col);
            uint64_t p = std::stoull(tp.text);
            if (!small_prime(p))
                throw parse_error("field directive: " + tp.text + " is not prime", tp.line, tp.col);
            unsigned k = 1;
            if (peek().kind == Token::Number) {
                const Token& tk = take();
                k = (unsigned)std::stoul(tk.text);
                if (k < 1)
                    throw parse_error("field directive: extension degree must be >= 1", tk.line,
                                      tk.col);
            }
            return FieldSpec::finite(p, k);
        }
        throw parse_error("field directive: expected Q or F", t.line, t.col);
    }

    MultiPoly<QF> expression(bool top_level) {
        MultiPoly<QF> sum(rational_field(), 4);
        bool first = true;
        for (;;) {
            bool negate = false;
            if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
                negate = take().kind == Token::Minus;
            } else if (!first) {
                break;
            }
            const Token& at = peek();
            MultiPoly<QF> term = product();
            if (top_level && !term.is_zero()) {
                if (!term.is_homogeneous() || term.total_degree() != 4)
                    throw parse_error("term of degree " + std::to_string(term.total_degree()) +
                                          "; the surface must be a homogeneous quartic",
                                      at.line, at.col);
            }
            sum = negate ? sum - term : sum + term;
            first = false;
        }
        return sum;
    }

    MultiPoly<QF> product() {
        MultiPoly<QF> prod = factor();
        while (peek().kind == Token::Star) {
            take();
            prod = prod * factor();
        }
        return prod;
    }

    MultiPoly<QF> factor() {
        const QF* Q = rational_field();
        const Token& t = take();
        switch (t.kind) {
            case Token::Number: {
                mpq_class v(t.text);
                if (peek().kind == Token::Word && peek().text == "/") {
                    take();
                    const Token& d = take();
                    if (d.kind != Token::Number)
                        throw parse_error("expected a denominator after '/'", d.line, d.col);
                    mpq_class den(d.text);
                    if (sgn(den) == 0) throw parse_error("zero denominator", d.line, d.col);
                    v /= den;
                }
                v.canonicalize();
                return MultiPoly<QF>::constant(Q, 4, v);
            }
            case Token::Var: {
                unsigned e = 1;
                if (peek().kind == Token::Caret) {
                    take();
                    const Token& x = take();
                    if (x.kind != Token::Number)
                        throw parse_error("expected an integer exponent after '^'", x.line, x.col);
                    e = (unsigned)std::stoul(x.text);
                }
                return MultiPoly<QF>::var(Q, 4, t.var).pow(e);
            }
            case Token::LParen: {
                MultiPoly<QF> inner = expression(/*top_level=*/false);
                const Token& r = take();
                if (r.kind != Token::RParen)
                    throw parse_error("expected ')'", r.line, r.col);
                return inner;
            }
            case Token::Word:
                throw parse_error("unknown name '" + t.text + "' (variables are x1..x4, x, y, z, w)",
                                  t.line, t.col);
            default:
                throw parse_error("expected a coefficient, variable or '('", t.line, t.col);
        }
    }
};

}  // namespace detail

inline ParsedQuartic parse_surface_text(const std::string& text) {
    return detail::QuarticParser(detail::tokenize(text)).run();
}

// realize the parsed quartic over a concrete finite field
inline QuarticSurface<GF> realize(const ParsedQuartic& P, const GF* fld) {
    MultiPoly<GF> f(fld, 4);
    for (auto& [e, c] : P.poly.terms()) {
        mpz_class den = c.get_den();
        if (mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)fld->p()))
            throw parse_error("coefficient " + c.get_str() +
                                  " is not defined in characteristic " + std::to_string(fld->p()),
                              1, 1);
        f.add_term(e, fld->from_rational(c));
    }
    if (f.is_zero() || f.total_degree() != 4)
        throw parse_error("polynomial degenerates modulo " + std::to_string(fld->p()), 1, 1);
    return QuarticSurface<GF>(fld, std::move(f));
}

inline QuarticSurface<QF> realize_rational(const ParsedQuartic& P) {
    return QuarticSurface<QF>(rational_field(), P.poly);
}

// ---------------------------------------------------------------------------
// Line and point specs used by the command line
// ---------------------------------------------------------------------------

// "x3=x4=0": the line cut out by two coordinate hyperplanes, or
// "a,b,c,d;e,f,g,h": the span of two explicit points with integer coordinates
inline ProjLine<GF> parse_line_spec(const std::string& spec, const GF* fld) {
    auto fail = [&](const std::string& m) { throw parse_error("line spec: " + m, 1, 1); };
    if (spec.find(';') != std::string::npos) {
        std::array<std::array<long long, 4>, 2> pts{};
        size_t semi = spec.find(';');
        std::array<std::string, 2> halves = {spec.substr(0, semi), spec.substr(semi + 1)};
        for (int h = 0; h < 2; ++h) {
            std::vector<long long> v;
            std::string cur;
            for (char c : halves[h] + ",") {
                if (c == ',') {
                    if (cur.empty()) fail("empty coordinate");
                    v.push_back(std::stoll(cur));
                    cur.clear();
                } else if (!std::isspace((unsigned char)c)) {
                    cur += c;
                }
            }
            if (v.size() != 4) fail("each point needs 4 coordinates");
            for (int i = 0; i < 4; ++i) pts[(size_t)h][(size_t)i] = v[(size_t)i];
        }
        return ProjLine<GF>(ProjPoint<GF>::from_ints(fld, pts[0]), ProjPoint<GF>::from_ints(fld, pts[1]));
    }
    // equality chain
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec + "=") {
        if (c == '=') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur += c;
        }
    }
    if (parts.size() != 3 || parts.back() != "0") fail("expected the form \"xi=xj=0\"");
    int a = detail::variable_index(parts[0]), b = detail::variable_index(parts[1]);
    if (a < 0 || b < 0 || a == b) fail("expected two distinct coordinates");
    std::array<long long, 4> P{0, 0, 0, 0}, Q{0, 0, 0, 0};
    std::vector<int> rest;
    for (int i = 0; i < 4; ++i)
        if (i != a && i != b) rest.push_back(i);
    P[(size_t)rest[0]] = 1;
    Q[(size_t)rest[1]] = 1;
    return ProjLine<GF>(ProjPoint<GF>::from_ints(fld, P), ProjPoint<GF>::from_ints(fld, Q));
}

// "a:b:c:d" or "a,b,c,d" with integer coordinates
inline ProjPoint<GF> parse_point_spec(const std::string& spec, const GF* fld) {
    std::vector<long long> v;
    std::string cur;
    for (char c : spec + ":") {
        if (c == ':' || c == ',') {
            if (cur.empty()) throw parse_error("point spec: empty coordinate", 1, 1);
            v.push_back(std::stoll(cur));
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur += c;
        }
    }
    if (v.size() != 4) throw parse_error("point spec: need 4 coordinates", 1, 1);
    return ProjPoint<GF>::from_ints(fld, {v[0], v[1], v[2], v[3]});
}

}  // namespace qlines

#endif
