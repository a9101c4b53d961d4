#include "hombol/dsl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hombol/errors.hpp"

namespace hombol {
namespace dsl {

namespace {

enum class Tok {
    End, Ident, Nat, Plus, Minus, Star, Caret, Slash,
    LParen, RParen, LBracket, RBracket, LBrace, RBrace, Comma, Bar, EqEq,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

const char* describe(Tok k) {
    switch (k) {
        case Tok::End: return "end of input";
        case Tok::Ident: return "identifier";
        case Tok::Nat: return "number";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Caret: return "'^'";
        case Tok::Slash: return "'/'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::Comma: return "','";
        case Tok::Bar: return "'|'";
        case Tok::EqEq: return "'=='";
    }
    return "?";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string t) { out.push_back({k, std::move(t), line, col}); };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            push(Tok::Ident, std::string(text.substr(i, j - i)));
            col += j - i;
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            push(Tok::Nat, std::string(text.substr(i, j - i)));
            col += j - i;
            i = j;
            continue;
        }
        switch (c) {
            case '+': push(Tok::Plus, "+"); break;
            case '-': push(Tok::Minus, "-"); break;
            case '*': push(Tok::Star, "*"); break;
            case '^': push(Tok::Caret, "^"); break;
            case '/': push(Tok::Slash, "/"); break;
            case '(': push(Tok::LParen, "("); break;
            case ')': push(Tok::RParen, ")"); break;
            case '[': push(Tok::LBracket, "["); break;
            case ']': push(Tok::RBracket, "]"); break;
            case '{': push(Tok::LBrace, "{"); break;
            case '}': push(Tok::RBrace, "}"); break;
            case ',': push(Tok::Comma, ","); break;
            case '|': push(Tok::Bar, "|"); break;
            case '=':
                if (i + 1 < text.size() && text[i + 1] == '=') {
                    push(Tok::EqEq, "==");
                    ++i;
                    ++col;
                } else {
                    throw ParseError("single '=' (use '==')", line, col, "'=='");
                }
                break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col,
                                 "expression token");
        }
        ++i;
        ++col;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Identity parse() {
        ExprPtr lhs = parse_expr();
        expect(Tok::EqEq);
        ExprPtr rhs = parse_expr();
        expect(Tok::End);
        Identity id{std::move(lhs), std::move(rhs)};
        validate_exponent_vars(id);
        return id;
    }

private:
    const Token& peek(std::size_t k = 0) const {
        const std::size_t i = std::min(pos_ + k, toks_.size() - 1);
        return toks_[i];
    }
    const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        advance();
        return true;
    }
    const Token& expect(Tok k) {
        if (peek().kind != k)
            throw ParseError(std::string("unexpected ") + describe(peek().kind) +
                                 (peek().text.empty() ? "" : " \"" + peek().text + "\""),
                             peek().line, peek().col, describe(k));
        return advance();
    }
    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(std::string("unexpected ") + describe(peek().kind) +
                             (peek().text.empty() ? "" : " \"" + peek().text + "\""),
                         peek().line, peek().col, expected);
    }

    bool at_rational_start() const {
        return peek().kind == Tok::Nat || (peek().kind == Tok::Minus && peek(1).kind == Tok::Nat);
    }
    // Number of tokens a rational occupies from the current position.
    std::size_t rational_token_length() const {
        std::size_t len = peek().kind == Tok::Minus ? 2 : 1;
        if (peek(len).kind == Tok::Slash && peek(len + 1).kind == Tok::Nat) len += 2;
        return len;
    }
    bool at_koszul_start() const {
        return peek().kind == Tok::LParen && peek(1).kind == Tok::Minus &&
               peek(2).kind == Tok::Nat && peek(2).text == "1" && peek(3).kind == Tok::RParen &&
               peek(4).kind == Tok::Caret;
    }

    Rational parse_rational_tokens() {
        bool negative = accept(Tok::Minus);
        const Token& num = expect(Tok::Nat);
        BigInt n(num.text);
        BigInt d(1);
        if (peek().kind == Tok::Slash && peek(1).kind == Tok::Nat) {
            advance();
            const Token& den = expect(Tok::Nat);
            d = BigInt(den.text);
            if (d == 0) throw ParseError("zero denominator", den.line, den.col, "nonzero number");
        }
        if (negative) n = -n;
        return Rational(std::move(n), std::move(d));
    }

    DegPolynomial parse_degpoly() {
        DegPolynomial poly;
        do {
            DegMonomial mono;
            do {
                expect(Tok::Bar);
                mono.push_back(expect(Tok::Ident).text);
                expect(Tok::Bar);
            } while (accept(Tok::Star));
            poly.monomials.push_back(std::move(mono));
        } while (accept(Tok::Plus));
        return poly;
    }

    DegPolynomial parse_koszul_factor() {
        expect(Tok::LParen);
        expect(Tok::Minus);
        expect(Tok::Nat);  // the literal 1, guaranteed by at_koszul_start
        expect(Tok::RParen);
        expect(Tok::Caret);
        expect(Tok::LParen);
        DegPolynomial poly = parse_degpoly();
        expect(Tok::RParen);
        return poly;
    }

    ExprPtr parse_atom() {
        switch (peek().kind) {
            case Tok::Ident: {
                if (peek().text == "a" &&
                    (peek(1).kind == Tok::LParen || peek(1).kind == Tok::Caret)) {
                    advance();
                    unsigned power = 1;
                    if (accept(Tok::Caret)) {
                        const Token& nat = expect(Tok::Nat);
                        if (nat.text.size() > 4)
                            throw ParseError("twist power too large", nat.line, nat.col, "small power");
                        power = static_cast<unsigned>(std::stoul(nat.text));
                    }
                    expect(Tok::LParen);
                    ExprPtr arg = parse_expr();
                    expect(Tok::RParen);
                    return make_twist(power, std::move(arg));
                }
                return make_var(advance().text);
            }
            case Tok::Nat: {
                if (peek().text == "0") {
                    advance();
                    return make_zero();
                }
                fail("'0' (bare numbers other than 0 must multiply an atom)");
            }
            case Tok::LParen: {
                advance();
                ExprPtr e = parse_expr();
                expect(Tok::RParen);
                return e;
            }
            case Tok::LBracket: {
                advance();
                ExprPtr a = parse_expr();
                expect(Tok::Comma);
                ExprPtr b = parse_expr();
                expect(Tok::RBracket);
                return make_bracket(std::move(a), std::move(b));
            }
            case Tok::LBrace: {
                advance();
                ExprPtr a = parse_expr();
                expect(Tok::Comma);
                ExprPtr b = parse_expr();
                expect(Tok::Comma);
                ExprPtr c = parse_expr();
                expect(Tok::RBrace);
                return make_triple(std::move(a), std::move(b), std::move(c));
            }
            default:
                fail("identifier, 'a(', '[', '{', '(', or '0'");
        }
    }

    ExprPtr parse_term() {
        // Leftmost factor ends up outermost.
        struct Factor {
            bool is_sign;
            Rational coeff;
            DegPolynomial poly;
        };
        std::vector<Factor> factors;
        for (;;) {
            if (at_koszul_start()) {
                factors.push_back({true, Rational(0), parse_koszul_factor()});
                expect(Tok::Star);
            } else if (at_rational_start() && peek(rational_token_length()).kind == Tok::Star) {
                factors.push_back({false, parse_rational_tokens(), {}});
                expect(Tok::Star);
            } else {
                break;
            }
        }
        ExprPtr e = parse_atom();
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            if (it->is_sign)
                e = make_koszul(std::move(it->poly), std::move(e));
            else
                e = make_scaled(std::move(it->coeff), std::move(e));
        }
        return e;
    }

    ExprPtr parse_expr() {
        std::vector<SignedTerm> terms;
        terms.push_back({+1, parse_term()});
        for (;;) {
            if (accept(Tok::Plus))
                terms.push_back({+1, parse_term()});
            else if (accept(Tok::Minus))
                terms.push_back({-1, parse_term()});
            else
                break;
        }
        if (terms.size() == 1) return terms.front().term;
        return make_sum(std::move(terms));
    }

    static void collect_exponent_vars(const ExprPtr& e, std::vector<std::string>& out) {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Twist>) {
                    collect_exponent_vars(n.arg, out);
                } else if constexpr (std::is_same_v<T, Bracket>) {
                    collect_exponent_vars(n.lhs, out);
                    collect_exponent_vars(n.rhs, out);
                } else if constexpr (std::is_same_v<T, Triple>) {
                    collect_exponent_vars(n.first, out);
                    collect_exponent_vars(n.second, out);
                    collect_exponent_vars(n.third, out);
                } else if constexpr (std::is_same_v<T, Scaled>) {
                    collect_exponent_vars(n.arg, out);
                } else if constexpr (std::is_same_v<T, KoszulSign>) {
                    for (const DegMonomial& m : n.exponent.monomials)
                        for (const std::string& v : m) out.push_back(v);
                    collect_exponent_vars(n.arg, out);
                } else if constexpr (std::is_same_v<T, Sum>) {
                    for (const SignedTerm& t : n.terms) collect_exponent_vars(t.term, out);
                }
            },
            e->node);
    }

    static void validate_exponent_vars(const Identity& id) {
        std::vector<std::string> exps;
        collect_exponent_vars(id.lhs, exps);
        collect_exponent_vars(id.rhs, exps);
        const std::vector<std::string> vars = variables(id);
        for (const std::string& v : exps)
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                throw ParseError("degree symbol |" + v + "| does not match any quantified variable",
                                 1, 1, "quantified variable");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::string print_rational(const Rational& q) { return to_string(q); }

std::string print_degpoly(const DegPolynomial& poly) {
    std::string out;
    for (std::size_t m = 0; m < poly.monomials.size(); ++m) {
        if (m) out += " + ";
        for (std::size_t v = 0; v < poly.monomials[m].size(); ++v) {
            if (v) out += " * ";
            out += "|" + poly.monomials[m][v] + "|";
        }
    }
    return out;
}

bool is_sum(const ExprPtr& e) { return std::holds_alternative<Sum>(e->node); }

std::string print_operand(const ExprPtr& e) {
    if (is_sum(e)) return "(" + print_expr(e) + ")";
    return print_expr(e);
}

}  // namespace

std::string print_expr(const ExprPtr& e) {
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Var>) {
                return n.name;
            } else if constexpr (std::is_same_v<T, Zero>) {
                return "0";
            } else if constexpr (std::is_same_v<T, Twist>) {
                const std::string head = n.power == 1 ? "a(" : "a^" + std::to_string(n.power) + "(";
                return head + print_expr(n.arg) + ")";
            } else if constexpr (std::is_same_v<T, Bracket>) {
                return "[" + print_expr(n.lhs) + ", " + print_expr(n.rhs) + "]";
            } else if constexpr (std::is_same_v<T, Triple>) {
                return "{" + print_expr(n.first) + ", " + print_expr(n.second) + ", " +
                       print_expr(n.third) + "}";
            } else if constexpr (std::is_same_v<T, Scaled>) {
                return print_rational(n.coeff) + " * " + print_operand(n.arg);
            } else if constexpr (std::is_same_v<T, KoszulSign>) {
                return "(-1)^(" + print_degpoly(n.exponent) + ") * " + print_operand(n.arg);
            } else {
                const Sum& s = n;
                if (s.terms.empty()) return "0";
                std::string out;
                for (std::size_t i = 0; i < s.terms.size(); ++i) {
                    const SignedTerm& t = s.terms[i];
                    if (i == 0) {
                        if (t.sign < 0) out += "0 - ";
                        out += print_operand(t.term);
                    } else {
                        out += t.sign > 0 ? " + " : " - ";
                        out += print_operand(t.term);
                    }
                }
                return out;
            }
        },
        e->node);
}

Identity parse_identity(std::string_view text) { return Parser(text).parse(); }

std::string print_identity(const Identity& id) {
    return print_expr(id.lhs) + " == " + print_expr(id.rhs);
}

std::vector<NamedIdentity> parse_axiom_collection(std::string_view text) {
    std::vector<NamedIdentity> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        std::string_view line =
            text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        const std::size_t last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("missing ':' after axiom name", line_no, 1, "NAME: identity");
        std::string id(line.substr(0, colon));
        while (!id.empty() && (id.back() == ' ' || id.back() == '\t')) id.pop_back();
        if (id.empty()) throw ParseError("empty axiom name", line_no, 1, "NAME: identity");
        try {
            out.push_back({id, parse_identity(line.substr(colon + 1))});
        } catch (const ParseError& pe) {
            throw ParseError(std::string(pe.what()) + " (axiom " + id + ", file line " +
                                 std::to_string(line_no) + ")",
                             line_no, pe.column, pe.expected);
        }
    }
    return out;
}

std::vector<NamedIdentity> load_axiom_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open axiom file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_axiom_collection(buf.str());
}

}  // namespace dsl
}  // namespace hombol
