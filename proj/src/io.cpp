#include "keller/io.hpp"

#include <cctype>
#include <sstream>

namespace keller {

namespace {

// ---------------------------------------------------------------- lexer --

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok type;
    std::string text;
    std::size_t column;  // 1-based
};

struct Lexer {
    std::string_view src;
    std::size_t line;
    std::size_t column_offset = 0;  // position of src within the full input line
    std::size_t pos = 0;

    Token next() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
        const std::size_t col = column_offset + pos + 1;
        if (pos >= src.size()) return {Tok::end, "", col};
        const char c = src[pos];
        switch (c) {
            case '+': ++pos; return {Tok::plus, "+", col};
            case '-': ++pos; return {Tok::minus, "-", col};
            case '*': ++pos; return {Tok::star, "*", col};
            case '/': ++pos; return {Tok::slash, "/", col};
            case '^': ++pos; return {Tok::caret, "^", col};
            case '(': ++pos; return {Tok::lparen, "(", col};
            case ')': ++pos; return {Tok::rparen, ")", col};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            return {Tok::number, std::string(src.substr(start, pos - start)), col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                ++pos;
            return {Tok::ident, std::string(src.substr(start, pos - start)), col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
};

// --------------------------------------------------------------- parser --

struct ExprParser {
    Lexer lex;
    Token cur;
    const Ring& ring;

    ExprParser(std::string_view src, std::size_t line, const Ring& r, std::size_t column_offset = 0)
        : lex{src, line, column_offset}, ring(r) {
        cur = lex.next();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, lex.line, cur.column); }

    void advance() { cur = lex.next(); }

    Poly parse() {
        Poly p = expr();
        if (cur.type != Tok::end) fail("unexpected token '" + cur.text + "'");
        return p;
    }

    Poly expr() {
        bool negate = false;
        if (cur.type == Tok::minus) {
            negate = true;
            advance();
        }
        Poly acc = term();
        if (negate) acc = -acc;
        while (cur.type == Tok::plus || cur.type == Tok::minus) {
            const bool minus = cur.type == Tok::minus;
            advance();
            Poly rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (cur.type == Tok::star || cur.type == Tok::slash) {
            const bool divide = cur.type == Tok::slash;
            const std::size_t col = cur.column;
            advance();
            Poly rhs = factor();
            if (divide) {
                if (!rhs.is_constant() || rhs.is_zero())
                    throw ParseError("division only by nonzero constants", lex.line, col);
                acc = acc * rhs.constant_term().inverse();
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (cur.type == Tok::caret) {
            advance();
            if (cur.type != Tok::number) fail("exponent must be a non-negative integer");
            unsigned long e = 0;
            try {
                e = std::stoul(cur.text);
            } catch (...) {
                fail("exponent out of range");
            }
            if (e > 100000) fail("exponent out of range");
            advance();
            return pow(base, e);
        }
        return base;
    }

    Poly atom() {
        switch (cur.type) {
            case Tok::number: {
                mpq_class q(mpz_class(cur.text), mpz_class(1));
                advance();
                return Poly::constant(ring, GaussianRational(q));
            }
            case Tok::ident: {
                if (cur.text == "i") {
                    advance();
                    return Poly::constant(ring, GaussianRational::imaginary_unit());
                }
                auto idx = ring.index_of(cur.text);
                if (!idx) fail("unknown variable '" + cur.text + "'");
                advance();
                return Poly::variable(ring, *idx, GaussianRational(1));
            }
            case Tok::lparen: {
                advance();
                Poly p = expr();
                if (cur.type != Tok::rparen) fail("expected ')'");
                advance();
                return p;
            }
            case Tok::minus: {
                advance();
                return -atom();
            }
            default:
                fail("expected a number, variable, 'i' or '('");
        }
    }
};

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.emplace_back(s.substr(start, i - start));
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// ------------------------------------------------------------- printing --

std::string monomial_str(const Monomial& mono, const Ring& ring) {
    std::string out;
    for (std::size_t v = 0; v < mono.size(); ++v) {
        if (mono[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.name(v);
        if (mono[v] > 1) out += "^" + std::to_string(mono[v]);
    }
    return out;
}

// Splits a coefficient into (sign-to-print, magnitude text, needs_star).
// Mixed complex coefficients keep their sign inside the parentheses.
struct CoeffText {
    bool negative;
    std::string text;  // magnitude (or full parenthesized complex)
    bool is_plain_one;
};

CoeffText coeff_text(const GaussianRational& c) {
    if (c.is_real()) {
        const bool neg = sgn(c.real()) < 0;
        mpq_class mag = abs(c.real());
        return {neg, rational_str(mag), mag == 1};
    }
    if (sgn(c.real()) == 0) {
        const bool neg = sgn(c.imag()) < 0;
        mpq_class mag = abs(c.imag());
        return {neg, mag == 1 ? "i" : rational_str(mag) + "*i", false};
    }
    return {false, c.str(), false};  // "(a+b*i)" form
}

}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        CoeffText ct = coeff_text(coeff);
        std::string term;
        if (mono.is_constant())
            term = ct.text;
        else if (ct.is_plain_one)
            term = monomial_str(mono, p.ring());
        else
            term = ct.text + "*" + monomial_str(mono, p.ring());

        if (first) {
            out += (ct.negative ? "-" : "") + term;
            first = false;
        } else {
            out += (ct.negative ? " - " : " + ") + term;
        }
    }
    return out;
}

Poly parse_polynomial(std::string_view expr, const Ring& ring) {
    return ExprParser(expr, 1, ring).parse();
}

struct EquationLine {
    std::size_t line;
    std::string expr;
    std::size_t column_offset;
};

PmapDocument parse_pmap(std::string_view text) {
    PmapDocument doc;
    std::vector<EquationLine> equations;
    bool saw_vars = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::size_t last_line = 1;

    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        std::string_view linev = trim(raw);
        if (linev.empty() || linev.front() == '#') continue;
        last_line = line_no;

        const std::size_t indent = raw.find_first_not_of(" \t");
        std::size_t sp = linev.find_first_of(" \t");
        std::string keyword(linev.substr(0, sp));
        std::string_view rest;
        std::size_t rest_offset = indent + linev.size();
        if (sp != std::string_view::npos) {
            std::size_t ro = sp;
            while (ro < linev.size() && (linev[ro] == ' ' || linev[ro] == '\t')) ++ro;
            rest = trim(linev.substr(ro));
            rest_offset = indent + ro;
        }

        if (keyword == "name") {
            if (saw_vars) throw ParseError("'name' must precede 'vars'", line_no, 1);
            doc.name = std::string(rest);
        } else if (keyword == "list") {
            if (saw_vars) throw ParseError("'list' must precede 'vars'", line_no, 1);
            if (!rest.empty()) throw ParseError("'list' takes no arguments", line_no, 1);
            doc.raw_list = true;
        } else if (keyword == "vars") {
            if (saw_vars) throw ParseError("duplicate 'vars' line", line_no, 1);
            auto names = split_ws(rest);
            if (names.empty()) throw ParseError("'vars' needs at least one variable", line_no, 1);
            for (const auto& n : names) {
                if (!is_identifier(n))
                    throw ParseError("invalid variable name '" + n + "'", line_no, 1);
                if (n == "i") throw ParseError("'i' is reserved for the imaginary unit", line_no, 1);
            }
            try {
                doc.ring = Ring(names);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), line_no, 1);
            }
            saw_vars = true;
        } else if (keyword == "eq") {
            if (!saw_vars) throw ParseError("'eq' before 'vars'", line_no, 1);
            equations.push_back({line_no, std::string(rest), rest_offset});
        } else {
            throw ParseError("unknown directive '" + keyword + "'", line_no, 1);
        }
    }

    if (!saw_vars) throw ParseError("missing 'vars' line", last_line, 1);
    for (const auto& eq : equations)
        doc.polynomials.push_back(ExprParser(eq.expr, eq.line, doc.ring, eq.column_offset).parse());
    if (!doc.raw_list && doc.polynomials.size() != doc.ring.size())
        throw ParseError("expected " + std::to_string(doc.ring.size()) + " equations for a square map, found " +
                             std::to_string(doc.polynomials.size()),
                         last_line, 1);
    return doc;
}

std::string print_pmap(const PmapDocument& doc) {
    std::ostringstream out;
    if (doc.name) out << "name " << *doc.name << "\n";
    if (doc.raw_list) out << "list\n";
    out << "vars";
    for (const auto& n : doc.ring.names()) out << " " << n;
    out << "\n";
    for (const auto& p : doc.polynomials) out << "eq " << to_string(p) << "\n";
    return out.str();
}

}  // namespace keller
