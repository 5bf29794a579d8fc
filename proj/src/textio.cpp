#include "equicoh/textio.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace equicoh {

/* --- printing ------------------------------------------------------------ */

namespace {

void append_power(std::ostream& os, bool& space, const char* sym, int exp) {
    if (exp == 0)
        return;
    if (space)
        os << " ";
    os << sym;
    if (exp != 1)
        os << "^" << exp;
    space = true;
}

}  // namespace

std::string print_basis(const ConeBasisElement& b) {
    std::ostringstream os;
    bool space = false;
    if (b.cone == ConeBasisElement::Cone::Top) {
        append_power(os, space, "rho", b.e1);
        append_power(os, space, "tau", b.e2);
        if (!space)
            os << "1";
        return os.str();
    }
    if (b.e1 == 0 && b.e2 == 0)
        return "theta";
    os << "theta/(";
    append_power(os, space, "rho", b.e1);
    append_power(os, space, "tau", b.e2);
    os << ")";
    return os.str();
}

std::string print_ring(const RingElement& x) {
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : x.terms()) {
        if (!first)
            os << " + ";
        os << print_basis(t);
        first = false;
    }
    return os.str();
}

std::string print_proj(const ProjRingElement& x) {
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : x.terms) {
        if (!first)
            os << " + ";
        first = false;
        std::ostringstream term;
        bool space = false;
        if (m.coeff != ConeBasisElement::one()) {
            term << print_basis(m.coeff);
            space = true;
        }
        append_power(term, space, "a", m.aExp);
        append_power(term, space, "b", m.bExp);
        append_power(term, space, "c", m.cExp);
        os << (space ? term.str() : "1");
    }
    return os.str();
}

std::string print_singular(const SingularElement& x) {
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = x.exps.rbegin(); it != x.exps.rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        if (*it == 0)
            os << "1";
        else if (*it == 1)
            os << "z";
        else
            os << "z^" << *it;
    }
    return os.str();
}

/* --- tokenizer ------------------------------------------------------------ */

std::string to_string(DiagCode code) {
    switch (code) {
        case DiagCode::Syntax: return "syntax";
        case DiagCode::DuplicateLabel: return "duplicate-label";
        case DiagCode::OrderingViolation: return "ordering-violation";
        case DiagCode::UnresolvedReference: return "unresolved-reference";
        case DiagCode::NoCells: return "no-cells";
    }
    return "?";
}

std::string Diagnostic::format() const {
    std::ostringstream os;
    os << "line " << line << ", col " << col << ": [" << to_string(code) << "] " << message;
    return os.str();
}

namespace {

struct Token {
    enum class Kind { Ident, Number, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    Lexer(const std::string& text, int startLine = 1) : text_(text), line_(startLine) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) {
            t.kind = Token::Kind::End;
            return t;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                    text_[pos_] == '\'')) {
                t.text += text_[pos_];
                advance();
            }
            t.kind = Token::Kind::Ident;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            if (c == '-') {
                t.text += c;
                advance();
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                t.text += text_[pos_];
                advance();
            }
            t.kind = Token::Kind::Number;
            return t;
        }
        t.kind = Token::Kind::Punct;
        t.text = std::string(1, c);
        advance();
        return t;
    }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

[[noreturn]] void fail(const Token& at, DiagCode code, const std::string& msg) {
    throw ParseError({at.line, at.col, code, msg});
}

/* Recursive-descent ring expressions, shared by the point-ring and the
 * projective-ring entry points (allowProj gates a/b/c). */
class ExprParser {
  public:
    ExprParser(Lexer lex, bool allowProj) : lex_(std::move(lex)), allowProj_(allowProj) { bump(); }

    /* expr := term ('+' term)* End */
    std::vector<ProjMonomial> parse() {
        std::vector<ProjMonomial> terms = parse_term();
        while (cur_.kind == Token::Kind::Punct && cur_.text == "+") {
            bump();
            auto more = parse_term();
            terms.insert(terms.end(), more.begin(), more.end());
        }
        if (cur_.kind != Token::Kind::End)
            fail(cur_, DiagCode::Syntax, "unexpected '" + cur_.text + "' in ring expression");
        return terms;
    }

  private:
    void bump() { cur_ = lex_.next(); }

    bool at_factor_start() const {
        if (cur_.kind == Token::Kind::Ident)
            return true;
        return cur_.kind == Token::Kind::Number && (cur_.text == "0" || cur_.text == "1");
    }

    int parse_exponent() {
        if (!(cur_.kind == Token::Kind::Punct && cur_.text == "^"))
            return 1;
        bump();
        if (cur_.kind != Token::Kind::Number || cur_.text[0] == '-')
            fail(cur_, DiagCode::Syntax, "expected a nonnegative exponent after '^'");
        const int e = std::stoi(cur_.text);
        bump();
        return e;
    }

    /* term := factor+ where factor is 0, 1, rho[^k], tau[^k],
     * theta[/(rho[^n] tau[^m])], or (projective) a[^k], b[^k], c[^k]. */
    std::vector<ProjMonomial> parse_term() {
        if (!at_factor_start())
            fail(cur_, DiagCode::Syntax, "expected a ring term, found '" + cur_.text + "'");
        bool zero = false;
        bool sawTheta = false;
        int rho = 0, tau = 0, thetaRho = 0, thetaTau = 0;
        int aExp = 0, bExp = 0, cExp = 0;

        while (at_factor_start()) {
            if (cur_.kind == Token::Kind::Number) {
                if (cur_.text == "0")
                    zero = true;
                bump();
                continue;
            }
            const std::string name = cur_.text;
            if (name == "rho") {
                bump();
                rho += parse_exponent();
            } else if (name == "tau") {
                bump();
                tau += parse_exponent();
            } else if (name == "theta") {
                if (sawTheta)
                    zero = true;  // theta * theta = 0
                sawTheta = true;
                bump();
                if (cur_.kind == Token::Kind::Punct && cur_.text == "/") {
                    bump();
                    if (!(cur_.kind == Token::Kind::Punct && cur_.text == "("))
                        fail(cur_, DiagCode::Syntax, "expected '(' after 'theta/'");
                    bump();
                    while (cur_.kind == Token::Kind::Ident) {
                        if (cur_.text == "rho") {
                            bump();
                            thetaRho += parse_exponent();
                        } else if (cur_.text == "tau") {
                            bump();
                            thetaTau += parse_exponent();
                        } else {
                            fail(cur_, DiagCode::Syntax, "expected rho or tau in theta divisor");
                        }
                    }
                    if (!(cur_.kind == Token::Kind::Punct && cur_.text == ")"))
                        fail(cur_, DiagCode::Syntax, "expected ')' closing theta divisor");
                    bump();
                }
            } else if (allowProj_ && (name == "a" || name == "b" || name == "c")) {
                bump();
                const int e = parse_exponent();
                if (name == "a")
                    aExp += e;
                else if (name == "b")
                    bExp += e;
                else
                    cExp += e;
            } else {
                fail(cur_, DiagCode::Syntax, "unknown symbol '" + name + "' in ring expression");
            }
        }

        if (zero)
            return {};
        ConeBasisElement coeff;
        if (sawTheta) {
            // rho^r tau^t theta/(rho^n tau^m) collapses exponentwise or dies.
            if (thetaRho < rho || thetaTau < tau)
                return {};
            coeff = ConeBasisElement::bot(thetaRho - rho, thetaTau - tau);
        } else {
            coeff = ConeBasisElement::top(rho, tau);
        }
        return {ProjMonomial{coeff, aExp, bExp, cExp}};
    }

    Lexer lex_;
    Token cur_;
    bool allowProj_;
};

}  // namespace

RingElement parse_ring(const std::string& text) {
    ExprParser p(Lexer(text), /*allowProj=*/false);
    std::vector<ConeBasisElement> terms;
    for (const auto& m : p.parse())
        terms.push_back(m.coeff);
    return RingElement::from_terms(std::move(terms));
}

ProjRingElement parse_proj(const SpaceId& space, const std::string& text) {
    ExprParser p(Lexer(text), /*allowProj=*/true);
    return ProjRingElement::from_terms(space, p.parse());
}

/* --- .eqc documents -------------------------------------------------------- */

CellComplexSpec ComplexDocument::to_spec() const {
    CellComplexSpec spec;
    spec.cells = cells;
    std::map<std::string, std::size_t> stage;
    for (std::size_t i = 0; i < cells.size(); ++i)
        stage[cells[i].label] = i;
    for (const auto& dl : differentials)
        spec.differentials[stage.at(dl.cell)].images[dl.source] = dl.expr;
    return spec;
}

ComplexDocument parse_complex(const std::string& text) {
    // Line-oriented: split first so ring expressions end at the newline.
    std::vector<std::string> lines;
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line))
            lines.push_back(line);
    }

    ComplexDocument doc;
    std::set<std::string> labels;
    std::set<std::pair<std::string, std::string>> dPairs;
    bool sawHeader = false, sawClose = false;
    int headerLine = 1;

    auto strip = [](std::string s) {
        if (auto h = s.find('#'); h != std::string::npos)
            s.erase(h);
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };

    auto expect_line_end = [](Lexer& lex) {
        const Token t = lex.next();
        if (t.kind != Token::Kind::End)
            fail(t, DiagCode::Syntax, "unexpected trailing '" + t.text + "'");
    };

    auto parse_int = [](const Token& t) {
        try {
            return std::stoi(t.text);
        } catch (const std::exception&) {
            fail(t, DiagCode::Syntax, "integer out of range: '" + t.text + "'");
        }
    };

    for (int ln = 1; ln <= static_cast<int>(lines.size()); ++ln) {
        const std::string raw = lines[ln - 1];
        const std::string body = strip(raw);
        if (body.empty())
            continue;
        Lexer lex(raw, ln);
        Token t = lex.next();
        if (sawClose)
            fail(t, DiagCode::Syntax, "content after closing '}'");

        if (!sawHeader) {
            if (!(t.kind == Token::Kind::Ident && t.text == "complex"))
                fail(t, DiagCode::Syntax, "expected 'complex <name> {'");
            Token name = lex.next();
            if (name.kind != Token::Kind::Ident)
                fail(name, DiagCode::Syntax, "expected a complex name");
            Token brace = lex.next();
            if (!(brace.kind == Token::Kind::Punct && brace.text == "{"))
                fail(brace, DiagCode::Syntax, "expected '{' after the complex name");
            expect_line_end(lex);
            doc.name = name.text;
            sawHeader = true;
            headerLine = ln;
            continue;
        }

        if (t.kind == Token::Kind::Punct && t.text == "}") {
            expect_line_end(lex);
            sawClose = true;
            continue;
        }

        if (t.kind == Token::Kind::Ident && t.text == "cell") {
            Token label = lex.next();
            if (label.kind != Token::Kind::Ident)
                fail(label, DiagCode::Syntax, "expected a cell label");
            Token open = lex.next();
            if (!(open.kind == Token::Kind::Punct && open.text == "("))
                fail(open, DiagCode::Syntax, "expected '(' before the cell bidegree");
            Token pTok = lex.next();
            if (pTok.kind != Token::Kind::Number)
                fail(pTok, DiagCode::Syntax, "expected the topological degree p");
            Token comma = lex.next();
            if (!(comma.kind == Token::Kind::Punct && comma.text == ","))
                fail(comma, DiagCode::Syntax, "expected ',' between p and q");
            Token qTok = lex.next();
            if (qTok.kind != Token::Kind::Number)
                fail(qTok, DiagCode::Syntax, "expected the weight q");
            Token close = lex.next();
            if (!(close.kind == Token::Kind::Punct && close.text == ")"))
                fail(close, DiagCode::Syntax, "expected ')' after the cell bidegree");
            expect_line_end(lex);

            if (!labels.insert(label.text).second)
                fail(label, DiagCode::DuplicateLabel, "duplicate label '" + label.text + "'");
            const Bidegree d{parse_int(pTok), parse_int(qTok)};
            if (doc.cells.empty()) {
                if (d != Bidegree{0, 0})
                    fail(pTok, DiagCode::OrderingViolation, "the first cell must be the (0,0) base point");
            } else {
                const Bidegree prev = doc.cells.back().degree;
                if (d.p < prev.p || (d.p == prev.p && d.q < prev.q))
                    fail(pTok, DiagCode::OrderingViolation,
                         "cell '" + label.text + "' at " + to_string(d) +
                             " breaks the attachment ordering (previous cell at " + to_string(prev) + ")");
            }
            doc.cells.push_back({label.text, d});
            continue;
        }

        if (t.kind == Token::Kind::Ident && t.text == "d") {
            Token cell = lex.next();
            if (cell.kind != Token::Kind::Ident)
                fail(cell, DiagCode::Syntax, "expected the attached cell's label after 'd'");
            Token colon = lex.next();
            if (!(colon.kind == Token::Kind::Punct && colon.text == ":"))
                fail(colon, DiagCode::Syntax, "expected ':' after the cell label");
            Token source = lex.next();
            if (source.kind != Token::Kind::Ident)
                fail(source, DiagCode::Syntax, "expected a source generator label");
            Token eq = lex.next();
            if (!(eq.kind == Token::Kind::Punct && eq.text == "="))
                fail(eq, DiagCode::Syntax, "expected '=' before the coefficient expression");

            if (!labels.count(cell.text))
                fail(cell, DiagCode::UnresolvedReference, "unknown cell '" + cell.text + "'");
            std::size_t cellStage = 0;
            for (std::size_t i = 0; i < doc.cells.size(); ++i)
                if (doc.cells[i].label == cell.text)
                    cellStage = i;
            if (cellStage == 0)
                fail(cell, DiagCode::UnresolvedReference, "the base cell '" + cell.text + "' has no attachment");
            bool sourceEarlier = false;
            for (std::size_t i = 0; i < cellStage; ++i)
                if (doc.cells[i].label == source.text)
                    sourceEarlier = true;
            if (!sourceEarlier)
                fail(source, DiagCode::UnresolvedReference,
                     "generator '" + source.text + "' is not available when '" + cell.text + "' is attached");
            if (!dPairs.insert({cell.text, source.text}).second)
                fail(source, DiagCode::DuplicateLabel,
                     "a differential on '" + source.text + "' at '" + cell.text + "' was already given");

            // Hand the remainder of the line to the expression parser.
            const std::size_t eqPos = raw.find('=', 0);
            RingElement expr;
            try {
                expr = parse_ring(raw.substr(eqPos + 1));
            } catch (const ParseError& e) {
                Diagnostic d = e.diag();
                d.line = ln;
                d.col += static_cast<int>(eqPos) + 1;
                throw ParseError(d);
            }
            doc.differentials.push_back({cell.text, source.text, expr});
            continue;
        }

        fail(t, DiagCode::Syntax, "expected 'cell', 'd' or '}'");
    }

    if (!sawHeader)
        fail(Token{Token::Kind::End, "", 1, 1}, DiagCode::Syntax, "expected 'complex <name> {'");
    if (!sawClose)
        fail(Token{Token::Kind::End, "", static_cast<int>(lines.size()), 1}, DiagCode::Syntax,
             "missing closing '}'");
    if (doc.cells.empty())
        fail(Token{Token::Kind::End, "", headerLine, 1}, DiagCode::NoCells, "no cells");
    return doc;
}

std::string print_complex(const ComplexDocument& doc) {
    std::ostringstream os;
    os << "complex " << doc.name << " {\n";
    for (const auto& c : doc.cells)
        os << "  cell " << c.label << " (" << c.degree.p << "," << c.degree.q << ")\n";

    std::map<std::string, std::size_t> stage;
    for (std::size_t i = 0; i < doc.cells.size(); ++i)
        stage[doc.cells[i].label] = i;
    std::vector<DifferentialLine> dls = doc.differentials;
    std::stable_sort(dls.begin(), dls.end(), [&](const DifferentialLine& x, const DifferentialLine& y) {
        if (stage.at(x.cell) != stage.at(y.cell))
            return stage.at(x.cell) < stage.at(y.cell);
        return x.source < y.source;
    });
    for (const auto& dl : dls)
        os << "  d " << dl.cell << " : " << dl.source << " = " << print_ring(dl.expr) << "\n";
    os << "}\n";
    return os.str();
}

}  // namespace equicoh
