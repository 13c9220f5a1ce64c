#include "apolar/parse.hpp"

#include <cctype>
#include <map>
#include <set>

namespace apolar {

namespace {
struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(const std::string& s) {
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
            std::string t;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) t += s[i++];
            if (i < s.size() && s[i] == '/') {
                std::size_t j = i + 1;
                if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                    t += s[i++];
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                        t += s[i++];
                }
            }
            out.push_back({Token::Number, t, start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string t;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i]))))
                t += s[i++];
            out.push_back({Token::Ident, t, start});
            continue;
        }
        switch (c) {
            case '+': out.push_back({Token::Plus, "+", start}); break;
            case '-': out.push_back({Token::Minus, "-", start}); break;
            case '*': out.push_back({Token::Star, "*", start}); break;
            case '^': out.push_back({Token::Caret, "^", start}); break;
            case '(': out.push_back({Token::LParen, "(", start}); break;
            case ')': out.push_back({Token::RParen, ")", start}); break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", start);
        }
        ++i;
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

bool is_indexed_x(const std::string& name) {
    if (name.size() < 2 || name[0] != 'x') return false;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    return true;
}

VariableBlock resolve_ring(const std::vector<Token>& toks, FormMode mode) {
    std::set<std::string> idents;
    for (const auto& t : toks)
        if (t.kind == Token::Ident) idents.insert(t.text);

    if (mode == FormMode::Auto) {
        bool indexed = false, abc = false, zw = false;
        for (const auto& v : idents) {
            if (is_indexed_x(v)) indexed = true;
            if (v == "a" || v == "b" || v == "c") abc = true;
            if (v == "z" || v == "w") zw = true;
        }
        if (indexed)
            mode = FormMode::PnP1;
        else if (abc)
            mode = FormMode::Ternary;
        else if (zw)
            mode = FormMode::Bigraded;
        else if (!idents.empty())
            mode = FormMode::Binary;
        else
            throw parse_error("cannot infer the ambient ring from a constant expression");
    }

    auto check_vocab = [&](const std::set<std::string>& allowed) {
        for (const auto& t : toks)
            if (t.kind == Token::Ident && !allowed.count(t.text))
                throw parse_error("unknown variable '" + t.text + "' for this ambient",
                                  t.offset);
    };

    switch (mode) {
        case FormMode::Binary:
            check_vocab({"x", "y"});
            return VariableBlock::binary();
        case FormMode::Ternary: {
            bool abc = idents.count("a") || idents.count("b") || idents.count("c");
            bool xyz = idents.count("x") || idents.count("y") || idents.count("z");
            if (abc && xyz)
                throw parse_error("ternary forms may use x,y,z or a,b,c but not both");
            if (abc) {
                check_vocab({"a", "b", "c"});
                return VariableBlock({3}, {"a", "b", "c"});
            }
            check_vocab({"x", "y", "z"});
            return VariableBlock::ternary();
        }
        case FormMode::Bigraded:
            check_vocab({"x", "y", "z", "w"});
            return VariableBlock::p1xp1();
        case FormMode::PnP1: {
            std::size_t n = 0;
            bool any = false;
            std::set<std::string> allowed{"z", "w"};
            for (const auto& v : idents)
                if (is_indexed_x(v)) {
                    any = true;
                    n = std::max(n, static_cast<std::size_t>(std::stoul(v.substr(1))));
                    allowed.insert(v);
                }
            if (!any)
                throw parse_error("Pn x P1 forms need at least one indexed variable x0, x1, ...");
            check_vocab(allowed);
            return VariableBlock::pn_p1(n);
        }
        default: throw parse_error("unresolved variable mode");
    }
}

class Parser {
public:
    Parser(const std::vector<Token>& toks, const VariableBlock& ring)
        : toks_(toks), ring_(ring) {
        for (std::size_t v = 0; v < ring.total(); ++v) var_[ring.name(v)] = v;
    }

    GradedForm parse() {
        GradedForm f = expr();
        expect(Token::End, "end of input");
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    void expect(Token::Kind k, const char* what) {
        if (peek().kind != k)
            throw parse_error(std::string("expected ") + what + " near '" + peek().text + "'",
                              peek().offset);
        ++pos_;
    }

    GradedForm expr() {
        bool neg = false;
        if (peek().kind == Token::Plus)
            take();
        else if (peek().kind == Token::Minus) {
            take();
            neg = true;
        }
        GradedForm acc = term();
        if (neg) acc = -acc;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = take().kind == Token::Minus;
            GradedForm t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    GradedForm term() {
        GradedForm acc = factor();
        while (peek().kind == Token::Star) {
            take();
            acc = acc * factor();
        }
        return acc;
    }

    GradedForm factor() {
        GradedForm base = atom();
        if (peek().kind == Token::Caret) {
            take();
            if (peek().kind != Token::Number || peek().text.find('/') != std::string::npos)
                throw parse_error("exponent must be a nonnegative integer", peek().offset);
            unsigned long e = std::stoul(take().text);
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    GradedForm atom() {
        const Token& t = peek();
        if (t.kind == Token::Number) {
            take();
            return GradedForm::constant(ring_, parse_rational(t.text));
        }
        if (t.kind == Token::Ident) {
            take();
            auto it = var_.find(t.text);
            if (it == var_.end())
                throw parse_error("unknown variable '" + t.text + "'", t.offset);
            Exponents e(ring_.total(), 0);
            e[it->second] = 1;
            return GradedForm::monomial(ring_, e);
        }
        if (t.kind == Token::LParen) {
            take();
            GradedForm f = expr();
            expect(Token::RParen, "')'");
            return f;
        }
        throw parse_error("expected a number, variable, or '(' near '" + t.text + "'",
                          t.offset);
    }

    const std::vector<Token>& toks_;
    const VariableBlock& ring_;
    std::map<std::string, std::size_t> var_;
    std::size_t pos_ = 0;
};
}  // namespace

FormMode form_mode_from_string(const std::string& s) {
    if (s == "auto") return FormMode::Auto;
    if (s == "binary") return FormMode::Binary;
    if (s == "ternary") return FormMode::Ternary;
    if (s == "bigraded") return FormMode::Bigraded;
    if (s == "pnp1") return FormMode::PnP1;
    throw parse_error("unknown form mode '" + s + "'");
}

GradedForm parse_form(const std::string& text, FormMode mode) {
    std::vector<Token> toks = tokenize(text);
    VariableBlock ring = resolve_ring(toks, mode);
    GradedForm poly = Parser(toks, ring).parse();
    // Re-run through the homogeneity check to get a declared multidegree.
    std::vector<std::pair<Exponents, Rational>> terms(poly.terms().begin(),
                                                      poly.terms().end());
    if (terms.empty()) return GradedForm::zero(ring);
    return GradedForm::form(ring, terms);
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    std::size_t i = 0;
    bool neg = false;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        i = 1;
    }
    std::string num, den;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        num += text[i++];
    if (num.empty()) throw parse_error("malformed rational '" + text + "'");
    if (i < text.size()) {
        if (text[i] != '/') throw parse_error("malformed rational '" + text + "'", i);
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            den += text[i++];
        if (den.empty() || i != text.size())
            throw parse_error("malformed rational '" + text + "'", i);
    }
    Int n(num);
    Int d = den.empty() ? Int(1) : Int(den);
    if (d == 0) throw parse_error("zero denominator in '" + text + "'");
    Rational q(n, d);
    return neg ? Rational(-q) : q;
}

}  // namespace apolar
