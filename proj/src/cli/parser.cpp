/*
   Copyright 2026 The expocalc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "expocalc/cli/parser.hpp"

#include <cctype>
#include <functional>
#include <numeric>

#include "expocalc/errors.hpp"

namespace expocalc::dsl {

namespace {

constexpr int kMaxPower = 64;

struct Token {
    enum Kind { Number, Ident, Symbol, End };
    Kind kind = End;
    std::string text;
    int line = 1;
    int column = 1;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t s = 0; s < n; ++s, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        Token t{Token::End, "", line, column};
        std::size_t j = i;
        if (std::isdigit(c)) {
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.kind = Token::Number;
        } else if (std::isalpha(c) || c == '_') {
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            t.kind = Token::Ident;
        } else if (std::string("+-*/^()[],;").find(static_cast<char>(c)) != std::string::npos) {
            j = i + 1;
            t.kind = Token::Symbol;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, column);
        }
        t.text = text.substr(i, j - i);
        out.push_back(t);
        advance(j - i);
    }
    out.push_back(Token{Token::End, "", line, column});
    return out;
}

std::int64_t to_int(const Token& t) {
    if (t.text.size() > 15) throw ParseError("integer literal too large", t.line, t.column);
    return std::stoll(t.text);
}

bool variable_index(const std::string& ident, char prefix, int& index) {
    if (ident.size() < 2 || ident[0] != prefix) return false;
    for (std::size_t k = 1; k < ident.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(ident[k]))) return false;
    }
    if (ident.size() > 6) return false;
    index = std::stoi(ident.substr(1));
    return true;
}

std::optional<Cyclotomic> as_constant(const ExpoPoly& f) {
    if (f.vector_dim() != 1) return std::nullopt;
    if (f.is_zero()) return Cyclotomic(f.order());
    if (f.terms().size() != 1) return std::nullopt;
    const auto& t = f.terms().front();
    if (!t.exponential.is_trivial() || t.polynomial.degree() != 0) return std::nullopt;
    return t.polynomial.terms().begin()->second[0];
}

class Parser {
   public:
    Parser(const std::string& text, const GroupSpec& group, int order)
        : tokens_(tokenize(text)), group_(group), order_(order) {}

    ExpoPoly parse_all() {
        ExpoPoly f = expr();
        expect_end();
        return f;
    }

    std::vector<Exponential> exponential_list() {
        std::vector<Exponential> out;
        while (true) {
            const Token start = peek();
            ExpoPoly f = expr();
            if (f.vector_dim() != 1 || f.terms().size() != 1 || f.terms().front().polynomial.degree() != 0 ||
                !(f.terms().front().polynomial.terms().begin()->second[0] == Cyclotomic(order_, 1))) {
                throw ParseError("expected an exponential atom exp[...]", start.line, start.column);
            }
            out.push_back(f.terms().front().exponential);
            if (!accept(",")) break;
        }
        expect_end();
        return out;
    }

   private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    bool accept(const char* symbol) {
        if (peek().kind == Token::Symbol && peek().text == symbol) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token& expect(const char* symbol) {
        if (peek().kind != Token::Symbol || peek().text != symbol) fail(peek(), std::string("expected '") + symbol + "'");
        return next();
    }

    void expect_end() {
        if (peek().kind != Token::End) fail(peek(), "unexpected '" + peek().text + "'");
    }

    [[noreturn]] static void fail(const Token& at, const std::string& message) {
        throw ParseError(at.kind == Token::End ? message + " at end of input" : message, at.line, at.column);
    }

    template <class Fn>
    ExpoPoly guarded(const Token& at, Fn&& fn) {
        try {
            return fn();
        } catch (const DomainError& e) {
            fail(at, e.what());
        }
    }

    ExpoPoly constant(const Cyclotomic& c) const { return ExpoPoly::constant(group_, {c}, order_); }

    ExpoPoly expr() {
        ExpoPoly acc = term();
        while (peek().kind == Token::Symbol && (peek().text == "+" || peek().text == "-")) {
            const Token op = next();
            ExpoPoly rhs = term();
            acc = guarded(op, [&] {
                check_same_dim(op, acc, rhs);
                return op.text == "+" ? acc + rhs : acc - rhs;
            });
        }
        return acc;
    }

    static void check_same_dim(const Token& op, const ExpoPoly& a, const ExpoPoly& b) {
        if (a.vector_dim() != b.vector_dim()) {
            fail(op, "cannot add values of dimension " + std::to_string(a.vector_dim()) + " and " +
                         std::to_string(b.vector_dim()));
        }
    }

    ExpoPoly term() {
        ExpoPoly acc = unary();
        while (peek().kind == Token::Symbol && (peek().text == "*" || peek().text == "/")) {
            const Token op = next();
            ExpoPoly rhs = unary();
            if (op.text == "*") {
                acc = guarded(op, [&] {
                    if (acc.vector_dim() != 1 && rhs.vector_dim() != 1) fail(op, "cannot multiply two vectors");
                    return acc.times(rhs);
                });
            } else {
                const auto c = as_constant(rhs);
                if (!c) fail(op, "division is only allowed by a constant");
                if (c->is_zero()) fail(op, "division by zero");
                acc = acc.scaled(c->inverse());
            }
        }
        return acc;
    }

    ExpoPoly unary() {
        if (peek().kind == Token::Symbol && peek().text == "-") {
            next();
            return unary().scaled(Cyclotomic(order_, -1));
        }
        if (accept("+")) return unary();
        return power();
    }

    ExpoPoly power() {
        ExpoPoly base = primary();
        if (peek().kind != Token::Symbol || peek().text != "^") return base;
        const Token op = next();
        const bool negative = accept("-");
        if (peek().kind != Token::Number) fail(peek(), "exponent must be an integer literal");
        std::int64_t n = to_int(next());
        if (n > kMaxPower) fail(op, "exponent exceeds " + std::to_string(kMaxPower));
        if (negative) base = invert(op, base);
        return guarded(op, [&] {
            ExpoPoly result = constant(Cyclotomic(order_, 1));
            if (base.vector_dim() != 1) {
                if (n != 1) fail(op, "vectors cannot be raised to a power");
                return base;
            }
            for (std::int64_t k = 0; k < n; ++k) result = result.times(base);
            return result;
        });
    }

    ExpoPoly invert(const Token& op, const ExpoPoly& base) {
        if (base.vector_dim() == 1 && base.terms().size() == 1 && base.terms().front().polynomial.degree() == 0) {
            const auto& t = base.terms().front();
            const Cyclotomic c = t.polynomial.terms().begin()->second[0];
            const VectorPolynomial p = VectorPolynomial::constant(group_.free_rank(), {c.inverse()}, order_);
            return ExpoPoly::single(group_, t.exponential.inverse(), p);
        }
        fail(op, "negative powers are only allowed for a nonzero constant or a single exponential");
    }

    ExpoPoly primary() {
        const Token t = next();
        if (t.kind == Token::Number) return constant(Cyclotomic(order_, Rational(to_int(t))));
        if (t.kind == Token::Symbol && t.text == "(") {
            ExpoPoly f = expr();
            expect(")");
            return f;
        }
        if (t.kind == Token::Symbol && t.text == "[") return vector_literal(t);
        if (t.kind != Token::Ident) fail(t, t.kind == Token::End ? "expected an expression" : "unexpected '" + t.text + "'");
        if (t.text == "i") {
            if (order_ % 4 != 0) fail(t, "i needs a cyclotomic order divisible by 4");
            return constant(Cyclotomic::imaginary_unit(order_));
        }
        if (t.text == "zeta") {
            expect("(");
            const Token nt = peek();
            if (nt.kind != Token::Number) fail(nt, "zeta expects a positive integer");
            const std::int64_t n = to_int(next());
            expect(")");
            if (n < 1) fail(nt, "zeta expects a positive integer");
            if (order_ % n != 0) {
                fail(nt, "zeta(" + std::to_string(n) + ") does not lie in Q(zeta_" + std::to_string(order_) + ")");
            }
            return constant(Cyclotomic::root_of_unity(n, 1, order_));
        }
        if (t.text == "exp") return exponential_atom(t);
        int index = 0;
        if (variable_index(t.text, 'x', index)) {
            if (index < 1 || index > group_.free_rank()) {
                fail(t, "variable " + t.text + " out of range for " + group_.to_string() + " (free rank " +
                            std::to_string(group_.free_rank()) + ")");
            }
            Exponent e(group_.free_rank(), 0);
            e[index - 1] = 1;
            const VectorPolynomial p = VectorPolynomial::monomial(group_.free_rank(), e, {Cyclotomic(order_, 1)}, order_);
            return ExpoPoly::single(group_, Exponential::trivial(group_, order_), p);
        }
        if (variable_index(t.text, 'y', index)) {
            fail(t, "torsion coordinate " + t.text +
                        " cannot appear in a polynomial: additive maps vanish on elements of finite order; "
                        "use an exponential atom exp[...; w] instead");
        }
        fail(t, "unknown identifier '" + t.text + "'");
    }

    ExpoPoly vector_literal(const Token& open) {
        std::vector<ExpoPoly> entries;
        std::vector<Token> starts;
        do {
            starts.push_back(peek());
            entries.push_back(expr());
        } while (accept(","));
        expect("]");
        const int k = static_cast<int>(entries.size());
        ExpoPoly out(group_, k, order_);
        for (int j = 0; j < k; ++j) {
            if (entries[j].vector_dim() != 1) fail(starts[j], "vector entries must be scalar");
            std::vector<Cyclotomic> unit(k, Cyclotomic(order_));
            unit[j] = Cyclotomic(order_, 1);
            out = guarded(open, [&] { return out + entries[j].times(ExpoPoly::constant(group_, unit, order_)); });
        }
        return out;
    }

    Cyclotomic constant_entry() {
        const Token start = peek();
        const ExpoPoly f = expr();
        const auto c = as_constant(f);
        if (!c) fail(start, "exponential values must be constants");
        return *c;
    }

    ExpoPoly exponential_atom(const Token& at) {
        expect("[");
        std::vector<Cyclotomic> free, torsion;
        auto read_list = [&](std::vector<Cyclotomic>& into, const char* stop) {
            if (peek().kind == Token::Symbol && (peek().text == stop || peek().text == "]")) return;
            do {
                into.push_back(constant_entry());
            } while (accept(","));
        };
        read_list(free, ";");
        if (accept(";")) read_list(torsion, "]");
        expect("]");
        if (static_cast<int>(free.size()) != group_.free_rank() ||
            static_cast<int>(torsion.size()) != group_.torsion_count()) {
            fail(at, "exp[...] needs " + std::to_string(group_.free_rank()) + " free and " +
                         std::to_string(group_.torsion_count()) + " torsion values for " + group_.to_string());
        }
        return guarded(at, [&] {
            const Exponential m(group_, order_, std::move(free), std::move(torsion));
            return ExpoPoly::single(group_, m, VectorPolynomial::constant(group_.free_rank(), {Cyclotomic(order_, 1)}, order_));
        });
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    GroupSpec group_;
    int order_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string join_signed(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0) {
            out = parts[i];
        } else if (parts[i][0] == '-') {
            out += " - " + parts[i].substr(1);
        } else {
            out += " + " + parts[i];
        }
    }
    return out;
}

std::vector<std::string> cyclotomic_parts(const Cyclotomic& c) {
    std::vector<std::string> parts;
    const int n = c.order();
    const auto& coeffs = c.coeffs();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const Rational& q = coeffs[j];
        if (q == 0) continue;
        if (j == 0) {
            parts.push_back(rational_to_string(q));
            continue;
        }
        std::string atom = n == 4 ? "i" : "zeta(" + std::to_string(n) + ")";
        if (j > 1) atom += "^" + std::to_string(j);
        if (q == 1) {
            parts.push_back(atom);
        } else if (q == -1) {
            parts.push_back("-" + atom);
        } else {
            parts.push_back(rational_to_string(q) + "*" + atom);
        }
    }
    return parts;
}

std::string print_scalar(const ExpoPoly& f) {
    std::vector<std::string> parts;
    for (const auto& t : f.terms()) {
        const std::string ex = t.exponential.is_trivial() ? "" : print(t.exponential);
        for (const auto& [e, coeff] : t.polynomial.terms()) {
            std::vector<std::string> factors;
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                factors.push_back("x" + std::to_string(v + 1) + (e[v] > 1 ? "^" + std::to_string(e[v]) : ""));
            }
            if (!ex.empty()) factors.push_back(ex);
            const std::string body = join(factors, "*");
            const auto cparts = cyclotomic_parts(coeff[0]);
            if (body.empty()) {
                parts.push_back(cparts.size() == 1 ? cparts[0] : "(" + join_signed(cparts) + ")");
            } else if (cparts.size() == 1 && cparts[0] == "1") {
                parts.push_back(body);
            } else if (cparts.size() == 1 && cparts[0] == "-1") {
                parts.push_back("-" + body);
            } else if (cparts.size() == 1) {
                parts.push_back(cparts[0] + "*" + body);
            } else {
                parts.push_back("(" + join_signed(cparts) + ")*" + body);
            }
        }
    }
    return parts.empty() ? "0" : join_signed(parts);
}

}  // namespace

GroupSpec parse_group(const std::string& text) {
    int free_rank = 0;
    std::vector<std::int64_t> torsion;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&]() -> std::int64_t {
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i || i - start > 9) {
            throw ParseError("expected a number in group literal", 1, static_cast<int>(start) + 1);
        }
        return std::stoll(text.substr(start, i - start));
    };
    skip();
    if (i == text.size()) throw ParseError("empty group literal", 1, 1);
    while (true) {
        skip();
        if (i >= text.size() || text[i] != 'Z') {
            throw ParseError("expected 'Z' in group literal", 1, static_cast<int>(i) + 1);
        }
        ++i;
        if (i < text.size() && text[i] == '^') {
            ++i;
            free_rank += static_cast<int>(number());
        } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            const std::size_t at = i;
            const std::int64_t n = number();
            if (n < 2) throw ParseError("cyclic factor order must be at least 2", 1, static_cast<int>(at) + 1);
            torsion.push_back(n);
        } else {
            ++free_rank;
        }
        skip();
        if (i == text.size()) break;
        if (text[i] != 'x') throw ParseError("expected 'x' between group factors", 1, static_cast<int>(i) + 1);
        ++i;
    }
    return GroupSpec(free_rank, std::move(torsion));
}

OrderResolution resolve_order(const std::vector<std::string>& texts, const GroupSpec& group,
                              std::optional<int> explicit_order) {
    const std::int64_t base = group.minimal_cyclotomic_order();
    if (explicit_order) {
        if (*explicit_order < 1 || *explicit_order % base != 0) {
            throw PreconditionError("--order " + std::to_string(*explicit_order) + " must be a multiple of " +
                                    std::to_string(base) + " for " + group.to_string());
        }
        return OrderResolution{*explicit_order, {}};
    }
    std::int64_t order = base;
    std::vector<std::int64_t> raised_by;
    for (const auto& text : texts) {
        const auto tokens = tokenize(text);
        for (std::size_t k = 0; k + 3 < tokens.size(); ++k) {
            if (tokens[k].kind == Token::Ident && tokens[k].text == "zeta" && tokens[k + 1].text == "(" &&
                tokens[k + 2].kind == Token::Number) {
                const std::int64_t n = to_int(tokens[k + 2]);
                if (n < 1) throw ParseError("zeta expects a positive integer", tokens[k + 2].line, tokens[k + 2].column);
                if (order % n != 0) raised_by.push_back(n);
                order = std::lcm(order, n);
            }
        }
    }
    if (order > 1 << 12) throw PreconditionError("cyclotomic order " + std::to_string(order) + " is too large");
    OrderResolution out{static_cast<int>(order), {}};
    if (order != base) {
        std::string which;
        for (auto n : raised_by) which += (which.empty() ? "zeta(" : ", zeta(") + std::to_string(n) + ")";
        out.notices.push_back("cyclotomic order raised from " + std::to_string(base) + " to " + std::to_string(order) +
                              " for " + which);
    }
    return out;
}

ExpoPoly parse(const std::string& text, const GroupSpec& group, int order) {
    return Parser(text, group, order).parse_all();
}

std::vector<Exponential> parse_exponentials(const std::string& text, const GroupSpec& group, int order) {
    return Parser(text, group, order).exponential_list();
}

GroupElement parse_point(const std::string& text, const GroupSpec& group) {
    std::vector<std::int64_t> coords[2];
    int part = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
        } else if (c == ';') {
            if (part == 1) throw ParseError("point has more than one ';'", 1, static_cast<int>(i) + 1);
            part = 1;
            ++i;
        } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = i;
            if (c == '-') ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i - start > 15 || (c == '-' && i == start + 1)) {
                throw ParseError("bad integer in point", 1, static_cast<int>(start) + 1);
            }
            coords[part].push_back(std::stoll(text.substr(start, i - start)));
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in point", 1, static_cast<int>(i) + 1);
        }
    }
    if (static_cast<int>(coords[0].size()) != group.free_rank() ||
        static_cast<int>(coords[1].size()) != group.torsion_count()) {
        throw ParseError("point needs " + std::to_string(group.free_rank()) + " free and " +
                             std::to_string(group.torsion_count()) + " torsion coordinates",
                         1, 1);
    }
    return group.element(coords[0], coords[1]);
}

std::string print(const Cyclotomic& c) {
    const auto parts = cyclotomic_parts(c);
    return parts.empty() ? "0" : join_signed(parts);
}

std::string print(const Exponential& m) {
    std::vector<std::string> free, torsion;
    for (const auto& v : m.free_values()) free.push_back(print(v));
    for (const auto& v : m.torsion_values()) torsion.push_back(print(v));
    return "exp[" + join(free, ", ") + ";" + (torsion.empty() ? "" : " " + join(torsion, ", ")) + "]";
}

std::string print(const ExpoPoly& f) {
    if (f.vector_dim() == 1) return print_scalar(f);
    std::vector<std::string> entries;
    for (int j = 0; j < f.vector_dim(); ++j) {
        std::vector<Cyclotomic> u(f.vector_dim(), Cyclotomic(f.order()));
        u[j] = Cyclotomic(f.order(), 1);
        entries.push_back(print_scalar(f.compose_functional(u)));
    }
    return "[" + join(entries, ", ") + "]";
}

}  // namespace expocalc::dsl
