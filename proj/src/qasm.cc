// Copyright 2026 The qdep Authors
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

// OpenQASM 2.0 subset: one qreg, gates u3/x/ry/cx. Angle arguments accept
// arithmetic over decimal literals and `pi`. A trailing `// label=NAME`
// comment on the line of a gate's `;` labels that gate.

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

#include "qdep/circuit.h"

namespace qdep::detail {

namespace {

struct Token {
    enum Kind { Ident, Number, String, Punct, End } kind;
    std::string text;
    size_t line;
};

struct Lexed {
    std::vector<Token> tokens;
    std::map<size_t, std::string> labels;
};

Lexed lex(std::string_view src) {
    Lexed out;
    size_t line = 1;
    size_t i = 0;
    while (i < src.size()) {
        char ch = src[i];
        if (ch == '\n') {
            line++;
            i++;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            i++;
        } else if (ch == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            size_t e = src.find('\n', i);
            std::string_view comment = src.substr(i + 2, e == std::string_view::npos ? std::string_view::npos : e - i - 2);
            size_t b = comment.find_first_not_of(" \t");
            if (b != std::string_view::npos && comment.substr(b).starts_with("label=")) {
                std::string_view name = comment.substr(b + 6);
                size_t last = name.find_last_not_of(" \t\r");
                out.labels[line] = std::string(name.substr(0, last == std::string_view::npos ? 0 : last + 1));
            }
            i = e == std::string_view::npos ? src.size() : e;
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                j++;
            }
            out.tokens.push_back({Token::Ident, std::string(src.substr(i, j - i)), line});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            size_t j = i;
            while (j < src.size() && (std::isdigit(static_cast<unsigned char>(src[j])) || src[j] == '.')) {
                j++;
            }
            if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
                size_t k = j + 1;
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) {
                    k++;
                }
                if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
                    j = k;
                    while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                        j++;
                    }
                }
            }
            out.tokens.push_back({Token::Number, std::string(src.substr(i, j - i)), line});
            i = j;
        } else if (ch == '"') {
            size_t e = src.find('"', i + 1);
            if (e == std::string_view::npos) {
                throw ParseError(line, "unterminated string literal");
            }
            out.tokens.push_back({Token::String, std::string(src.substr(i + 1, e - i - 1)), line});
            i = e + 1;
        } else {
            out.tokens.push_back({Token::Punct, std::string(1, ch), line});
            i++;
        }
    }
    out.tokens.push_back({Token::End, "", line});
    return out;
}

class QasmParser {
   public:
    explicit QasmParser(Lexed lexed) : lx_(std::move(lexed)) {
    }

    Circuit parse() {
        const Token &head = peek();
        if (head.kind != Token::Ident || head.text != "OPENQASM") {
            throw ParseError(head.line, "expected 'OPENQASM 2.0;' header");
        }
        next();
        const Token &ver = next();
        if (ver.kind != Token::Number || ver.text != "2.0") {
            throw ParseError(ver.line, "only OPENQASM 2.0 is supported");
        }
        expect(";");

        while (peek().kind != Token::End) {
            statement();
        }
        if (!circuit_) {
            throw ParseError(peek().line, "missing qreg declaration");
        }
        return *std::move(circuit_);
    }

   private:
    const Token &peek() const {
        return lx_.tokens[pos_];
    }
    const Token &next() {
        const Token &t = lx_.tokens[pos_];
        if (t.kind != Token::End) {
            pos_++;
        }
        return t;
    }
    bool accept(std::string_view punct) {
        if (peek().kind == Token::Punct && peek().text == punct) {
            pos_++;
            return true;
        }
        return false;
    }
    const Token &expect(std::string_view punct) {
        const Token &t = peek();
        if (t.kind != Token::Punct || t.text != punct) {
            throw ParseError(t.line, "expected '" + std::string(punct) + "', got '" + t.text + "'");
        }
        return next();
    }

    void statement() {
        const Token &t = next();
        if (t.kind != Token::Ident) {
            throw ParseError(t.line, "unexpected '" + t.text + "'");
        }
        if (t.text == "include") {
            const Token &file = next();
            if (file.kind != Token::String || file.text != "qelib1.inc") {
                throw ParseError(t.line, "unsupported construct 'include \"" + file.text + "\"'");
            }
            expect(";");
        } else if (t.text == "qreg") {
            if (circuit_) {
                throw ParseError(t.line, "unsupported construct: more than one qreg");
            }
            const Token &name = next();
            if (name.kind != Token::Ident) {
                throw ParseError(name.line, "expected register name");
            }
            reg_ = name.text;
            expect("[");
            size_t n = integer();
            expect("]");
            expect(";");
            if (n == 0) {
                throw ParseError(t.line, "qreg size must be at least 1");
            }
            circuit_.emplace(n);
        } else if (t.text == "u3" || t.text == "x" || t.text == "ry" || t.text == "cx") {
            gate(t);
        } else {
            throw ParseError(t.line, "unsupported construct '" + t.text + "'");
        }
    }

    void gate(const Token &head) {
        if (!circuit_) {
            throw ParseError(head.line, "gate before qreg declaration");
        }
        std::vector<double> args;
        if (accept("(")) {
            args.push_back(expr());
            while (accept(",")) {
                args.push_back(expr());
            }
            expect(")");
        }
        std::vector<Qubit> qs{operand()};
        while (accept(",")) {
            qs.push_back(operand());
        }
        const Token &semi = expect(";");
        std::optional<std::string> label;
        if (auto it = lx_.labels.find(semi.line); it != lx_.labels.end()) {
            label = it->second;
        }

        auto want = [&](size_t nargs, size_t nqubits) {
            if (args.size() != nargs || qs.size() != nqubits) {
                throw ParseError(head.line, "'" + head.text + "' takes " + std::to_string(nargs) + " parameter(s) and " +
                                                std::to_string(nqubits) + " qubit operand(s)");
            }
        };
        for (double a : args) {
            if (!std::isfinite(a)) {
                throw ParseError(head.line, "gate angles must be finite");
            }
        }
        try {
            if (head.text == "u3") {
                want(3, 1);
                circuit_->add_u3(qs[0], {args[0], args[1], args[2]}, label);
            } else if (head.text == "x") {
                want(0, 1);
                circuit_->add_x(qs[0], label);
            } else if (head.text == "ry") {
                want(1, 1);
                circuit_->add_ry(qs[0], args[0], label);
            } else {
                want(0, 2);
                circuit_->add_cx(qs[0], qs[1], label);
            }
        } catch (const ParseError &) {
            throw;
        } catch (const std::invalid_argument &e) {
            throw ParseError(head.line, e.what());
        }
    }

    Qubit operand() {
        const Token &name = next();
        if (name.kind != Token::Ident || name.text != reg_) {
            throw ParseError(name.line, "unknown register '" + name.text + "'");
        }
        if (peek().kind != Token::Punct || peek().text != "[") {
            throw ParseError(name.line, "unsupported construct: whole-register gate application");
        }
        expect("[");
        size_t idx = integer();
        expect("]");
        return static_cast<Qubit>(idx);
    }

    size_t integer() {
        const Token &t = next();
        size_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (t.kind != Token::Number || ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            throw ParseError(t.line, "expected an integer, got '" + t.text + "'");
        }
        return v;
    }

    double expr() {
        double v = term();
        while (true) {
            if (accept("+")) {
                v += term();
            } else if (accept("-")) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    double term() {
        double v = unary();
        while (true) {
            if (accept("*")) {
                v *= unary();
            } else if (accept("/")) {
                v /= unary();
            } else {
                return v;
            }
        }
    }
    double unary() {
        if (accept("-")) {
            return -unary();
        }
        if (accept("+")) {
            return unary();
        }
        return primary();
    }
    double primary() {
        const Token &t = next();
        if (t.kind == Token::Number) {
            double v = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
                throw ParseError(t.line, "malformed number '" + t.text + "'");
            }
            return v;
        }
        if (t.kind == Token::Ident && t.text == "pi") {
            return M_PI;
        }
        if (t.kind == Token::Punct && t.text == "(") {
            double v = expr();
            expect(")");
            return v;
        }
        if (t.kind == Token::Ident) {
            throw ParseError(t.line, "unsupported construct '" + t.text + "' in expression");
        }
        throw ParseError(t.line, "unexpected '" + t.text + "' in expression");
    }

    Lexed lx_;
    size_t pos_ = 0;
    std::string reg_;
    std::optional<Circuit> circuit_;
};

}  // namespace

Circuit parse_qasm2(std::string_view text) {
    return QasmParser(lex(text)).parse();
}

std::string serialize_qasm2(const Circuit &c) {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" + std::to_string(c.num_qubits()) + "];\n";
    auto reg = [](Qubit q) {
        return "q[" + std::to_string(q) + "]";
    };
    for (const auto &g : c.gates()) {
        switch (g.kind) {
            case GateKind::U3:
                out += "u3(" + format_double(g.params.theta) + "," + format_double(g.params.phi) + "," +
                       format_double(g.params.lam) + ") " + reg(g.target()) + ";";
                break;
            case GateKind::X:
                out += "x " + reg(g.target()) + ";";
                break;
            case GateKind::RY:
                out += "ry(" + format_double(g.params.theta) + ") " + reg(g.target()) + ";";
                break;
            case GateKind::CX:
                out += "cx " + reg(g.control()) + "," + reg(g.target()) + ";";
                break;
        }
        if (g.label) {
            out += " // label=" + *g.label;
        }
        out += "\n";
    }
    return out;
}

}  // namespace qdep::detail
