// Copyright 2026 The Pathsum Authors
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

#include "pathsum/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace pathsum {

namespace {

struct Token {
    std::string text;
    int line;
    int col;
};

// Splits into whitespace-separated tokens, dropping '#' comments.
std::vector<std::vector<Token>> tokenizeLines(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    int lineNo = 1;
    std::size_t i = 0;
    std::vector<Token> current;
    int col = 1;
    while (i <= text.size()) {
        char c = i < text.size() ? text[i] : '\n';
        if (c == '\n') {
            lines.push_back(std::move(current));
            current = {};
            ++lineNo;
            col = 1;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                ++i;
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++col;
            continue;
        }
        int startCol = col;
        std::string word;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '#') {
            word += text[i];
            ++i;
            ++col;
        }
        current.push_back({std::move(word), lineNo, startCol});
    }
    return lines;
}

// ------------------------------------------------------------- expressions

// Recursive-descent parser for polynomial text:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT ['/' INT] | VAR | '(' expr ')'
// Products and sums are computed exactly over the dyadics; the caller
// reduces mod 1 (phase) or mod 2 (outputs).
class ExprParser {
  public:
    ExprParser(std::string_view text, int line,
               const std::function<VarId(const std::string&, int, int)>& resolve)
        : text_(text), line_(line), resolve_(resolve) {}

    PhasePoly parse() {
        PhasePoly p = expr();
        skipSpace();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line_, static_cast<int>(pos_) + 1, message);
    }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skipSpace();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    PhasePoly expr() {
        bool negate = eat('-');
        PhasePoly acc = term();
        if (negate) {
            acc = acc.scaled(Dyadic(-1));
        }
        while (true) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    PhasePoly term() {
        PhasePoly acc = factor();
        while (eat('*')) {
            acc = acc.times(factor());
        }
        return acc;
    }

    PhasePoly factor() {
        char c = peek();
        if (c == '(') {
            eat('(');
            PhasePoly inner = expr();
            if (!eat(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt numerator = integer();
            if (eat('/')) {
                BigInt denominator = integer();
                std::int64_t exponent = 0;
                BigInt d = denominator;
                while (d > 1 && (d & 1) == 0) {
                    d >>= 1;
                    ++exponent;
                }
                if (d != 1) {
                    fail("denominator must be a power of 2");
                }
                return PhasePoly::constant(Dyadic(numerator, exponent));
            }
            return PhasePoly::constant(Dyadic(numerator, 0));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            int startCol = static_cast<int>(pos_) + 1;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                name += text_[pos_++];
            }
            VarId v = resolve_(name, line_, startCol);
            return PhasePoly::term(Monomial::var(v), Dyadic(1));
        }
        fail("expected a coefficient, variable or '('");
    }

    BigInt integer() {
        skipSpace();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits += text_[pos_++];
        }
        if (digits.empty()) {
            fail("expected a number");
        }
        return BigInt(digits);
    }

    std::string_view text_;
    int line_;
    std::function<VarId(const std::string&, int, int)> resolve_;
    std::size_t pos_ = 0;
};

// A Boolean polynomial is the mod-2 shadow of the exact parse: odd integer
// coefficients keep their monomial.
BoolPoly toBoolPoly(const PhasePoly& p, int line) {
    std::vector<Monomial> monos;
    for (const auto& [mono, coeff] : p.terms()) {
        if (!coeff.isInteger()) {
            throw ParseError(line, 1, "output polynomials must have integer coefficients");
        }
        if ((coeff.numerator() & 1) != 0) {
            monos.push_back(mono);
        }
    }
    return BoolPoly::fromMonomials(std::move(monos));
}

VarId parseVarName(const std::string& name, int line, int col) {
    if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) {
        throw ParseError(line, col, "expected a variable of the form x<k> or y<k>");
    }
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
            throw ParseError(line, col, "expected a variable of the form x<k> or y<k>");
        }
    }
    unsigned long index = std::stoul(name.substr(1));
    if (index == 0) {
        throw ParseError(line, col, "variable indices start at 1");
    }
    return name[0] == 'x' ? VarId::input(static_cast<std::uint32_t>(index - 1))
                          : VarId::path(static_cast<std::uint32_t>(index - 1));
}

std::string gateMnemonic(const Gate& g) {
    switch (g.kind) {
        case Gate::Kind::H:
            return "H";
        case Gate::Kind::X:
            return "X";
        case Gate::Kind::Y:
            return "Y";
        case Gate::Kind::Z:
            return "Z";
        case Gate::Kind::S:
            return "S";
        case Gate::Kind::Sdg:
            return "S*";
        case Gate::Kind::T:
            return "T";
        case Gate::Kind::Tdg:
            return "T*";
        case Gate::Kind::Rk:
            return "Rk(" + std::to_string(g.level) + ")";
        case Gate::Kind::Rkdg:
            return "Rk*(" + std::to_string(g.level) + ")";
        case Gate::Kind::Cnot:
            return "cnot";
        case Gate::Kind::Cz:
            return "cz";
        case Gate::Kind::Swap:
            return "swap";
        case Gate::Kind::Tof:
            return "tof";
    }
    return "?";
}

}  // namespace

Circuit parseCircuit(std::string_view text) {
    auto lines = tokenizeLines(text);
    Circuit c;
    std::map<std::string, std::uint32_t> names;

    enum class Stage { Declarations, Inputs, Gates, Done };
    Stage stage = Stage::Declarations;
    bool sawInputs = false;

    for (const auto& line : lines) {
        if (line.empty()) {
            continue;
        }
        const Token& head = line.front();
        switch (stage) {
            case Stage::Declarations: {
                if (head.text != ".v") {
                    throw ParseError(head.line, head.col, "expected '.v' qubit declarations");
                }
                for (std::size_t i = 1; i < line.size(); ++i) {
                    if (names.contains(line[i].text)) {
                        throw DuplicateQubit(line[i].line, line[i].col,
                                             "duplicate qubit '" + line[i].text + "'");
                    }
                    names[line[i].text] = c.addQubit(line[i].text, true);
                }
                if (c.qubitCount() == 0) {
                    throw ParseError(head.line, head.col, "'.v' declares no qubits");
                }
                stage = Stage::Inputs;
                break;
            }
            case Stage::Inputs: {
                if (head.text == ".i") {
                    sawInputs = true;
                    std::fill(c.primaryInput.begin(), c.primaryInput.end(), false);
                    for (std::size_t i = 1; i < line.size(); ++i) {
                        auto it = names.find(line[i].text);
                        if (it == names.end()) {
                            throw UndeclaredQubit(line[i].line, line[i].col,
                                                  "undeclared qubit '" + line[i].text + "'");
                        }
                        c.primaryInput[it->second] = true;
                    }
                    break;
                }
                if (head.text == "BEGIN") {
                    stage = Stage::Gates;
                    break;
                }
                throw ParseError(head.line, head.col,
                                 sawInputs ? "expected 'BEGIN'" : "expected '.i' or 'BEGIN'");
            }
            case Stage::Gates: {
                if (head.text == "END") {
                    stage = Stage::Done;
                    break;
                }
                std::vector<std::uint32_t> operands;
                for (std::size_t i = 1; i < line.size(); ++i) {
                    auto it = names.find(line[i].text);
                    if (it == names.end()) {
                        throw UndeclaredQubit(line[i].line, line[i].col,
                                              "undeclared qubit '" + line[i].text + "'");
                    }
                    operands.push_back(it->second);
                }
                Gate g;
                const std::string& name = head.text;
                if (name == "H") {
                    g.kind = Gate::Kind::H;
                } else if (name == "X") {
                    g.kind = Gate::Kind::X;
                } else if (name == "Y") {
                    g.kind = Gate::Kind::Y;
                } else if (name == "Z") {
                    g.kind = Gate::Kind::Z;
                } else if (name == "S") {
                    g.kind = Gate::Kind::S;
                } else if (name == "S*") {
                    g.kind = Gate::Kind::Sdg;
                } else if (name == "T") {
                    g.kind = Gate::Kind::T;
                } else if (name == "T*") {
                    g.kind = Gate::Kind::Tdg;
                } else if (name == "cnot") {
                    g.kind = Gate::Kind::Cnot;
                } else if (name == "cz") {
                    g.kind = Gate::Kind::Cz;
                } else if (name == "swap") {
                    g.kind = Gate::Kind::Swap;
                } else if (name == "tof") {
                    if (operands.size() == 1) {
                        g.kind = Gate::Kind::X;
                    } else if (operands.size() == 2) {
                        g.kind = Gate::Kind::Cnot;
                    } else {
                        g.kind = Gate::Kind::Tof;
                    }
                } else if (name.starts_with("Rk")) {
                    std::size_t p = 2;
                    g.kind = Gate::Kind::Rk;
                    if (p < name.size() && name[p] == '*') {
                        g.kind = Gate::Kind::Rkdg;
                        ++p;
                    }
                    if (p >= name.size() || name[p] != '(' || name.back() != ')') {
                        throw ParseError(head.line, head.col, "expected Rk(<k>) or Rk*(<k>)");
                    }
                    std::string digits = name.substr(p + 1, name.size() - p - 2);
                    if (digits.empty() ||
                        !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) {
                            return std::isdigit(ch);
                        })) {
                        throw ParseError(head.line, head.col, "expected Rk(<k>) or Rk*(<k>)");
                    }
                    try {
                        g.level = std::stoi(digits);
                    } catch (...) {
                        throw ParseError(head.line, head.col, "rotation level out of range");
                    }
                } else {
                    throw ParseError(head.line, head.col, "unknown gate '" + name + "'");
                }
                g.qubits = std::move(operands);
                try {
                    c.add(std::move(g));
                } catch (const InvalidGate& e) {
                    throw ParseError(head.line, head.col, e.what());
                }
                break;
            }
            case Stage::Done:
                throw ParseError(head.line, head.col, "unexpected input after 'END'");
        }
    }
    if (stage != Stage::Done) {
        throw ParseError(static_cast<int>(lines.size()), 1, "missing 'BEGIN'/'END' block");
    }
    return c;
}

std::string printCircuit(const Circuit& c) {
    std::ostringstream out;
    out << ".v";
    for (const std::string& name : c.qubitNames) {
        out << " " << name;
    }
    out << "\n.i";
    for (std::size_t i = 0; i < c.qubitCount(); ++i) {
        if (c.primaryInput[i]) {
            out << " " << c.qubitNames[i];
        }
    }
    out << "\nBEGIN\n";
    for (const Gate& g : c.gates) {
        out << gateMnemonic(g);
        for (std::uint32_t q : g.qubits) {
            out << " " << c.qubitNames[q];
        }
        out << "\n";
    }
    out << "END\n";
    return out.str();
}

PathSum parsePathSumSpec(std::string_view text) {
    auto allLines = tokenizeLines(text);
    struct Field {
        std::string value;
        int line;
    };
    // Reassemble "key: value" records in fixed order.
    std::vector<std::pair<std::string, Field>> fields;
    for (const auto& line : allLines) {
        if (line.empty()) {
            continue;
        }
        std::string key = line.front().text;
        if (key.back() != ':') {
            throw ParseError(line.front().line, line.front().col, "expected '<key>:'");
        }
        key.pop_back();
        std::string value;
        for (std::size_t i = 1; i < line.size(); ++i) {
            if (i > 1) {
                value += " ";
            }
            value += line[i].text;
        }
        fields.emplace_back(key, Field{value, line.front().line});
    }
    const char* expected[] = {"qubits", "inputs", "paths", "amp", "phase", "out"};
    if (fields.size() != 6) {
        throw ParseError(1, 1, "expected exactly the fields qubits/inputs/paths/amp/phase/out");
    }
    for (std::size_t i = 0; i < 6; ++i) {
        if (fields[i].first != expected[i]) {
            throw ParseError(fields[i].second.line, 1,
                             "expected field '" + std::string(expected[i]) + "'");
        }
    }

    auto splitWs = [](const std::string& s) {
        std::istringstream in(s);
        std::vector<std::string> out;
        std::string w;
        while (in >> w) {
            out.push_back(w);
        }
        return out;
    };

    int line = fields[0].second.line;
    std::size_t qubits = 0;
    try {
        qubits = std::stoul(fields[0].second.value);
    } catch (...) {
        throw ParseError(line, 1, "qubits: expects a number");
    }

    // inputs: variable names or literals.
    std::vector<SignatureEntry> signature;
    std::set<VarId> declaredInputs;
    line = fields[1].second.line;
    for (const std::string& tok : splitWs(fields[1].second.value)) {
        if (tok == "0" || tok == "1") {
            signature.push_back(SignatureEntry::constant(tok == "1"));
            continue;
        }
        VarId v = parseVarName(tok, line, 1);
        if (!v.isInput()) {
            throw ParseError(line, 1, "signature entries must be x<k> variables or 0/1");
        }
        if (!declaredInputs.insert(v).second) {
            throw ParseError(line, 1, "repeated signature variable " + tok);
        }
        signature.push_back(SignatureEntry::var(v));
    }
    if (signature.size() != qubits) {
        throw ParseError(line, 1, "inputs: entry count differs from qubits");
    }

    std::vector<std::uint32_t> paths;
    std::set<VarId> declaredPaths;
    line = fields[2].second.line;
    for (const std::string& tok : splitWs(fields[2].second.value)) {
        VarId v = parseVarName(tok, line, 1);
        if (!v.isPath()) {
            throw ParseError(line, 1, "path entries must be y<k> variables");
        }
        if (!declaredPaths.insert(v).second) {
            throw ParseError(line, 1, "repeated path variable " + tok);
        }
        paths.push_back(v.index());
    }

    line = fields[3].second.line;
    long amp = 0;
    try {
        amp = std::stol(fields[3].second.value);
    } catch (...) {
        throw ParseError(line, 1, "amp: expects a number");
    }
    if (amp < 0) {
        throw ParseError(line, 1, "amp: must be nonnegative");
    }

    auto resolve = [&](const std::string& name, int l, int col) {
        VarId v = parseVarName(name, l, col);
        if (v.isInput() ? !declaredInputs.contains(v) : !declaredPaths.contains(v)) {
            throw ParseError(l, col, "undeclared variable " + name);
        }
        return v;
    };

    line = fields[4].second.line;
    PhasePoly phase =
        ExprParser(fields[4].second.value, line, resolve).parse().reducedMod1();

    // out: comma-separated Boolean polynomials.
    line = fields[5].second.line;
    std::vector<BoolPoly> outputs;
    const std::string& outText = fields[5].second.value;
    std::size_t start = 0;
    while (start <= outText.size()) {
        std::size_t comma = outText.find(',', start);
        std::string piece = outText.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (piece.find_first_not_of(" \t") != std::string::npos) {
            outputs.push_back(toBoolPoly(ExprParser(piece, line, resolve).parse(), line));
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (outputs.size() != qubits) {
        throw ParseError(line, 1, "out: entry count differs from qubits");
    }

    try {
        return PathSum::fromParts(std::move(signature), std::move(paths), amp, std::move(phase),
                                  std::move(outputs));
    } catch (const Error& e) {
        throw ParseError(line, 1, e.what());
    }
}

std::string printPathSum(const PathSum& s) {
    std::ostringstream out;
    out << "qubits: " << s.qubitCount() << "\n";
    out << "inputs:";
    for (const SignatureEntry& e : s.signature()) {
        out << " " << (e.isVar() ? e.variable().str() : (e.constantValue() ? "1" : "0"));
    }
    out << "\npaths:";
    for (std::uint32_t y : s.pathVars()) {
        out << " " << VarId::path(y).str();
    }
    out << "\namp: " << s.ampExponent() << "\n";
    out << "phase: " << s.phase().str() << "\n";
    out << "out: ";
    for (std::size_t i = 0; i < s.outputs().size(); ++i) {
        if (i > 0) {
            out << ", ";
        }
        out << s.outputs()[i].str();
    }
    out << "\n";
    return out.str();
}

}  // namespace pathsum
