#include "qccd/qasm.hpp"

#include <cctype>
#include <set>
#include <unordered_set>

namespace qccd {

namespace {

const std::unordered_set<std::string> kOneQubitGates = {
    "h", "x", "y", "z", "s", "t", "sdg", "tdg",
    "rx", "ry", "rz", "u1", "u2", "u3", "id", "sx", "sy"};

const std::unordered_set<std::string> kTwoQubitGates = {"cx", "cz", "ms", "swap"};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_' || text_[pos_] == '.'))
            advance();
        if (start == pos_) fail("expected identifier");
        return text_.substr(start, pos_ - start);
    }

    int integer() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            advance();
        if (start == pos_) fail("expected integer");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    // Consumes a balanced parenthesized parameter list, contents discarded.
    void skip_params() {
        if (!accept('(')) return;
        int depth = 1;
        while (pos_ < text_.size() && depth > 0) {
            if (text_[pos_] == '(') ++depth;
            if (text_[pos_] == ')') --depth;
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 0;
            }
            advance();
        }
        if (depth != 0) fail("unterminated parameter list");
    }

    void skip_string() {
        skip_space();
        expect('"');
        while (pos_ < text_.size() && text_[pos_] != '"') advance();
        expect('"');
    }

    [[noreturn]] void fail(const std::string& msg) { throw QasmError(line_, col_, msg); }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    void advance() {
        ++pos_;
        ++col_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

Circuit parse_qasm(const std::string& text) {
    Lexer lex(text);
    Circuit c;
    std::string qreg_name;
    bool have_qreg = false;

    auto operand = [&](const std::string& ctx) -> int {
        std::string name = lex.ident();
        if (!have_qreg) lex.fail("qubit operand before qreg declaration");
        if (name != qreg_name) lex.fail("unknown register '" + name + "' in " + ctx);
        lex.expect('[');
        int idx = lex.integer();
        lex.expect(']');
        if (idx < 0 || idx >= c.num_qubits)
            lex.fail("qubit index " + std::to_string(idx) + " out of range");
        return idx;
    };

    while (!lex.eof()) {
        std::string word = lex.ident();
        if (word == "OPENQASM") {
            lex.ident();  // version number
            lex.expect(';');
        } else if (word == "include") {
            lex.skip_string();
            lex.expect(';');
        } else if (word == "qreg") {
            if (have_qreg) lex.fail("multiple qreg declarations are not supported");
            qreg_name = lex.ident();
            lex.expect('[');
            c.num_qubits = lex.integer();
            lex.expect(']');
            lex.expect(';');
            have_qreg = true;
        } else if (word == "creg") {
            lex.ident();
            lex.expect('[');
            lex.integer();
            lex.expect(']');
            lex.expect(';');
        } else if (word == "barrier") {
            // no scheduling effect in this model; consume operands
            while (!lex.accept(';')) {
                operand("barrier");
                lex.accept(',');
            }
        } else if (word == "if" || word == "reset" || word == "gate" || word == "opaque") {
            lex.fail("construct '" + word + "' is not supported");
        } else if (word == "measure") {
            int q = operand("measure");
            lex.skip_space();
            lex.expect('-');
            lex.expect('>');
            lex.ident();
            lex.expect('[');
            lex.integer();
            lex.expect(']');
            lex.expect(';');
            c.add_measure(q);
        } else if (kOneQubitGates.count(word)) {
            lex.skip_params();
            int q = operand(word);
            lex.expect(';');
            c.add_1q(word, q);
        } else if (kTwoQubitGates.count(word)) {
            lex.skip_params();
            int a = operand(word);
            lex.expect(',');
            int b = operand(word);
            lex.expect(';');
            if (a == b) lex.fail("two-qubit gate needs distinct operands");
            if (word == "swap") {
                // 3 MS-gate decomposition
                c.add_2q(a, b);
                c.add_2q(a, b);
                c.add_2q(a, b);
            } else {
                c.add_2q(a, b);
            }
        } else {
            lex.fail("unknown gate '" + word + "'");
        }
    }
    if (!have_qreg) throw QasmError(lex.line(), lex.col(), "missing qreg declaration");
    c.check();
    return c;
}

}  // namespace qccd
