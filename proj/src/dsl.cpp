#include "stonework/dsl.hpp"

#include "stonework/order.hpp"

#include <cctype>
#include <sstream>

namespace stonework {

Logic parse_logic(const std::string& name) {
    if (name == "horn") return Logic::Horn;
    if (name == "coherent") return Logic::Coherent;
    if (name == "geometric") return Logic::Geometric;
    throw DomainError("unknown logic '" + name + "' (expected horn, coherent or geometric)");
}

std::string logic_name(Logic logic) {
    switch (logic) {
        case Logic::Horn: return "horn";
        case Logic::Coherent: return "coherent";
        case Logic::Geometric: return "geometric";
    }
    return "?";
}

Term Term::generator(int i) {
    Term t;
    t.op = Op::Gen;
    t.gen = i;
    return t;
}

Term Term::top() { return Term{}; }

Term Term::bottom() {
    Term t;
    t.op = Op::Bottom;
    return t;
}

Term Term::meet(std::vector<Term> args) {
    Term t;
    t.op = Op::Meet;
    t.args = std::move(args);
    return t;
}

Term Term::join(std::vector<Term> args) {
    Term t;
    t.op = Op::Join;
    t.args = std::move(args);
    return t;
}

int Presentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& gens) : s_(text), gens_(gens) {}

    Term term() {
        std::vector<Term> parts{conjunction()};
        while (eat_any({"|", "∨", "\\/"})) parts.push_back(conjunction());
        return parts.size() == 1 ? std::move(parts[0]) : Term::join(std::move(parts));
    }

    Relation relation() {
        Relation r;
        r.lhs = term();
        if (eat_any({"<=", "≤"})) {
            r.rhs = term();
        } else if (eat_any({">=", "≥"})) {
            r.rhs = std::move(r.lhs);
            r.lhs = term();
        } else if (eat_any({"="})) {
            r.equality = true;
            r.rhs = term();
        } else {
            fail("expected <=, >= or =");
        }
        return r;
    }

    void finish() {
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    }

private:
    Term conjunction() {
        std::vector<Term> parts{atom()};
        while (eat_any({"&", "∧", "/\\"})) parts.push_back(atom());
        return parts.size() == 1 ? std::move(parts[0]) : Term::meet(std::move(parts));
    }

    Term atom() {
        skip();
        if (eat_any({"("})) {
            Term t = term();
            expect(")");
            return t;
        }
        if (eat_any({"0", "⊥"})) return Term::bottom();
        if (eat_any({"1", "⊤"})) return Term::top();
        if (eat_any({"⋁"})) return Term::join(arguments());
        if (eat_any({"⋀"})) return Term::meet(arguments());
        std::string name = identifier();
        if (name.empty()) fail("expected a term");
        if (name == "join") return Term::join(arguments());
        if (name == "meet") return Term::meet(arguments());
        if (pos_ < s_.size() && s_[pos_] == '(') {
            const std::size_t close = s_.find(')', pos_);
            if (close == std::string::npos) fail("unbalanced parenthesis in generator name");
            name += s_.substr(pos_, close - pos_ + 1);
            pos_ = close + 1;
        }
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i] == name) return Term::generator(static_cast<int>(i));
        fail("undeclared generator '" + name + "'");
        return {};
    }

    std::vector<Term> arguments() {
        expect("(");
        std::vector<Term> args;
        skip();
        if (eat_any({")"})) return args;
        args.push_back(term());
        while (eat_any({","})) args.push_back(term());
        expect(")");
        return args;
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                    s_[pos_] == '\'' || s_[pos_] == '.'))
            ++pos_;
        if (start < pos_ && std::isdigit(static_cast<unsigned char>(s_[start]))) {
            pos_ = start;
            return {};
        }
        return s_.substr(start, pos_ - start);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat_any(std::initializer_list<const char*> tokens) {
        skip();
        for (const char* tok : tokens) {
            const std::string t(tok);
            if (s_.compare(pos_, t.size(), t) != 0) continue;
            // 0 and 1 must not swallow the start of a longer token.
            if ((t == "0" || t == "1") && pos_ + 1 < s_.size() &&
                (std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '_'))
                continue;
            pos_ += t.size();
            return true;
        }
        return false;
    }

    void expect(const char* tok) {
        if (!eat_any({tok})) fail(std::string("expected '") + tok + "'");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError(what + " at column " + std::to_string(pos_ + 1));
    }

    const std::string& s_;
    const std::vector<std::string>& gens_;
    std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool starts_with_word(const std::string& line, const std::string& word) {
    return line.size() > word.size() && line.compare(0, word.size(), word) == 0 &&
           std::isspace(static_cast<unsigned char>(line[word.size()]));
}

}  // namespace

Term parse_term(const std::string& text, const std::vector<std::string>& generators) {
    Parser p(text, generators);
    Term t = p.term();
    p.finish();
    return t;
}

Relation parse_relation(const std::string& text, const std::vector<std::string>& generators) {
    Parser p(text, generators);
    Relation r = p.relation();
    p.finish();
    return r;
}

Presentation parse_presentation(const std::string& text) {
    Presentation out;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool declared = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        try {
            if (starts_with_word(line, "logic")) {
                out.logic = parse_logic(trim(line.substr(5)));
            } else if (starts_with_word(line, "generators") || line == "generators") {
                if (declared) throw DomainError("generators declared twice");
                declared = true;
                std::string rest = line.substr(10);
                for (char& ch : rest)
                    if (ch == ',') ch = ' ';
                std::istringstream names(rest);
                std::string name;
                while (names >> name) {
                    if (out.generator_index(name) >= 0) throw DomainError("duplicate generator '" + name + "'");
                    out.generators.push_back(name);
                }
            } else {
                if (!declared) throw DomainError("relation before the generators line");
                Relation r = parse_relation(line, out.generators);
                r.line = line_no;
                out.relations.push_back(std::move(r));
            }
        } catch (const DomainError& e) {
            throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (auto v = fragment_violation(out); !v.empty()) throw DomainError(v);
    return out;
}

std::string term_string(const Term& t, const std::vector<std::string>& generators) {
    switch (t.op) {
        case Term::Op::Gen: return generators.at(t.gen);
        case Term::Op::Top: return "1";
        case Term::Op::Bottom: return "0";
        case Term::Op::Meet:
        case Term::Op::Join: {
            const bool meet = t.op == Term::Op::Meet;
            if (t.args.empty()) return meet ? "meet()" : "join()";
            if (t.args.size() == 1) return std::string(meet ? "meet(" : "join(") + term_string(t.args[0], generators) + ")";
            std::string out;
            for (std::size_t i = 0; i < t.args.size(); ++i) {
                if (i) out += meet ? " & " : " | ";
                std::string inner = term_string(t.args[i], generators);
                const bool wrap = meet && t.args[i].op == Term::Op::Join && t.args[i].args.size() > 1;
                out += wrap ? "(" + inner + ")" : inner;
            }
            return out;
        }
    }
    return "?";
}

std::string relation_string(const Relation& r, const std::vector<std::string>& generators) {
    return term_string(r.lhs, generators) + (r.equality ? " = " : " <= ") + term_string(r.rhs, generators);
}

std::string presentation_string(const Presentation& p) {
    std::string out = "logic " + logic_name(p.logic) + "\ngenerators";
    for (const auto& g : p.generators) out += " " + g;
    out += "\n";
    for (const auto& r : p.relations) out += relation_string(r, p.generators) + "\n";
    return out;
}

bool term_in_horn_fragment(const Term& t) {
    switch (t.op) {
        case Term::Op::Gen:
        case Term::Op::Top:
            return true;
        case Term::Op::Meet:
            for (const auto& a : t.args)
                if (!term_in_horn_fragment(a)) return false;
            return true;
        default:
            return false;
    }
}

std::string fragment_violation(const Presentation& p) {
    if (p.logic != Logic::Horn) return {};
    for (const auto& r : p.relations)
        if (!term_in_horn_fragment(r.lhs) || !term_in_horn_fragment(r.rhs))
            return "line " + std::to_string(r.line) + ": horn relations may only use 1 and meets: " +
                   relation_string(r, p.generators);
    return {};
}

}  // namespace stonework
