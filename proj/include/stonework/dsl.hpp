#pragma once

#include <string>
#include <vector>

namespace stonework {

enum class Logic { Horn, Coherent, Geometric };

Logic parse_logic(const std::string& name);  // horn | coherent | geometric
std::string logic_name(Logic logic);

// Closed term over generator constants, 0, 1, binary/finite meets and joins.
struct Term {
    enum class Op { Gen, Top, Bottom, Meet, Join };
    Op op = Op::Top;
    int gen = -1;
    std::vector<Term> args;

    static Term generator(int i);
    static Term top();
    static Term bottom();
    static Term meet(std::vector<Term> args);
    static Term join(std::vector<Term> args);
};

struct Relation {
    Term lhs;
    Term rhs;
    bool equality = false;  // otherwise lhs <= rhs
    int line = 0;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relation> relations;
    Logic logic = Logic::Coherent;

    int generator_index(const std::string& name) const;  // -1 if undeclared
};

// Line-based text format:
//   # comment
//   logic coherent
//   generators a b D(2)
//   a & b <= c | 0
//   join(a, b, c) = 1
// Operators: & ∧ /\  for meets, | ∨ \/ for joins, join(...) ⋁(...) meet(...) ⋀(...),
// constants 0 ⊥ 1 ⊤. Relations: <= ≤ >= ≥ =.
Presentation parse_presentation(const std::string& text);
Term parse_term(const std::string& text, const std::vector<std::string>& generators);
Relation parse_relation(const std::string& text, const std::vector<std::string>& generators);

std::string term_string(const Term& t, const std::vector<std::string>& generators);
std::string relation_string(const Relation& r, const std::vector<std::string>& generators);
std::string presentation_string(const Presentation& p);

// Empty when every relation stays inside the logic's fragment (horn: 1 and meets only).
std::string fragment_violation(const Presentation& p);
bool term_in_horn_fragment(const Term& t);

}  // namespace stonework
