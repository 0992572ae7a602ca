#pragma once

#include <array>
#include <string>
#include <vector>

#include "bcast/error.hpp"

namespace bcast {

using Triple = std::array<std::string, 3>;

// 3-dimensional matching input: X, Y, Z of size k each, pairwise disjoint,
// and W a list of distinct triples from X x Y x Z.
struct ThreeDMInstance {
    int k = 0;
    std::vector<std::string> X, Y, Z;
    std::vector<Triple> W;

    int w() const { return static_cast<int>(W.size()); }
    void validate() const;  // throws FormatError
    bool is_matching(const std::vector<int>& triples) const;
};

std::string to_json(const ThreeDMInstance& inst, int indent = 1);
ThreeDMInstance three_dm_from_json(const std::string& text);

struct Literal {
    int var = 0;
    bool positive = true;
    auto operator<=>(const Literal&) const = default;

    // "x3" / "~x3"
    std::string name() const;
    Literal negated() const { return {var, !positive}; }
};

struct CnfFormula {
    int n = 0;
    std::vector<std::vector<Literal>> clauses;

    int c() const { return static_cast<int>(clauses.size()); }
    void validate() const;  // throws FormatError
    bool satisfied_by(const std::vector<bool>& assignment) const;
    // Indices (0-based) of clauses containing the literal, in clause order.
    std::vector<int> clauses_with(const Literal& lit) const;
};

// DIMACS CNF: "c" comment lines, a "p cnf <vars> <clauses>" header, then
// clauses as 1-based signed integers terminated by 0. Variable v maps to x_{v-1}.
CnfFormula parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfFormula& phi);

}  // namespace bcast
