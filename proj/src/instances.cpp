#include "bcast/instances.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace bcast {

using nlohmann::json;

void ThreeDMInstance::validate() const {
    if (k < 1) throw FormatError("3DM: k must be positive");
    if (static_cast<int>(X.size()) != k || static_cast<int>(Y.size()) != k || static_cast<int>(Z.size()) != k)
        throw FormatError("3DM: X, Y and Z must each have k elements");
    std::set<std::string> all;
    for (const auto* set : {&X, &Y, &Z})
        for (const auto& e : *set)
            if (!all.insert(e).second) throw FormatError("3DM: element '" + e + "' is repeated or shared between sets");
    std::set<std::string> xs(X.begin(), X.end()), ys(Y.begin(), Y.end()), zs(Z.begin(), Z.end());
    std::set<Triple> seen;
    for (const auto& t : W) {
        if (!xs.contains(t[0]) || !ys.contains(t[1]) || !zs.contains(t[2]))
            throw FormatError("3DM: triple (" + t[0] + "," + t[1] + "," + t[2] + ") is not in X x Y x Z");
        if (!seen.insert(t).second) throw FormatError("3DM: triple (" + t[0] + "," + t[1] + "," + t[2] + ") listed twice");
    }
}

bool ThreeDMInstance::is_matching(const std::vector<int>& triples) const {
    if (static_cast<int>(triples.size()) != k) return false;
    std::set<std::string> used;
    std::set<int> picked;
    for (int i : triples) {
        if (i < 0 || i >= w() || !picked.insert(i).second) return false;
        for (const auto& e : W[static_cast<std::size_t>(i)])
            if (!used.insert(e).second) return false;
    }
    return true;
}

std::string to_json(const ThreeDMInstance& inst, int indent) {
    json j{{"k", inst.k}, {"X", inst.X}, {"Y", inst.Y}, {"Z", inst.Z}};
    j["W"] = json::array();
    for (const auto& t : inst.W) j["W"].push_back({t[0], t[1], t[2]});
    return j.dump(indent);
}

ThreeDMInstance three_dm_from_json(const std::string& text) {
    ThreeDMInstance inst;
    try {
        json j = json::parse(text);
        inst.k = j.at("k").get<int>();
        inst.X = j.at("X").get<std::vector<std::string>>();
        inst.Y = j.at("Y").get<std::vector<std::string>>();
        inst.Z = j.at("Z").get<std::vector<std::string>>();
        for (const auto& t : j.at("W")) {
            if (!t.is_array() || t.size() != 3) throw FormatError("3DM: every triple needs three names");
            inst.W.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("3DM document: ") + e.what());
    }
    inst.validate();
    return inst;
}

std::string Literal::name() const { return (positive ? "x" : "~x") + std::to_string(var); }

void CnfFormula::validate() const {
    if (n < 0) throw FormatError("CNF: negative variable count");
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        if (clauses[i].empty()) throw FormatError("CNF: clause " + std::to_string(i + 1) + " is empty");
        for (const auto& l : clauses[i])
            if (l.var < 0 || l.var >= n)
                throw FormatError("CNF: clause " + std::to_string(i + 1) + " uses variable outside 0.." + std::to_string(n - 1));
    }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    for (const auto& clause : clauses) {
        bool sat = false;
        for (const auto& l : clause)
            if (assignment.at(static_cast<std::size_t>(l.var)) == l.positive) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

std::vector<int> CnfFormula::clauses_with(const Literal& lit) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < clauses.size(); ++i)
        for (const auto& l : clauses[i])
            if (l == lit) {
                out.push_back(static_cast<int>(i));
                break;
            }
    return out;
}

CnfFormula parse_dimacs(const std::string& text) {
    CnfFormula phi;
    std::istringstream in(text);
    std::string line;
    int declared_clauses = -1;
    int line_no = 0;
    std::vector<Literal> current;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
        auto where = [&] { return "DIMACS line " + std::to_string(line_no) + ": "; };
        if (first == "p") {
            std::string fmt;
            if (!(ls >> fmt >> phi.n >> declared_clauses) || fmt != "cnf") throw FormatError(where() + "bad header");
            continue;
        }
        if (declared_clauses < 0) throw FormatError(where() + "clause before the 'p cnf' header");
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw FormatError(where() + "unexpected token '" + tok + "'");
            }
            if (v == 0) {
                if (current.empty()) throw FormatError(where() + "empty clause");
                phi.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            int var = std::abs(v) - 1;
            if (var >= phi.n) throw FormatError(where() + "variable " + std::to_string(std::abs(v)) + " exceeds header count");
            Literal lit{var, v > 0};
            bool dup = false;
            for (const auto& l : current) dup = dup || l == lit;
            if (!dup) current.push_back(lit);
        }
    }
    if (!current.empty()) phi.clauses.push_back(std::move(current));
    if (declared_clauses < 0) throw FormatError("DIMACS: missing 'p cnf' header");
    if (phi.c() != declared_clauses)
        throw FormatError("DIMACS: header declares " + std::to_string(declared_clauses) + " clauses, found " +
                          std::to_string(phi.c()));
    phi.validate();
    return phi;
}

std::string to_dimacs(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.n << ' ' << phi.c() << '\n';
    for (const auto& clause : phi.clauses) {
        for (const auto& l : clause) out << (l.positive ? "" : "-") << l.var + 1 << ' ';
        out << "0\n";
    }
    return out.str();
}

}  // namespace bcast
