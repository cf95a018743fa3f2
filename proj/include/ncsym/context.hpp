// Variable registry shared by every Expr in one computation.  The variable
// order fixes the monomial order (graded lex, earlier variable = more
// significant) used for canonical forms, printing and echelon pivoting.
#pragma once

#include <memory>
#include <string>
#include <vector>
#include <stdexcept>

namespace ncsym {

struct Variable {
    std::string name;
    bool laurent = false; // negative exponents allowed (lambda)
};

class Context;
using ContextPtr = std::shared_ptr<const Context>;

class Context {
public:
    std::vector<Variable> vars;
    // indices of the spatial variables that build rho = sum x_i^2; empty when
    // the radical r with r^2 = rho is not part of the ring
    std::vector<int> radical_vars;

    static ContextPtr make(std::vector<Variable> vs, std::vector<int> rad = {}) {
        auto c = std::make_shared<Context>();
        c->vars = std::move(vs);
        c->radical_vars = std::move(rad);
        for (int i : c->radical_vars)
            if (c->vars.at(i).laurent)
                throw std::invalid_argument("Context: radical over a Laurent variable");
        if (!c->radical_vars.empty() && c->radical_vars.size() < 2)
            throw std::invalid_argument("Context: radical needs at least two variables");
        return c;
    }

    int size() const { return (int)vars.size(); }
    bool has_radical() const { return !radical_vars.empty(); }

    int find(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (vars[i].name == name) return i;
        return -1;
    }
    int require(const std::string& name) const {
        int i = find(name);
        if (i < 0) throw std::invalid_argument("Context: unregistered variable '" + name + "'");
        return i;
    }
};

} // namespace ncsym
