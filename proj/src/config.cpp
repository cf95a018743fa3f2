#include "ncsym/config.hpp"
#include "ncsym/parser.hpp"
#include <fstream>
#include <sstream>

namespace ncsym {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

NCSpacetime load_spacetime_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
        if (kv.count(key))
            throw ConfigError("config: duplicate key '" + key + "'");
        kv[key] = val;
    }
    int d = 3;
    if (auto it = kv.find("dimension"); it != kv.end()) {
        d = std::atoi(it->second.c_str());
        if (d < 1 || d > 6) throw ConfigError("config: dimension out of range");
        kv.erase(it);
    }
    ContextPtr ctx = spacetime_context(d);
    auto parse_val = [&](const std::string& key) {
        try {
            return parse(kv.at(key), ctx);
        } catch (const ParseError& ex) {
            throw ConfigError("config key '" + key + "': " + ex.what());
        }
    };
    bool potential_route = kv.count("V") || kv.count("Omega");
    bool explicit_route = false;
    for (const auto& [k, v] : kv)
        if (k.size() > 1 && (k.rfind("h_", 0) == 0 || k.rfind("theta_", 0) == 0 ||
                             k.rfind("U_", 0) == 0 || k.rfind("A_", 0) == 0))
            explicit_route = true;
    if (potential_route && explicit_route)
        throw ConfigError("config: give either V/Omega or explicit components, not both");
    if (potential_route) {
        if (d != 3) throw ConfigError("config: the V/Omega route needs dimension 3");
        Expr V = kv.count("V") ? parse_val("V") : Expr(ctx);
        Expr Om = kv.count("Omega") ? parse_val("Omega") : Expr(ctx);
        kv.erase("V");
        kv.erase("Omega");
        if (!kv.empty()) throw ConfigError("config: unknown key '" + kv.begin()->first + "'");
        return make_vomega_spacetime(V, Om);
    }
    if (!explicit_route)
        throw ConfigError("config: no spacetime data given");
    int n = d + 1;
    TensorField<Expr> h(ctx, n, 2, 0), theta(ctx, n, 0, 1), U(ctx, n, 1, 0),
        A(ctx, n, 0, 1);
    auto var_index = [&](const std::string& name) {
        for (int a = 0; a < n; ++a)
            if (ctx->vars[a].name == name) return a;
        throw ConfigError("config: unknown coordinate '" + name + "'");
    };
    for (const auto& [k, vstr] : kv) {
        auto us = k.find('_');
        if (us == std::string::npos)
            throw ConfigError("config: unknown key '" + k + "'");
        std::string head = k.substr(0, us), tail = k.substr(us + 1);
        Expr val = parse_val(k);
        if (head == "h") {
            if (tail.size() < 2) throw ConfigError("config: bad metric key '" + k + "'");
            // split the two coordinate names; try every cut
            bool done = false;
            for (size_t cut = 1; cut + 1 <= tail.size() && !done; ++cut) {
                std::string n1 = tail.substr(0, cut), n2 = tail.substr(cut);
                int a = -1, b = -1;
                for (int q = 0; q < n; ++q) {
                    if (ctx->vars[q].name == n1) a = q;
                    if (ctx->vars[q].name == n2) b = q;
                }
                if (a >= 0 && b >= 0) {
                    h.at({a, b}) = val;
                    h.at({b, a}) = val;
                    done = true;
                }
            }
            if (!done) throw ConfigError("config: bad metric key '" + k + "'");
        } else if (head == "theta") {
            theta.at({var_index(tail)}) = val;
        } else if (head == "U") {
            U.at({var_index(tail)}) = val;
        } else if (head == "A") {
            A.at({var_index(tail)}) = val;
        } else {
            throw ConfigError("config: unknown key '" + k + "'");
        }
    }
    try {
        return make_spacetime(ctx, d, h, theta, U, A);
    } catch (const std::domain_error& ex) {
        throw ConfigError(std::string("config: invalid spacetime: ") + ex.what());
    }
}

NCSpacetime load_spacetime_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_spacetime_config(buf.str());
}

} // namespace ncsym
