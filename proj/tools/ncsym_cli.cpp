// Command-line front end: construct spacetimes, run the symmetry solvers and
// twistor computations, and print bases in a human-readable or structured
// (line-oriented key=value) form.
#include <CLI11.hpp>

#include "ncsym/config.hpp"
#include "ncsym/diffop.hpp"
#include "ncsym/parser.hpp"
#include "ncsym/phase.hpp"
#include "ncsym/symsolve.hpp"
#include "ncsym/twistor.hpp"

#include <iostream>

using namespace ncsym;

namespace {

struct SpacetimeArgs {
    std::string V, Omega, config;

    NCSpacetime build() const {
        if (!config.empty()) {
            if (!V.empty() || !Omega.empty())
                throw ConfigError("give either --config or --V/--Omega, not both");
            return load_spacetime_config_file(config);
        }
        ContextPtr ctx = spacetime_context(3);
        Expr v = V.empty() ? Expr(ctx) : parse(V, ctx);
        Expr om = Omega.empty() ? Expr(ctx) : parse(Omega, ctx);
        return make_vomega_spacetime(v, om);
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--V", V, "Newtonian potential (expression in x,y,z; r allowed)");
        cmd->add_option("--Omega", Omega, "Coriolis potential (polynomial in x,y,z)");
        cmd->add_option("--config", config, "spacetime config file");
    }
};

struct Printer {
    bool structured = false;
    void kv(const std::string& k, const std::string& v) const {
        if (structured) std::cout << k << "=" << v << "\n";
        else std::cout << k << ": " << v << "\n";
    }
};

std::vector<std::string> coord_names(const ContextPtr& ctx, int d) {
    std::vector<std::string> names;
    for (int a = 0; a <= d; ++a) names.push_back(ctx->vars[a].name);
    return names;
}

void print_vf_basis(const Printer& pr, const NCSpacetime& S, const std::string& cmd,
                    const VectorFieldBasis& b, bool with_chi0) {
    pr.kv("command", cmd);
    pr.kv("degree", std::to_string(b.ansatz_degree));
    pr.kv("dimension", std::to_string(b.dimension()));
    auto names = coord_names(S.ctx, S.d);
    for (int k = 0; k < b.dimension(); ++k) {
        std::string tag = "gen." + std::to_string(k + 1);
        if (pr.structured) {
            for (int a = 0; a <= S.d; ++a)
                pr.kv(tag + ".X^" + names[a], b.fields[k].comp[a].str());
            if (with_chi0 && k < (int)b.chi0.size())
                pr.kv(tag + ".chi0", b.chi0[k].str());
            if (!b.conformal.empty()) {
                pr.kv(tag + ".f", b.conformal[k].f.str());
                pr.kv(tag + ".g", b.conformal[k].g.str());
            }
        } else {
            std::string line = b.fields[k].str(names);
            if (with_chi0 && k < (int)b.chi0.size() && !b.chi0[k].is_zero())
                line += "   [chi0 = " + b.chi0[k].str() + "]";
            pr.kv(tag, line);
        }
    }
}

std::string sym_index_str(const std::vector<int>& idx,
                          const std::vector<std::string>& names) {
    std::string s;
    for (size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ",";
        s += names[idx[k]];
    }
    return s;
}

void print_tensors(const Printer& pr, const NCSpacetime& S, const std::string& cmd,
                   const TensorSolveResult& r) {
    pr.kv("command", cmd);
    pr.kv("rank", std::to_string(r.rank));
    pr.kv("degree", std::to_string(r.ansatz_degree));
    pr.kv("dimension", std::to_string((int)r.tensors.size()));
    auto names = coord_names(S.ctx, S.d);
    for (size_t k = 0; k < r.tensors.size(); ++k) {
        const SymTensor& T = r.tensors[k];
        std::string tag = "gen." + std::to_string(k + 1);
        for (const auto& [idx, e] : T.X.c)
            if (!e.is_zero())
                pr.kv(tag + ".X[" + sym_index_str(idx, names) + "]", e.str());
        for (size_t m = 0; m < T.chi.size(); ++m)
            for (const auto& [idx, e] : T.chi[m].c)
                if (!e.is_zero())
                    pr.kv(tag + ".chi" + std::to_string(m)
                              + (idx.empty() ? "" : "[" + sym_index_str(idx, names) + "]"),
                          e.str());
        for (size_t m = 0; m < T.f.size(); ++m)
            for (const auto& [idx, e] : T.f[m].c)
                if (!e.is_zero())
                    pr.kv(tag + ".f" + std::to_string(m)
                              + (idx.empty() ? "" : "[" + sym_index_str(idx, names) + "]"),
                          e.str());
    }
}

void print_operators(const Printer& pr, const std::string& cmd, const OperatorBasis& b) {
    pr.kv("command", cmd);
    pr.kv("order", std::to_string(b.order));
    pr.kv("degree", std::to_string(b.ansatz_degree));
    pr.kv("dimension", std::to_string((int)b.ops.size()));
    pr.kv("lower-order", std::to_string(b.n_lower));
    for (size_t k = 0; k < b.ops.size(); ++k)
        pr.kv("gen." + std::to_string(k + 1), b.ops[k].str());
}

void print_twistor_sections(const Printer& pr, int NT) {
    auto basis = global_vector_fields(NT);
    pr.kv("command", "twistor sections");
    pr.kv("deg-t", std::to_string(NT));
    pr.kv("dimension", std::to_string((int)basis.size()));
    for (size_t k = 0; k < basis.size(); ++k) {
        std::string tag = "gen." + std::to_string(k + 1);
        pr.kv(tag + ".beta^T", basis[k].bT.str());
        pr.kv(tag + ".beta^Q", basis[k].bQ.str());
        pr.kv(tag + ".beta^lambda", basis[k].bL.str());
        // (a..h) coefficient functions of T
        const Expr& q = basis[k].bQ;
        const Expr& l = basis[k].bL;
        pr.kv(tag + ".a", q.coefficient_of(1, 0).coefficient_of(2, 0).str());
        pr.kv(tag + ".b", q.coefficient_of(1, 1).coefficient_of(2, 0).str());
        pr.kv(tag + ".c", q.coefficient_of(1, 0).coefficient_of(2, 1).str());
        pr.kv(tag + ".d", q.coefficient_of(1, 1).coefficient_of(2, 1).str());
        pr.kv(tag + ".e", q.coefficient_of(1, 0).coefficient_of(2, 2).str());
        pr.kv(tag + ".f", l.coefficient_of(1, 0).coefficient_of(2, 0).str());
        pr.kv(tag + ".g", l.coefficient_of(1, 0).coefficient_of(2, 1).str());
        pr.kv(tag + ".h", basis[k].bT.str());
        Pushforward P = pushforward(basis[k]);
        auto names = coord_names(P.X.ctx, 3);
        for (int a = 0; a < 4; ++a)
            pr.kv(tag + ".push.X^" + names[a], P.X.comp[a].str());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetry structures of Newton-Cartan spacetimes"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format: text | structured")
        ->check(CLI::IsMember({"text", "structured"}));

    SpacetimeArgs kv_args, skv_args, esch_args, cgal_args, kt_args, skt_args, geo_args;
    int kv_deg = 3, skv_deg = 3, esch_deg = 3, cgal_deg = 2;
    int kt_rank = 2, kt_deg = 3, skt_rank = 2, skt_deg = 3;
    std::string fos_V, fos_A;
    int fos_deg = 3;
    int hs_order = 1, hs_deg = 3;
    int tw_NT = 2, tw_bound = 6;

    auto* kvc = app.add_subcommand("killing-vectors", "Killing vectors of a spacetime");
    kv_args.attach(kvc);
    kvc->add_option("--deg", kv_deg, "ansatz degree")->check(CLI::NonNegativeNumber);

    auto* skvc = app.add_subcommand("sk-vectors", "Schrodinger-Killing vectors");
    skv_args.attach(skvc);
    skvc->add_option("--deg", skv_deg, "ansatz degree")->check(CLI::PositiveNumber);

    auto* eschc = app.add_subcommand("expanded-sch", "expanded Schrodinger algebra");
    esch_args.attach(eschc);
    eschc->add_option("--deg", esch_deg, "ansatz degree")->check(CLI::PositiveNumber);

    auto* cgalc = app.add_subcommand("cgal", "conformal Galilean family (truncated)");
    cgal_args.attach(cgalc);
    cgalc->add_option("--deg", cgal_deg, "ansatz degree")->check(CLI::PositiveNumber);

    auto* ktc = app.add_subcommand("killing-tensors", "Killing tensors");
    kt_args.attach(ktc);
    ktc->add_option("--rank", kt_rank, "tensor rank")->check(CLI::PositiveNumber);
    ktc->add_option("--deg", kt_deg, "ansatz degree")->check(CLI::NonNegativeNumber);

    auto* sktc = app.add_subcommand("sk-tensors", "Schrodinger-Killing tensors");
    skt_args.attach(sktc);
    sktc->add_option("--rank", skt_rank, "tensor rank")->check(CLI::PositiveNumber);
    sktc->add_option("--deg", skt_deg, "ansatz degree")->check(CLI::NonNegativeNumber);

    auto* fosc = app.add_subcommand("schrodinger-symmetries",
                                    "first-order symmetries of the covariant operator");
    fosc->add_option("--V", fos_V, "scalar potential");
    fosc->add_option("--A", fos_A, "vector potential components ax,ay,az");
    fosc->add_option("--deg", fos_deg, "ansatz degree")->check(CLI::PositiveNumber);

    auto* hsc = app.add_subcommand("higher-symmetries",
                                   "higher symmetries of the free operator");
    hsc->add_option("--order", hs_order, "operator order")->check(CLI::PositiveNumber);
    hsc->add_option("--deg", hs_deg, "coefficient degree")->check(CLI::NonNegativeNumber);

    auto* geoc = app.add_subcommand("geometry", "connection and curvature report");
    geo_args.attach(geoc);

    auto* twc = app.add_subcommand("twistor", "twistor-space computations");
    twc->require_subcommand(1);
    twc->fallthrough();
    auto* tws = twc->add_subcommand("sections", "global holomorphic vector fields");
    tws->add_option("--deg-t", tw_NT, "T-degree truncation");
    auto* twn = twc->add_subcommand("cnc", "correspondence with conformal NC fields");
    twn->add_option("--deg-t", tw_NT, "T-degree truncation");
    auto* twt = twc->add_subcommand("stilde", "13-dimensional expanded Schrodinger rep");
    twt->add_option("--deg-t", tw_NT, "T-degree truncation");
    auto* twg = twc->add_subcommand("cga", "the fifteen CGA generators");
    auto* two = twc->add_subcommand("obstruction", "connection-bundle obstruction");
    two->add_option("--bound", tw_bound, "Laurent exponent bound");

    try {
        app.parse(argc, argv);
        Printer pr{format == "structured"};
        if (*kvc) {
            NCSpacetime S = kv_args.build();
            print_vf_basis(pr, S, "killing-vectors", solve_killing_vectors(S, kv_deg), true);
        } else if (*skvc) {
            NCSpacetime S = skv_args.build();
            print_vf_basis(pr, S, "sk-vectors", solve_sk_vectors(S, skv_deg), false);
        } else if (*eschc) {
            NCSpacetime S = esch_args.build();
            print_vf_basis(pr, S, "expanded-sch", solve_expanded_sch(S, esch_deg), false);
        } else if (*cgalc) {
            NCSpacetime S = cgal_args.build();
            print_vf_basis(pr, S, "cgal", solve_cgal(S, cgal_deg), false);
        } else if (*ktc) {
            NCSpacetime S = kt_args.build();
            print_tensors(pr, S, "killing-tensors",
                          solve_killing_tensors(S, kt_rank, kt_deg));
        } else if (*sktc) {
            NCSpacetime S = skt_args.build();
            print_tensors(pr, S, "sk-tensors", solve_sk_tensors(S, skt_rank, skt_deg));
        } else if (*fosc) {
            ContextPtr ctx = spacetime_context(3);
            Expr V = fos_V.empty() ? Expr(ctx) : parse(fos_V, ctx);
            std::vector<Expr> A(3, Expr(ctx));
            if (!fos_A.empty()) {
                std::stringstream ss(fos_A);
                std::string piece;
                int j = 0;
                while (std::getline(ss, piece, ',') && j < 3) A[j++] = parse(piece, ctx);
            }
            print_operators(pr, "schrodinger-symmetries",
                            first_order_symmetries(V, A, fos_deg));
        } else if (*hsc) {
            print_operators(pr, "higher-symmetries", higher_symmetries(hs_order, hs_deg));
        } else if (*geoc) {
            NCSpacetime S = geo_args.build();
            pr.kv("command", "geometry");
            Connection C = connection(S);
            auto names = coord_names(S.ctx, S.d);
            int n = S.d + 1;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = b; c < n; ++c)
                        if (!C.gamma.at({a, b, c}).is_zero())
                            pr.kv("Gamma^" + names[a] + "_" + names[b] + names[c],
                                  C.gamma.at({a, b, c}).str());
            pr.kv("riemann-zero", riemann(S).is_zero() ? "yes" : "no");
            pr.kv("ricci-zero", ricci(S).is_zero() ? "yes" : "no");
            pr.kv("trautman", check_trautman(S) ? "yes" : "no");
        } else if (*tws) {
            print_twistor_sections(pr, tw_NT);
        } else if (*twn) {
            CncCheck chk = verify_cnc_correspondence(tw_NT);
            pr.kv("command", "twistor cnc");
            pr.kv("deg-t", std::to_string(tw_NT));
            pr.kv("dimension", std::to_string(chk.dimension));
            pr.kv("one-to-one", chk.ok ? "yes" : "no");
            if (!chk.ok) pr.kv("failure", chk.reason);
        } else if (*twt) {
            auto basis = stilde_basis(tw_NT);
            pr.kv("command", "twistor stilde");
            pr.kv("dimension", std::to_string((int)basis.size()));
            auto st = spacetime_context(3);
            auto names = coord_names(st, 3);
            for (size_t k = 0; k < basis.size(); ++k) {
                std::string tag = "gen." + std::to_string(k + 1);
                pr.kv(tag + ".beta^T", basis[k].bT.str());
                pr.kv(tag + ".beta^Q", basis[k].bQ.str());
                pr.kv(tag + ".beta^lambda", basis[k].bL.str());
                pr.kv(tag + ".push", pushforward(basis[k]).X.str(names));
            }
        } else if (*twg) {
            auto basis = cga_basis();
            auto img = cga_spacetime_images();
            pr.kv("command", "twistor cga");
            pr.kv("dimension", std::to_string((int)basis.size()));
            pr.kv("closes", twistor_closed(basis) ? "yes" : "no");
            auto names = coord_names(spacetime_context(3), 3);
            for (size_t k = 0; k < basis.size(); ++k) {
                std::string tag = "gen." + std::to_string(k + 1);
                pr.kv(tag + ".beta^T", basis[k].bT.str());
                pr.kv(tag + ".beta^Q", basis[k].bQ.str());
                pr.kv(tag + ".beta^lambda", basis[k].bL.str());
                pr.kv(tag + ".global", is_global(basis[k]) ? "yes" : "no");
                pr.kv(tag + ".push", pushforward(basis[k]).X.str(names));
                pr.kv(tag + ".push-matches-table",
                      pushforward(basis[k]).X == img[k] ? "yes" : "no");
            }
        } else if (*two) {
            pr.kv("command", "twistor obstruction");
            pr.kv("bound", std::to_string(tw_bound));
            pr.kv("global-sections", gbundle_obstructed(tw_bound) ? "none" : "found");
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
