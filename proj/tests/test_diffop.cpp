#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncsym/diffop.hpp"
#include "ncsym/symsolve.hpp"
#include "ncsym/parser.hpp"

#include <random>

using namespace ncsym;

namespace {

ContextPtr st3() { return spacetime_context(3); }

DiffOp random_op(ContextPtr c, std::mt19937& rng, int order, int deg) {
    DiffOp op(c);
    for (int k = 0; k < 5; ++k) {
        DMono m(c->size(), 0);
        int left = order;
        for (int v = 0; v < 4; ++v) {
            int p = (int)(rng() % (left + 1));
            m[v] = p;
            left -= p;
        }
        Mono cm;
        cm.e.assign(c->size(), 0);
        for (int v = 0; v < 4; ++v) cm.e[v] = (int)(rng() % (deg + 1));
        Expr coeff = Expr::from_terms(c, 0, TermMap{{cm, Coeff((long)(rng() % 7) - 3)}});
        op.set_coefficient(m, op.coefficient(m) + coeff);
    }
    return op;
}

std::vector<SymComponents> rank1_symbols(const VectorFieldBasis& b, ContextPtr ctx) {
    std::vector<SymComponents> out;
    for (const auto& X : b.fields) {
        SymComponents s(ctx, 4, 1);
        for (int a = 0; a < 4; ++a) s.set({a}, X.comp[a]);
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST_CASE("normal ordering and composition") {
    auto c = st3();
    DiffOp dx = DiffOp::partial(c, 1);
    DiffOp x = DiffOp::from_coeff(c, parse("x", c));
    // d_x o x = x d_x + 1
    DiffOp lhs = compose(dx, x);
    DiffOp expect = DiffOp(c);
    expect.set_coefficient(DMono{0, 1, 0, 0, 0}, parse("x", c));
    expect.set_coefficient(DMono{0, 0, 0, 0, 0}, parse("1", c));
    CHECK(lhs == expect);
    // d_t o (t d_t) = t d_t^2 + d_t
    DiffOp dt = DiffOp::partial(c, 0);
    DiffOp tdt(c);
    tdt.set_coefficient(DMono{1, 0, 0, 0, 0}, parse("t", c));
    DiffOp r = compose(dt, tdt);
    DiffOp expect2(c);
    expect2.set_coefficient(DMono{2, 0, 0, 0, 0}, parse("t", c));
    expect2.set_coefficient(DMono{1, 0, 0, 0, 0}, parse("1", c));
    CHECK(r == expect2);
    // associativity and order subadditivity on random samples
    std::mt19937 rng(11);
    for (int iter = 0; iter < 15; ++iter) {
        DiffOp P = random_op(c, rng, 2, 2), Q = random_op(c, rng, 2, 2),
               R = random_op(c, rng, 1, 1);
        CHECK(compose(compose(P, Q), R) == compose(P, compose(Q, R)));
        if (!P.is_zero() && !Q.is_zero())
            CHECK(compose(P, Q).order() <= P.order() + Q.order());
    }
}

TEST_CASE("right division by the free operator") {
    auto c = st3();
    DiffOp Delta = free_schrodinger(c, 3);
    auto d1 = right_divide(Delta, Delta);
    CHECK(d1.quotient == DiffOp::identity(c));
    CHECK(d1.remainder.is_zero());
    DiffOp x = DiffOp::from_coeff(c, parse("x", c));
    auto d2 = right_divide(compose(x, Delta), Delta);
    CHECK(d2.quotient == x);
    CHECK(d2.remainder.is_zero());
    // P = d_x o Delta + x^2
    DiffOp P = compose(DiffOp::partial(c, 1), Delta)
               + DiffOp::from_coeff(c, parse("x^2", c));
    auto d3 = right_divide(P, Delta);
    CHECK(d3.quotient == DiffOp::partial(c, 1));
    CHECK(d3.remainder == DiffOp::from_coeff(c, parse("x^2", c)));
    // reconstruction is exact on random operators
    std::mt19937 rng(21);
    for (int iter = 0; iter < 20; ++iter) {
        DiffOp Q = random_op(c, rng, 3, 2);
        auto dv = right_divide(Q, Delta);
        CHECK(compose(dv.quotient, Delta) + dv.remainder == Q);
        bool t_free = std::all_of(dv.remainder.terms().begin(), dv.remainder.terms().end(),
                                  [](const auto& t) { return t.first[0] == 0; });
        CHECK(t_free);
    }
    // division needs an invertible d_t leading coefficient
    DiffOp bad(c);
    bad.set_coefficient(DMono{1, 0, 0, 0, 0}, parse("x", c));
    CHECK_THROWS_AS(right_divide(Delta, bad), std::domain_error);
}

TEST_CASE("operator text round trip") {
    auto c = st3();
    std::mt19937 rng(31);
    CHECK(parse_diffop(to_string(free_schrodinger(c, 3)), c, 3) == free_schrodinger(c, 3));
    for (int iter = 0; iter < 10; ++iter) {
        DiffOp op = random_op(c, rng, 3, 2);
        CHECK(parse_diffop(to_string(op), c, 3) == op);
    }
    CHECK(parse_diffop("i*dt + 1/2*m^-1*dx*dx + 1/2*m^-1*dy*dy + 1/2*m^-1*dz*dz", c, 3)
          == free_schrodinger(c, 3));
}

TEST_CASE("symmetry detection") {
    auto c = st3();
    DiffOp Delta = free_schrodinger(c, 3);
    CHECK(is_symmetry(Delta, Delta).ok);
    CHECK(is_symmetry(Delta, Delta).delta == Delta);
    CHECK(is_symmetry(DiffOp::partial(c, 1), Delta).ok);
    // multiplication by x is not a symmetry; the witness is (1/m) d_x
    auto cert = is_symmetry(DiffOp::from_coeff(c, parse("x", c)), Delta);
    CHECK(!cert.ok);
    DiffOp witness(c);
    witness.set_coefficient(DMono{0, 1, 0, 0, 0}, Expr::constant(c, Coeff::m(-1)));
    CHECK(cert.residual == witness);
}

TEST_CASE("covariant Schrodinger operator") {
    auto c = st3();
    std::vector<Expr> zeroA{Expr(c), Expr(c), Expr(c)};
    CHECK(covariant_schrodinger(Expr(c), zeroA) == free_schrodinger(c, 3));
    // V = z shifts by -m z
    DiffOp vz = covariant_schrodinger(parse("z", c), zeroA);
    CHECK(vz == free_schrodinger(c, 3)
                    - DiffOp::from_coeff(c, parse("z", c).scaled(Coeff::m())));
    // general A: zeroth-order term is (i/2) dA - (m/2) A.A - m V
    std::vector<Expr> A{parse("y^2", c), parse("x*z", c), parse("x", c)};
    Expr V = parse("x^2*y", c);
    DiffOp op = covariant_schrodinger(V, A);
    Expr div(c);
    Expr asq(c);
    for (int j = 1; j <= 3; ++j) {
        div = div + A[j - 1].diff(j);
        asq = asq + A[j - 1] * A[j - 1];
    }
    Expr expect0 = div.scaled(Coeff::i() / Coeff(2)) - asq.scaled(Coeff::m() / Coeff(2))
                   - V.scaled(Coeff::m());
    CHECK(op.coefficient(DMono{0, 0, 0, 0, 0}) == expect0);
    // first-order spatial terms are i A^j d_j
    for (int j = 1; j <= 3; ++j) {
        DMono m(c->size(), 0);
        m[j] = 1;
        CHECK(op.coefficient(m) == A[j - 1].scaled(Coeff::i()));
    }
    // t-dependent data is rejected
    CHECK_THROWS_AS(covariant_schrodinger(parse("t", c), zeroA), std::domain_error);
}

TEST_CASE("first-order symmetries of the free operator: sch(3) symbols plus the "
          "constant") {
    auto c = st3();
    std::vector<Expr> zeroA{Expr(c), Expr(c), Expr(c)};
    OperatorBasis b = first_order_symmetries(Expr(c), zeroA, 2);
    CHECK((int)b.ops.size() == 12);
    CHECK(b.n_lower == 1); // the constant phase operator
    NCSpacetime S = make_flat_spacetime(3);
    VectorFieldBasis sch = solve_sk_vectors(S, 2);
    CHECK(same_symbol_span(b.symbols, rank1_symbols(sch, c)));
    // every generator certifies
    DiffOp Delta = free_schrodinger(c, 3);
    for (auto& op : b.ops) CHECK(is_symmetry(op, Delta).ok);
}

TEST_CASE("curved backgrounds: operator symbols match the SK vectors") {
    auto c = st3();
    std::vector<Expr> zeroA{Expr(c), Expr(c), Expr(c)};

    // V = z, A = 0 <-> (V=z, Omega=0)
    {
        OperatorBasis b = first_order_symmetries(parse("z", c), zeroA, 3);
        NCSpacetime S = make_vomega_spacetime(parse("z", c), parse("0", c));
        VectorFieldBasis sk = solve_sk_vectors(S, 3);
        CHECK((int)b.ops.size() == 12);
        CHECK(same_symbol_span(b.symbols, rank1_symbols(sk, S.ctx)));
    }
    // V = -x^2 with Coriolis potential Omega = x; the operator carries the
    // vector potential with curl A = 2 grad Omega
    {
        std::vector<Expr> A{Expr(c), Expr(c), parse("2*y", c)};
        OperatorBasis b = first_order_symmetries(parse("-1*x^2", c), A, 3);
        NCSpacetime S = make_vomega_spacetime(parse("-1*x^2", c), parse("x", c));
        VectorFieldBasis sk = solve_sk_vectors(S, 3);
        CHECK(same_symbol_span(b.symbols, rank1_symbols(sk, S.ctx)));
        // gauge shift A -> A + d chi leaves the symbol space unchanged
        Expr chi = parse("x*y*z", c);
        std::vector<Expr> A2 = A;
        for (int j = 1; j <= 3; ++j) A2[j - 1] = A2[j - 1] + chi.diff(j);
        OperatorBasis b2 = first_order_symmetries(parse("-1*x^2", c), A2, 3);
        CHECK(same_symbol_span(b.symbols, b2.symbols));
    }
    // crossed fields V = y, A = y dz pin the normalization dOmega = (1/2)*3dA:
    // the matching spacetime has Omega = x/2
    {
        std::vector<Expr> A{Expr(c), Expr(c), parse("y", c)};
        OperatorBasis b = first_order_symmetries(parse("y", c), A, 3);
        NCSpacetime Shalf = make_vomega_spacetime(parse("y", c), parse("1/2*x", c));
        VectorFieldBasis skh = solve_sk_vectors(Shalf, 3);
        CHECK(same_symbol_span(b.symbols, rank1_symbols(skh, Shalf.ctx)));
        NCSpacetime Sone = make_vomega_spacetime(parse("y", c), parse("x", c));
        VectorFieldBasis sk1 = solve_sk_vectors(Sone, 3);
        CHECK(!same_symbol_span(b.symbols, rank1_symbols(sk1, Sone.ctx)));
    }
}

TEST_CASE("light-cone reduction") {
    auto lc = lightcone_context(5);
    auto c = st3();
    // d_- becomes multiplication by -i m
    DiffOp dm = DiffOp::partial(lc, 4);
    DiffOp red = lightcone_reduce(dm);
    CHECK(red == DiffOp::from_coeff(c, Expr::constant(c, -Coeff::i() * Coeff::m())));
    // the wave operator reduces to 2m times the free Schrodinger operator
    CHECK(lightcone_reduce(lightcone_laplacian(lc))
          == free_schrodinger(c, 3).scaled(Coeff::m() * Coeff(2)));
    // x^- dependent coefficients are rejected
    DiffOp bad = DiffOp::from_coeff(lc, parse("xm", lc));
    CHECK_THROWS_AS(lightcone_reduce(bad), std::domain_error);
    // reduction is multiplicative on x^- independent operators
    std::mt19937 rng(3);
    for (int iter = 0; iter < 10; ++iter) {
        DiffOp P(lc), Q(lc);
        for (int k = 0; k < 4; ++k) {
            DMono m(5, 0);
            m[rng() % 5] = 1 + (int)(rng() % 2);
            Mono cm;
            cm.e.assign(5, 0);
            cm.e[rng() % 4] = (int)(rng() % 3); // no xm dependence
            Expr coeff = Expr::from_terms(lc, 0, TermMap{{cm, Coeff((long)(rng() % 5) - 2)}});
            (k % 2 ? P : Q).set_coefficient(m, coeff);
        }
        CHECK(lightcone_reduce(compose(P, Q))
              == compose(lightcone_reduce(P), lightcone_reduce(Q)));
    }
}

TEST_CASE("flat conformal Killing tensors") {
    // rank 1 in N=4: the 15 conformal Killing vectors (solver calibration)
    CktSolveResult c4 = solve_flat_ckt(4, 1, 2, false);
    CHECK((int)c4.S.size() == 15);
    // rank 1 in N=5: 21 in total; 13 survive the x^- independence cut and
    // their spacetime components span the 12-dimensional sch(3)
    CktSolveResult c5 = solve_flat_ckt(5, 1, 2, false);
    CHECK((int)c5.S.size() == 21);
    CktSolveResult c5i = solve_flat_ckt(5, 1, 2, true);
    CHECK((int)c5i.S.size() == 13);
    auto st = st3();
    std::vector<SymComponents> proj;
    for (auto& S : c5i.S) proj.push_back(lightcone_project_symbol(S, st));
    NCSpacetime flat = make_flat_spacetime(3);
    VectorFieldBasis sch = solve_sk_vectors(flat, 2);
    CHECK(same_symbol_span(proj, rank1_symbols(sch, st)));
    // the light-cone metric itself is a rank-2 conformal Killing tensor
    CktSolveResult c5r2 = solve_flat_ckt(5, 2, 2, true);
    auto lc = lightcone_context(5);
    SymComponents g(lc, 5, 2);
    for (int i = 0; i < 3; ++i) g.set({i, i}, Expr::integer(lc, 1));
    g.set({3, 4}, Expr::integer(lc, -1));
    CHECK(symbol_in_span(g, c5r2.S));
}

TEST_CASE("first-order wave-equation symmetries reduce to Schrodinger symmetries") {
    // Eastwood completion D = S^mu d_mu + (N-2)/(2N) (d.S) for a CKV S,
    // reduced along the light cone, certifies against the free operator
    auto lc = lightcone_context(5);
    auto c = st3();
    DiffOp Delta = free_schrodinger(c, 3);
    CktSolveResult ckv = solve_flat_ckt(5, 1, 2, true);
    Coeff w = Coeff(3) / Coeff(10);
    for (auto& S : ckv.S) {
        DiffOp D(lc);
        Expr div(lc);
        for (int mu = 0; mu < 5; ++mu) {
            DMono m(5, 0);
            m[mu] = 1;
            D.set_coefficient(m, S.get({mu}));
            div = div + S.get({mu}).diff(mu);
        }
        D.set_coefficient(DMono(5, 0), div.scaled(w));
        CHECK(is_symmetry(lightcone_reduce(D), Delta).ok);
    }
}

TEST_CASE("rank-2 pathway agreement holds at successive truncations") {
    // the rank-2 conformal space is truncation-dependent (trace freedom),
    // but the two independent pathways agree at every degree
    NCSpacetime S = make_flat_spacetime(3);
    for (int deg : {4, 5}) {
        TensorSolveResult sk = solve_sk_tensors(S, 2, deg);
        CktSolveResult ckt = solve_flat_ckt(5, 2, deg, true);
        std::vector<SymComponents> a, b;
        for (auto& T : sk.tensors) a.push_back(T.X);
        for (auto& Sc : ckt.S) b.push_back(lightcone_project_symbol(Sc, S.ctx));
        CHECK(same_symbol_span(a, b));
        CHECK((int)sk.tensors.size() == (deg == 4 ? 133 : 189));
    }
}

TEST_CASE("higher symmetries at order 1 recover the Schrodinger algebra") {
    OperatorBasis b = higher_symmetries(1, 2);
    CHECK((int)b.ops.size() == 12);
    CHECK(b.n_lower == 1);
    NCSpacetime S = make_flat_spacetime(3);
    VectorFieldBasis sch = solve_sk_vectors(S, 2);
    CHECK(same_symbol_span(b.symbols, rank1_symbols(sch, S.ctx)));
}
