#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncsym/linsys.hpp"
#include "ncsym/parser.hpp"

using namespace ncsym;

namespace {

ContextPtr chart3() {
    return Context::make({{"t"}, {"x"}, {"y"}, {"z"}}, {1, 2, 3});
}

} // namespace

TEST_CASE("one equation, two unknowns") {
    auto c = chart3();
    Unknowns u;
    int a = u.add("a"), b = u.add("b");
    LinExpr eq = LinExpr::unknown(c, a) + LinExpr::unknown(c, b); // a + b = 0
    LinearSystem sys(u);
    sys.add_equation(eq);
    auto res = solve(sys);
    REQUIRE(res.dimension() == 1);
    CHECK(res.basis[0].at(a) == -res.basis[0].at(b));
}

TEST_CASE("empty system has full nullspace") {
    auto c = chart3();
    Unknowns u;
    u.add("a");
    u.add("b");
    LinearSystem sys(u);
    CHECK(solve(sys).dimension() == 2);
}

TEST_CASE("zero unknowns, empty system") {
    Unknowns u;
    LinearSystem sys(u);
    auto res = solve(sys);
    CHECK(res.consistent);
    CHECK(res.dimension() == 0);
}

TEST_CASE("inconsistency is reported only for constant nonzero equations") {
    auto c = chart3();
    Unknowns u;
    int a = u.add("a");
    LinearSystem sys(u);
    LinExpr eq = LinExpr::unknown(c, a) * parse("x", c);
    eq = eq + LinExpr(parse("y", c)); // a*x + y = 0 for all x,y -> a=0 and 1=0? no: y-row is constant
    sys.add_equation(eq);
    auto res = solve(sys);
    CHECK(!res.consistent);

    LinearSystem sys2(u);
    LinExpr eq2 = LinExpr::unknown(c, a) * parse("x", c) + LinExpr(parse("2*x", c));
    sys2.add_equation(eq2);
    auto res2 = solve(sys2);
    CHECK(res2.consistent);
    CHECK(res2.particular.at(a) == Coeff(-2));
}

// independent oracle for the 7-dimensional example: a dense rational RREF
// written from scratch, no shared code with the library path
namespace oracle {

using Mat = std::vector<std::vector<Rat>>;

int rank(Mat m) {
    int rows = (int)m.size();
    if (!rows) return 0;
    int cols = (int)m[0].size(), r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[sel], m[r]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace oracle

TEST_CASE("degree-1 conformal ansatz in d=3 has a 7-dimensional space") {
    // unknowns: X^i = c[i][j] x^j + c0[i]  (12), sigma (1);
    // equations: d^(i X^j) = sigma delta^ij
    auto c = chart3();
    Unknowns u;
    std::vector<std::vector<int>> cij(3, std::vector<int>(3));
    std::vector<int> c0(3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) cij[i][j] = u.add("c");
        c0[i] = u.add("c0");
    }
    int sigma = u.add("sigma");
    std::vector<LinExpr> X;
    for (int i = 0; i < 3; ++i) {
        LinExpr e(c);
        for (int j = 0; j < 3; ++j)
            e += LinExpr::unknown(c, cij[i][j]) * Expr::variable(c, j + 1);
        e += LinExpr::unknown(c, c0[i]);
        X.push_back(e);
    }
    LinearSystem sys(u);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            LinExpr e = X[i].diff(j + 1) + X[j].diff(i + 1);
            if (i == j) e -= LinExpr::unknown(c, sigma) * Expr::integer(c, 2);
            sys.add_equation(e);
        }
    auto res = solve(sys);
    // solution projects onto X-coefficients: sigma is determined, so the
    // X-space is also 7-dimensional
    CHECK(res.dimension() == 7);

    // independent dense enumeration of the same constraints
    // rows over unknowns (c[3][3], c0[3], sigma): symmetric part of c is
    // sigma*delta; c0 free
    oracle::Mat m;
    auto row = [&]() { return std::vector<Rat>(13, Rat(0)); };
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            auto r = row();
            r[i * 3 + j] += 1;
            r[j * 3 + i] += 1;
            if (i == j) r[12] -= 2;
            m.push_back(r);
        }
    int nullity = 13 - oracle::rank(m);
    CHECK(nullity == 7);
}

TEST_CASE("nullspace is idempotent and order-independent") {
    auto c = chart3();
    Unknowns u;
    int a = u.add("a"), b = u.add("b"), d = u.add("d");
    std::vector<LinExpr> eqs;
    eqs.push_back(LinExpr::unknown(c, a) * parse("x", c)
                  - LinExpr::unknown(c, b) * parse("x", c));
    eqs.push_back(LinExpr::unknown(c, b) * parse("y", c)
                  + LinExpr::unknown(c, d) * parse("y", c));
    LinearSystem s1(u), s2(u);
    s1.add_equation(eqs[0]);
    s1.add_equation(eqs[1]);
    s2.add_equation(eqs[1]);
    s2.add_equation(eqs[0]);
    auto r1 = solve(s1), r2 = solve(s2);
    REQUIRE(r1.dimension() == r2.dimension());
    CHECK(r1.basis == r2.basis);
    // re-reducing the reduced basis changes nothing
    std::vector<Row> rows1, rows2;
    for (auto& v : r1.basis) {
        Row r;
        for (auto& [j, cf] : v) r[j] = cf;
        rows1.push_back(r);
        rows2.push_back(r);
    }
    rref(rows2);
    CHECK(span_equal(rows1, rows2));
}

TEST_CASE("radical equations split into r0/r1 components") {
    auto c = chart3();
    Unknowns u;
    int a = u.add("a"), b = u.add("b");
    // a*r + b*x = 0 identically forces a = b = 0
    LinExpr eq = LinExpr::unknown(c, a) * parse("r", c)
                 + LinExpr::unknown(c, b) * parse("x", c);
    LinearSystem sys(u);
    sys.add_equation(eq);
    CHECK(solve(sys).dimension() == 0);
}
