#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncsym/twistor.hpp"
#include "ncsym/symsolve.hpp"
#include "ncsym/parser.hpp"

using namespace ncsym;

namespace {

TwistorVectorField tw(const std::string& t, const std::string& q, const std::string& l) {
    auto c = twistor_context();
    TwistorVectorField v;
    v.bT = parse(t, c);
    v.bQ = parse(q, c);
    v.bL = parse(l, c);
    return v;
}

VectorField st_vf(const std::string& t, const std::string& x, const std::string& y,
                  const std::string& z) {
    auto c = spacetime_context(3);
    VectorField X(c, 4);
    X.comp[0] = parse(t, c);
    X.comp[1] = parse(x, c);
    X.comp[2] = parse(y, c);
    X.comp[3] = parse(z, c);
    return X;
}

} // namespace

TEST_CASE("patching transform and globality") {
    // d_T is global; Q d_lambda is not (it breaks the Q-component patching)
    CHECK(is_global(tw("1", "0", "0")));
    CHECK(is_global(tw("0", "lambda^2 - 1", "0")));
    CHECK(is_global(tw("0", "lambda*Q", "1/2*lambda^2")));
    CHECK(!is_global(tw("0", "0", "Q")));
    CHECK(!is_global(tw("0", "lambda^3", "0")));
    CHECK(!is_global(tw("0", "lambda*Q", "0"))); // needs its lambda-part partner
    // applying the patching twice is the identity
    auto c = twistor_context();
    for (const char* spec : {"T^2|Q^2*lambda - 1|lambda^2", "0|Q|lambda", "1|T*Q|0"}) {
        std::string s(spec);
        auto p1 = s.find('|'), p2 = s.rfind('|');
        TwistorVectorField v = tw(s.substr(0, p1), s.substr(p1 + 1, p2 - p1 - 1),
                                  s.substr(p2 + 1));
        TwistorVectorField twice = hatted_components(hatted_components(v));
        CHECK(twice == v);
    }
}

TEST_CASE("global vector fields have dimension 8(NT+1) and the standard shape") {
    for (int NT = 0; NT <= 3; ++NT) {
        auto basis = global_vector_fields(NT);
        CHECK((int)basis.size() == 8 * (NT + 1));
        for (auto& b : basis) CHECK(is_global(b));
    }
    // structural match against the eight coefficient families a..h
    std::vector<TwistorVectorField> expected;
    for (int k = 0; k <= 1; ++k) {
        std::string Tk = k == 0 ? "1" : "T";
        expected.push_back(tw(Tk, "0", "0"));                                  // h
        expected.push_back(tw("0", Tk, "0"));                                  // a
        expected.push_back(tw("0", Tk + "*Q", "0"));                           // b
        expected.push_back(tw("0", Tk + "*lambda", "0"));                      // c
        expected.push_back(tw("0", Tk + "*lambda*Q", "1/2*" + Tk + "*lambda^2")); // d
        expected.push_back(tw("0", Tk + "*lambda^2", "0"));                    // e
        expected.push_back(tw("0", "0", Tk));                                  // f
        expected.push_back(tw("0", "0", Tk + "*lambda"));                      // g
    }
    CHECK(same_twistor_span(global_vector_fields(1), expected));
}

TEST_CASE("pushforward of basic fields") {
    // d_T -> d_t
    CHECK(pushforward(tw("1", "0", "0")).X == st_vf("1", "0", "0", "0"));
    // (lambda^2 - 1) d_Q -> d_x
    CHECK(pushforward(tw("0", "lambda^2 - 1", "0")).X == st_vf("0", "1", "0", "0"));
    // T d_T + Q d_Q -> t d_t + x^i d_i
    CHECK(pushforward(tw("T", "Q", "0")).X == st_vf("t", "x", "y", "z"));
    // dictionary values for the dilation: chi = b - g = 1
    Pushforward P = pushforward(tw("T", "Q", "0"));
    CHECK(P.chi == parse("1", P.X.ctx));
    CHECK(P.h == parse("t", P.X.ctx));
    // a non-global field fails with a witness
    CHECK_THROWS_AS(pushforward(tw("0", "0", "Q")), std::domain_error);
}

TEST_CASE("global sections correspond to cnc(3), with round trip") {
    for (int NT : {0, 2}) {
        CncCheck chk = verify_cnc_correspondence(NT);
        CHECK(chk.ok);
        CHECK(chk.dimension == 8 * (NT + 1));
        if (!chk.ok) MESSAGE(chk.reason, " at generator ", chk.offender);
    }
    // reality: real cnc elements are reachable from Q(i) combinations
    auto basis = global_vector_fields(1);
    for (auto& X : {st_vf("1", "0", "0", "0"), st_vf("0", "-y", "x", "0"),
                    st_vf("t", "x", "y", "z"), st_vf("0", "t", "0", "0")}) {
        TwistorVectorField lifted = lift_to_twistor(X);
        CHECK(is_global(lifted));
        CHECK(twistor_in_span(lifted, basis));
        CHECK(pushforward(lifted).X == X);
    }
}

TEST_CASE("connection patching and the -2 lambda obstruction") {
    auto c = twistor_context();
    // zero connection: the hatted lambda-lambda-lambda component is -2 lambda
    TwistorConnection zero;
    TwistorConnection hat = connection_patch(zero);
    CHECK(hat.at(2, 2, 2) == parse("-2*lambda", c));
    CHECK(hat.at(0, 0, 0).is_zero());
    // the general transform reproduces the displayed patching row for any
    // section data
    TwistorConnection G;
    G.at(2, 2, 2) = parse("T*Q + lambda", c);
    G.at(2, 1, 2) = parse("Q - 3*lambda^2", c);
    G.at(2, 2, 1) = G.at(2, 1, 2);
    G.at(2, 1, 1) = parse("7*T", c);
    TwistorConnection hatG = connection_patch(G);
    Expr expect = parse("-lambda^2*(T*Q + lambda) - 4*lambda*Q*(Q - 3*lambda^2) "
                        "- 4*Q^2*7*T - 2*lambda", c);
    CHECK(hatG.at(2, 2, 2) == expect);
    // no Laurent ansatz defeats the inhomogeneous term, up to bound +-6
    for (int bound : {2, 6}) CHECK(gbundle_obstructed(bound));
}

TEST_CASE("vertical connection sections patch consistently") {
    auto c = twistor_context();
    TwistorConnection G = vertical_connection(parse("T^2", c), parse("1 - T", c),
                                              parse("3", c), parse("T", c),
                                              parse("T^2 - 1", c), parse("2*T", c));
    TwistorConnection hat = connection_patch(G);
    // all vertical components of the patched connection are holomorphic in
    // the hatted chart
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g) {
                Expr h = hat_subst(hat.at(a, b, g));
                if (!h.is_zero()) CHECK(h.min_degree_in(2) >= 0);
            }
    // and the Q_TT row transforms into Phi0 hat^2 + Phi1 hat + Phi2 + Psi Qhat
    Expr qtt = hat_subst(hat.at(1, 0, 0));
    CHECK(qtt == parse("3*lambda^2 + T*lambda + T^2 - 1 + 2*T*Q", c));
}

TEST_CASE("vertical projective fields and the 13-dimensional S-tilde") {
    auto sv = vertical_projective_fields(2);
    CHECK((int)sv.size() == 11);
    // saturation: raising NT does not enlarge the space
    CHECK((int)vertical_projective_fields(3).size() == 11);
    for (auto& f : sv) {
        CHECK(f.kappaQ.is_zero());
        // kappa = k(T) dT only
        CHECK(f.kappaT.degree_in(1) == 0);
        CHECK(f.kappaT.degree_in(2) == 0);
        CHECK(f.kappaT.min_degree_in(2) == 0);
    }
    auto stilde = stilde_basis(2);
    CHECK((int)stilde.size() == 13);
    for (auto& b : stilde) CHECK(is_global(b));
    CHECK(twistor_closed(stilde));
    // adding T d_lambda breaks closure
    auto bigger = stilde;
    bigger.push_back(tw("0", "0", "T"));
    CHECK(!twistor_closed(bigger));
    // S-tilde sits inside the global sections with NT = 2
    auto glob = global_vector_fields(2);
    for (auto& b : stilde) CHECK(twistor_in_span(b, glob));
    // pushforward realizes the expanded Schrodinger algebra
    NCSpacetime flat = make_flat_spacetime(3);
    VectorFieldBasis sch = solve_expanded_sch(flat, 3);
    std::vector<VectorField> images;
    for (auto& b : stilde) images.push_back(pushforward(b).X);
    CHECK(same_span(images, sch.fields));
}

TEST_CASE("the fifteen CGA generators") {
    auto cga = cga_basis();
    auto expect = cga_spacetime_images();
    REQUIRE(cga.size() == 15);
    for (size_t k = 0; k < cga.size(); ++k) {
        CHECK(is_global(cga[k]));
        CHECK(pushforward(cga[k]).X == expect[k]);
    }
    CHECK(twistor_closed(cga));
    // boost rows are T times the translation rows
    auto c = twistor_context();
    Expr T = Expr::variable(c, 0);
    for (int k = 0; k < 3; ++k) {
        CHECK(cga[8 + k].bQ == T * cga[1 + k].bQ);
        CHECK(cga[8 + k].bT.is_zero());
        CHECK(cga[8 + k].bL.is_zero());
    }
    // the CGA sits inside the global sections with NT = 2
    auto glob = global_vector_fields(2);
    for (auto& b : cga) CHECK(twistor_in_span(b, glob));
}
