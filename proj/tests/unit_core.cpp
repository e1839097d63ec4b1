#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homnambu/errors.hpp"
#include "homnambu/linalg.hpp"
#include "homnambu/scalar.hpp"
#include "homnambu/scalar_parse.hpp"

using namespace homnambu;

namespace {

ParamSetPtr pqr() { return ParamSet::make({"p", "q", "r"}); }

Scalar sc(const char* text) { return parse_scalar(text, pqr()); }

Rational rand_rat(std::mt19937& gen) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return rat(num(gen), den(gen));
}

/* Random scalar with numerator and denominator of a few low-degree terms. */
Scalar rand_scalar(std::mt19937& gen, bool nonzero = false) {
    auto params = pqr();
    std::uniform_int_distribution<int> nterms(1, 3), expo(0, 2);
    auto rand_poly = [&] {
        MultiPoly p = MultiPoly::zero(params);
        int k = nterms(gen);
        for (int t = 0; t < k; ++t) {
            Exponents e{static_cast<std::uint32_t>(expo(gen)), static_cast<std::uint32_t>(expo(gen)),
                        static_cast<std::uint32_t>(expo(gen))};
            p.add_term(e, rand_rat(gen));
        }
        return p;
    };
    for (;;) {
        MultiPoly num = rand_poly(), den = rand_poly();
        if (den.is_zero()) continue;
        Scalar s(num, den);
        if (nonzero && s.is_zero()) continue;
        return s;
    }
}

}  // namespace

TEST_CASE("rational scalar arithmetic") {
    CHECK(Scalar::of(1, 2) + Scalar::of(1, 3) == Scalar::of(5, 6));
    CHECK(Scalar::of(2, 4) == Scalar::of(1, 2));
    CHECK(Scalar::of(3) * Scalar::of(1, 3) == Scalar::one());
    CHECK(Scalar::of(1) - Scalar::of(1) == Scalar::zero());
    CHECK((Scalar::of(-7, 3) / Scalar::of(-7, 3)) == Scalar::one());
    CHECK_THROWS_AS(Scalar::one() / Scalar::zero(), DivisionByZeroScalar);
    CHECK(Scalar::of(2, 4).to_string() == "1/2");
    CHECK(Scalar::of(-1, 2).to_string() == "-1/2");
    CHECK(Scalar::of(5).to_string() == "5");
}

TEST_CASE("parametric scalar arithmetic") {
    Scalar p = sc("p"), q = sc("q"), r = sc("r");
    CHECK((p + q) * (p + q) == p * p + Scalar::of(2) * p * q + q * q);
    CHECK((p * p - q * q) == (p + q) * (p - q));
    /* Cross-multiplication equality identifies quotients without polynomial gcd. */
    CHECK((p * p - q * q) / (p - q) == p + q);
    CHECK(sc("(q*r)/p").to_string() == "(q*r)/p");
    CHECK(sc("p/2 + p/2") == p);
    CHECK((p / q) / (p / q) == Scalar::one());
    CHECK_THROWS_AS(p / (q - q), DivisionByZeroScalar);
}

TEST_CASE("scalar canonical text") {
    /* Joint rational content is removed; constant denominators fold into
     * the numerator; denominator leading coefficient is positive. */
    CHECK(sc("(2*p)/(4*q)").to_string() == "p/(2*q)");
    CHECK(sc("(2*p)/2").to_string() == "p");
    CHECK(sc("p/(-q)").to_string() == "-p/q");
    CHECK(sc("(p + p)/(q + q)").to_string() == "p/q");
    CHECK(sc("-(p*q)").to_string() == "-p*q");
    CHECK(sc("p - 2").to_string() == "p - 2");
    CHECK(sc("2 - p").to_string() == "-p + 2");
    CHECK(sc("1/2 * p").to_string() == "1/2*p");
}

TEST_CASE("grlex term order in rendered text") {
    /* Total degree descending, then lexicographic exponents. */
    CHECK(sc("q + p^2 + 1").to_string() == "p^2 + q + 1");
    CHECK(sc("q*r + p*q").to_string() == "p*q + q*r");
    CHECK(sc("p + p*q*r + q^2").to_string() == "p*q*r + q^2 + p");
}

TEST_CASE("scalar parse errors") {
    CHECK_THROWS_AS(sc("(p"), ParseError);
    CHECK_THROWS_AS(sc("1 +"), ParseError);
    CHECK_THROWS_AS(sc("p^-2"), ParseError);
    CHECK_THROWS_AS(sc(""), ParseError);
    CHECK_THROWS_AS(sc("p q"), ParseError);
    CHECK_THROWS_AS(sc("zz + 1"), UndeclaredParameter);
    CHECK_THROWS_AS(sc("1/(p - p)"), DivisionByZeroScalar);
    try {
        sc("p + zz");
        CHECK(false);
    } catch (const UndeclaredParameter& e) {
        CHECK(e.name == "zz");
        CHECK(e.offset == 4);
    }
}

TEST_CASE("scalar parse grammar") {
    CHECK(sc("2^10") == Scalar::of(1024));
    CHECK(sc("p^0") == Scalar::one());
    CHECK(sc("-p^2") == Scalar::zero() - sc("p") * sc("p"));
    CHECK(sc("2*p^2*q") == Scalar::of(2) * sc("p") * sc("p") * sc("q"));
    CHECK(sc("(p + q)^2") == sc("p^2 + 2*p*q + q^2"));
    CHECK(sc("1/3/5") == Scalar::of(1, 15));
    CHECK(sc("- - p") == sc("p"));
    CHECK(sc(" p\t+ 1 ") == sc("p + 1"));
}

TEST_CASE("substitution") {
    Scalar s = sc("(p + q)/r");
    std::map<std::string, Scalar> b{{"p", Scalar::one()}, {"q", Scalar::of(2)}, {"r", Scalar::of(3)}};
    CHECK(substitute(s, b) == Scalar::one());
    std::map<std::string, Scalar> zero_den{{"r", Scalar::zero()}};
    CHECK_THROWS_AS(substitute(s, zero_den), DenominatorVanishes);
    /* Partial bindings leave the other parameters intact. */
    std::map<std::string, Scalar> part{{"p", sc("q")}};
    CHECK(substitute(s, part) == sc("(2*q)/r"));
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 gen(2026);
    for (int it = 0; it < 200; ++it) {
        Scalar a = rand_scalar(gen), b = rand_scalar(gen), c = rand_scalar(gen);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == Scalar::zero());
        Scalar d = rand_scalar(gen, /*nonzero=*/true);
        CHECK((a / d) * d == a);
    }
}

TEST_CASE("parse of rendered text is the identity") {
    std::mt19937 gen(31337);
    for (int it = 0; it < 200; ++it) {
        Scalar a = rand_scalar(gen);
        CHECK(parse_scalar(a.to_string(), a.params()) == a);
    }
}

TEST_CASE("matrix arithmetic") {
    Matrix a(2, 2), b(2, 2);
    a.at(0, 0) = Scalar::of(1);
    a.at(0, 1) = Scalar::of(2);
    a.at(1, 0) = Scalar::of(3);
    a.at(1, 1) = Scalar::of(4);
    b.at(0, 1) = Scalar::one();
    Matrix ab = a * b;
    CHECK(ab.at(0, 1) == Scalar::of(1));
    CHECK(ab.at(1, 1) == Scalar::of(3));
    CHECK(ab.at(0, 0) == Scalar::zero());
    CHECK(Matrix::identity(2) * a == a);
    CHECK(a + (-a) == Matrix(2, 2));
    CHECK((a.scaled(Scalar::of(2))).at(1, 0) == Scalar::of(6));
    Vec v{Scalar::of(1), Scalar::of(1)};
    Vec av = a.apply(v);
    CHECK(av[0] == Scalar::of(3));
    CHECK(av[1] == Scalar::of(7));
}

/* Conjugation x -> s^-1 x s by s = diag(1, 2) on the elementary-matrix
 * basis E11, E12, E21, E22, computed two independent ways: once as 2x2
 * rational matrix products, once as the 4x4 basis representation
 * diag(1, 2, 1/2, 1).  In particular E12 -> 2 E12: right-multiplying by s
 * doubles the second column, and s^-1 leaves the first row alone. */
TEST_CASE("conjugation by diag(1,2) in the elementary-matrix basis") {
    using M2 = std::array<std::array<Rational, 2>, 2>;
    auto mul = [](const M2& x, const M2& y) {
        M2 z{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    M2 s{{{rat(1), rat(0)}, {rat(0), rat(2)}}};
    M2 s_inv{{{rat(1), rat(0)}, {rat(0), rat(1, 2)}}};

    /* Basis element E_{ab} as a 2x2 matrix, basis order E11, E12, E21, E22. */
    auto unit = [](int a, int b) {
        M2 e{};
        e[a][b] = rat(1);
        return e;
    };
    int ab[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

    Matrix rep = Matrix::identity(4);
    rep.at(1, 1) = Scalar::of(2);
    rep.at(2, 2) = Scalar::of(1, 2);

    for (int col = 0; col < 4; ++col) {
        M2 image = mul(mul(s_inv, unit(ab[col][0], ab[col][1])), s);
        for (int row = 0; row < 4; ++row) {
            Rational want = image[ab[row][0]][ab[row][1]];
            CHECK(rep.at(row, col) == Scalar(want));
        }
    }
    M2 e12 = mul(mul(s_inv, unit(0, 1)), s);
    CHECK(e12[0][1] == rat(2));
}

TEST_CASE("rref and rank") {
    Matrix m(3, 3);
    m.at(0, 0) = Scalar::of(1);
    m.at(0, 1) = Scalar::of(2);
    m.at(0, 2) = Scalar::of(3);
    m.at(1, 0) = Scalar::of(2);
    m.at(1, 1) = Scalar::of(4);
    m.at(1, 2) = Scalar::of(6);
    m.at(2, 1) = Scalar::of(1);
    m.at(2, 2) = Scalar::of(1);
    RrefResult rr = rref(m);
    CHECK(rr.rank == 2);
    REQUIRE(rr.pivot_cols.size() == 2);
    CHECK(rr.pivot_cols[0] == 0);
    CHECK(rr.pivot_cols[1] == 1);
    CHECK(rr.mat.at(0, 0) == Scalar::one());
    CHECK(rr.mat.at(0, 1) == Scalar::zero());
    CHECK(rr.mat.at(0, 2) == Scalar::one());
    CHECK(rr.mat.at(1, 1) == Scalar::one());
    CHECK(rr.mat.at(1, 2) == Scalar::one());
    CHECK(rr.pivot_assumptions.empty());
}

TEST_CASE("parametric rref records pivot assumptions") {
    auto params = pqr();
    Matrix m(2, 2);
    m.at(0, 0) = parse_scalar("p", params);
    m.at(0, 1) = Scalar::one();
    m.at(1, 1) = Scalar::one();
    RrefResult rr = rref(m);
    CHECK(rr.rank == 2);
    REQUIRE(rr.pivot_assumptions.size() == 1);
    CHECK(rr.pivot_assumptions[0] == parse_scalar("p", params));
    CHECK(rr.mat.at(0, 0) == Scalar::one());
    CHECK(rr.mat.at(0, 1) == Scalar::zero());
}

TEST_CASE("subspace canonicalization") {
    Vec a{Scalar::of(1), Scalar::of(1)};
    Vec b{Scalar::of(2), Scalar::of(2)};
    Vec c{Scalar::zero(), Scalar::of(1)};
    Subspace s = Subspace::from_spanning(2, {a, b, c});
    CHECK(s.dim() == 2);
    CHECK(s == Subspace::full(2));
    Subspace line = Subspace::from_spanning(2, {a, b});
    CHECK(line.dim() == 1);
    CHECK(subspace_contains(line, Vec{Scalar::of(5), Scalar::of(5)}));
    CHECK(!subspace_contains(line, c));
    CHECK(line.basis()[0][0] == Scalar::one());
}

TEST_CASE("nullspace") {
    Matrix m(1, 3);
    m.at(0, 0) = Scalar::of(1);
    m.at(0, 1) = Scalar::of(2);
    m.at(0, 2) = Scalar::of(3);
    Subspace n = nullspace(m);
    CHECK(n.dim() == 2);
    for (const Vec& v : n.basis()) {
        Scalar dot = Scalar::zero();
        for (int i = 0; i < 3; ++i) dot = dot + m.at(0, i) * v[i];
        CHECK(dot == Scalar::zero());
    }
    CHECK(nullspace(Matrix(2, 4)).dim() == 4);
    CHECK(nullspace(Matrix::identity(3)).dim() == 0);

    Vec tau{Scalar::of(1), Scalar::of(1), Scalar::zero(), Scalar::zero()};
    Subspace k = nullspace_of_covector(tau);
    CHECK(k.dim() == 3);
    CHECK(subspace_contains(k, Vec{Scalar::of(1), Scalar::of(-1), Scalar::zero(), Scalar::zero()}));
    CHECK(!subspace_contains(k, Vec{Scalar::of(1), Scalar::of(1), Scalar::zero(), Scalar::zero()}));
}

TEST_CASE("solve_linear") {
    /* x + y = 3, x - y = 1. */
    std::vector<Vec> rows{{Scalar::of(1), Scalar::of(1)}, {Scalar::of(1), Scalar::of(-1)}};
    Vec rhs{Scalar::of(3), Scalar::of(1)};
    LinearSolution sol = solve_linear(rows, rhs, 2);
    CHECK(sol.consistent);
    CHECK(sol.particular[0] == Scalar::of(2));
    CHECK(sol.particular[1] == Scalar::one());
    CHECK(sol.homogeneous.dim() == 0);

    /* x + y = 1, x + y = 2 is inconsistent. */
    std::vector<Vec> bad{{Scalar::of(1), Scalar::of(1)}, {Scalar::of(1), Scalar::of(1)}};
    Vec rhs2{Scalar::of(1), Scalar::of(2)};
    CHECK(!solve_linear(bad, rhs2, 2).consistent);

    /* Underdetermined: x + y = 1. */
    LinearSolution u = solve_linear({{Scalar::of(1), Scalar::of(1)}}, Vec{Scalar::of(1)}, 2);
    CHECK(u.consistent);
    CHECK(u.homogeneous.dim() == 1);
    CHECK(u.particular[0] + u.particular[1] == Scalar::one());
}

TEST_CASE("covector helpers") {
    Vec tau{Scalar::of(1), Scalar::of(2)};
    Vec v{Scalar::of(3), Scalar::of(4)};
    CHECK(apply_covector(tau, v) == Scalar::of(11));
    Matrix m(2, 2);
    m.at(0, 0) = Scalar::of(1);
    m.at(1, 0) = Scalar::of(1);
    m.at(1, 1) = Scalar::of(1);
    Vec tm = covector_compose(tau, m);
    CHECK(tm[0] == Scalar::of(3));
    CHECK(tm[1] == Scalar::of(2));
}

TEST_CASE("scalars from different parameter sets reject; constants promote") {
    auto a = ParamSet::make({"p"});
    auto b = ParamSet::make({"p", "q"});
    Scalar pa = parse_scalar("p", a);
    Scalar qb = parse_scalar("q", b);
    /* Mixing is explicit: distinct sets reject even when one extends the other. */
    CHECK_THROWS_AS(pa + qb, DimensionMismatch);
    auto c = ParamSet::make({"z"});
    CHECK_THROWS_AS(pa + parse_scalar("z", c), DimensionMismatch);
    /* Constants are set-agnostic. */
    CHECK(pa * parse_scalar("2", c) == pa + pa);
    CHECK(parse_scalar("3", a) + parse_scalar("4", c) == Scalar::of(7));
}
