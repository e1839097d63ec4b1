#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homnambu/compat.hpp"
#include "homnambu/fixtures.hpp"

using namespace homnambu;

/* The parallel kernels must agree with the serial reference bit for bit:
 * same verdict, same lexicographically-first witness, same residual. */

namespace {

void check_equal(const CheckReport& s, const CheckReport& p) {
    CHECK(s.verdict == p.verdict);
    REQUIRE(s.witness.has_value() == p.witness.has_value());
    if (s.witness) CHECK(*s.witness == *p.witness);
    REQUIRE(s.residual.has_value() == p.residual.has_value());
    if (s.residual) CHECK(vec_eq(*s.residual, *p.residual));
}

}  // namespace

TEST_CASE("hom-jacobi kernels agree on passing data") {
    AlgebraDocument doc = make_fixture("gl2");
    BinaryAlgebra a = doc.to_binary();
    check_equal(check_hom_jacobi(a, Matrix::identity(4), Exec::serial),
                check_hom_jacobi(a, Matrix::identity(4), Exec::parallel));
}

TEST_CASE("hom-jacobi kernels agree on the first failing witness") {
    AlgebraDocument doc = make_fixture("gl2");
    BinaryAlgebra a = doc.to_binary();
    /* Corrupt [E11, E12] by +E11 so several triples fail. */
    Vec v = a.stored_bracket(0, 1);
    v[0] = v[0] + Scalar::one();
    a.set_bracket(0, 1, std::move(v));
    CheckReport s = check_hom_jacobi(a, Matrix::identity(4), Exec::serial);
    CheckReport p = check_hom_jacobi(a, Matrix::identity(4), Exec::parallel);
    REQUIRE(!s.holds());
    check_equal(s, p);
}

TEST_CASE("hom-nambu kernels agree on full and reduced sweeps") {
    AlgebraDocument doc = make_fixture("n4");
    TernaryAlgebra t = doc.to_ternary();
    for (NambuSweep sweep : {NambuSweep::full, NambuSweep::reduced}) {
        check_equal(check_hom_nambu(t, Exec::serial, sweep),
                    check_hom_nambu(t, Exec::parallel, sweep));
    }
    TernaryAlgebra bad = doc.to_ternary();
    Vec v = zero_vec(4);
    v[0] = Scalar::one();
    bad.set_bracket(0, 1, 2, v);
    for (NambuSweep sweep : {NambuSweep::full, NambuSweep::reduced}) {
        CheckReport s = check_hom_nambu(bad, Exec::serial, sweep);
        CheckReport p = check_hom_nambu(bad, Exec::parallel, sweep);
        REQUIRE(!s.holds());
        check_equal(s, p);
    }
}

TEST_CASE("hom-nambu kernels agree on parametric scalars") {
    AlgebraDocument doc = apply_constraints(make_fixture("ex2_4dim"));
    BinaryAlgebra a = doc.to_binary();
    TernaryAlgebra t =
        induce_ternary(a, doc.functional("tau"), doc.map("alpha"), doc.map("beta"));
    check_equal(check_hom_nambu(t, Exec::serial), check_hom_nambu(t, Exec::parallel));
    check_equal(check_hom_jacobi(a, doc.map("alpha"), Exec::serial),
                check_hom_jacobi(a, doc.map("alpha"), Exec::parallel));
}
