/* Wall-clock comparison of the serial reference kernels against the
 * OpenMP kernels on the exhaustive checkers. */

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "homnambu/compat.hpp"
#include "homnambu/fixtures.hpp"

using namespace homnambu;

namespace {

double run_ms(const std::function<void()>& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

/* Brackets into the span of the last basis vector at a given dimension,
 * induced by a matching compatible triple; exercises the five-slot sweep
 * at dim^5 tuples. */
TernaryAlgebra span_family(std::size_t dim, std::mt19937& gen) {
    BinaryAlgebra a(dim, ParamSet::empty(), {});
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (std::size_t i = 0; i + 1 < dim; ++i)
        for (std::size_t j = i + 1; j + 1 < dim; ++j) {
            Vec v = zero_vec(dim);
            v[dim - 1] = Scalar::of(coeff(gen));
            a.set_bracket(i, j, std::move(v));
        }
    Vec tau = zero_vec(dim);
    tau[0] = Scalar::of(coeff(gen) | 1);
    Matrix alpha = Matrix::identity(dim).scaled(Scalar::of(3, 2));
    Matrix beta = alpha.scaled(Scalar::of(-2, 7));
    return induce_ternary(a, tau, alpha, beta);
}

void row(const char* name, std::size_t tuples, const std::function<CheckReport(Exec)>& check) {
    CheckReport serial_report, parallel_report;
    double serial_ms = run_ms([&] { serial_report = check(Exec::serial); });
    double parallel_ms = run_ms([&] { parallel_report = check(Exec::parallel); });
    const char* agree =
        serial_report.verdict == parallel_report.verdict ? to_string(serial_report.verdict).c_str()
                                                         : "DISAGREE";
    std::printf("%-28s %8zu %12.2f %12.2f %9.2fx  %s\n", name, tuples, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, agree);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled in this build\n");
#endif
    std::printf("%-28s %8s %12s %12s %10s  %s\n", "check", "tuples", "serial ms", "parallel ms",
                "speedup", "verdict");

    std::mt19937 gen(99);

    AlgebraDocument n4 = make_fixture("n4");
    TernaryAlgebra tn4 = n4.to_ternary();
    row("hom-nambu n4 full", 1024,
        [&](Exec e) { return check_hom_nambu(tn4, e, NambuSweep::full); });

    TernaryAlgebra t5 = span_family(5, gen);
    row("hom-nambu dim5 full", 3125,
        [&](Exec e) { return check_hom_nambu(t5, e, NambuSweep::full); });

    TernaryAlgebra t6 = span_family(6, gen);
    row("hom-nambu dim6 full", 7776,
        [&](Exec e) { return check_hom_nambu(t6, e, NambuSweep::full); });

    AlgebraDocument ex2 = apply_constraints(make_fixture("ex2_4dim"));
    BinaryAlgebra a2 = ex2.to_binary();
    TernaryAlgebra t2 = induce_ternary(a2, ex2.functional("tau"), ex2.map("alpha"), ex2.map("beta"));
    row("hom-nambu ex2 symbolic", 1024,
        [&](Exec e) { return check_hom_nambu(t2, e, NambuSweep::full); });

    row("hom-jacobi ex2 symbolic", 20,
        [&](Exec e) { return check_hom_jacobi(a2, ex2.map("alpha"), e); });

    return 0;
}
