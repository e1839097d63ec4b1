#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homnambu/linalg.hpp"

namespace homnambu {

enum class Verdict { Holds, Fails };

/* How the exhaustive checker kernels run.  Both orders are deterministic:
 * the parallel kernels reduce to the lexicographically first failing
 * tuple, matching the serial reference exactly. */
enum class Exec { serial, parallel };

/* Outcome of one symbolic identity check.
 *
 * Invariant: verdict == Fails implies witness and residual are present
 * and the residual has a nonzero entry; the witness is the
 * lexicographically first failing basis tuple (0-based indices). */
struct CheckReport {
    Verdict verdict = Verdict::Holds;
    std::optional<std::vector<std::size_t>> witness;
    std::optional<Vec> residual;
    std::vector<Scalar> pivot_assumptions;

    bool holds() const { return verdict == Verdict::Holds; }
    static CheckReport pass() { return {}; }
    static CheckReport fail(std::vector<std::size_t> witness, Vec residual) {
        CheckReport r;
        r.verdict = Verdict::Fails;
        r.witness = std::move(witness);
        r.residual = std::move(residual);
        return r;
    }
};

inline std::string to_string(Verdict v) { return v == Verdict::Holds ? "Holds" : "Fails"; }

}  // namespace homnambu
