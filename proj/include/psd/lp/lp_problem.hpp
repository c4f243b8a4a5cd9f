#pragma once

#include "psd/core/problem.hpp"

namespace psd::lp {

/// Lex-greatest optimum of an integer LP. The prover solves the perturbed
/// program exactly; the verifier checks the primal/dual pair (or a Farkas or
/// ray certificate) with matrix-vector products only.
const Problem& lp_problem();

}  // namespace psd::lp
