#pragma once

// Test-side oracle: the rho recursion written directly from its definition,
// no memo table, no sharing with the library implementation. Deliberately
// naive; only run it at small scale.

#include "ordwalk/cseq.hpp"
#include "ordwalk/ordinal.hpp"

namespace ordwalk_test {

inline ordwalk::Ordinal rho_oracle(const ordwalk::CSeqFamily& fam, const ordwalk::Ordinal& alpha,
                                   const ordwalk::Ordinal& beta) {
    using ordwalk::Ordinal;
    if (alpha == beta) return Ordinal();
    Ordinal best = fam.otp_below(beta, alpha);
    Ordinal via_step = rho_oracle(fam, alpha, fam.min_above(beta, alpha));
    if (via_step > best) best = via_step;
    for (const Ordinal& xi : fam.segment(alpha, beta)) {
        Ordinal r = rho_oracle(fam, xi, alpha);
        if (r > best) best = r;
    }
    return best;
}

} // namespace ordwalk_test
