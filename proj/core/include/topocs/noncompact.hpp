#ifndef TOPOCS_NONCOMPACT_HPP
#define TOPOCS_NONCOMPACT_HPP

#include <array>
#include <complex>
#include <vector>

#include "topocs/lattice.hpp"

// Two-level non-compact oscillator: a swaps |+> and |-> with eigenvalue
// alpha, so a^{2n}|+> = alpha^{2n}|+> and a^{2n+1}|+> = alpha^{2n+1}|->.
// b is an independent copy acting on the second tensor factor. The M_i
// power rules on the lattice are isomorphic to powers of a under
// |j> -> |+>, (|-j+e> + |-j-e>)/sqrt(2) -> |->, alpha^2 = 2.

namespace topocs {

struct PMState {
    Complex plus{0.0, 0.0};
    Complex minus{0.0, 0.0};
};

// Amplitudes over {|++>, |+->, |-+>, |-->}, indexed [first][second] with 0 = plus.
struct PMPairState {
    std::array<std::array<Complex, 2>, 2> amp{};
};

PMState apply_a(Complex alpha, const PMState& s);
PMState exp_a(Complex alpha, const PMState& s, double tol);

enum class PairOp { A, B };

// Applies the word left-to-right; A acts on the first factor, B on the second.
PMPairState apply_pair(const std::vector<PairOp>& word, Complex alpha, Complex beta,
                       const PMPairState& s);

struct IsomorphismRow {
    unsigned power = 0;
    double residual_normalized = 0.0;  // alpha = sqrt(2), companion normalized
    double residual_literal = 0.0;     // alpha = 2, companion unnormalized
};

struct IsomorphismReport {
    ModeIndex j;
    Axis axis = Axis::One;
    std::vector<IsomorphismRow> rows;
    bool normalized_match = false;
};

// Compares M_i^k under Rewrite semantics against a^k on the two-level
// system, powers 0..max_power, for both readings of the "2 -> alpha"
// identification.
IsomorphismReport isomorphism_check(ModeIndex j, Axis axis, unsigned max_power = 6,
                                    int cutoff = 8);

}  // namespace topocs

#endif
