#include "topocs/noncompact.hpp"

#include <cmath>
#include <stdexcept>

namespace topocs {

PMState apply_a(Complex alpha, const PMState& s) {
    return {alpha * s.minus, alpha * s.plus};
}

PMState exp_a(Complex alpha, const PMState& s, double tol) {
    if (tol <= 0.0) {
        throw std::invalid_argument("exp_a: tolerance must be positive");
    }
    PMState sum = s;
    PMState term = s;
    double factorial = 1.0;
    for (unsigned k = 1; k <= 170; ++k) {
        factorial *= static_cast<double>(k);
        term = apply_a(alpha, term);
        const PMState scaled{term.plus / factorial, term.minus / factorial};
        sum.plus += scaled.plus;
        sum.minus += scaled.minus;
        if (std::abs(scaled.plus) + std::abs(scaled.minus) < tol) {
            return sum;
        }
    }
    throw std::domain_error("exp_a: series did not converge");
}

PMPairState apply_pair(const std::vector<PairOp>& word, Complex alpha, Complex beta,
                       const PMPairState& s) {
    PMPairState cur = s;
    for (PairOp op : word) {
        PMPairState next;
        for (int f = 0; f < 2; ++f) {
            for (int g = 0; g < 2; ++g) {
                if (op == PairOp::A) {
                    // swap first factor
                    next.amp[f][g] += alpha * cur.amp[1 - f][g];
                } else {
                    next.amp[f][g] += beta * cur.amp[f][1 - g];
                }
            }
        }
        cur = next;
    }
    return cur;
}

IsomorphismReport isomorphism_check(ModeIndex j, Axis axis, unsigned max_power, int cutoff) {
    IsomorphismReport report;
    report.j = j;
    report.axis = axis;

    const LatticeState base = LatticeState::basis(j, cutoff);
    const LatticeState companion = apply_M(axis, base);  // |-j+e> + |-j-e|, norm sqrt(2)

    const Complex alpha_norm(std::sqrt(2.0), 0.0);
    const Complex alpha_lit(2.0, 0.0);

    bool all_zero = true;
    for (unsigned k = 0; k <= max_power; ++k) {
        const LatticeState mk = apply_M_power(axis, k, base, PowerSemantics::Rewrite);

        // Decompose onto |j> and the companion direction. The two supports
        // are disjoint for any integer j.
        const Complex cp = inner(base, mk);
        const Complex cm_unnorm = inner(companion, mk) / 2.0;          // coefficient on the raw pair
        const Complex cm_norm = cm_unnorm * std::sqrt(2.0);            // coefficient on the unit vector

        PMState a_norm{1.0, 0.0};
        PMState a_lit{1.0, 0.0};
        for (unsigned p = 0; p < k; ++p) {
            a_norm = apply_a(alpha_norm, a_norm);
            a_lit = apply_a(alpha_lit, a_lit);
        }

        IsomorphismRow row;
        row.power = k;
        row.residual_normalized =
            std::sqrt(std::norm(cp - a_norm.plus) + std::norm(cm_norm - a_norm.minus));
        row.residual_literal =
            std::sqrt(std::norm(cp - a_lit.plus) + std::norm(cm_unnorm - a_lit.minus));
        if (row.residual_normalized > 1e-12) {
            all_zero = false;
        }
        report.rows.push_back(row);
    }
    report.normalized_match = all_zero;
    return report;
}

}  // namespace topocs
