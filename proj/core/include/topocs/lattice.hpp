#ifndef TOPOCS_LATTICE_HPP
#define TOPOCS_LATTICE_HPP

#include <compare>
#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <vector>

// Sparse states over the two-integer lattice Z^2 and the operator algebra
// acting on them: ladder shifts e^{+-i phi_i}, the number operators J_i,
// the (linear) index inversion T, and the mixing operators M_i = e^{i phi_i} T
// + (e^{i phi_i} T)^{-1}.
//
// The printed power rules M^{2n}|j> = 2^n |j> and
// M^{2n+1}|j> = 2^n (|-j+e> + |-j-e>) do not agree with literal repeated
// application of the basis action; both semantics are available and are never
// silently substituted for one another (PowerSemantics).

namespace topocs {

using Complex = std::complex<double>;

struct ModeIndex {
    int j1 = 0;
    int j2 = 0;
    auto operator<=>(const ModeIndex&) const = default;
};

enum class Axis { One = 1, Two = 2 };

enum class PowerSemantics { Rewrite, Compositional };

// Amplitudes smaller than this are not stored; never used for accuracy decisions.
inline constexpr double kAmplitudeFloor = 1e-300;

class LatticeState {
public:
    explicit LatticeState(int cutoff);

    // Unit amplitude at j. Throws std::out_of_range if j is outside the cutoff.
    static LatticeState basis(ModeIndex j, int cutoff);

    int cutoff() const { return cutoff_; }
    bool in_range(ModeIndex j) const;

    const std::map<ModeIndex, Complex>& amplitudes() const { return amp_; }
    Complex amp(ModeIndex j) const;

    // Accumulates into the amplitude at j; contributions outside the cutoff
    // are dropped and their 2-norm accumulated in dropped_weight().
    void add(ModeIndex j, Complex c);

    // 2-norm of everything dropped at the cutoff boundary so far, including
    // weight inherited from states this one was derived from.
    double dropped_weight() const;
    void inherit_dropped(const LatticeState& source);

    double norm_sq() const;
    double norm() const;

    LatticeState& operator+=(const LatticeState& other);
    LatticeState& operator*=(Complex c);

private:
    int cutoff_;
    std::map<ModeIndex, Complex> amp_;
    double dropped_sq_ = 0.0;
};

LatticeState operator+(LatticeState a, const LatticeState& b);
LatticeState operator*(Complex c, LatticeState s);

// Sparse bipartite states over pairs (j, j') with a common cutoff per factor.
class TwoModeState {
public:
    using Key = std::pair<ModeIndex, ModeIndex>;

    explicit TwoModeState(int cutoff);

    static TwoModeState basis(ModeIndex j, ModeIndex jp, int cutoff);
    static TwoModeState tensor(const LatticeState& a, const LatticeState& b);

    int cutoff() const { return cutoff_; }
    bool in_range(ModeIndex j) const;

    const std::map<Key, Complex>& amplitudes() const { return amp_; }
    Complex amp(ModeIndex j, ModeIndex jp) const;

    void add(ModeIndex j, ModeIndex jp, Complex c);

    double dropped_weight() const;

    double norm_sq() const;
    double norm() const;

    TwoModeState& operator+=(const TwoModeState& other);
    TwoModeState& operator*=(Complex c);

private:
    int cutoff_;
    std::map<Key, Complex> amp_;
    double dropped_sq_ = 0.0;
};

TwoModeState operator+(TwoModeState a, const TwoModeState& b);
TwoModeState operator*(Complex c, TwoModeState s);

// A linear operator expressed by its action on one basis vector: appends the
// image terms of |j> to `out`.
struct BasisTerm {
    ModeIndex j;
    Complex c;
};
using BasisAction = std::function<void(ModeIndex, std::vector<BasisTerm>&)>;

LatticeState apply(const BasisAction& op, const LatticeState& s);
TwoModeState apply_first(const BasisAction& op, const TwoModeState& s);
TwoModeState apply_second(const BasisAction& op, const TwoModeState& s);

BasisAction ladder_action(Axis axis, int sign);
BasisAction j_action(Axis axis);
BasisAction t_action();
BasisAction m_action(Axis axis);
BasisAction identity_action();

// Named operator set consumed by the intersection operator and the CLI.
enum class OperatorTag {
    Identity,
    LadderPlus1,
    LadderMinus1,
    LadderPlus2,
    LadderMinus2,
    J1,
    J2,
    T,
    M1,
    M2,
};
BasisAction action_for(OperatorTag tag);

LatticeState apply_ladder(Axis axis, int sign, const LatticeState& s);
LatticeState apply_J(Axis axis, const LatticeState& s);
LatticeState apply_T(const LatticeState& s);
LatticeState apply_M(Axis axis, const LatticeState& s);

LatticeState apply_M_power(Axis axis, unsigned k, const LatticeState& s, PowerSemantics sem);
LatticeState apply_exp_M(Axis axis, const LatticeState& s, PowerSemantics sem, double tol);

// <a|b> in ascending index order. Throws std::invalid_argument on cutoff mismatch.
Complex inner(const LatticeState& a, const LatticeState& b);
Complex inner(const TwoModeState& a, const TwoModeState& b);

// <phi|s> = sum_j s_j e^{i j . phi}
Complex position_wavefunction(const LatticeState& s, double phi1, double phi2);

}  // namespace topocs

#endif
