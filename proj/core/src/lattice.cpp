#include "topocs/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace topocs {

namespace {

void check_cutoff(int cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("cutoff must be a positive integer");
    }
}

ModeIndex step(ModeIndex j, Axis axis, int sign) {
    if (axis == Axis::One) {
        return {j.j1 + sign, j.j2};
    }
    return {j.j1, j.j2 + sign};
}

ModeIndex negate(ModeIndex j) {
    return {-j.j1, -j.j2};
}

}  // namespace

LatticeState::LatticeState(int cutoff) : cutoff_(cutoff) {
    check_cutoff(cutoff);
}

LatticeState LatticeState::basis(ModeIndex j, int cutoff) {
    LatticeState s(cutoff);
    if (!s.in_range(j)) {
        throw std::out_of_range("basis_state: index outside cutoff");
    }
    s.amp_[j] = Complex(1.0, 0.0);
    return s;
}

bool LatticeState::in_range(ModeIndex j) const {
    return std::abs(j.j1) <= cutoff_ && std::abs(j.j2) <= cutoff_;
}

Complex LatticeState::amp(ModeIndex j) const {
    auto it = amp_.find(j);
    return it == amp_.end() ? Complex(0.0, 0.0) : it->second;
}

void LatticeState::add(ModeIndex j, Complex c) {
    if (!in_range(j)) {
        dropped_sq_ += std::norm(c);
        return;
    }
    Complex& slot = amp_[j];
    slot += c;
    if (std::abs(slot) < kAmplitudeFloor) {
        amp_.erase(j);
    }
}

double LatticeState::dropped_weight() const {
    return std::sqrt(dropped_sq_);
}

void LatticeState::inherit_dropped(const LatticeState& source) {
    dropped_sq_ += source.dropped_sq_;
}

double LatticeState::norm_sq() const {
    double n = 0.0;
    for (const auto& [j, c] : amp_) {
        n += std::norm(c);
    }
    return n;
}

double LatticeState::norm() const {
    return std::sqrt(norm_sq());
}

LatticeState& LatticeState::operator+=(const LatticeState& other) {
    if (other.cutoff_ != cutoff_) {
        throw std::invalid_argument("LatticeState: cutoff mismatch");
    }
    for (const auto& [j, c] : other.amp_) {
        add(j, c);
    }
    dropped_sq_ += other.dropped_sq_;
    return *this;
}

LatticeState& LatticeState::operator*=(Complex c) {
    if (std::abs(c) < kAmplitudeFloor) {
        amp_.clear();
        return *this;
    }
    for (auto& [j, a] : amp_) {
        a *= c;
    }
    return *this;
}

LatticeState operator+(LatticeState a, const LatticeState& b) {
    a += b;
    return a;
}

LatticeState operator*(Complex c, LatticeState s) {
    s *= c;
    return s;
}

TwoModeState::TwoModeState(int cutoff) : cutoff_(cutoff) {
    check_cutoff(cutoff);
}

TwoModeState TwoModeState::basis(ModeIndex j, ModeIndex jp, int cutoff) {
    TwoModeState s(cutoff);
    if (!s.in_range(j) || !s.in_range(jp)) {
        throw std::out_of_range("TwoModeState::basis: index outside cutoff");
    }
    s.amp_[{j, jp}] = Complex(1.0, 0.0);
    return s;
}

TwoModeState TwoModeState::tensor(const LatticeState& a, const LatticeState& b) {
    if (a.cutoff() != b.cutoff()) {
        throw std::invalid_argument("tensor: cutoff mismatch");
    }
    TwoModeState s(a.cutoff());
    for (const auto& [j, ca] : a.amplitudes()) {
        for (const auto& [jp, cb] : b.amplitudes()) {
            s.amp_[{j, jp}] = ca * cb;
        }
    }
    return s;
}

bool TwoModeState::in_range(ModeIndex j) const {
    return std::abs(j.j1) <= cutoff_ && std::abs(j.j2) <= cutoff_;
}

Complex TwoModeState::amp(ModeIndex j, ModeIndex jp) const {
    auto it = amp_.find({j, jp});
    return it == amp_.end() ? Complex(0.0, 0.0) : it->second;
}

void TwoModeState::add(ModeIndex j, ModeIndex jp, Complex c) {
    if (!in_range(j) || !in_range(jp)) {
        dropped_sq_ += std::norm(c);
        return;
    }
    Complex& slot = amp_[{j, jp}];
    slot += c;
    if (std::abs(slot) < kAmplitudeFloor) {
        amp_.erase({j, jp});
    }
}

double TwoModeState::dropped_weight() const {
    return std::sqrt(dropped_sq_);
}

double TwoModeState::norm_sq() const {
    double n = 0.0;
    for (const auto& [k, c] : amp_) {
        n += std::norm(c);
    }
    return n;
}

double TwoModeState::norm() const {
    return std::sqrt(norm_sq());
}

TwoModeState& TwoModeState::operator+=(const TwoModeState& other) {
    if (other.cutoff_ != cutoff_) {
        throw std::invalid_argument("TwoModeState: cutoff mismatch");
    }
    for (const auto& [k, c] : other.amp_) {
        add(k.first, k.second, c);
    }
    dropped_sq_ += other.dropped_sq_;
    return *this;
}

TwoModeState& TwoModeState::operator*=(Complex c) {
    if (std::abs(c) < kAmplitudeFloor) {
        amp_.clear();
        return *this;
    }
    for (auto& [k, a] : amp_) {
        a *= c;
    }
    return *this;
}

TwoModeState operator+(TwoModeState a, const TwoModeState& b) {
    a += b;
    return a;
}

TwoModeState operator*(Complex c, TwoModeState s) {
    s *= c;
    return s;
}

LatticeState apply(const BasisAction& op, const LatticeState& s) {
    LatticeState out(s.cutoff());
    out.inherit_dropped(s);
    std::vector<BasisTerm> terms;
    for (const auto& [j, c] : s.amplitudes()) {
        terms.clear();
        op(j, terms);
        for (const auto& t : terms) {
            out.add(t.j, c * t.c);
        }
    }
    return out;
}

TwoModeState apply_first(const BasisAction& op, const TwoModeState& s) {
    TwoModeState out(s.cutoff());
    std::vector<BasisTerm> terms;
    for (const auto& [k, c] : s.amplitudes()) {
        terms.clear();
        op(k.first, terms);
        for (const auto& t : terms) {
            out.add(t.j, k.second, c * t.c);
        }
    }
    return out;
}

TwoModeState apply_second(const BasisAction& op, const TwoModeState& s) {
    TwoModeState out(s.cutoff());
    std::vector<BasisTerm> terms;
    for (const auto& [k, c] : s.amplitudes()) {
        terms.clear();
        op(k.second, terms);
        for (const auto& t : terms) {
            out.add(k.first, t.j, c * t.c);
        }
    }
    return out;
}

BasisAction ladder_action(Axis axis, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("ladder_action: sign must be +-1");
    }
    return [axis, sign](ModeIndex j, std::vector<BasisTerm>& out) {
        out.push_back({step(j, axis, sign), Complex(1.0, 0.0)});
    };
}

BasisAction j_action(Axis axis) {
    return [axis](ModeIndex j, std::vector<BasisTerm>& out) {
        const double eig = axis == Axis::One ? j.j1 : j.j2;
        if (eig != 0.0) {
            out.push_back({j, Complex(eig, 0.0)});
        }
    };
}

BasisAction t_action() {
    return [](ModeIndex j, std::vector<BasisTerm>& out) {
        out.push_back({negate(j), Complex(1.0, 0.0)});
    };
}

BasisAction m_action(Axis axis) {
    // M_i |j> = |-j + e_i> + |-j - e_i>
    return [axis](ModeIndex j, std::vector<BasisTerm>& out) {
        const ModeIndex nj = negate(j);
        out.push_back({step(nj, axis, +1), Complex(1.0, 0.0)});
        out.push_back({step(nj, axis, -1), Complex(1.0, 0.0)});
    };
}

BasisAction identity_action() {
    return [](ModeIndex j, std::vector<BasisTerm>& out) {
        out.push_back({j, Complex(1.0, 0.0)});
    };
}

BasisAction action_for(OperatorTag tag) {
    switch (tag) {
        case OperatorTag::Identity:
            return identity_action();
        case OperatorTag::LadderPlus1:
            return ladder_action(Axis::One, +1);
        case OperatorTag::LadderMinus1:
            return ladder_action(Axis::One, -1);
        case OperatorTag::LadderPlus2:
            return ladder_action(Axis::Two, +1);
        case OperatorTag::LadderMinus2:
            return ladder_action(Axis::Two, -1);
        case OperatorTag::J1:
            return j_action(Axis::One);
        case OperatorTag::J2:
            return j_action(Axis::Two);
        case OperatorTag::T:
            return t_action();
        case OperatorTag::M1:
            return m_action(Axis::One);
        case OperatorTag::M2:
            return m_action(Axis::Two);
    }
    throw std::invalid_argument("action_for: unknown operator tag");
}

LatticeState apply_ladder(Axis axis, int sign, const LatticeState& s) {
    return topocs::apply(ladder_action(axis, sign), s);
}

LatticeState apply_J(Axis axis, const LatticeState& s) {
    return topocs::apply(j_action(axis), s);
}

LatticeState apply_T(const LatticeState& s) {
    return topocs::apply(t_action(), s);
}

LatticeState apply_M(Axis axis, const LatticeState& s) {
    return topocs::apply(m_action(axis), s);
}

LatticeState apply_M_power(Axis axis, unsigned k, const LatticeState& s, PowerSemantics sem) {
    if (sem == PowerSemantics::Compositional) {
        LatticeState out = s;
        for (unsigned i = 0; i < k; ++i) {
            out = apply_M(axis, out);
        }
        return out;
    }
    // Rewrite: M^{2n}|j> = 2^n |j>, M^{2n+1}|j> = 2^n (|-j+e> + |-j-e>)
    const double scale = std::pow(2.0, k / 2);
    if (k % 2 == 0) {
        LatticeState out = s;
        out *= Complex(scale, 0.0);
        return out;
    }
    LatticeState out = apply_M(axis, s);
    out *= Complex(scale, 0.0);
    return out;
}

LatticeState apply_exp_M(Axis axis, const LatticeState& s, PowerSemantics sem, double tol) {
    if (tol <= 0.0) {
        throw std::invalid_argument("apply_exp_M: tolerance must be positive");
    }
    LatticeState sum = s;  // k = 0 term
    double factorial = 1.0;
    for (unsigned k = 1; k <= 170; ++k) {
        factorial *= static_cast<double>(k);
        LatticeState term = apply_M_power(axis, k, s, sem);
        term *= Complex(1.0 / factorial, 0.0);
        const double tnorm = term.norm();
        sum += term;
        if (tnorm < tol) {
            return sum;
        }
    }
    throw std::domain_error("apply_exp_M: series did not converge");
}

Complex inner(const LatticeState& a, const LatticeState& b) {
    if (a.cutoff() != b.cutoff()) {
        throw std::invalid_argument("inner: cutoff mismatch");
    }
    Complex sum(0.0, 0.0);
    auto ia = a.amplitudes().begin();
    auto ib = b.amplitudes().begin();
    while (ia != a.amplitudes().end() && ib != b.amplitudes().end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            sum += std::conj(ia->second) * ib->second;
            ++ia;
            ++ib;
        }
    }
    return sum;
}

Complex inner(const TwoModeState& a, const TwoModeState& b) {
    if (a.cutoff() != b.cutoff()) {
        throw std::invalid_argument("inner: cutoff mismatch");
    }
    Complex sum(0.0, 0.0);
    auto ia = a.amplitudes().begin();
    auto ib = b.amplitudes().begin();
    while (ia != a.amplitudes().end() && ib != b.amplitudes().end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            sum += std::conj(ia->second) * ib->second;
            ++ia;
            ++ib;
        }
    }
    return sum;
}

Complex position_wavefunction(const LatticeState& s, double phi1, double phi2) {
    Complex sum(0.0, 0.0);
    for (const auto& [j, c] : s.amplitudes()) {
        const double phase = j.j1 * phi1 + j.j2 * phi2;
        sum += c * Complex(std::cos(phase), std::sin(phase));
    }
    return sum;
}

}  // namespace topocs
