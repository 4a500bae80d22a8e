#pragma once

#include <optional>

#include "poly.hpp"

namespace rootdisk {

/// Angular sector |arg(z) - beta| <= alpha about direction beta.
/// Feasible sectors for the modulus-based bounds need alpha <= pi/2.
struct Wedge {
    double beta = 0.0;   // axis direction, principal range (-pi, pi]
    double alpha = 0.0;  // half-angle, [0, pi/2]
};

/// Slack allowed when testing alpha <= pi/2 against rounding in arg().
inline constexpr double kWedgeAngularTol = 1e-12;

/// Smallest sector containing the arguments of all nonzero coefficients of p,
/// or nullopt when even the minimal sector needs alpha > pi/2. The axis beta
/// is the midpoint of the minimal covering arc; when several arcs tie, the
/// one whose midpoint lies closest to direction 0 wins.
std::optional<Wedge> fit_wedge(const Polynomial& p);

/// Sector-fit test for an explicit wedge: every nonzero coefficient of p must
/// satisfy |arg(a_j) - beta| <= alpha + kWedgeAngularTol.
bool wedge_contains_coeffs(const Polynomial& p, const Wedge& w);

/// Majorant for |t1 t2 a_j + (t1 - t2) a_{j-1} - a_{j-2}| when every a_* lies
/// in a sector of half-angle alpha about a common axis: with m_* = |a_*|,
///   |t1 t2 m_j + (t1 - t2) m_jm1 - m_jm2| cos(alpha)
///     + (t1 t2 m_j + (t1 - t2) m_jm1 + m_jm2) sin(alpha).
/// Requires t1 > t2 >= 0, m_* >= 0, 0 <= alpha <= pi/2.
double lemma21_rhs(double t1, double t2, double m_j, double m_jm1, double m_jm2,
                   double alpha);

}  // namespace rootdisk
