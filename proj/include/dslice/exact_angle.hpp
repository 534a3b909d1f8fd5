#pragma once

#include <optional>
#include <string>
#include <variant>

#include "dslice/integer.hpp"
#include "dslice/interval.hpp"

namespace dslice {

/// theta = 2 pi r / p, reduced, 0 <= r < p.
struct RationalTurn {
    Integer r, p;
    friend bool operator==(const RationalTurn&, const RationalTurn&) = default;
};

/// The angle theta in [0, pi] with cos(theta) = q.
struct CosRational {
    Rational q;
    friend bool operator==(const CosRational&, const CosRational&) = default;
};

/// The angle theta in [0, pi] with cos(theta) = 1 - 1/(2 cbrt(m)); m >= 1 and not a cube.
struct CosCbrt {
    Integer m;
    friend bool operator==(const CosCbrt&, const CosCbrt&) = default;
};

using ExactAngle = std::variant<RationalTurn, CosRational, CosCbrt>;

ExactAngle turn(const Integer& r, const Integer& p);
ExactAngle cos_angle(const Rational& q);
/// cos(theta_m) = 1 - 1/(2 cbrt m), stored as a rational when m is a perfect cube.
ExactAngle theta_cos(const Integer& m);

bool is_cos_value(const ExactAngle& a);
/// The exact cosine when it is rational (every CosRational, and turns with p in {1,2,3,4,6}).
std::optional<Rational> rational_cos(const ExactAngle& a);
Interval cos_interval(const ExactAngle& a, mpfr_prec_t prec);
/// Angle folded into [0, pi] for a turn: min(r, p - r) / p of a full turn.
Rational folded_turn(const RationalTurn& t);
/// Integer cube root when m is a perfect cube.
std::optional<Integer> exact_cbrt(const Integer& m);

/// theta_a < theta_b for angles folded into [0, pi]. Exact when both cosines are
/// rational or the forms allow an algebraic comparison; otherwise certified
/// interval refinement, throwing Undecidable at the precision cap.
bool angle_less(const ExactAngle& a, const ExactAngle& b);
bool angle_equal(const ExactAngle& a, const ExactAngle& b);

std::string to_string(const ExactAngle& a);

}  // namespace dslice
