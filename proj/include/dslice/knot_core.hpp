#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dslice/exact_angle.hpp"
#include "dslice/matrix.hpp"
#include "dslice/poly.hpp"

namespace dslice {

/// Seifert matrix of a knot: 2g x 2g integers with det(V - V^T) = +-1.
class SeifertMatrix {
public:
    SeifertMatrix() = default;
    /// Validates; throws InvalidInput otherwise.
    explicit SeifertMatrix(IntMatrix v);
    static SeifertMatrix unknot() { return SeifertMatrix(); }

    const IntMatrix& matrix() const { return v_; }
    int size() const { return v_.rows(); }
    int genus() const { return v_.rows() / 2; }
    bool operator==(const SeifertMatrix& o) const { return v_ == o.v_; }

private:
    IntMatrix v_;
};

/// Throws InvalidInput with a reason when v is not a Seifert matrix of a knot.
void validate_seifert(const IntMatrix& v);

LaurentPoly alexander_polynomial(const SeifertMatrix& v);

/// Levine-Tristram signature of (1 - w) V + (1 - conj w) V^T at a non-jump angle.
int signature_at(const SeifertMatrix& v, const ExactAngle& w);

/// Signature just below and just above the given angle (useful at jumps).
struct OneSidedSignature {
    int below;
    int above;
};
OneSidedSignature signature_limits(const SeifertMatrix& v, const ExactAngle& w);

/// Whether Delta(omega) = 0 for the given angle (exact).
bool is_jump_point(const SeifertMatrix& v, const ExactAngle& w);

int arf(const SeifertMatrix& v);

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);
SeifertMatrix mirror(const SeifertMatrix& v);
SeifertMatrix reverse_orientation(const SeifertMatrix& v);

/// Even function on (0, pi] given by jumps at exact angles. The value at theta
/// is the sum of deltas of jumps at angles below theta.
struct Jump {
    ExactAngle angle;
    long long delta;
};
struct StepSignature {
    std::vector<Jump> jumps;  // sorted by increasing angle, nonzero deltas
};

/// Jump data of the signature function when every jump has a rational cosine;
/// nullopt otherwise.
std::optional<StepSignature> catalog_step_signature(const SeifertMatrix& v);

enum class HyperbolicityMode { Shape, Factorization, Search };

struct HyperbolicityVerdict {
    enum class Kind { Hyperbolic, FailsNecessary, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<IntMatrix> witness;  // P with P^T V P hyperbolic
    std::optional<ZPoly> factor;       // f with Delta = f f* (factorization passes)
    std::string reason;
};

struct SearchOptions {
    int word_length = 3;
    long long cap = 2'000'000;  // maximum number of words examined
};

HyperbolicityVerdict hyperbolicity_check(const SeifertMatrix& v, HyperbolicityMode mode,
                                         const SearchOptions& opts = {});

/// Number of words the search mode would examine; throws CapExceeded above the cap.
Integer hyperbolic_search_size(const SeifertMatrix& v, const SearchOptions& opts);

/// Block off-diagonal test: indices S of size g with V[S,S] = 0 and V[S',S'] = 0.
std::optional<std::vector<int>> hyperbolic_shape(const IntMatrix& v);

std::string kind_name(HyperbolicityVerdict::Kind k);

}  // namespace dslice
