#pragma once

#include <map>
#include <string>
#include <vector>

#include "dslice/families.hpp"
#include "dslice/gropes.hpp"

namespace dslice {

/// Universal bound 69713280 * (crossing number) on the rho-invariants of a knot's zero surgery.
Integer c_K(const Integer& crossings);

/// rho-invariant of the zero surgery for the order-p abelian character.
Integer rho_abelian(const StepSignature& sig, long long p);

struct HeightPair {
    HalfInt first, second;
    bool operator==(const HeightPair& o) const { return first == o.first && second == o.second; }
    std::string str() const { return "(" + first.str() + ", " + second.str() + ")"; }
};

struct MembershipCertificate {
    std::string knot;
    int index = 1;
    HeightPair grope_heights;
    HeightPair whitney_heights;
    HeightPair solvable_heights;
    std::map<std::string, bool> hypotheses;
    std::vector<std::string> chain;
    std::vector<long long> audit_factors;  // heights of the product factors on the first side
    HalfInt audit_height;                  // height of the assembled product grope
};

/// Threshold (sum of c_K over the K_k, k = 0..max(m,n)-2).
Integer solvency_threshold(const FamilySpec& spec, const Catalog& cat = Catalog::builtin());

MembershipCertificate certify_membership(const FamilySpec& spec, bool nonmembership_claimed = false,
                                         const Catalog& cat = Catalog::builtin());

struct NonMembershipCertificate {
    std::vector<Integer> coefficients;
    int leading_index = 0;  // 1-based
    bool mirrored = false;
    Integer prime;
    Integer own_sum;        // rho of J_0^w at p_w
    Integer signature_sum;  // rho of the combination at p_w (sign-normalized)
    std::vector<Integer> later_sums;  // rho of J_0^i at p_w for i > w with a_i != 0
    Rational threshold;
    Rational margin;
    std::vector<HeightPair> excluded_levels;  // solvable filtration levels
    int m = 0, n = 0;
};

/// Throws NoCertificate when the margin is not positive.
NonMembershipCertificate certify_nonmembership(const FamilySpec& spec, const std::vector<Integer>& coeffs,
                                               const Catalog& cat = Catalog::builtin());

enum class CellStatus { Unknown, Inside, Outside };

struct ReportEntry {
    std::string label;
    bool slice = false;                       // inside every level
    std::vector<HeightPair> inside_grope;     // G levels known to contain the knot
    std::vector<HeightPair> outside_solvable; // F levels known to exclude the knot
};

struct BifiltrationGrid {
    std::vector<HalfInt> levels;  // row and column labels
    // status[label][filtration][row][col], filtration in {"G", "W", "F"}
    std::map<std::string, std::map<std::string, std::vector<std::vector<CellStatus>>>> status;
};

/// Closes known memberships under monotonicity and the containments G in W in F
/// with the (2, 2) shift between W and F; a cell both inside and outside is an Internal error.
BifiltrationGrid bifiltration_report(const std::vector<ReportEntry>& entries, long long max_level);

ReportEntry report_entry(const MembershipCertificate& c);
void add_to_entry(ReportEntry& e, const NonMembershipCertificate& c);

std::string render_grid(const BifiltrationGrid& g);

}  // namespace dslice
