#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dslice/catalog.hpp"
#include "dslice/knot_core.hpp"

namespace dslice {

/// sigma(theta) for a non-jump angle; JumpPoint when omega equals a jump angle.
long long step_eval(const StepSignature& sig, const ExactAngle& omega);

/// Sum of sigma(2 pi r / p) over r = 0..p-1.
Integer sum_over_roots(const StepSignature& sig, long long p);

StepSignature step_add(const StepSignature& a, const StepSignature& b);
StepSignature step_scale(const StepSignature& a, const Integer& k);
StepSignature step_mirror(const StepSignature& a);

/// Signature model of P_m: a single jump of +2 at theta_m.
StepSignature p_m_signature(const Integer& m);

struct KnotExpr;
using KnotExprPtr = std::shared_ptr<const KnotExpr>;

struct KnotExpr {
    enum class Kind { Atom, Sum, Mirror, Infect };
    Kind kind = Kind::Atom;

    // Atom
    std::string name;
    std::optional<SeifertMatrix> seifert;
    std::optional<StepSignature> signature_model;  // atoms without a Seifert matrix
    std::optional<long long> crossings;
    std::optional<int> arf_flag;

    // Sum: children with multiplicities; Mirror: children[0];
    // Infect: children[0] = pattern, children[1] = companion
    std::vector<KnotExprPtr> children;
    std::vector<Integer> multiplicities;
    std::string axis;
    long long winding = 0;
};

KnotExprPtr atom(const CatalogKnot& k);
KnotExprPtr signature_atom(const std::string& name, const StepSignature& sig, std::optional<int> arf_flag);
KnotExprPtr p_m_atom(const Integer& m);
KnotExprPtr sum(std::vector<KnotExprPtr> children, std::vector<Integer> multiplicities);
KnotExprPtr mirror_of(KnotExprPtr child);
KnotExprPtr infect(KnotExprPtr pattern, const std::string& axis, long long winding, KnotExprPtr companion);

/// Nesting depth of non-atom nodes.
int expr_depth(const KnotExpr& e);
std::string to_string(const KnotExpr& e);

struct ExprInvariants {
    std::optional<LaurentPoly> alexander;  // absent when an atom only has a signature model
    std::optional<StepSignature> step_signature;  // absent for jumps with irrational cosine
    std::optional<Integer> crossing_bound;
    std::optional<int> arf;
};

ExprInvariants expr_invariants(const KnotExpr& e);

struct Interleaving {
    std::vector<Integer> m;  // m_1 .. m_{count+1}
    std::vector<Integer> p;  // p_1 .. p_count
};

struct InterleaveOptions {
    long long prime_limit = 10'000'000;
};

/// Smallest m_1 < m_2 < ... and primes A < p_1 < p_2 < ... with
/// theta_{m_{i+1}} < 2 pi / p_i < theta_{m_i}.
Interleaving interleave(const Integer& a, int count, const InterleaveOptions& opts = {});

struct J0Member {
    KnotExprPtr expr;
    StepSignature signature;
    Integer own_sum;                  // sum over p_i-th roots
    std::vector<Integer> earlier_sums;  // sums over p_j-th roots, j < i (all zero)
};

struct J0Family {
    Rational c0;
    Integer a;
    Integer n_copies;
    Interleaving params;
    std::vector<J0Member> members;
};

J0Family build_J0(const Rational& c0, const Integer& a, int count);

struct FamilyInput {
    std::string knot = "6_1";
    std::string axis = "eta";
    bool ribbon = false;
    bool grope_height1 = false;     // (G2)
    bool cyclic_alexander = false;  // (N1)
};

struct J0Flags {
    bool grope_height2 = false;  // (G1)
    bool arf_zero = false;
    bool from_lemma = false;     // (N2)
};

struct FamilySpec {
    int m = 1;
    int n = 1;
    int index = 1;
    std::vector<FamilyInput> inputs;  // K_0 .. K_{max(m,n)-2}; a single entry is reused
    std::string pattern = "9_46";
    J0Flags j0;
    Rational c0;
    Integer a;
    int count = 1;
    Integer n_copies;
    std::vector<Integer> primes;
    std::vector<Integer> twist_params;
};

/// Runs build_J0 and records primes, twist parameters and N in a spec.
FamilySpec generate_family(int m, int n, int count, const Rational& c0, const Integer& a,
                           const FamilyInput& input, const J0Flags& flags,
                           const Catalog& cat = Catalog::builtin());

const FamilyInput& input_for(const FamilySpec& spec, int k);

/// J_0^i from the recorded parameters (i = 1..count).
KnotExprPtr j0_expr(const FamilySpec& spec, int i);
StepSignature j0_signature(const FamilySpec& spec, int i);

/// R(alpha', J_{m-1})(beta', J_{n-1}) with J_{k+1} = K_k(eta_k; J_k), J_0 = J_0^index.
KnotExprPtr build_Jmn(const FamilySpec& spec, const Catalog& cat = Catalog::builtin());

}  // namespace dslice
