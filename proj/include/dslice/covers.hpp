#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dslice/knot_core.hpp"

namespace dslice {

/// Finite abelian group Z/d_1 + ... + Z/d_k (d_i >= 2, d_i | d_{i+1}). Generator i
/// is the image of column i of `generators` in the cokernel of the presentation.
struct FinAbGroup {
    std::vector<Integer> invariant_factors;
    IntMatrix generators;  // n x k, in the presentation basis

    Integer order() const;
    int rank() const { return static_cast<int>(invariant_factors.size()); }
    std::string str() const;  // "Z/3+Z/3", "0" when trivial
};

/// Cokernel of a square integer matrix; InvalidInput on a zero invariant factor.
FinAbGroup cokernel(const IntMatrix& a);

/// H_1 of the n-fold branched cover, from the block-circulant presentation.
/// The order is cross-checked against |Res(Delta, t^n - 1)|.
FinAbGroup branched_homology(const SeifertMatrix& v, int n);

/// |Res(Delta(t), t^n - 1) / Delta(1)|.
Integer cover_order_by_resultant(const SeifertMatrix& v, int n);

/// Symmetric form on the generators of a finite group, values in [0, 1).
struct LinkingForm {
    std::vector<std::vector<Rational>> gram;
};

struct LinkedGroup {
    FinAbGroup group;
    LinkingForm form;
};

LinkedGroup linking_form_2fold(const SeifertMatrix& v);

/// A subgroup as a canonical Hermite basis of its preimage lattice in Z^k.
struct Subgroup {
    IntMatrix lattice;  // k x k, columns span the preimage of H
    Integer order;
    std::vector<Integer> moduli;  // d_1 .. d_k of the ambient group
    /// Nonzero generators of H in reduced coordinates of Z/d_1 + ... + Z/d_k.
    std::vector<std::vector<Integer>> generators() const;
    bool operator<(const Subgroup& o) const { return lattice < o.lattice; }
    bool operator==(const Subgroup& o) const { return lattice == o.lattice; }
};

struct MetabolizerResult {
    std::vector<Subgroup> metabolizers;
    std::optional<std::pair<Subgroup, Subgroup>> splitting;
    long long closures = 0;  // subgroup closures computed
};

struct MetabolizerOptions {
    long long cap = 1'000'000;  // maximum candidate closures
};

MetabolizerResult metabolizer_split(const FinAbGroup& g, const LinkingForm& form,
                                    const MetabolizerOptions& opts = {});

/// lambda(x, y) mod 1 for coordinate vectors on the group generators.
Rational link(const LinkingForm& form, const std::vector<Integer>& x, const std::vector<Integer>& y);

struct GLInput {
    Integer sigma_value;
    Integer d;
    Integer beta1_bar;
};

/// |sigma| + |d - 1 - beta1_bar| <= d.
bool gl_inequality(const GLInput& in);

}  // namespace dslice
