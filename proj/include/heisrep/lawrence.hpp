#pragma once

#include <map>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "matrix.hpp"
#include "ring.hpp"
#include "words.hpp"

namespace heisrep {

using LaurentMatrix = DenseMatrix<LaurentPoly>;

/// Unreduced Burau matrix of a braid word over Z[t^{+-1}]:
/// B[i][j] = d(beta(x_j))/d(x_i), abelianized x -> t, with word action
/// (b1 b2)(x) = b1(b2(x)). Multiplicative; t = 1 gives the permutation matrix.
LaurentMatrix burau_unreduced(const BraidWord& b);

/// Reduced Burau: the action on the zero-column-sum sublattice in the basis
/// f_i - f_{i+1}; size (k-1) x (k-1), with sigma_1 -> (-t) for k = 2.
LaurentMatrix burau_reduced(const BraidWord& b);

/// Gassner matrix of a pure braid over Z[t_1^{+-1},..,t_k^{+-1}]; throws on a
/// non-pure word (detected through the strand permutation).
LaurentMatrix gassner(const BraidWord& b);

/// Substitute variables in every entry (e.g. all t_i -> t).
LaurentMatrix substitute_vars(const LaurentMatrix& m,
                              const std::map<std::string, std::string>& rename);

/// Specialize every variable to a rational value.
RatMatrix specialize_matrix(const LaurentMatrix& m,
                            const std::function<Rat(const std::string&)>& value_of);

/// Determinant by cofactor expansion (the matrices here are small).
LaurentPoly laurent_det(const LaurentMatrix& m);

/// Permutation matrix of a braid (entry [p(j)][j] = 1).
IntMatrix permutation_matrix(const BraidWord& b);

/// The three holed-disk regions inside Sigma_{g,1} whose braid subgroups the
/// Heisenberg representation restricts to: the g-holed sphere S bounded by
/// genus-1 separating curves, the upper half-surface S_g, and the regular
/// neighborhood V_2g of the boundary plus the 2g handle-attaching arcs.
enum class Region { S, Sg, V2g };

long region_holes(Region r, long g);

/// phi-image of the loop around one hole of the region (or of the strand
/// exchange for hole_index = 0): sigma^{-2} on S; b_i on S_g; a_i and
/// a_i^{-1} sigma^{-2} alternating on V_2g.
HeisRing heisenberg_restriction(Region region, long hole_index, long g);

/// Ring substitution from the disk local system's symbols (s1..sk, sigma) into
/// Z[H_g]; images must commute pairwise (the target is an abelian subring).
struct SubstitutionMap {
    std::map<std::string, HeisRing> images;

    const HeisRing& image(const std::string& symbol) const {
        auto it = images.find(symbol);
        if (it == images.end())
            throw std::invalid_argument("substitution has no image for symbol " + symbol);
        return it->second;
    }
    void validate_abelian() const;
    HeisRing apply(const LaurentMonomial& mono) const;
    HeisRing apply(const LaurentPoly& p) const;
};

/// The substitutions of the three identification theorems.
SubstitutionMap standard_substitution(Region region, long g);

struct SubstitutionReport {
    bool pass = true;
    std::string failed_generator; // empty when pass
    std::string detail;
};

/// Check, on every generator of the holed-disk configuration abelianization
/// (hole loops and the strand exchange), that evaluating through the disk local
/// system and substituting agrees with the Heisenberg restriction; optionally
/// also compare n-point pairing values for supplied diagrams (loop data given
/// as disk words).
struct DiskDiagram {
    std::vector<DiskWord> eta_loops; // k loops
    IntMatrix A;                     // winding indices, symmetric
};

SubstitutionReport substitution_check(Region region, long g, const SubstitutionMap& sub,
                                      const std::vector<DiskDiagram>& diagrams = {},
                                      long n_points = 2);

/// Contribution of one generator of the braid subgroup to the automorphism of
/// H_g it induces: a symmetric rank-one-or-two integer matrix and a vector of
/// central exponents.
struct SubgroupGenerator {
    std::string name;
    IntMatrix M;
    std::vector<Int> l;
};

/// Built-in generator table for the g-strand subgroup generated by the
/// separating twists tau_{c_i} and tau_{t_{i,j}}: M(tau_{c_i}) = E_{ii},
/// M(tau_{t_{i,j}}) = E_{ij} + E_{ji} + E_{ii} + E_{jj}, l = 0.
SubgroupGenerator standard_subgroup_generator(const std::string& name, long g);

/// Additive evaluation of a word in subgroup generators: returns (M, l) with M
/// symmetric; commutator words map to zero.
std::pair<IntMatrix, std::vector<Int>> subgroup_Mf(
    const std::vector<std::pair<std::string, long>>& word, long g,
    const std::vector<SubgroupGenerator>& extra = {});

} // namespace heisrep
