#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "pairing.hpp"
#include "ring.hpp"

namespace heisrep {

/// Coordinate vector over a named basis: the 2g standard arc classes
/// A1,B1,...,Ag,Bg plus one formal symbol per catalog curve (the class of the
/// curve itself). Coefficients are group-ring elements.
struct ChainVector {
    std::map<std::string, HeisRing> coords;

    bool is_zero() const {
        for (const auto& [k, v] : coords) if (!v.is_zero()) return false;
        return true;
    }
    ChainVector operator+(const ChainVector& o) const {
        ChainVector r(*this);
        for (const auto& [k, v] : o.coords) {
            auto it = r.coords.find(k);
            if (it == r.coords.end()) r.coords[k] = v;
            else it->second += v;
        }
        return r;
    }
    ChainVector scaled(const HeisRing& c) const {
        ChainVector r;
        for (const auto& [k, v] : coords) r.coords[k] = v * c;
        return r;
    }
    HeisRing coord(const std::string& k) const {
        auto it = coords.find(k);
        return it == coords.end() ? HeisRing() : it->second;
    }
    static ChainVector unit(const std::string& k, long g, QuotientSpec q = QuotientSpec::full()) {
        ChainVector r;
        r.coords[k] = heis_ring_one(g, q);
        return r;
    }
};

/// Splitting of a basis class into the part outside and the part inside a
/// separating curve, as formal chain coordinates with ext + int = e_j.
struct ChainSplitting {
    ChainVector ext;
    ChainVector interior;
};

/// Everything the transvection formulas need about one separating curve:
/// its genus, the pairing row against every basis symbol (supplied as
/// intersection diagrams, evaluated on demand), and optional splittings for
/// the untruncated action.
struct SeparatingCurveData {
    std::string name;
    long genus = 1;
    std::map<std::string, IntersectionDiagram1> row;
    std::map<std::string, ChainSplitting> splitting;
};

struct CurveCatalog {
    long g = 1; // ambient genus: arcs A1,B1,...,Ag,Bg
    std::vector<SeparatingCurveData> curves;

    std::vector<std::string> basis_symbols() const;
    const SeparatingCurveData& curve(const std::string& name) const;
    bool has_curve(const std::string& name) const;
};

/// Pairing row of a curve evaluated in a quotient; missing entries are 0.
HeisRing row_value(const SeparatingCurveData& c, const std::string& symbol, QuotientSpec q);

/// Linear extension of the pairing row to a chain vector.
HeisRing pairing_bracket(const SeparatingCurveData& c, const ChainVector& v, QuotientSpec q);

/// Truncated transvection: v + <alpha, v> [alpha], valid in a quotient where
/// sigma^{2 genus} = 1 (r must divide 2*genus).
ChainVector act_twist_mod2k(const CurveCatalog& cat, const std::string& curve,
                            const ChainVector& v, QuotientSpec q);

/// Untruncated action on a basis class with supplied splitting:
/// ext + sigma^{-2k} int + <alpha', e_j> [alpha], over the full ring.
ChainVector act_twist_full(const CurveCatalog& cat, const std::string& curve,
                           const std::string& basis_symbol);

/// Matrix of the transvection along a catalog curve over the ordered basis
/// symbols, in the given quotient.
DenseMatrix<HeisRing> transvection_matrix(const CurveCatalog& cat, const std::string& curve,
                                          QuotientSpec q, long exponent = 1);

struct TwistWord {
    std::vector<std::pair<std::string, long>> factors; // (curve name, exponent)
};
TwistWord parse_twist_word(const std::string& text);

struct KernelCertificate {
    bool is_identity_on_basis = false;
    DenseMatrix<HeisRing> matrix;
    std::vector<std::string> basis;
};

/// Evaluate a twist word as a product of transvection matrices (left to right
/// in application order) and test whether it acts as the identity.
KernelCertificate kernel_certificate(const CurveCatalog& cat, const TwistWord& w, QuotientSpec q);

/// Matrix assembled from supplied pairing data: column j lists the pairings of
/// the image of basis vector j against the dual basis. The optional star
/// toggle applies the anti-involution g -> g^{-1} to every coefficient, the
/// convention that relates matrix entries to their transposed-inverse
/// counterparts in other sources.
DenseMatrix<HeisRing> matrix_from_pairings(
    const std::vector<std::vector<IntersectionDiagram1>>& rows, QuotientSpec q,
    bool star_convention = false);

struct InfiniteOrderWitness {
    bool has_witness = false;
    HeisRing bracket; // <alpha, v>
    std::vector<HeisRing> coefficients; // coefficient of [alpha] in tau^n(v), n = 1..n_max
    bool linear_growth = false; // coefficients[n-1] == n * bracket
};

/// In a quotient where the transvection is untruncated, the coefficient of
/// [alpha] under tau_alpha^n grows as n * <alpha, v>; strict growth certifies
/// infinite order.
InfiniteOrderWitness infinite_order_witness(const CurveCatalog& cat, const std::string& curve,
                                            const ChainVector& v, long n_max, QuotientSpec q);

/// The built-in catalog of the genus-2k kernel pair inside Sigma_{3k,1}: two
/// separating curves of genus 2k meeting in two points that cobound a genus-k
/// bigon, so their twisted pairing is 1 - sigma^{2k}. Rows against the arcs of
/// the handles each curve encloses are two-point diagrams with loops through
/// the corresponding handle.
CurveCatalog kernel_pair_catalog(long k);

/// Catalog with the boundary-parallel curve of Sigma_{g,1} (genus g, zero
/// pairing row, everything interior): its untruncated action is sigma^{-2g} id.
CurveCatalog boundary_twist_catalog(long g);

} // namespace heisrep
