#pragma once

#include <optional>
#include <vector>

#include "matrix.hpp"
#include "ring.hpp"
#include "words.hpp"

namespace heisrep {

/// One intersection point of an arc pair: the sign of the crossing in the
/// surface and the loop monomial h_x = phi(delta_x), either as a precomputed
/// sigma power or as an explicit loop word evaluated through the local system.
struct DiagramPoint {
    int sign = +1;
    std::optional<Int> sigma_exp;            // loop = s^e
    std::optional<SurfaceBraidWord> loop;    // or an explicit loop (n = 1)
};

/// Ordered intersection data of an arc pair on Sigma_{g,1} for n = 1 points,
/// following the orientation of the first arc.
struct IntersectionDiagram1 {
    long genus = 1;
    std::vector<DiagramPoint> points;

    static IntersectionDiagram1 from_sigma_exponents(long genus,
                                                     const std::vector<std::pair<int, Int>>& pts) {
        IntersectionDiagram1 d;
        d.genus = genus;
        for (const auto& [s, e] : pts) d.points.push_back({s, e, std::nullopt});
        return d;
    }
};

/// Evaluate one point's loop in the full group ring.
HeisenbergElement diagram_point_value(const DiagramPoint& p, long genus);

/// Per-point contributions sign * (h_x with sigma -> -sigma), over the full ring.
std::vector<HeisRing> pair_1pt_terms(const IntersectionDiagram1& d);

/// The twisted intersection pairing of a one-point diagram: the sum of the
/// contributions, reduced into the requested quotient.
HeisRing pair_1pt(const IntersectionDiagram1& d, QuotientSpec q = QuotientSpec::full());

struct AugmentationReport {
    Int epsilon_of_pairing;
    Int algebraic_count; // sum of downstairs signs: sign * (-1)^{sigma exponent}
    bool equal;
};
AugmentationReport augmentation_check(const IntersectionDiagram1& d);

/// Combinatorial data of an n-point pairing of two separating arcs in a
/// g-holed sphere: k intersection points with phi(eta_j) = s^{2 n_j}, signs
/// alternating (-1)^j, and winding indices A_{j,j'} (symmetric, diagonal
/// ignored: two parallel cables through the same point have no relative
/// winding).
struct NPointDiagram {
    long genus = 1;
    std::vector<Int> n_j;
    IntMatrix A; // k x k, symmetric off the diagonal

    long k() const { return static_cast<long>(n_j.size()); }
};

/// Sum over tuples (i_1..i_n) in {0..k-1}^n of
/// (-1)^{sum i_j} s^{2 sum_j n_{i_j}} (-s)^{sum_{l<j} A_{i_l, i_j}},
/// reduced into the quotient. Tuples are streamed, never materialized.
HeisRing pair_npt(const NPointDiagram& d, long n, QuotientSpec q = QuotientSpec::full());

/// Composition of n into 2g nonnegative parts (a_1..a_g, b_1..b_g); these index
/// the standard basis of the n-point homology module.
struct Composition {
    long g = 1;
    long n = 0;
    std::vector<long> a, b;

    bool operator==(const Composition&) const = default;
    std::string str() const;
};

Int binomial(long n, long k);
inline Int composition_count(long g, long n) { return binomial(2 * g + n - 1, n); }
std::vector<Composition> all_compositions(long g, long n);

/// Pairing of a basis class with a dual class: 1 if the compositions agree,
/// 0 otherwise (there is no intersecting configuration at all in that case).
HeisRing dual_pairing(const Composition& c, const Composition& d);

struct KernelSearchOptions {
    long max_points = 2;      // number of intersection points per diagram
    long exponent_bound = 2;  // sigma exponents are even with |e| <= bound
    QuotientSpec q = QuotientSpec::full();
    long genus = 1;
    std::size_t cost_limit = 20'000'000; // refuse enumerations beyond this
};

/// Exhaustive search over one-point diagrams with alternating signs and even
/// sigma exponents (normalized so the first exponent is 0). Returns the
/// diagrams with vanishing pairing and at least two points. Throws with a cost
/// estimate when the enumeration would exceed the cost limit.
std::vector<IntersectionDiagram1> kernel_search(const KernelSearchOptions& opts);

} // namespace heisrep
