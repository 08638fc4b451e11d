#pragma once

#include <numeric>
#include <sstream>
#include <string>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace heisrep {

/// Outcome of the annihilation analysis of a sigma-image matrix M: when every
/// eigenvalue is a root of unity, (M^N - I)^k = 0 with N the lcm of the orders
/// and k the largest multiplicity. Otherwise the input violates the
/// commutator hypothesis and a failure report is returned.
struct AnnihilatorCertificate {
    bool ok = false;
    long N = 0;
    long k = 0;
    bool verified = false; // (M^N - I)^k == 0 checked by exact matrix arithmetic
    std::string message;
};

inline AnnihilatorCertificate certify_sigma_image(const RatMatrix& m) {
    AnnihilatorCertificate cert;
    auto cp = char_poly(m);
    auto zp = to_integer_poly(cp);
    if (!zp) {
        cert.message = "characteristic polynomial is not integral: some eigenvalue is not a root of unity";
        return cert;
    }
    PolyZ p = *zp;
    long deg = p.degree();
    long n_lcm = 1, k_max = 0;
    long dmax = 2 * deg * deg + 2;
    for (long d = 1; d <= dmax && p.degree() > 0; ++d) {
        const PolyZ& phi = cyclotomic(d);
        if (phi.degree() > p.degree()) continue;
        long mult = 0;
        while (true) {
            auto q = p.divide_exact(phi);
            if (!q) break;
            p = *q;
            ++mult;
        }
        if (mult > 0) {
            n_lcm = std::lcm(n_lcm, d);
            k_max = std::max(k_max, mult);
        }
    }
    if (p.degree() > 0 || !(p.is_one() || p.is_zero())) {
        cert.message = "characteristic polynomial has a non-cyclotomic factor: eigenvalue is not a root of unity";
        return cert;
    }
    cert.ok = true;
    cert.N = n_lcm;
    // k is the nilpotency degree of M^N - I: the least power that vanishes.
    // The characteristic multiplicity k_max bounds it (Cayley-Hamilton).
    RatMatrix power = m.pow(Int(cert.N), Rat(1));
    RatMatrix diff = power - RatMatrix::identity(m.rows(), Rat(1));
    RatMatrix acc = RatMatrix::identity(m.rows(), Rat(1));
    cert.k = 0;
    cert.verified = false;
    for (long kk = 1; kk <= std::max<long>(k_max, 1); ++kk) {
        acc = acc * diff;
        if (acc.is_zero()) {
            cert.k = kk;
            cert.verified = true;
            break;
        }
    }
    if (!cert.verified) {
        cert.ok = false;
        cert.message = "verification (M^N - I)^k = 0 failed";
    } else {
        std::ostringstream os;
        os << "(M^" << cert.N << " - I)^" << cert.k << " = 0";
        cert.message = os.str();
    }
    return cert;
}

inline bool commute(const RatMatrix& a, const RatMatrix& b) { return a * b == b * a; }

/// Certificate from images of a and b: the sigma image is the commutator
/// [A,B] = A B A^{-1} B^{-1}; it must commute with both inputs, and then its
/// eigenvalues are roots of unity.
inline AnnihilatorCertificate annihilator_certificate(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix s = a * b * rat_inverse(a) * rat_inverse(b);
    AnnihilatorCertificate cert;
    if (!commute(s, a) || !commute(s, b)) {
        cert.message = "commutator [A,B] does not commute with the inputs; hypothesis violated";
        return cert;
    }
    return certify_sigma_image(s);
}

} // namespace heisrep
