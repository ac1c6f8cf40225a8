#ifndef NICEGEN_QR_HPP
#define NICEGEN_QR_HPP

#include "nicegen/generators.hpp"
#include "nicegen/matrix.hpp"
#include "nicegen/rng.hpp"

namespace nicegen {

/// A = QR with Q a Householder reflection and A = c*L*U integer. The factors,
/// the reflection vector and the scale are kept as construction provenance.
struct QRTriple {
    ExactMatrix A;   // integer
    ExactMatrix Q;   // rational orthogonal, symmetric
    ExactMatrix R;   // upper triangular, rational
    ExactMatrix v;   // integer Householder vector, gcd-reduced
    Int c;           // minimal positive scale making L*U integer
    ExactMatrix L;   // unit lower triangular, solved parameters
    ExactMatrix U;   // integer upper triangular

    friend bool operator==(const QRTriple&, const QRTriple&) = default;
};

/// Q = I - 2*v*v^T/||v||^2, exact. Symmetric, orthogonal, det -1.
ExactMatrix householder_from_vector(const ExactMatrix& v);

/// Unit lower triangular L whose strictly-lower entries make R = Q^T L U
/// upper triangular. The n(n-1)/2 conditions r_ij = 0 (i > j) are linear in
/// the unknowns and solved exactly; throws no_solution when the system is
/// inconsistent or underdetermined.
ExactMatrix solve_lower_parameters(const ExactMatrix& Q, const ExactMatrix& U);

QRTriple gen_qr(const GenConfig& config, SplitMix64& rng);

}  // namespace nicegen

#endif
