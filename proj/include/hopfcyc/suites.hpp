#pragma once

#include "hopfcyc/constructions.hpp"

namespace hopfcyc {

/// For (p,q) ≤ (P,Q) on C♮H: τ∂⁰ and τ̄∂̄⁰ against the written-out last cofaces,
/// τσ⁰ = σ^{q−1}τ², τ̄σ̄⁰ = σ̄^{p−1}τ̄², ττ̄ = τ̄τ and τ̄^{p+1}τ^{q+1} = id.
CheckReport check_named_identities(const ComoduleCoalgebraInstance& m, std::size_t P, std::size_t Q);

/// For n ≤ N: ψφ = φψ = id, the displayed ψ equals the inverse, and φ intertwines
/// every operator of C•(C>◁H) with the diagonal of C♮H.
CheckReport check_isomorphism(const ComoduleCoalgebraInstance& m, std::size_t N);

/// For (p,q) ≤ (P,Q): βγ = γβ = id, each operator of C♮H conjugated by β, γ equals
/// its closed form in transported_family, and β b̄ γ = δ.
CheckReport check_conjugation(const ComoduleCoalgebraInstance& m, std::size_t P, std::size_t Q);

/// Δ(C♮H) is mixed through degree N; on Tot(C♮H) d² = 0, and on the normalized
/// Tot D² = 0 and dD + Dd = 0.
CheckReport check_mixed_suite(const ComoduleCoalgebraInstance& m, std::size_t N);

/// δh + hδ = id on C^p(H, M) for 1 ≤ p ≤ P; nullopt when H has no normalized integral.
std::optional<CheckReport> check_homotopy(const Comodule& M, std::size_t P);

}  // namespace hopfcyc
