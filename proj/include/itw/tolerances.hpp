#pragma once

namespace itw {

// Central tolerance policy. Deterministic identities use absolute (scaled)
// tolerances; stochastic checks use 3-sigma bands with budgets sized so the
// falsification controls fail with high power.
inline constexpr double kGeneratorTol = 1e-10;     // generator intertwining residual
inline constexpr double kSemigroupTol = 1e-9;      // semigroup intertwining residual
inline constexpr double kSemigroupLawTol = 1e-11;  // e^{(s+t)M} vs e^{sM} e^{tM}
inline constexpr double kGammaRatioTol = 1e-12;    // Step-1 Gamma ratio identities
inline constexpr double kEvalShiftTol = 1e-12;     // eval(n+1) - eval(n) = 2 theta |lambda|
inline constexpr double kActionTol = 1e-9;         // closed-form operator actions
inline constexpr double kDysonTol = 1e-9;          // commutator identity
inline constexpr double kKernelQuadTol = 1e-6;     // kernel eigenrelation / stochasticity
inline constexpr double kCorollaryQuadTol = 1e-6;  // n=1 corollary vs Beta moments
inline constexpr double kInteractionTol = 1e-8;    // drift interaction-sum identity
inline constexpr double kSigma = 3.0;              // stochastic acceptance band

} // namespace itw
