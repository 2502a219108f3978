#pragma once

#include <cstdint>

#include "fmcob/model.hpp"
#include "fmcob/report.hpp"

namespace fmcob {

/// Identity suites shared by the command-line `check` command and the test
/// binaries.  Every suite is deterministic for fixed (model, order, seed);
/// random classes are drawn from the seeded generator in rng.hpp.
///
/// Lines use Skip (not Fail) when a check does not apply to the model: the
/// kernel-route transform needs a perfect pairing (or a declared carrier)
/// and a truncation order of at least 2g; the correspondence suite needs a
/// perfect pairing; transform checks need a transform matrix.

/// Series-level identities: multiplicative-kernel collapse and the
/// compositional-reversion round trip over both coefficient rings.
Report check_series_suite(int order, std::uint64_t seed, int random_count);

/// Structural audit of the model plus transform-stability of the numerical
/// kernel (the model-level wiring of the loaded-model contract).
Report check_model(const ModelPtr& model);

/// Transform identities: involution, product exchange in both directions,
/// isogeny exchange, component eigenvalue law, and agreement of the two
/// transform routes.
Report check_transform_suite(const ModelPtr& model, int order, std::uint64_t seed,
                             int random_count);

/// Eigenspace decomposition: components sum back, carry the declared
/// eigenvalues, respect the weight-grade bounds, satisfy all five purity
/// conditions jointly, and behave under isogeny pullback/pushforward.
Report check_decomposition_suite(const ModelPtr& model, int order, std::uint64_t seed,
                                 int random_count);

/// Numerical equivalence: kernel membership, transform stability,
/// convolution nilpotence, ideal property, degree consequences.
Report check_numerical_suite(const ModelPtr& model, int order);

/// Correspondence calculus: diagonal, projector identities, graph classes,
/// realization functoriality and faithfulness.
Report check_motives_suite(const ModelPtr& model, int order, std::uint64_t seed);

/// Every model-applicable suite above, concatenated in a fixed order.
Report check_all(const ModelPtr& model, int order, std::uint64_t seed,
                 int random_count);

}  // namespace fmcob
