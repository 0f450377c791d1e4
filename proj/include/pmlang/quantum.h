// Copyright 2026 The pmlang Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PMLANG_QUANTUM_H
#define PMLANG_QUANTUM_H

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "pmlang/alphabet.h"
#include "pmlang/word.h"

namespace pmlang {

using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;

constexpr double QUANTUM_TOLERANCE = 1e-12;

/// Seeded random source with independent child streams.
///
/// Uniform and normal variates are computed from raw engine output so that
/// results are identical across standard library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed);

    /// A generator for child stream `stream`, independent of this one's state.
    Rng split(uint64_t stream) const;

    uint64_t key() const {
        return key_;
    }
    uint64_t next_u64() {
        return engine_();
    }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal.
    double normal();
    /// Uniform in [0, n). Requires n > 0.
    uint64_t below(uint64_t n);

   private:
    uint64_t key_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0;
};

/// A pure two-qubit state.
struct QState {
    Vector4 amplitudes;

    double norm_error() const {
        return std::abs(amplitudes.squaredNorm() - 1.0);
    }
    static QState basis(size_t k);
    static QState haar_random(Rng &rng);
};

struct PauliObservable {
    Observable obs;
    Matrix4 op;
    Matrix4 p_plus;
    Matrix4 p_minus;
};

/// Kronecker product of two single-qubit Paulis named by 'I', 'X', 'Y', 'Z'.
/// Throws std::invalid_argument for other names.
Matrix4 pauli_tensor(char first, char second);

/// The nine operators of the square, indexed like Observable: rows
/// (Z I, I Z, Z Z), (I X, X I, X X), (Z X, X Z, Y Y).
const std::array<PauliObservable, NUM_OBSERVABLES> &standard_square();

struct OperatorLawReport {
    /// Largest deviation from P+ + P- = 1, P^2 = P and op = P+ - P-.
    double projector_error = 0;
    /// Largest deviation from op^2 = 1 and op = op^dagger.
    double involution_error = 0;
    /// Largest commutator norm over pairs within a context.
    double commutation_error = 0;
    /// Largest deviation of a context product from sign * 1.
    double product_error = 0;
    /// Smallest commutator norm over pairs sharing no context.
    double min_cross_commutator = 0;

    bool ok(double tolerance = QUANTUM_TOLERANCE) const {
        return projector_error <= tolerance && involution_error <= tolerance && commutation_error <= tolerance &&
               product_error <= tolerance && min_cross_commutator > tolerance;
    }
};

OperatorLawReport check_operator_laws();

struct MeasurementOutcome {
    int8_t value;
    QState after;
    double plus_probability;
};

/// Projective measurement with outcome probabilities |P+- psi|^2 and a
/// renormalized post-state. Throws std::logic_error if the sampled branch has
/// norm below QUANTUM_TOLERANCE.
MeasurementOutcome measure(const QState &st, const PauliObservable &p, Rng &rng);

struct SampledStep {
    SignedSymbol symbol;
    /// Probability of +1 in the state just before this measurement.
    double plus_probability;
};

/// Starts from a Haar-random state and measures `length` uniformly chosen
/// observables.
std::vector<SampledStep> sample_steps(size_t length, Rng &rng);

/// The signed outcomes of `sample_steps`.
Word sample_run(size_t length, Rng &rng);
Word sample_run(size_t length, uint64_t seed);

/// `runs` runs; run k draws from child stream k of `seed`.
std::vector<Word> sample_runs(size_t length, size_t runs, uint64_t seed);

}  // namespace pmlang

#endif
