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

#include "pmlang/quantum.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

using namespace pmlang;

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::mt19937_64 seeded_engine(uint64_t key) {
    std::seed_seq seq{
        static_cast<uint32_t>(key), static_cast<uint32_t>(key >> 32), static_cast<uint32_t>(splitmix64(key)),
        static_cast<uint32_t>(splitmix64(key) >> 32)};
    return std::mt19937_64(seq);
}

Eigen::Matrix2cd pauli(char name) {
    using C = std::complex<double>;
    Eigen::Matrix2cd m;
    switch (name) {
        case 'I':
            m << 1, 0, 0, 1;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, C(0, -1), C(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli name: ") + name);
    }
    return m;
}

double norm_of(const Matrix4 &m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace

Rng::Rng(uint64_t seed) : key_(seed), engine_(seeded_engine(seed)) {
}

Rng Rng::split(uint64_t stream) const {
    return Rng(splitmix64(key_ ^ splitmix64(stream + 1)));
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

uint64_t Rng::below(uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("below(0)");
    }
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

QState QState::basis(size_t k) {
    QState st{Vector4::Zero()};
    st.amplitudes(static_cast<Eigen::Index>(k)) = 1;
    return st;
}

QState QState::haar_random(Rng &rng) {
    QState st;
    for (Eigen::Index k = 0; k < 4; k++) {
        double re = rng.normal();
        double im = rng.normal();
        st.amplitudes(k) = std::complex<double>(re, im);
    }
    st.amplitudes.normalize();
    return st;
}

Matrix4 pmlang::pauli_tensor(char first, char second) {
    return Eigen::kroneckerProduct(pauli(first), pauli(second)).eval();
}

const std::array<PauliObservable, NUM_OBSERVABLES> &pmlang::standard_square() {
    static const std::array<PauliObservable, NUM_OBSERVABLES> square = []() {
        static const char *names[NUM_OBSERVABLES] = {"ZI", "IZ", "ZZ", "IX", "XI", "XX", "ZX", "XZ", "YY"};
        std::array<PauliObservable, NUM_OBSERVABLES> result;
        Matrix4 id = Matrix4::Identity();
        for (size_t k = 0; k < NUM_OBSERVABLES; k++) {
            Matrix4 op = pauli_tensor(names[k][0], names[k][1]);
            result[k] = PauliObservable{observable_at(k), op, (id + op) / 2.0, (id - op) / 2.0};
        }
        return result;
    }();
    return square;
}

OperatorLawReport pmlang::check_operator_laws() {
    OperatorLawReport r;
    const auto &square = standard_square();
    Matrix4 id = Matrix4::Identity();
    for (const auto &p : square) {
        r.projector_error = std::max(
            {r.projector_error,
             norm_of(p.p_plus + p.p_minus - id),
             norm_of(p.p_plus * p.p_plus - p.p_plus),
             norm_of(p.p_minus * p.p_minus - p.p_minus),
             norm_of(p.p_plus - p.p_minus - p.op)});
        r.involution_error = std::max({r.involution_error, norm_of(p.op * p.op - id), norm_of(p.op - p.op.adjoint())});
    }
    for (const Context &ctx : all_contexts()) {
        Matrix4 product = id;
        for (Observable o : ctx.members) {
            product = product * square[index_of(o)].op;
        }
        r.product_error = std::max(r.product_error, norm_of(product - static_cast<double>(ctx.sign) * id));
    }
    r.min_cross_commutator = INFINITY;
    for (Observable x : all_observables()) {
        for (Observable y : all_observables()) {
            if (x == y) {
                continue;
            }
            const Matrix4 &ox = square[index_of(x)].op;
            const Matrix4 &oy = square[index_of(y)].op;
            double c = norm_of(ox * oy - oy * ox);
            if (observables_compatible(x, y)) {
                r.commutation_error = std::max(r.commutation_error, c);
            } else {
                r.min_cross_commutator = std::min(r.min_cross_commutator, c);
            }
        }
    }
    return r;
}

MeasurementOutcome pmlang::measure(const QState &st, const PauliObservable &p, Rng &rng) {
    Vector4 plus = p.p_plus * st.amplitudes;
    Vector4 minus = p.p_minus * st.amplitudes;
    double p_plus = plus.squaredNorm();
    double p_minus = minus.squaredNorm();
    double total = p_plus + p_minus;
    bool take_plus = rng.uniform() * total < p_plus;
    Vector4 &branch = take_plus ? plus : minus;
    double norm = std::sqrt(take_plus ? p_plus : p_minus);
    if (norm < QUANTUM_TOLERANCE) {
        throw std::logic_error("sampled a measurement branch of zero norm");
    }
    return MeasurementOutcome{static_cast<int8_t>(take_plus ? +1 : -1), QState{branch / norm}, p_plus / total};
}

std::vector<SampledStep> pmlang::sample_steps(size_t length, Rng &rng) {
    const auto &square = standard_square();
    QState st = QState::haar_random(rng);
    std::vector<SampledStep> steps;
    steps.reserve(length);
    for (size_t k = 0; k < length; k++) {
        const PauliObservable &p = square[rng.below(NUM_OBSERVABLES)];
        MeasurementOutcome out = measure(st, p, rng);
        steps.push_back(SampledStep{SignedSymbol{p.obs, out.value}, out.plus_probability});
        st = out.after;
    }
    return steps;
}

Word pmlang::sample_run(size_t length, Rng &rng) {
    Word w;
    for (const SampledStep &s : sample_steps(length, rng)) {
        w.push_back(s.symbol);
    }
    return w;
}

Word pmlang::sample_run(size_t length, uint64_t seed) {
    Rng rng(seed);
    return sample_run(length, rng);
}

std::vector<Word> pmlang::sample_runs(size_t length, size_t runs, uint64_t seed) {
    Rng master(seed);
    std::vector<Word> result;
    result.reserve(runs);
    for (size_t k = 0; k < runs; k++) {
        Rng rng = master.split(k);
        result.push_back(sample_run(length, rng));
    }
    return result;
}
