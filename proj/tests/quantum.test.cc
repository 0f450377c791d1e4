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

#include "gtest/gtest.h"
#include "pmlang/semantics.h"

using namespace pmlang;

namespace {

const PauliObservable &op_of(Observable o) {
    return standard_square()[index_of(o)];
}

// <psi| op |psi>, computed without the projectors.
double expectation(const QState &st, const Matrix4 &op) {
    return (st.amplitudes.adjoint() * op * st.amplitudes)(0, 0).real();
}

}  // namespace

TEST(quantum, pauli_tensor_names) {
    EXPECT_TRUE(pauli_tensor('I', 'I').isApprox(Matrix4::Identity()));
    EXPECT_THROW(pauli_tensor('Q', 'I'), std::invalid_argument);
    // Z on the first qubit flips the sign of |10> and |11>.
    Matrix4 zi = pauli_tensor('Z', 'I');
    EXPECT_EQ(zi(0, 0), 1.0);
    EXPECT_EQ(zi(1, 1), 1.0);
    EXPECT_EQ(zi(2, 2), -1.0);
    EXPECT_EQ(zi(3, 3), -1.0);
}

TEST(quantum, operator_laws) {
    OperatorLawReport r = check_operator_laws();
    EXPECT_LE(r.projector_error, 1e-12);
    EXPECT_LE(r.involution_error, 1e-12);
    EXPECT_LE(r.commutation_error, 1e-12);
    EXPECT_LE(r.product_error, 1e-12);
    EXPECT_GT(r.min_cross_commutator, 1.0);
    EXPECT_TRUE(r.ok());
}

TEST(quantum, context_products_by_hand) {
    Matrix4 id = Matrix4::Identity();
    Matrix4 col2 = op_of(Observable::C).op * op_of(Observable::c).op * op_of(Observable::gamma).op;
    EXPECT_LE((col2 + id).cwiseAbs().maxCoeff(), 1e-12);
    for (const Context &ctx : all_contexts()) {
        Matrix4 p = op_of(ctx.members[0]).op * op_of(ctx.members[1]).op * op_of(ctx.members[2]).op;
        EXPECT_LE((p - double(ctx.sign) * id).cwiseAbs().maxCoeff(), 1e-12) << ctx.id();
    }
}

TEST(quantum, incompatible_pairs_anticommute) {
    for (Observable x : all_observables()) {
        for (Observable y : all_observables()) {
            if (x == y || observables_compatible(x, y)) {
                continue;
            }
            const Matrix4 &ox = op_of(x).op;
            const Matrix4 &oy = op_of(y).op;
            EXPECT_LE((ox * oy + oy * ox).cwiseAbs().maxCoeff(), 1e-12) << name_of(x) << " " << name_of(y);
        }
    }
}

TEST(quantum, rng_is_reproducible_and_splits) {
    Rng a(5);
    Rng b(5);
    for (int k = 0; k < 100; k++) {
        EXPECT_EQ(a.next_u64(), b.next_u64());
    }
    Rng c(5);
    Rng s0 = c.split(0);
    Rng s1 = c.split(1);
    EXPECT_NE(s0.next_u64(), s1.next_u64());
    EXPECT_EQ(Rng(5).split(3).next_u64(), Rng(5).split(3).next_u64());
    EXPECT_NE(Rng(5).split(3).next_u64(), Rng(6).split(3).next_u64());
    EXPECT_THROW(c.below(0), std::invalid_argument);

    Rng r(17);
    double sum = 0;
    double sum_sq = 0;
    const int n = 200000;
    for (int k = 0; k < n; k++) {
        double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_LT(r.below(9), 9u);
        double z = r.normal();
        sum += z;
        sum_sq += z * z;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.01);
    EXPECT_NEAR(sum_sq / n, 1.0, 0.02);
}

TEST(quantum, haar_states_are_normalized) {
    Rng rng(2);
    for (int k = 0; k < 1000; k++) {
        EXPECT_LE(QState::haar_random(rng).norm_error(), 1e-12);
    }
    EXPECT_EQ(QState::basis(2).amplitudes(2), 1.0);
}

TEST(quantum, repeated_measurement_is_stable) {
    Rng rng(3);
    for (int trial = 0; trial < 200; trial++) {
        QState st = QState::haar_random(rng);
        for (const auto &p : standard_square()) {
            MeasurementOutcome first = measure(st, p, rng);
            MeasurementOutcome second = measure(first.after, p, rng);
            EXPECT_EQ(first.value, second.value);
            EXPECT_LE((first.after.amplitudes - second.after.amplitudes).norm(), 1e-12);
            st = second.after;
        }
    }
}

TEST(quantum, eigenstate_outcomes_are_certain) {
    Rng rng(4);
    // |00> is the +1 eigenstate of Z on either qubit.
    EXPECT_EQ(measure(QState::basis(0), op_of(Observable::A), rng).value, +1);
    EXPECT_EQ(measure(QState::basis(3), op_of(Observable::A), rng).value, -1);
    EXPECT_EQ(measure(QState::basis(3), op_of(Observable::C), rng).value, +1);
}

TEST(quantum, outcome_frequency_matches_born_rule) {
    Rng rng(6);
    QState psi = QState::haar_random(rng);
    double p_plus = (1.0 + expectation(psi, pauli_tensor('Z', 'I'))) / 2.0;
    const int n = 100000;
    int plus = 0;
    for (int k = 0; k < n; k++) {
        plus += measure(psi, op_of(Observable::A), rng).value > 0;
    }
    double sigma = std::sqrt(p_plus * (1 - p_plus) / n);
    EXPECT_NEAR(double(plus) / n, p_plus, 3 * sigma);
}

TEST(quantum, sample_run_basics) {
    EXPECT_TRUE(sample_run(0, 1).empty());
    EXPECT_EQ(sample_run(20, 9), sample_run(20, 9));
    EXPECT_NE(sample_run(20, 9), sample_run(20, 10));
    auto runs = sample_runs(12, 50, 7);
    ASSERT_EQ(runs.size(), 50u);
    EXPECT_EQ(runs, sample_runs(12, 50, 7));
    EXPECT_NE(runs[0], runs[1]);
}

TEST(quantum, sampled_runs_are_in_the_language) {
    for (const Word &w : sample_runs(12, 10000, 2026)) {
        ASSERT_EQ(w.size(), 12u);
        ASSERT_TRUE(is_consistent(w)) << format_word(w);
    }
}

TEST(quantum, determined_values_match_semantics) {
    Rng master(8);
    size_t determined_steps = 0;
    for (int run = 0; run < 2000; run++) {
        Rng rng = master.split(run);
        QState st = QState::haar_random(rng);
        DeterminationState sem = initial_state();
        for (int k = 0; k < 12; k++) {
            const PauliObservable &p = standard_square()[rng.below(NUM_OBSERVABLES)];
            MeasurementOutcome out = measure(st, p, rng);
            Prediction predicted = predicted_value(sem, p.obs);
            if (predicted != Prediction::Random) {
                determined_steps++;
                ASSERT_EQ(int(out.value), int(predicted));
                EXPECT_NEAR(out.plus_probability, predicted == Prediction::Plus ? 1.0 : 0.0, 1e-12);
            }
            st = out.after;
            sem = *step(sem, SignedSymbol{p.obs, out.value});
        }
    }
    EXPECT_GT(determined_steps, 1000u);
}

TEST(quantum, undetermined_outcomes_are_balanced) {
    Rng master(9);
    for (Observable s : all_observables()) {
        int plus = 0;
        const int trials = 1000;
        for (int k = 0; k < trials; k++) {
            Rng rng = master.split(index_of(s) * trials + k);
            QState st = QState::haar_random(rng);
            plus += measure(st, op_of(s), rng).value > 0;
        }
        double f = double(plus) / trials;
        EXPECT_GE(f, 0.4) << name_of(s);
        EXPECT_LE(f, 0.6) << name_of(s);
    }
    // b anticommutes with A, so it is undetermined right after A.
    Rng rng(10);
    int plus = 0;
    for (int k = 0; k < 1000; k++) {
        QState st = measure(QState::haar_random(rng), op_of(Observable::A), rng).after;
        MeasurementOutcome out = measure(st, op_of(Observable::b), rng);
        EXPECT_NEAR(out.plus_probability, 0.5, 1e-12);
        plus += out.value > 0;
    }
    EXPECT_GE(plus, 400);
    EXPECT_LE(plus, 600);
}

TEST(quantum, context_product_law) {
    Rng rng(11);
    for (int trial = 0; trial < 300; trial++) {
        for (const Context &ctx : all_contexts()) {
            QState st = QState::haar_random(rng);
            int product = 1;
            for (Observable o : ctx.members) {
                MeasurementOutcome out = measure(st, op_of(o), rng);
                product *= out.value;
                st = out.after;
            }
            ASSERT_EQ(product, ctx.sign) << ctx.id();
        }
    }
}

TEST(quantum, normalization_is_preserved) {
    Rng rng(12);
    QState st = QState::haar_random(rng);
    double worst = 0;
    for (int k = 0; k < 1000; k++) {
        st = measure(st, standard_square()[rng.below(NUM_OBSERVABLES)], rng).after;
        worst = std::max(worst, st.norm_error());
    }
    EXPECT_LE(worst, 1e-12);
}
