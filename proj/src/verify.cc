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

#include "pmlang/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pmlang/grammar.h"
#include "pmlang/language.h"
#include "pmlang/maga.h"
#include "pmlang/quantum.h"
#include "pmlang/semantics.h"

using namespace pmlang;

namespace {

class Check {
   public:
    Check(int id, std::string title) : result_{id, std::move(title), true, {}, 0} {
    }

    void expect(bool ok, const std::string &what) {
        if (!ok) {
            result_.passed = false;
            result_.details.push_back("FAILED: " + what);
        }
    }
    void note(const std::string &line) {
        result_.details.push_back(line);
    }
    CriterionResult finish(double seconds) {
        result_.seconds = seconds;
        return std::move(result_);
    }

   private:
    CriterionResult result_;
};

template <typename T>
std::string str(const T &value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

std::string fixed(double value, int digits) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(digits);
    out << value;
    return out.str();
}

std::string sci(double value) {
    std::ostringstream out;
    out.setf(std::ios::scientific);
    out.precision(2);
    out << value;
    return out.str();
}

void for_each_word(size_t max_length, const std::function<void(const Word &)> &visit) {
    Word w;
    std::function<void()> rec = [&]() {
        visit(w);
        if (w.size() == max_length) {
            return;
        }
        for (SignedSymbol s : all_signed_symbols()) {
            w.push_back(s);
            rec();
            w.pop_back();
        }
    };
    rec();
}

Word random_word(Rng &rng, size_t max_length) {
    Word w(rng.below(max_length + 1));
    for (auto &s : w) {
        s = SignedSymbol::from_index(rng.below(NUM_SIGNED_SYMBOLS));
    }
    return w;
}

const char *TRACE_SNAPSHOT =
    "step  measured  result        determined\n"
    "1     A         ok            A=+1\n"
    "2     B         ok            A=+1 B=+1 C=+1\n"
    "3     c         ok            C=+1 c=+1 gamma=-1\n"
    "4     gamma     inconsistent  gamma is determined as -1\n";

void grammar_equivalence(Check &c, const VerifyOptions &o) {
    GrammarRecognizer recognizer(build_grammar(GrammarVariant::Completed));
    size_t exhaustive = 0;
    size_t discrepancies = 0;
    Word first_bad;
    auto compare = [&](const Word &w) {
        if (recognizer.accepts(w) != is_consistent(w)) {
            if (discrepancies == 0) {
                first_bad = w;
            }
            discrepancies++;
        }
    };
    for_each_word(o.equivalence_length, [&](const Word &w) {
        exhaustive++;
        compare(w);
    });
    Rng rng(o.seed);
    for (size_t k = 0; k < o.random_words; k++) {
        compare(random_word(rng, o.random_max_length));
    }
    c.note(str(exhaustive) + " exhaustive words up to length " + str(o.equivalence_length) + ", " +
           str(o.random_words) + " random words up to length " + str(o.random_max_length));
    c.note(str(discrepancies) + " discrepancies");
    c.expect(discrepancies == 0, "grammar and semantics disagree on \"" + format_word(first_bad) + "\"");

    GrammarRecognizer published(build_grammar(GrammarVariant::AsPublished));
    size_t missed = 0;
    for_each_word(std::min<size_t>(o.equivalence_length, 3), [&](const Word &w) {
        missed += published.accepts(w) != is_consistent(w);
    });
    c.note("published rule set without the first-member pivot family: " + str(missed) +
           " discrepancies up to length " + str(std::min<size_t>(o.equivalence_length, 3)));
}

void worked_example(Check &c, const VerifyOptions &) {
    GrammarRecognizer recognizer(build_grammar());
    Word good = parse_word("A B c ~gamma");
    auto d = recognizer.derive(good);
    c.expect(d.has_value(), "\"A B c ~gamma\" is not derived");
    if (d.has_value()) {
        c.expect(d->steps.size() == 5, "derivation has " + str(d->steps.size()) + " steps");
        const char *forms[] = {"<A>", "A <A B>", "A B <C c>", "A B c <c ~gamma>", "A B c ~gamma"};
        for (size_t k = 0; k < std::min<size_t>(5, d->steps.size()); k++) {
            c.expect(d->steps[k].form() == forms[k], "step " + str(k + 1) + " is " + d->steps[k].form());
        }
        c.note("derivation of \"A B c ~gamma\" in " + str(d->steps.size()) + " steps");
    }
    Word bad = parse_word("A B c gamma");
    c.expect(!recognizer.accepts(bad), "\"A B c gamma\" is accepted by the grammar");
    auto at = first_inconsistency(bad);
    c.expect(at == std::optional<size_t>(3), "\"A B c gamma\" is not rejected at token 4");
    c.expect(format_trace(bad) == TRACE_SNAPSHOT, "trace of \"A B c gamma\" differs from the snapshot");
    c.note("\"A B c gamma\" rejected at token " + str(at.value_or(0) + 1));
}

void parity(Check &c, const VerifyOptions &) {
    size_t odd = 0;
    size_t satisfying = 0;
    for (uint32_t mask = 0; mask < 512; mask++) {
        SquareFilling f = SquareFilling::from_mask(mask);
        odd += negative_context_count(f) % 2;
        satisfying += satisfies_all_signs(f);
    }
    c.expect(odd == 0, str(odd) + " fillings have an odd negative-context count");
    c.expect(satisfying == 0, str(satisfying) + " fillings satisfy every context sign");
    c.note("512 fillings: all negative-context counts even, " + str(satisfying) + " satisfy all six signs");
}

void lemma_suite(Check &c, const VerifyOptions &o) {
    std::vector<DeterminationState> by_depth(o.lemma_length + 1);
    size_t visited = 0;
    size_t invariant_failures = 0;
    size_t persistence_failures = 0;
    for_each_consistent(o.lemma_length, [&](std::span<const SignedSymbol> w, const DeterminationState &st) {
        visited++;
        by_depth[w.size()] = st;
        size_t contexts = 0;
        for (const Context &ctx : all_contexts()) {
            contexts += std::all_of(ctx.members.begin(), ctx.members.end(), [&](Observable x) {
                return st.is_determined(x);
            });
        }
        if (contexts > 1 || !st.satisfies_invariants()) {
            invariant_failures++;
        }
        if (!w.empty() && determined_context(by_depth[w.size() - 1]).has_value() &&
            !determined_context(st).has_value()) {
            persistence_failures++;
        }
    });
    c.note(str(visited) + " consistent words up to length " + str(o.lemma_length));
    c.expect(invariant_failures == 0, str(invariant_failures) + " states determine more than one context");
    c.expect(persistence_failures == 0, str(persistence_failures) + " steps lose a determined context");

    Rng rng(o.seed + 1);
    size_t prefix_failures = 0;
    size_t repetition_failures = 0;
    size_t consistent = 0;
    for (size_t k = 0; k < o.random_words; k++) {
        Word w = random_word(rng, o.random_max_length);
        if (!is_consistent(w)) {
            auto at = first_inconsistency(w);
            // Every extension of an inconsistent word stays inconsistent.
            Word longer = w;
            longer.push_back(SignedSymbol::from_index(rng.below(NUM_SIGNED_SYMBOLS)));
            prefix_failures += is_consistent(longer);
            prefix_failures += !is_consistent(std::span<const SignedSymbol>(w).first(*at));
            continue;
        }
        consistent++;
        for (size_t n = 0; n <= w.size(); n++) {
            prefix_failures += !is_consistent(std::span<const SignedSymbol>(w).first(n));
        }
        if (!w.empty()) {
            Word repeated = w;
            repeated.push_back(w.back());
            repetition_failures += !is_consistent(repeated) || *run(repeated) != *run(w);
        }
    }
    c.note(str(o.random_words) + " random words (" + str(consistent) + " consistent) checked for prefix closure");
    c.expect(prefix_failures == 0, str(prefix_failures) + " prefix-closure failures");
    c.expect(repetition_failures == 0, str(repetition_failures) + " repetition failures");
}

void counting(Check &c, const VerifyOptions &o) {
    Dfa d = language_dfa();
    CountReport report = count_words(d, o.count_length);
    std::vector<BigInt> brute(5, 0);
    for_each_word(4, [&](const Word &w) {
        if (is_consistent(w)) {
            brute[w.size()] += 1;
        }
    });
    c.expect(report.counts[0] == 1 && report.counts[1] == 18, "N(0) or N(1) wrong");
    for (size_t n = 2; n <= 4; n++) {
        c.expect(report.counts[n] == brute[n], "N(" + str(n) + ") differs from brute force");
    }
    c.note("N(0..4) = " + to_string(report.counts[0]) + ", " + to_string(report.counts[1]) + ", " +
           to_string(report.counts[2]) + ", " + to_string(report.counts[3]) + ", " + to_string(report.counts[4]));

    const auto &ratios = report.growth_ratios;
    c.expect(ratios.size() >= o.count_spread_window, "too few growth ratios");
    if (ratios.size() >= o.count_spread_window) {
        double lo = INFINITY;
        double hi = -INFINITY;
        for (size_t k = ratios.size() - o.count_spread_window; k < ratios.size(); k++) {
            lo = std::min(lo, ratios[k].value);
            hi = std::max(hi, ratios[k].value);
        }
        c.expect(hi - lo < o.count_spread_tolerance, "growth ratio spread " + sci(hi - lo));
        c.note("growth ratio N(n+1)/N(n) at n = " + str(o.count_length - 1) + ": " +
               fixed(report.dominant_rate_estimate, 12) + ", spread over last " + str(o.count_spread_window) + ": " +
               sci(hi - lo));
    }

    HvBitCurve curve = hv_bits(report);
    c.expect(o.hv_window_end < curve.bits.size() && o.hv_window_begin < o.hv_window_end, "HV window out of range");
    if (o.hv_window_end < curve.bits.size() && o.hv_window_begin < o.hv_window_end) {
        double slope = std::log2(report.dominant_rate_estimate);
        std::set<long long> steps;
        for (size_t n = o.hv_window_begin; n < o.hv_window_end; n++) {
            steps.insert(curve.first_differences[n]);
        }
        double mean = double(curve.bits[o.hv_window_end] - curve.bits[o.hv_window_begin]) /
                      double(o.hv_window_end - o.hv_window_begin);
        bool adjacent = *steps.rbegin() - *steps.begin() <= 1 && double(*steps.begin()) <= slope &&
                        slope <= double(*steps.rbegin());
        c.expect(adjacent, "HV bit differences are not the two integers around log2 of the growth rate");
        c.expect(std::abs(mean - slope) <= 1.0 / double(o.hv_window_end - o.hv_window_begin),
                 "mean HV bit slope " + fixed(mean, 4) + " far from " + fixed(slope, 4));
        c.note("B(n) differences on [" + str(o.hv_window_begin) + ", " + str(o.hv_window_end) + "] in {" +
               str(*steps.begin()) + ", " + str(*steps.rbegin()) + "}, mean " + fixed(mean, 4) + " vs log2 rate " +
               fixed(slope, 4));
    }
}

void maga_theorem(Check &c, const VerifyOptions &o) {
    std::set<size_t> image;
    for_each_consistent(3, [&](std::span<const SignedSymbol>, const DeterminationState &st) {
        if (auto ctx = determined_context(st)) {
            image.insert(ClassTriple{ctx->context, ctx->values[0], ctx->values[1]}.index());
        }
    });
    c.expect(image.size() == NUM_CLASS_TRIPLES, "only " + str(image.size()) + " class triples realized");
    c.note(str(image.size()) + " class triples realized by words up to length 3");

    ClaimReport claim = verify_disagreement_claim();
    c.expect(claim.ok(), str(claim.missing.size()) + " representative pairs lack a disagreement witness");
    c.note(str(claim.witnesses.size()) + " representative pairs with disagreement witnesses");

    size_t refuted = 0;
    for (size_t i = 0; i < NUM_CLASS_TRIPLES; i++) {
        for (size_t j = i + 1; j < NUM_CLASS_TRIPLES; j++) {
            LowerBoundVerdict v = lower_bound_check(merged_maga_plus(i, j));
            if (!v.certified && v.contradiction.has_value() &&
                v.contradiction->required_i != v.contradiction->required_j) {
                refuted++;
            }
        }
    }
    c.expect(refuted == 276, str(276 - refuted) + " merged machines not refuted");
    c.note(str(refuted) + " of 276 merged 23-state machines refuted");

    MagaSpec reference = reference_maga_plus(o.maga_length);
    LowerBoundVerdict v = lower_bound_check(reference);
    c.expect(v.certified, "reference machine not certified");
    c.expect(reference.num_memory_states() == 24, "reference machine has the wrong state count");
    auto mismatch = find_mismatch(reference);
    c.expect(!mismatch.has_value(), "reference machine wrong on \"" +
                                        (mismatch ? format_word(mismatch->word) : std::string()) + "\"");
    c.note("24-state reference machine matches semantics on " + str(reference.universe().size()) +
           " context-determining words up to length " + str(o.maga_length) + " times 9 observables");
}

void mara_adapter(Check &c, const VerifyOptions &o) {
    Dfa d = language_dfa();
    MagaSpec m = mara_to_maga(mara_from_dfa(d), WordUniverse::build(WordUniverse::Kind::Consistent, o.mara_length));
    c.expect(m.num_memory_states() == d.num_states() * d.num_states(), "state count is not |S'|^2");
    auto mismatch = find_mismatch(m);
    c.expect(!mismatch.has_value(),
             "adapter wrong on \"" + (mismatch ? format_word(mismatch->word) : std::string()) + "\"");
    c.note("recognizer with " + str(d.num_states()) + " states gives " + str(m.num_memory_states()) +
           " paired states; agrees on " + str(m.universe().size()) + " consistent words up to length " +
           str(o.mara_length));
    c.note("square-root bound: 24 memory states need a recognizer with at least " + str(mara_lower_bound(24)) +
           " states");
}

void scaling(Check &c, const VerifyOptions &o) {
    c.expect(scaling_report(1).lower_bound == 6, "lower_bound(1) != 6");
    c.expect(scaling_report(2).lower_bound == 60, "lower_bound(2) != 60");
    c.expect(scaling_report(3).lower_bound == 1080, "lower_bound(3) != 1080");
    double previous = INFINITY;
    size_t bad = 0;
    ScalingReport last{};
    for (size_t n = 1; n <= o.scaling_qubits; n++) {
        ScalingReport r = scaling_report(n);
        bad += !(r.density >= r.density_floor) || !r.violates_holevo() || !(r.gap() <= previous);
        previous = r.gap();
        last = r;
    }
    c.expect(bad == 0, str(bad) + " qubit counts violate the density checks");
    c.note("lower bounds 6, 60, 1080 for n = 1, 2, 3");
    c.note("d_n >= (n+3)/2 and d_n > 1 with non-increasing gap for n = 1.." + str(o.scaling_qubits) +
           "; gap at n = " + str(last.n) + ": " + fixed(last.gap(), 6));
}

void quantum(Check &c, const VerifyOptions &o) {
    Rng master(o.seed);
    size_t rejected = 0;
    size_t determined = 0;
    size_t disagreements = 0;
    for (size_t k = 0; k < o.quantum_runs; k++) {
        Rng rng = master.split(k);
        auto steps = sample_steps(o.quantum_length, rng);
        Word w;
        DeterminationState st = initial_state();
        bool ok = true;
        for (const SampledStep &s : steps) {
            Prediction p = predicted_value(st, s.symbol.obs);
            if (p != Prediction::Random) {
                determined++;
                double certain = p == Prediction::Plus ? 1.0 : 0.0;
                if (int(p) != s.symbol.value || std::abs(s.plus_probability - certain) > QUANTUM_TOLERANCE) {
                    disagreements++;
                }
            }
            w.push_back(s.symbol);
            auto next = step(st, s.symbol);
            if (!next.has_value()) {
                ok = false;
                break;
            }
            st = *next;
        }
        rejected += !ok || !is_consistent(w);
    }
    c.expect(rejected == 0, str(rejected) + " sampled runs rejected");
    c.expect(disagreements == 0, str(disagreements) + " determined steps disagree");
    c.note(str(o.quantum_runs) + " runs of length " + str(o.quantum_length) + " all in the language; " +
           str(determined) + " determined steps agree exactly");

    const auto &square = standard_square();
    double lo = 1;
    double hi = 0;
    Rng trials = master.split(UINT64_MAX);
    for (Observable s : all_observables()) {
        size_t plus = 0;
        for (size_t k = 0; k < o.quantum_trials; k++) {
            QState psi = QState::haar_random(trials);
            plus += measure(psi, square[index_of(s)], trials).value > 0;
        }
        double f = double(plus) / double(o.quantum_trials);
        lo = std::min(lo, f);
        hi = std::max(hi, f);
        c.expect(f >= 0.4 && f <= 0.6, "first-outcome frequency of " + std::string(name_of(s)) + " is " + fixed(f, 3));
    }
    c.note("first-outcome +1 frequencies over " + str(o.quantum_trials) + " Haar-random states in [" + fixed(lo, 3) +
           ", " + fixed(hi, 3) + "]");

    OperatorLawReport laws = check_operator_laws();
    c.expect(laws.ok(QUANTUM_TOLERANCE), "operator laws fail");
    c.note("operator laws: product error " + sci(laws.product_error) + ", commutator error " +
           sci(laws.commutation_error) + ", projector error " + sci(laws.projector_error));
}

struct Criterion {
    const char *title;
    void (*run)(Check &, const VerifyOptions &);
};

const Criterion CRITERIA[NUM_CRITERIA] = {
    {"grammar membership equals operational consistency", grammar_equivalence},
    {"worked example derivation and rejection", worked_example},
    {"parity of square fillings", parity},
    {"determination lemmas", lemma_suite},
    {"word counts and growth", counting},
    {"24-state lower bound for context-determining words", maga_theorem},
    {"recognizer to predictor adapter", mara_adapter},
    {"qubit scaling and density", scaling},
    {"quantum measurement cross-check", quantum},
};

}  // namespace

CriterionResult pmlang::check_criterion(int id, const VerifyOptions &options) {
    if (id < 1 || id > NUM_CRITERIA) {
        throw std::out_of_range("criterion id must be in 1..9");
    }
    const Criterion &criterion = CRITERIA[id - 1];
    Check c(id, criterion.title);
    auto start = std::chrono::steady_clock::now();
    try {
        criterion.run(c, options);
    } catch (const std::exception &e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return c.finish(elapsed.count());
}

std::vector<int> pmlang::criteria_of_suite(std::string_view suite) {
    if (suite == "all") {
        return {1, 2, 3, 4, 5, 6, 7, 8, 9};
    }
    if (suite == "grammar") {
        return {1, 2};
    }
    if (suite == "semantics") {
        return {3, 4};
    }
    if (suite == "automata") {
        return {5};
    }
    if (suite == "maga") {
        return {6, 7, 8};
    }
    if (suite == "quantum") {
        return {9};
    }
    throw std::invalid_argument("unknown suite: " + std::string(suite));
}

std::string pmlang::format_result(const CriterionResult &r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (" << fixed(r.seconds, 2) << " s)\n";
    for (const auto &line : r.details) {
        out << "    " << line << "\n";
    }
    return out.str();
}
