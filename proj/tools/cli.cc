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

#include "cli.h"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmlang/grammar.h"
#include "pmlang/language.h"
#include "pmlang/maga.h"
#include "pmlang/quantum.h"
#include "pmlang/semantics.h"
#include "pmlang/verify.h"

using namespace pmlang;
using nlohmann::json;

namespace {

const char *SCHEMA_NAMES[NUM_SCHEMAS] = {
    "start_empty",
    "start_single",
    "single_end",
    "single_repeat",
    "single_incompatible",
    "single_compatible",
    "pair_end",
    "pair_repeat",
    "pair_swap",
    "pair_pivot_last",
    "pair_third",
    "pair_pivot_third",
    "pair_pivot_first",
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string cell_text(const json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_null()) {
        return "";
    }
    if (v.is_number_float()) {
        std::ostringstream out;
        out.imbue(std::locale::classic());
        out.precision(12);
        out << v.get<double>();
        return out.str();
    }
    return v.dump();
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    return quoted + "\"";
}

void render(const Table &t, const std::string &format, std::ostream &out) {
    if (format == "json") {
        json rows = json::array();
        for (const auto &row : t.rows) {
            json obj = json::object();
            for (size_t k = 0; k < t.columns.size(); k++) {
                obj[t.columns[k]] = row[k];
            }
            rows.push_back(std::move(obj));
        }
        out << rows.dump(2) << "\n";
        return;
    }
    std::vector<std::vector<std::string>> text;
    for (const auto &row : t.rows) {
        std::vector<std::string> line;
        for (const auto &v : row) {
            line.push_back(cell_text(v));
        }
        text.push_back(std::move(line));
    }
    if (format == "csv") {
        for (size_t k = 0; k < t.columns.size(); k++) {
            out << (k ? "," : "") << csv_field(t.columns[k]);
        }
        out << "\n";
        for (const auto &line : text) {
            for (size_t k = 0; k < line.size(); k++) {
                out << (k ? "," : "") << csv_field(line[k]);
            }
            out << "\n";
        }
        return;
    }
    std::vector<size_t> widths;
    for (const auto &c : t.columns) {
        widths.push_back(c.size());
    }
    for (const auto &line : text) {
        for (size_t k = 0; k < line.size(); k++) {
            widths[k] = std::max(widths[k], line[k].size());
        }
    }
    auto emit = [&](const std::vector<std::string> &line) {
        std::string s;
        for (size_t k = 0; k < line.size(); k++) {
            s += line[k];
            if (k + 1 < line.size()) {
                s += std::string(widths[k] + 2 - line[k].size(), ' ');
            }
        }
        out << s << "\n";
    };
    emit(t.columns);
    for (const auto &line : text) {
        emit(line);
    }
}

GrammarVariant variant_of(const std::string &name) {
    return name == "published" ? GrammarVariant::AsPublished : GrammarVariant::Completed;
}

// Parses a word, reporting failures with their position. Returns false on error.
bool parse_or_report(const std::string &text, Word &w, std::ostream &err) {
    try {
        w = parse_word(text);
        return true;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return false;
    }
}

int cmd_validate(const std::string &text, const std::string &format, std::ostream &out, std::ostream &err) {
    Word w;
    if (!parse_or_report(text, w, err)) {
        return 2;
    }
    auto at = first_inconsistency(w);
    if (format == "json") {
        json steps = json::array();
        for (const TraceRow &row : trace(w)) {
            json s{{"measured", token_of(row.measured)}};
            if (row.after.has_value()) {
                s["result"] = "ok";
                s["determined"] = row.after->describe();
            } else {
                s["result"] = "inconsistent";
                s["expected"] = row.expected;
            }
            steps.push_back(std::move(s));
        }
        json doc{
            {"word", format_word(w)},
            {"consistent", !at.has_value()},
            {"inconsistent_token", at.has_value() ? json(*at + 1) : json(nullptr)},
            {"steps", std::move(steps)}};
        out << doc.dump(2) << "\n";
    } else {
        out << format_trace(w);
        if (at.has_value()) {
            out << "rejected: measurement " << *at + 1 << " (" << token_of(w[*at]) << ") is inconsistent\n";
        } else {
            out << "accepted\n";
        }
    }
    return at.has_value() ? 1 : 0;
}

int cmd_derive(const std::string &text, const std::string &variant, const std::string &format, std::ostream &out,
               std::ostream &err) {
    Word w;
    if (!parse_or_report(text, w, err)) {
        return 2;
    }
    Grammar g = build_grammar(variant_of(variant));
    auto d = derive_membership(g, w);
    if (!d.has_value()) {
        err << "\"" << format_word(w) << "\" is not generated by the grammar\n";
        return 1;
    }
    if (format == "json") {
        json steps = json::array();
        for (const auto &s : d->steps) {
            steps.push_back({
                {"form", s.form()},
                {"rule", s.rule.str()},
                {"family", std::string(notation_of(s.rule.schema))}});
        }
        out << json{{"word", format_word(w)}, {"steps", std::move(steps)}}.dump(2) << "\n";
    } else {
        out << format_derivation(*d);
    }
    return 0;
}

int cmd_grammar(bool dump, const std::string &variant, const std::string &format, std::ostream &out) {
    Grammar g = build_grammar(variant_of(variant));
    Table t;
    if (dump) {
        t.columns = {"index", "rule", "family"};
        for (size_t k = 0; k < g.rules().size(); k++) {
            const Rule &r = g.rules()[k];
            t.rows.push_back({k, r.str(), SCHEMA_NAMES[static_cast<size_t>(r.schema)]});
        }
    } else {
        std::vector<size_t> counts(NUM_SCHEMAS, 0);
        for (const Rule &r : g.rules()) {
            counts[static_cast<size_t>(r.schema)]++;
        }
        t.columns = {"family", "notation", "rules"};
        for (size_t s = 0; s < NUM_SCHEMAS; s++) {
            if (counts[s] > 0) {
                t.rows.push_back({SCHEMA_NAMES[s], std::string(notation_of(static_cast<Schema>(s))), counts[s]});
            }
        }
        t.rows.push_back({"total", "", g.rules().size()});
    }
    render(t, format, out);
    return 0;
}

int cmd_dfa(const std::string &emit, const std::string &variant, const std::string &format, std::ostream &out) {
    LanguageAutomata a = build_language_automata(variant_of(variant));
    const Dfa &d = a.minimal.dfa;
    auto labels = semantic_labels(d);
    if (emit == "dot") {
        out << to_dot(d, labels);
        return 0;
    }
    Table t;
    t.columns = {"state", "label", "accepting"};
    for (SignedSymbol s : all_signed_symbols()) {
        t.columns.push_back(token_of(s));
    }
    for (size_t q = 0; q < d.num_states(); q++) {
        std::vector<json> row{q, labels[q], static_cast<bool>(d.accepting[q])};
        for (SignedSymbol s : all_signed_symbols()) {
            row.push_back(d.delta[q][s.index()]);
        }
        t.rows.push_back(std::move(row));
    }
    render(t, format, out);
    return 0;
}

int cmd_count(size_t max_length, const std::string &format, std::ostream &out) {
    CountReport report = count_words(language_dfa(), max_length);
    HvBitCurve curve = hv_bits(report);
    Table t;
    t.columns = {"n", "count", "cumulative", "ratio", "hv_bits"};
    for (size_t n = 0; n <= max_length; n++) {
        json ratio = nullptr;
        if (n > 0 && report.counts[n - 1] != 0) {
            ratio = ratio_to_double(report.counts[n], report.counts[n - 1]);
        }
        t.rows.push_back({n, to_string(report.counts[n]), to_string(report.cumulative[n]), ratio, curve.bits[n]});
    }
    render(t, format, out);
    return 0;
}

int cmd_bound(size_t qubits, const std::string &format, std::ostream &out) {
    Table t;
    t.columns = {"n", "contexts", "context_size", "lower_bound", "simplified_bound", "density", "density_floor"};
    for (size_t n = 1; n <= qubits; n++) {
        ScalingReport r = scaling_report(n);
        t.rows.push_back({n, to_string(r.contexts), to_string(r.context_size), to_string(r.lower_bound),
                          to_string(r.simplified_bound), r.density, r.density_floor});
    }
    render(t, format, out);
    return 0;
}

int cmd_density(size_t qubits, const std::string &format, std::ostream &out) {
    Table t;
    t.columns = {"n", "density", "density_floor", "gap", "exceeds_one_bit"};
    for (size_t n = 1; n <= qubits; n++) {
        ScalingReport r = scaling_report(n);
        t.rows.push_back({n, r.density, r.density_floor, r.gap(), r.violates_holevo()});
    }
    render(t, format, out);
    return 0;
}

int cmd_sample(size_t length, size_t runs, uint64_t seed, bool check, std::ostream &out, std::ostream &err) {
    size_t rejected = 0;
    size_t k = 0;
    for (const Word &w : sample_runs(length, runs, seed)) {
        out << format_word(w) << "\n";
        if (check && !is_consistent(w)) {
            err << "run " << k + 1 << " rejected: " << format_word(w) << "\n";
            rejected++;
        }
        k++;
    }
    if (check) {
        err << runs - rejected << " of " << runs << " runs accepted\n";
    }
    return rejected == 0 ? 0 : 1;
}

int cmd_verify(const std::string &suite, const VerifyOptions &options, const std::string &format, std::ostream &out,
               std::ostream &err) {
    std::vector<int> ids;
    try {
        ids = criteria_of_suite(suite);
    } catch (const std::invalid_argument &e) {
        err << e.what() << "\n";
        return 2;
    }
    bool ok = true;
    json results = json::array();
    for (int id : ids) {
        CriterionResult r = check_criterion(id, options);
        ok = ok && r.passed;
        if (format == "json") {
            results.push_back(
                {{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
        } else {
            out << format_result(r) << std::flush;
        }
    }
    if (format == "json") {
        out << results.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int pmlang::run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Peres-Mermin measurement language toolkit", "pmlang"};
    app.require_subcommand(1);
    const std::vector<std::string> table_formats{"table", "csv", "json"};
    const std::vector<std::string> doc_formats{"table", "json"};
    const std::vector<std::string> variants{"completed", "published"};

    std::string word;
    std::string format = "table";
    std::string variant = "completed";

    auto *validate = app.add_subcommand("validate", "Check a measurement sequence and print its trace");
    validate->add_option("word", word, "Space-separated tokens such as \"A B c ~gamma\"")->required();
    validate->add_option("--format", format)->check(CLI::IsMember(doc_formats));

    auto *derive = app.add_subcommand("derive", "Print a grammar derivation of a word");
    derive->add_option("word", word)->required();
    derive->add_option("--variant", variant)->check(CLI::IsMember(variants));
    derive->add_option("--format", format)->check(CLI::IsMember(doc_formats));

    bool dump = false;
    auto *grammar = app.add_subcommand("grammar", "Summarize or list the grammar rules");
    grammar->add_flag("--dump", dump, "List every rule instance");
    grammar->add_option("--variant", variant)->check(CLI::IsMember(variants));
    grammar->add_option("--format", format)->check(CLI::IsMember(table_formats));

    std::string emit = "dot";
    auto *dfa = app.add_subcommand("dfa", "Emit the minimal automaton");
    dfa->add_option("--emit", emit)->check(CLI::IsMember({"dot", "table"}));
    dfa->add_option("--variant", variant)->check(CLI::IsMember(variants));
    dfa->add_option("--format", format)->check(CLI::IsMember(table_formats));

    size_t max_length = 20;
    auto *count = app.add_subcommand("count", "Count consistent words by length");
    count->add_option("--max-length", max_length)->check(CLI::Range(size_t(0), size_t(100000)));
    count->add_option("--format", format)->check(CLI::IsMember(table_formats));

    size_t qubits = 1;
    auto *bound = app.add_subcommand("bound", "Memory lower bounds for 1..N qubits");
    bound->add_option("--qubits", qubits)->required()->check(CLI::Range(size_t(1), size_t(4096)));
    bound->add_option("--format", format)->check(CLI::IsMember(table_formats));

    auto *density = app.add_subcommand("density", "Bits of memory per qubit for 1..N qubits");
    density->add_option("--qubits", qubits)->required()->check(CLI::Range(size_t(1), size_t(4096)));
    density->add_option("--format", format)->check(CLI::IsMember(table_formats));

    size_t length = 12;
    size_t runs = 1;
    uint64_t seed = 0;
    bool check = false;
    auto *sample = app.add_subcommand("sample", "Sample outcome sequences from the two-qubit simulator");
    sample->add_option("--length", length)->required();
    sample->add_option("--runs", runs);
    sample->add_option("--seed", seed)->required();
    sample->add_flag("--check", check, "Fail if any sampled sequence is inconsistent");

    VerifyOptions options;
    std::string suite = "all";
    auto *verify = app.add_subcommand("verify", "Run acceptance suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "grammar", "semantics", "automata", "maga",
                                                               "quantum"}));
    verify->add_option("--format", format)->check(CLI::IsMember(doc_formats));
    verify->add_option("--equivalence-length", options.equivalence_length);
    verify->add_option("--random-words", options.random_words);
    verify->add_option("--lemma-length", options.lemma_length);
    verify->add_option("--count-length", options.count_length);
    verify->add_option("--maga-length", options.maga_length)->check(CLI::Range(size_t(2), size_t(14)));
    verify->add_option("--mara-length", options.mara_length)->check(CLI::Range(size_t(0), size_t(14)));
    verify->add_option("--qubits", options.scaling_qubits)->check(CLI::Range(size_t(3), size_t(4096)));
    verify->add_option("--runs", options.quantum_runs);
    verify->add_option("--trials", options.quantum_trials)->check(CLI::PositiveNumber);
    verify->add_option("--seed", options.seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        const CLI::App *context = &app;
        for (const CLI::App *sub : app.get_subcommands()) {
            context = sub;
        }
        err << context->help();
        return 2;
    }

    try {
        if (validate->parsed()) {
            return cmd_validate(word, format, out, err);
        }
        if (derive->parsed()) {
            return cmd_derive(word, variant, format, out, err);
        }
        if (grammar->parsed()) {
            return cmd_grammar(dump, variant, format, out);
        }
        if (dfa->parsed()) {
            return cmd_dfa(emit, variant, format, out);
        }
        if (count->parsed()) {
            return cmd_count(max_length, format, out);
        }
        if (bound->parsed()) {
            return cmd_bound(qubits, format, out);
        }
        if (density->parsed()) {
            return cmd_density(qubits, format, out);
        }
        if (sample->parsed()) {
            return cmd_sample(length, runs, seed, check, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(suite, options, format, out, err);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
