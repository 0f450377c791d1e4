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

#include "pmlang/automata.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

using namespace pmlang;

void Nfa::validate() const {
    if (accepting.size() != num_states) {
        throw std::invalid_argument("accepting flags do not match the state count");
    }
    if (start >= num_states) {
        throw std::invalid_argument("start state " + std::to_string(start) + " is not declared");
    }
    for (const auto &t : transitions) {
        if (t.from >= num_states || t.to >= num_states) {
            throw std::invalid_argument(
                "transition " + std::to_string(t.from) + " -> " + std::to_string(t.to) +
                " references an undeclared state");
        }
    }
}

std::vector<StateId> Nfa::closure(std::vector<StateId> states) const {
    std::vector<bool> seen(num_states, false);
    for (StateId q : states) {
        seen[q] = true;
    }
    std::vector<StateId> stack = states;
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        for (const auto &t : transitions) {
            if (t.from == q && !t.symbol.has_value() && !seen[t.to]) {
                seen[t.to] = true;
                states.push_back(t.to);
                stack.push_back(t.to);
            }
        }
    }
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    return states;
}

bool Nfa::accepts(std::span<const SignedSymbol> w) const {
    std::vector<StateId> current = closure({start});
    for (SignedSymbol s : w) {
        std::vector<StateId> next;
        for (const auto &t : transitions) {
            if (t.symbol.has_value() && *t.symbol == s && std::binary_search(current.begin(), current.end(), t.from)) {
                next.push_back(t.to);
            }
        }
        current = closure(std::move(next));
        if (current.empty()) {
            return false;
        }
    }
    return std::any_of(current.begin(), current.end(), [&](StateId q) { return accepting[q]; });
}

StateId Dfa::run_from(StateId from, std::span<const SignedSymbol> w) const {
    StateId q = from;
    for (SignedSymbol s : w) {
        q = delta[q][s.index()];
    }
    return q;
}

StateId Dfa::run(std::span<const SignedSymbol> w) const {
    return run_from(start, w);
}

Dfa pmlang::determinize(const Nfa &a) {
    a.validate();
    std::vector<std::vector<StateId>> moves(a.num_states * NUM_SIGNED_SYMBOLS);
    std::vector<std::vector<StateId>> epsilon(a.num_states);
    for (const auto &t : a.transitions) {
        if (t.symbol.has_value()) {
            moves[t.from * NUM_SIGNED_SYMBOLS + t.symbol->index()].push_back(t.to);
        } else {
            epsilon[t.from].push_back(t.to);
        }
    }
    auto close = [&](std::vector<StateId> states) {
        std::vector<bool> seen(a.num_states, false);
        for (StateId q : states) {
            seen[q] = true;
        }
        for (size_t k = 0; k < states.size(); k++) {
            for (StateId r : epsilon[states[k]]) {
                if (!seen[r]) {
                    seen[r] = true;
                    states.push_back(r);
                }
            }
        }
        std::sort(states.begin(), states.end());
        states.erase(std::unique(states.begin(), states.end()), states.end());
        return states;
    };

    Dfa result;
    std::map<std::vector<StateId>, StateId> index;
    std::vector<std::vector<StateId>> subsets;
    auto intern = [&](std::vector<StateId> subset) {
        auto [it, inserted] = index.try_emplace(subset, static_cast<StateId>(subsets.size()));
        if (inserted) {
            bool acc = std::any_of(subset.begin(), subset.end(), [&](StateId q) { return a.accepting[q]; });
            if (subset.empty()) {
                result.dead = it->second;
            }
            subsets.push_back(std::move(subset));
            result.accepting.push_back(acc);
            result.delta.emplace_back();
        }
        return it->second;
    };

    result.start = intern(close({a.start}));
    for (size_t k = 0; k < subsets.size(); k++) {
        for (size_t sym = 0; sym < NUM_SIGNED_SYMBOLS; sym++) {
            std::vector<StateId> next;
            for (StateId q : subsets[k]) {
                const auto &m = moves[q * NUM_SIGNED_SYMBOLS + sym];
                next.insert(next.end(), m.begin(), m.end());
            }
            StateId target = intern(close(std::move(next)));
            result.delta[k][sym] = target;
        }
    }
    return result;
}

Minimization pmlang::minimize_with_partition(const Dfa &d) {
    const size_t n_in = d.num_states();

    // Prune to the reachable part.
    std::vector<StateId> reachable;
    std::vector<std::optional<StateId>> local(n_in);
    reachable.push_back(d.start);
    local[d.start] = 0;
    for (size_t k = 0; k < reachable.size(); k++) {
        for (StateId r : d.delta[reachable[k]]) {
            if (!local[r].has_value()) {
                local[r] = static_cast<StateId>(reachable.size());
                reachable.push_back(r);
            }
        }
    }
    const size_t n = reachable.size();

    // inverse[sym][q]: predecessors of local state q under sym.
    std::vector<std::vector<std::vector<StateId>>> inverse(NUM_SIGNED_SYMBOLS, std::vector<std::vector<StateId>>(n));
    for (StateId p = 0; p < n; p++) {
        for (size_t sym = 0; sym < NUM_SIGNED_SYMBOLS; sym++) {
            inverse[sym][*local[d.delta[reachable[p]][sym]]].push_back(p);
        }
    }

    std::vector<std::vector<StateId>> blocks;
    std::vector<size_t> block_of(n);
    {
        std::vector<StateId> acc, rej;
        for (StateId p = 0; p < n; p++) {
            (d.accepting[reachable[p]] ? acc : rej).push_back(p);
        }
        for (auto *b : {&acc, &rej}) {
            if (!b->empty()) {
                for (StateId p : *b) {
                    block_of[p] = blocks.size();
                }
                blocks.push_back(std::move(*b));
            }
        }
    }

    std::vector<bool> in_work(blocks.size(), false);
    std::deque<size_t> work;
    if (blocks.size() == 2) {
        size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
        work.push_back(smaller);
        in_work[smaller] = true;
    }

    std::vector<bool> marked(n, false);
    std::vector<size_t> hits;
    while (!work.empty()) {
        size_t splitter = work.front();
        work.pop_front();
        in_work[splitter] = false;
        const std::vector<StateId> members = blocks[splitter];
        for (size_t sym = 0; sym < NUM_SIGNED_SYMBOLS; sym++) {
            std::vector<StateId> pre;
            for (StateId q : members) {
                for (StateId p : inverse[sym][q]) {
                    if (!marked[p]) {
                        marked[p] = true;
                        pre.push_back(p);
                    }
                }
            }
            std::vector<size_t> touched;
            for (StateId p : pre) {
                touched.push_back(block_of[p]);
            }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (size_t y : touched) {
                std::vector<StateId> inside, outside;
                for (StateId p : blocks[y]) {
                    (marked[p] ? inside : outside).push_back(p);
                }
                if (outside.empty()) {
                    continue;
                }
                size_t fresh = blocks.size();
                blocks[y] = std::move(outside);
                for (StateId p : inside) {
                    block_of[p] = fresh;
                }
                blocks.push_back(std::move(inside));
                in_work.push_back(false);
                if (in_work[y]) {
                    work.push_back(fresh);
                    in_work[fresh] = true;
                } else {
                    size_t smaller = blocks[y].size() <= blocks[fresh].size() ? y : fresh;
                    work.push_back(smaller);
                    in_work[smaller] = true;
                }
            }
            for (StateId p : pre) {
                marked[p] = false;
            }
        }
    }

    // Renumber blocks breadth-first from the start block.
    std::vector<std::optional<StateId>> order(blocks.size());
    std::vector<size_t> queue{block_of[0]};
    order[block_of[0]] = 0;
    for (size_t k = 0; k < queue.size(); k++) {
        StateId rep = blocks[queue[k]].front();
        for (size_t sym = 0; sym < NUM_SIGNED_SYMBOLS; sym++) {
            size_t b = block_of[*local[d.delta[reachable[rep]][sym]]];
            if (!order[b].has_value()) {
                order[b] = static_cast<StateId>(queue.size());
                queue.push_back(b);
            }
        }
    }

    Minimization result;
    Dfa &m = result.dfa;
    m.delta.resize(queue.size());
    m.accepting.resize(queue.size());
    m.start = 0;
    for (size_t k = 0; k < queue.size(); k++) {
        StateId rep = blocks[queue[k]].front();
        m.accepting[k] = d.accepting[reachable[rep]];
        for (size_t sym = 0; sym < NUM_SIGNED_SYMBOLS; sym++) {
            m.delta[k][sym] = *order[block_of[*local[d.delta[reachable[rep]][sym]]]];
        }
    }

    // The dead state is the one block that cannot reach acceptance.
    std::vector<bool> live(m.num_states(), false);
    bool changed = true;
    for (size_t k = 0; k < m.num_states(); k++) {
        live[k] = m.accepting[k];
    }
    while (changed) {
        changed = false;
        for (size_t k = 0; k < m.num_states(); k++) {
            if (live[k]) {
                continue;
            }
            for (StateId r : m.delta[k]) {
                if (live[r]) {
                    live[k] = true;
                    changed = true;
                    break;
                }
            }
        }
    }
    for (size_t k = 0; k < m.num_states(); k++) {
        if (!live[k]) {
            m.dead = static_cast<StateId>(k);
        }
    }

    result.block_of.resize(n_in);
    for (StateId p = 0; p < n; p++) {
        result.block_of[reachable[p]] = *order[block_of[p]];
    }
    return result;
}

Dfa pmlang::minimize(const Dfa &d) {
    return minimize_with_partition(d).dfa;
}

CountReport pmlang::count_words(const Dfa &d, size_t n_max) {
    CountReport report;
    std::vector<BigInt> current(d.num_states());
    current[d.start] = 1;
    BigInt running = 0;
    for (size_t len = 0; len <= n_max; len++) {
        BigInt total = 0;
        for (size_t q = 0; q < d.num_states(); q++) {
            if (d.accepting[q]) {
                total += current[q];
            }
        }
        running += total;
        report.counts.push_back(total);
        report.cumulative.push_back(running);
        if (len == n_max) {
            break;
        }
        std::vector<BigInt> next(d.num_states());
        for (size_t q = 0; q < d.num_states(); q++) {
            if (current[q] == 0 || (d.dead.has_value() && q == *d.dead)) {
                continue;
            }
            for (StateId r : d.delta[q]) {
                next[r] += current[q];
            }
        }
        current = std::move(next);
    }

    for (size_t len = n_max / 2; len < n_max; len++) {
        if (report.counts[len] == 0) {
            continue;
        }
        const BigInt &num = report.counts[len + 1];
        const BigInt &den = report.counts[len];
        report.growth_ratios.push_back(CountReport::Ratio{len, num, den, ratio_to_double(num, den)});
    }
    report.dominant_rate_estimate = report.growth_ratios.empty() ? std::numeric_limits<double>::quiet_NaN()
                                                                 : report.growth_ratios.back().value;
    return report;
}

HvBitCurve pmlang::hv_bits(const CountReport &c) {
    HvBitCurve curve;
    for (const auto &total : c.cumulative) {
        curve.bits.push_back(total == 0 ? 0 : ceil_log2(total));
    }
    for (size_t k = 1; k < curve.bits.size(); k++) {
        curve.first_differences.push_back(
            static_cast<long long>(curve.bits[k]) - static_cast<long long>(curve.bits[k - 1]));
    }
    return curve;
}

std::string pmlang::to_dot(const Dfa &d, const std::vector<std::string> &labels) {
    std::ostringstream out;
    out << "digraph dfa {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  __start [shape=point];\n";
    out << "  __start -> q" << d.start << ";\n";
    for (size_t q = 0; q < d.num_states(); q++) {
        std::string label = q < labels.size() ? labels[q] : "q" + std::to_string(q);
        out << "  q" << q << " [label=\"" << label << "\"";
        if (d.accepting[q]) {
            out << ", shape=doublecircle";
        }
        out << "];\n";
    }
    for (size_t q = 0; q < d.num_states(); q++) {
        if (d.dead.has_value() && q == *d.dead) {
            continue;
        }
        std::map<StateId, std::string> edges;
        for (size_t sym = 0; sym < NUM_SIGNED_SYMBOLS; sym++) {
            StateId r = d.delta[q][sym];
            if (d.dead.has_value() && r == *d.dead) {
                continue;
            }
            auto &text = edges[r];
            if (!text.empty()) {
                text += ", ";
            }
            text += token_of(SignedSymbol::from_index(sym));
        }
        for (const auto &[r, text] : edges) {
            out << "  q" << q << " -> q" << r << " [label=\"" << text << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}
