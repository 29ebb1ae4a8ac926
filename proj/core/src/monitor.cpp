/*
 * Copyright 2026 The delaygame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "delaygame/monitor.hpp"

#include <algorithm>
#include <utility>

#include "delaygame/errors.hpp"

namespace delaygame {

Monitor::Monitor(std::size_t states, std::size_t inputs, std::size_t outputs, std::vector<std::string> labels,
                 std::vector<Memory> table)
    : states_(states), inputs_(inputs), outputs_(outputs), labels_(std::move(labels)), table_(std::move(table))
{
    if (labels_.empty()) throw InputError("monitor needs at least one memory element");
    if (table_.size() != (labels_.size() + 1) * states_ * inputs_ * outputs_)
        throw InputError("monitor table must cover M_⊥ × δ");
    for (Memory m : table_)
        if (m >= labels_.size()) throw InputError("monitor update must land in M");
}

Memory Monitor::update(Memory m, const Transition &t) const
{
    if (m != kBottom && m >= size()) throw InputError("memory element out of range");
    if (t.from >= states_ || t.letter.in >= inputs_ || t.letter.out >= outputs_)
        throw InputError("transition outside the monitor's automaton");
    return update(m, t.from, t.letter.in * outputs_ + t.letter.out);
}

Memory Monitor::fold(const std::vector<Transition> &piece) const
{
    if (piece.empty()) throw InputError("pieces must be nonempty");
    Memory m = kBottom;
    for (const Transition &t : piece) m = update(m, t);
    return m;
}

const std::string &Monitor::label(Memory m) const
{
    static const std::string bottom = "bot";
    if (m == kBottom) return bottom;
    return labels_.at(m);
}

PriorityAutomaton::PriorityAutomaton(std::size_t states, std::size_t alphabet, std::uint32_t initial,
                                     std::vector<std::uint32_t> next, std::vector<unsigned> priority)
    : states_(states), alphabet_(alphabet), initial_(initial), next_(std::move(next)), priority_(std::move(priority))
{
    if (states_ == 0 || alphabet_ == 0) throw InputError("priority automaton must be nonempty");
    if (initial_ >= states_) throw InputError("priority automaton initial state out of range");
    if (next_.size() != states_ * alphabet_ || priority_.size() != states_ * alphabet_)
        throw InputError("priority automaton must be complete");
    for (auto p : next_)
        if (p >= states_) throw InputError("priority automaton target out of range");
}

bool PriorityAutomaton::accepts_lasso(const MemoryLasso &word) const
{
    if (word.period.empty()) throw InputError("lasso period must be nonempty");
    std::uint32_t p = initial_;
    for (Memory m : word.prefix) p = next(p, m);
    const std::size_t len = word.period.size();
    std::vector<std::size_t> seen(states_ * len, SIZE_MAX);
    std::vector<unsigned> priorities;
    std::size_t step = 0;
    while (seen[p * len + step % len] == SIZE_MAX) {
        seen[p * len + step % len] = step;
        Memory m = word.period[step % len];
        priorities.push_back(priority(p, m));
        p = next(p, m);
        ++step;
    }
    unsigned top = 0;
    for (std::size_t i = seen[p * len + step % len]; i < priorities.size(); ++i) top = std::max(top, priorities[i]);
    return top % 2 == 0;
}

AggregationScheme parity_scheme(const OmegaAutomaton &automaton)
{
    if (!automaton.is_parity()) throw InputError("parity_scheme expects a parity automaton");
    const std::vector<unsigned> colors = automaton.color_set();
    auto index_of = [&](unsigned c) {
        return static_cast<Memory>(std::lower_bound(colors.begin(), colors.end(), c) - colors.begin());
    };

    const std::size_t n = automaton.state_count();
    const std::size_t letters = automaton.letter_count();
    std::vector<Memory> table;
    table.reserve((colors.size() + 1) * n * letters);
    for (std::size_t row = 0; row <= colors.size(); ++row) {
        for (StateId q = 0; q < n; ++q) {
            const unsigned c = automaton.color(q);
            const unsigned merged = row == colors.size() ? c : std::max(colors[row], c);
            for (std::size_t a = 0; a < letters; ++a) table.push_back(index_of(merged));
        }
    }

    std::vector<std::string> labels;
    for (unsigned c : colors) labels.push_back(std::to_string(c));

    std::vector<std::uint32_t> next(colors.size(), 0);
    PriorityAutomaton acceptance(1, colors.size(), 0, std::move(next), colors);
    return {Monitor(n, automaton.input_count(), automaton.output_count(), std::move(labels), std::move(table)),
            std::move(acceptance), AggregationStrength::strong};
}

Monitor muller_monitor(const OmegaAutomaton &automaton)
{
    if (automaton.acceptance() != AcceptanceKind::muller)
        throw InputError("muller_monitor expects a Muller automaton");
    const std::size_t n = automaton.state_count();
    if (n > 16) throw ResourceError("Muller monitor limited to 16 states (2^|Q| memory elements)");
    const std::size_t subsets = (std::size_t{1} << n) - 1;
    const std::size_t letters = automaton.letter_count();

    std::vector<Memory> table;
    table.reserve((subsets + 1) * n * letters);
    for (std::size_t row = 0; row <= subsets; ++row) {
        const std::size_t mask = row == subsets ? 0 : row + 1;
        for (StateId q = 0; q < n; ++q) {
            const auto merged = static_cast<Memory>((mask | (std::size_t{1} << q)) - 1);
            for (std::size_t a = 0; a < letters; ++a) table.push_back(merged);
        }
    }

    std::vector<std::string> labels;
    for (std::size_t mask = 1; mask <= subsets; ++mask) {
        std::string label = "{";
        bool first = true;
        for (StateId q = 0; q < n; ++q) {
            if (!(mask >> q & 1)) continue;
            if (!first) label += ',';
            label += automaton.state_name(q);
            first = false;
        }
        labels.push_back(label + "}");
    }
    return Monitor(n, automaton.input_count(), automaton.output_count(), std::move(labels), std::move(table));
}

ProductAutomaton::ProductAutomaton(OmegaAutomaton automaton, Monitor monitor)
    : automaton_(std::move(automaton)), monitor_(std::move(monitor))
{
    if (monitor_.state_count() != automaton_.state_count() || monitor_.input_count() != automaton_.input_count() ||
        monitor_.output_count() != automaton_.output_count())
        throw InputError("monitor does not match the automaton's transitions");
}

ProductState ProductAutomaton::step(ProductState s, Letter a) const
{
    if (s.q >= automaton_.state_count()) throw InputError("unknown product state");
    if (s.m != kBottom && s.m >= monitor_.size()) throw InputError("unknown memory element");
    if (a.in >= automaton_.input_count() || a.out >= automaton_.output_count())
        throw InputError("letter not in alphabet");
    return step(s, automaton_.letter_index(a));
}

ProductAutomaton product_with_monitor(const OmegaAutomaton &automaton, const Monitor &monitor)
{
    return ProductAutomaton(automaton, monitor);
}

std::vector<Memory> aggregate(const Monitor &monitor, const std::vector<std::vector<Transition>> &pieces)
{
    if (pieces.empty()) throw InputError("aggregate needs at least one piece");
    std::vector<Memory> out;
    out.reserve(pieces.size());
    const Transition *last = nullptr;
    for (const auto &piece : pieces) {
        if (piece.empty()) throw InputError("pieces must be nonempty");
        for (const Transition &t : piece) {
            if (last && last->to != t.from) throw InputError("pieces do not form a run");
            last = &t;
        }
        out.push_back(monitor.fold(piece));
    }
    return out;
}

} // namespace delaygame
