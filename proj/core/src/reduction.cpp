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

#include "delaygame/reduction.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "delaygame/errors.hpp"

namespace delaygame {

namespace {

void normalise(SummarySet &set)
{
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

void check_input(const ProductAutomaton &product, Symbol a)
{
    if (a >= product.automaton().input_count()) throw InputError("letter not in Σ_I");
}

} // namespace

SummarySet powerset_step(const ProductAutomaton &product, const SummarySet &set, Symbol input)
{
    check_input(product, input);
    const auto outputs = static_cast<Symbol>(product.automaton().output_count());
    SummarySet next;
    next.reserve(set.size() * outputs);
    for (const ProductState &s : set)
        for (Symbol b = 0; b < outputs; ++b) next.push_back(product.step(s, product.automaton().letter_index({input, b})));
    normalise(next);
    return next;
}

SummarySet powerset_run(const ProductAutomaton &product, SummarySet set, std::span<const Symbol> word)
{
    if (word.empty()) throw InputError("δ_P^+ needs a nonempty word");
    for (Symbol a : word) set = powerset_step(product, set, a);
    return set;
}

TransitionSummary summary_of_word(const ProductAutomaton &product, std::span<const Symbol> word)
{
    if (word.empty()) throw InputError("transition summaries are defined for nonempty words");
    const std::size_t n = product.automaton().state_count();
    TransitionSummary summary(n);
    for (StateId q = 0; q < n; ++q) summary[q] = powerset_run(product, {{q, kBottom}}, word);
    return summary;
}

bool remark_check(const ProductAutomaton &product, StateId q, std::span<const Symbol> word, std::size_t bound)
{
    if (word.empty()) throw InputError("remark_check needs a nonempty word");
    if (word.size() > bound) throw InputError("word longer than the enumeration bound");
    const OmegaAutomaton &a = product.automaton();
    if (q >= a.state_count()) throw InputError("unknown state");
    for (Symbol s : word) check_input(product, s);

    const std::size_t outputs = a.output_count();
    SummarySet brute;
    std::vector<Symbol> completion(word.size(), 0);
    while (true) {
        StateId cur = q;
        Memory m = kBottom;
        for (std::size_t i = 0; i < word.size(); ++i) {
            const Transition t{cur, {word[i], completion[i]}, a.next(cur, {word[i], completion[i]})};
            m = product.monitor().update(m, t);
            cur = t.to;
        }
        brute.push_back({cur, m});

        std::size_t i = 0;
        while (i < completion.size() && ++completion[i] == outputs) completion[i++] = 0;
        if (i == completion.size()) break;
    }
    normalise(brute);
    return brute == powerset_run(product, {{q, kBottom}}, word);
}

ClassTable::ClassTable(std::vector<SummaryClass> classes, std::vector<ClassId> roots, std::size_t inputs,
                       std::size_t states, std::size_t memory)
    : classes_(std::move(classes)), inputs_(inputs), states_(states), memory_(memory), roots_(std::move(roots))
{
    if (inputs_ == 0) throw InputError("class table needs a nonempty input alphabet");
    for (ClassId c = 0; c < classes_.size(); ++c) {
        const SummaryClass &cls = classes_[c];
        if (cls.summary.size() != states_) throw InputError("summary must cover every state");
        if (cls.representative.empty()) throw InputError("class representative must be nonempty");
        if (cls.successors.size() != inputs_) throw InputError("class needs one successor per input letter");
        for (ClassId s : cls.successors)
            if (s >= classes_.size()) throw InputError("class successor out of range");
        if (!lookup_.emplace(cls.summary, c).second) throw InputError("duplicate summary in class table");
    }
    if (classes_.empty()) throw InputError("class table is empty");

    if (roots_.size() != inputs_) throw InputError("class table needs one root per input letter");
    for (ClassId r : roots_)
        if (r >= classes_.size()) throw InputError("class table root out of range");

    // Infinite classes: reachable from a vertex lying on a cycle (Tarjan, iterative).
    const std::size_t n = classes_.size();
    std::vector<std::int64_t> idx(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0), cyclic(n, 0);
    std::vector<ClassId> stack;
    std::int64_t counter = 0;
    for (ClassId start = 0; start < n; ++start) {
        if (idx[start] != -1) continue;
        std::vector<std::pair<ClassId, std::size_t>> frames{{start, 0}};
        idx[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = 1;
        while (!frames.empty()) {
            auto &[v, i] = frames.back();
            if (i < inputs_) {
                ClassId w = classes_[v].successors[i++];
                if (w == v) cyclic[v] = 1;
                if (idx[w] == -1) {
                    idx[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], idx[w]);
                }
                continue;
            }
            const ClassId done = v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
            if (low[done] == idx[done]) {
                std::vector<ClassId> component;
                ClassId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    component.push_back(w);
                } while (w != done);
                if (component.size() > 1)
                    for (ClassId c : component) cyclic[c] = 1;
            }
        }
    }

    std::deque<ClassId> queue;
    std::vector<char> infinite(n, 0);
    for (ClassId c = 0; c < n; ++c) {
        if (cyclic[c]) {
            infinite[c] = 1;
            queue.push_back(c);
        }
    }
    while (!queue.empty()) {
        ClassId c = queue.front();
        queue.pop_front();
        for (ClassId s : classes_[c].successors) {
            if (!infinite[s]) {
                infinite[s] = 1;
                queue.push_back(s);
            }
        }
    }
    infinite_pos_.assign(n, -1);
    for (ClassId c = 0; c < n; ++c) {
        classes_[c].infinite = infinite[c] != 0;
        if (infinite[c]) {
            infinite_pos_[c] = static_cast<std::int64_t>(infinite_.size());
            infinite_.push_back(c);
        }
    }
}

std::optional<std::uint64_t> ClassTable::d_theory() const noexcept
{
    const std::uint64_t exp = d_theory_log2();
    if (exp >= 64) return std::nullopt;
    return std::uint64_t{1} << exp;
}

std::string ClassTable::d_theory_string() const
{
    if (auto d = d_theory()) return std::to_string(*d);
    return "2^" + std::to_string(d_theory_log2());
}

bool ClassTable::within_index_bound() const noexcept
{
    const std::uint64_t exp = index_bound_log2();
    return exp >= 64 || index() <= (std::uint64_t{1} << exp);
}

ClassId ClassTable::class_of_word(std::span<const Symbol> word) const
{
    if (word.empty()) throw InputError("classes are defined for nonempty words");
    for (Symbol a : word)
        if (a >= inputs_) throw InputError("letter not in Σ_I");
    ClassId c = roots_[word[0]];
    for (std::size_t i = 1; i < word.size(); ++i) c = classes_[c].successors[word[i]];
    return c;
}

std::optional<ClassId> ClassTable::find(const TransitionSummary &summary) const
{
    auto it = lookup_.find(summary);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> ClassTable::infinite_index(ClassId c) const
{
    if (c >= classes_.size() || infinite_pos_[c] < 0) return std::nullopt;
    return static_cast<std::uint32_t>(infinite_pos_[c]);
}

ClassTable build_class_table(const ProductAutomaton &product)
{
    const OmegaAutomaton &a = product.automaton();
    const std::size_t inputs = a.input_count();
    const std::size_t n = a.state_count();

    std::map<TransitionSummary, ClassId> index;
    std::vector<SummaryClass> classes;
    auto intern = [&](TransitionSummary summary, std::vector<Symbol> word) {
        auto [it, fresh] = index.try_emplace(summary, static_cast<ClassId>(classes.size()));
        if (fresh) classes.push_back({std::move(summary), std::move(word), {}, false});
        return it->second;
    };

    std::vector<ClassId> roots;
    for (Symbol x = 0; x < inputs; ++x) {
        const std::vector<Symbol> word{x};
        roots.push_back(intern(summary_of_word(product, word), word));
    }
    for (ClassId c = 0; c < classes.size(); ++c) {
        std::vector<ClassId> successors;
        for (Symbol x = 0; x < inputs; ++x) {
            TransitionSummary next(n);
            for (StateId q = 0; q < n; ++q) next[q] = powerset_step(product, classes[c].summary[q], x);
            std::vector<Symbol> word = classes[c].representative;
            word.push_back(x);
            successors.push_back(intern(std::move(next), std::move(word)));
        }
        classes[c].successors = std::move(successors);
    }
    return ClassTable(std::move(classes), std::move(roots), inputs, n, product.monitor().size());
}

ReducedArena build_reduced_arena(const ProductAutomaton &product, const AggregationScheme &scheme,
                                 const ClassTable &table)
{
    if (!(scheme.monitor == product.monitor())) throw InputError("scheme monitor differs from the product's monitor");
    if (scheme.acceptance.alphabet_size() != scheme.monitor.size())
        throw InputError("acceptance automaton alphabet must equal the monitor's memory set");
    const OmegaAutomaton &a = product.automaton();
    if (table.state_count() != a.state_count() || table.input_count() != a.input_count())
        throw InputError("class table does not belong to this product");

    ReducedArena out;
    out.classes = table.infinite_classes();
    const std::size_t n = a.state_count();
    const std::size_t np = scheme.acceptance.state_count();
    const std::size_t nr = out.classes.size();

    if (nr == 0) {
        out.degenerate = true;
        out.vertices.push_back({ReducedVertex::Kind::pre});
        out.edge_choice.push_back({a.initial(), kBottom});
        out.arena = ParityGameArena({Player::I}, {{0, 0, 0}}, 0);
        return out;
    }

    auto i_vertex = [&](StateId q, std::uint32_t p, std::uint32_t s) {
        return static_cast<VertexId>(1 + (q * np + p) * nr + s);
    };
    auto o_vertex = [&](StateId q, std::uint32_t p, std::uint32_t s, std::uint32_t s2) {
        return static_cast<VertexId>(1 + n * np * nr + ((q * np + p) * nr + s) * nr + s2);
    };

    const std::size_t total = 1 + n * np * nr * (1 + nr);
    std::vector<Player> owners(total, Player::I);
    out.vertices.assign(total, {});
    std::vector<Edge> edges;

    for (std::uint32_t s = 0; s < nr; ++s) {
        edges.push_back({0, i_vertex(a.initial(), scheme.acceptance.initial(), s), 0});
        out.edge_choice.push_back({a.initial(), kBottom});
    }
    for (StateId q = 0; q < n; ++q) {
        for (std::uint32_t p = 0; p < np; ++p) {
            for (std::uint32_t s = 0; s < nr; ++s) {
                const VertexId v = i_vertex(q, p, s);
                out.vertices[v] = {ReducedVertex::Kind::choose_class, q, p, s, 0};
                for (std::uint32_t s2 = 0; s2 < nr; ++s2) {
                    edges.push_back({v, o_vertex(q, p, s, s2), 0});
                    out.edge_choice.push_back({a.initial(), kBottom});
                }
            }
        }
    }
    for (StateId q = 0; q < n; ++q) {
        for (std::uint32_t p = 0; p < np; ++p) {
            for (std::uint32_t s = 0; s < nr; ++s) {
                const SummarySet &menu = table.at(out.classes[s]).summary[q];
                for (std::uint32_t s2 = 0; s2 < nr; ++s2) {
                    const VertexId v = o_vertex(q, p, s, s2);
                    owners[v] = Player::O;
                    out.vertices[v] = {ReducedVertex::Kind::choose_state, q, p, s, s2};
                    for (const ProductState &target : menu) {
                        const std::uint32_t p2 = scheme.acceptance.next(p, target.m);
                        edges.push_back({v, i_vertex(target.q, p2, s2), scheme.acceptance.priority(p, target.m)});
                        out.edge_choice.push_back(target);
                    }
                }
            }
        }
    }
    out.arena = ParityGameArena(std::move(owners), std::move(edges), 0);
    return out;
}

} // namespace delaygame
