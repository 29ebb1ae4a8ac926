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

#include "delaygame/omega.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "delaygame/errors.hpp"

namespace delaygame {

namespace {

std::optional<std::uint32_t> find_name(const std::vector<std::string> &names, const std::string &name)
{
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - names.begin());
}

void require_unique(const std::vector<std::string> &names, const char *what)
{
    std::set<std::string> seen;
    for (const auto &n : names) {
        if (n.empty()) throw InputError(std::string("empty ") + what + " name");
        if (!seen.insert(n).second) throw InputError(std::string("duplicate ") + what + " '" + n + "'");
    }
}

} // namespace

OmegaAutomaton OmegaAutomaton::parity(std::vector<std::string> inputs, std::vector<std::string> outputs,
                                      std::vector<std::string> states, StateId initial,
                                      std::vector<StateId> delta, std::vector<unsigned> colors)
{
    OmegaAutomaton a;
    a.kind_ = AcceptanceKind::parity;
    a.inputs_ = std::move(inputs);
    a.outputs_ = std::move(outputs);
    a.states_ = std::move(states);
    a.initial_ = initial;
    a.delta_ = std::move(delta);
    a.colors_ = std::move(colors);
    a.validate();
    return a;
}

OmegaAutomaton OmegaAutomaton::muller(std::vector<std::string> inputs, std::vector<std::string> outputs,
                                      std::vector<std::string> states, StateId initial,
                                      std::vector<StateId> delta, std::vector<StateSet> family)
{
    OmegaAutomaton a;
    a.kind_ = AcceptanceKind::muller;
    a.inputs_ = std::move(inputs);
    a.outputs_ = std::move(outputs);
    a.states_ = std::move(states);
    a.initial_ = initial;
    a.delta_ = std::move(delta);
    for (auto &set : family) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    a.family_ = std::move(family);
    a.validate();
    return a;
}

void OmegaAutomaton::validate() const
{
    if (inputs_.empty() || outputs_.empty()) throw InputError("alphabets must be nonempty");
    if (states_.empty()) throw InputError("automaton needs at least one state");
    require_unique(inputs_, "input symbol");
    require_unique(outputs_, "output symbol");
    require_unique(states_, "state");
    for (const auto &s : inputs_)
        if (s.find('/') != std::string::npos) throw InputError("input symbol '" + s + "' contains '/'");
    for (const auto &s : outputs_)
        if (s.find('/') != std::string::npos) throw InputError("output symbol '" + s + "' contains '/'");
    if (initial_ >= states_.size()) throw InputError("initial state out of range");
    if (delta_.size() != states_.size() * letter_count())
        throw InputError("transition table must have |Q|*|Σ| entries");
    for (StateId t : delta_)
        if (t >= states_.size()) throw InputError("transition target out of range");
    if (kind_ == AcceptanceKind::parity) {
        if (colors_.size() != states_.size()) throw InputError("parity automaton needs one color per state");
    } else {
        for (const auto &set : family_)
            for (StateId q : set)
                if (q >= states_.size()) throw InputError("accepting set mentions unknown state");
    }
}

StateId OmegaAutomaton::next(StateId q, Letter a) const
{
    if (q >= states_.size()) throw InputError("unknown state " + std::to_string(q));
    if (a.in >= inputs_.size() || a.out >= outputs_.size()) throw InputError("letter not in alphabet");
    return delta_[q * letter_count() + letter_index(a)];
}

std::vector<unsigned> OmegaAutomaton::color_set() const
{
    std::vector<unsigned> c = colors_;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

bool OmegaAutomaton::in_family(const StateSet &set) const
{
    return std::binary_search(family_.begin(), family_.end(), set);
}

std::optional<StateId> OmegaAutomaton::find_state(const std::string &name) const { return find_name(states_, name); }
std::optional<Symbol> OmegaAutomaton::find_input(const std::string &name) const { return find_name(inputs_, name); }
std::optional<Symbol> OmegaAutomaton::find_output(const std::string &name) const { return find_name(outputs_, name); }

FiniteRun run_finite(const OmegaAutomaton &automaton, StateId q, std::span<const Letter> word)
{
    if (q >= automaton.state_count()) throw InputError("unknown state " + std::to_string(q));
    FiniteRun run;
    run.transitions.reserve(word.size());
    for (const Letter &a : word) {
        StateId to = automaton.next(q, a);
        run.transitions.push_back({q, a, to});
        q = to;
    }
    run.end = q;
    return run;
}

bool accepts_lasso(const OmegaAutomaton &automaton, const LassoWord &word)
{
    if (word.period.empty()) throw InputError("lasso period must be nonempty");
    StateId q = automaton.initial();
    for (const Letter &a : word.prefix) q = automaton.next(q, a);

    // (state, offset in period) -> step at which it was first seen
    const std::size_t period = word.period.size();
    std::vector<std::size_t> seen(automaton.state_count() * period, SIZE_MAX);
    std::vector<StateId> visited;
    std::size_t step = 0;
    while (seen[q * period + step % period] == SIZE_MAX) {
        seen[q * period + step % period] = step;
        visited.push_back(q);
        q = automaton.next(q, word.period[step % period]);
        ++step;
    }
    const std::size_t cycle_start = seen[q * period + step % period];

    if (automaton.is_parity()) {
        unsigned top = 0;
        for (std::size_t i = cycle_start; i < visited.size(); ++i) top = std::max(top, automaton.color(visited[i]));
        return top % 2 == 0;
    }
    StateSet inf(visited.begin() + static_cast<std::ptrdiff_t>(cycle_start), visited.end());
    std::sort(inf.begin(), inf.end());
    inf.erase(std::unique(inf.begin(), inf.end()), inf.end());
    return automaton.in_family(inf);
}

OmegaAutomaton lar_convert(const OmegaAutomaton &muller)
{
    if (muller.acceptance() != AcceptanceKind::muller) throw InputError("lar_convert expects a Muller automaton");
    const std::size_t n = muller.state_count();
    const std::size_t letters = muller.letter_count();

    // A record lists the states most recent first; `hit` is the position the head came from.
    using Record = std::pair<std::vector<StateId>, std::uint32_t>;
    std::map<Record, StateId> index;
    std::vector<Record> records;
    auto intern = [&](Record r) {
        auto [it, fresh] = index.try_emplace(r, static_cast<StateId>(records.size()));
        if (fresh) records.push_back(std::move(r));
        return it->second;
    };

    std::vector<StateId> start{muller.initial()};
    for (StateId q = 0; q < n; ++q)
        if (q != muller.initial()) start.push_back(q);
    intern({start, 0});

    std::vector<StateId> delta;
    for (std::size_t cur = 0; cur < records.size(); ++cur) {
        for (std::size_t a = 0; a < letters; ++a) {
            const std::vector<StateId> perm = records[cur].first;
            StateId target = muller.next_unchecked(perm.front(), a);
            auto pos = std::find(perm.begin(), perm.end(), target);
            auto hit = static_cast<std::uint32_t>(pos - perm.begin());
            std::vector<StateId> moved;
            moved.reserve(n);
            moved.push_back(target);
            for (StateId q : perm)
                if (q != target) moved.push_back(q);
            StateId id = intern({std::move(moved), hit});
            delta.push_back(id);
        }
    }

    std::vector<std::string> names;
    std::vector<unsigned> colors;
    for (const auto &[perm, hit] : records) {
        std::string name = "lar(";
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (i) name += ',';
            name += muller.state_name(perm[i]);
        }
        name += ';' + std::to_string(hit) + ')';
        names.push_back(std::move(name));

        StateSet touched(perm.begin(), perm.begin() + hit + 1);
        std::sort(touched.begin(), touched.end());
        colors.push_back(muller.in_family(touched) ? 2 * hit + 2 : 2 * hit + 1);
    }

    return OmegaAutomaton::parity(muller.input_names(), muller.output_names(), std::move(names), 0,
                                  std::move(delta), std::move(colors));
}

} // namespace delaygame
