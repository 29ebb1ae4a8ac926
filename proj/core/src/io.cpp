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

#include "delaygame/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace delaygame {

namespace {

using json = nlohmann::json;

std::vector<std::string> tokens_of(const std::string &line)
{
    std::istringstream in(line.substr(0, line.find('#')));
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(std::move(t));
    return out;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

unsigned parse_nat(const std::string &s, std::size_t line)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
        throw FormatError(line, "expected a natural number, got '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
}

struct Draft {
    std::vector<std::string> inputs, outputs, states;
    std::map<std::string, std::size_t> input_ix, output_ix, state_ix;
    std::optional<std::string> initial;
    std::size_t initial_line = 0;
};

void declare(std::vector<std::string> &names, std::map<std::string, std::size_t> &index,
             const std::vector<std::string> &tok, std::size_t line)
{
    if (!names.empty()) throw FormatError(line, "'" + tok[0] + "' given twice");
    if (tok.size() < 2) throw FormatError(line, "'" + tok[0] + "' needs at least one name");
    for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!index.try_emplace(tok[i], names.size()).second)
            throw FormatError(line, "duplicate name '" + tok[i] + "'");
        names.push_back(tok[i]);
    }
}

std::size_t lookup(const std::map<std::string, std::size_t> &index, const std::string &name, std::size_t line,
                   const std::string &what)
{
    auto it = index.find(name);
    if (it == index.end()) throw FormatError(line, "unknown " + what + " '" + name + "'");
    return it->second;
}

} // namespace

OmegaAutomaton read_automaton(const std::string &text)
{
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    std::optional<AcceptanceKind> kind;
    Draft draft;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> body;

    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto tok = tokens_of(raw);
        if (tok.empty()) continue;
        if (!kind) {
            if (tok.size() != 2 || tok[0] != "automaton" || (tok[1] != "parity" && tok[1] != "muller"))
                throw FormatError(line, "expected 'automaton parity' or 'automaton muller'");
            kind = tok[1] == "parity" ? AcceptanceKind::parity : AcceptanceKind::muller;
            continue;
        }
        const std::string &key = tok[0];
        if (key == "input") {
            declare(draft.inputs, draft.input_ix, tok, line);
        } else if (key == "output") {
            declare(draft.outputs, draft.output_ix, tok, line);
        } else if (key == "states") {
            declare(draft.states, draft.state_ix, tok, line);
        } else if (key == "initial") {
            if (draft.initial) throw FormatError(line, "'initial' given twice");
            if (tok.size() != 2) throw FormatError(line, "'initial' takes one state");
            draft.initial = tok[1];
            draft.initial_line = line;
        } else if (key == "color" || key == "accset" || key == "trans") {
            body.emplace_back(line, std::move(tok));
        } else {
            throw FormatError(line, "unknown directive '" + key + "'");
        }
    }
    if (!kind) throw FormatError(line, "empty automaton file");
    if (draft.inputs.empty()) throw FormatError(line, "missing 'input' line");
    if (draft.outputs.empty()) throw FormatError(line, "missing 'output' line");
    if (draft.states.empty()) throw FormatError(line, "missing 'states' line");
    if (!draft.initial) throw FormatError(line, "missing 'initial' line");
    for (const auto *names : {&draft.inputs, &draft.outputs})
        for (const auto &n : *names)
            if (n.find('/') != std::string::npos) throw FormatError(line, "symbol '" + n + "' contains '/'");

    const std::size_t n = draft.states.size();
    const std::size_t outs = draft.outputs.size();
    const std::size_t letters = draft.inputs.size() * outs;
    const auto initial = static_cast<StateId>(lookup(draft.state_ix, *draft.initial, draft.initial_line, "state"));
    std::vector<std::optional<unsigned>> colors(n);
    std::vector<StateSet> family;
    std::vector<std::optional<StateId>> delta(n * letters);

    for (const auto &[at, tok] : body) {
        if (tok[0] == "color") {
            if (*kind != AcceptanceKind::parity) throw FormatError(at, "'color' in a Muller automaton");
            if (tok.size() != 3) throw FormatError(at, "'color' takes a state and a number");
            const std::size_t q = lookup(draft.state_ix, tok[1], at, "state");
            if (colors[q]) throw FormatError(at, "second color for state '" + tok[1] + "'");
            colors[q] = parse_nat(tok[2], at);
        } else if (tok[0] == "accset") {
            if (*kind != AcceptanceKind::muller) throw FormatError(at, "'accset' in a parity automaton");
            StateSet set;
            for (std::size_t i = 1; i < tok.size(); ++i)
                set.push_back(static_cast<StateId>(lookup(draft.state_ix, tok[i], at, "state")));
            family.push_back(std::move(set));
        } else {
            if (tok.size() != 4) throw FormatError(at, "'trans' takes a state, a letter in/out and a state");
            const auto slash = tok[2].find('/');
            if (slash == std::string::npos) throw FormatError(at, "letter '" + tok[2] + "' is not of the form in/out");
            const std::size_t q = lookup(draft.state_ix, tok[1], at, "state");
            const std::size_t a = lookup(draft.input_ix, tok[2].substr(0, slash), at, "input");
            const std::size_t b = lookup(draft.output_ix, tok[2].substr(slash + 1), at, "output");
            const std::size_t to = lookup(draft.state_ix, tok[3], at, "state");
            auto &slot = delta[q * letters + a * outs + b];
            if (slot) throw FormatError(at, "second transition for (" + tok[1] + ", " + tok[2] + ")");
            slot = static_cast<StateId>(to);
        }
    }

    std::vector<StateId> table(delta.size());
    for (std::size_t i = 0; i < delta.size(); ++i) {
        if (!delta[i]) {
            const std::size_t q = i / letters, a = (i % letters) / outs, b = i % outs;
            throw FormatError(line, "missing transition for (" + draft.states[q] + ", " + draft.inputs[a] + ", " +
                                        draft.outputs[b] + ")");
        }
        table[i] = *delta[i];
    }
    if (*kind == AcceptanceKind::muller)
        return OmegaAutomaton::muller(draft.inputs, draft.outputs, draft.states, initial, std::move(table),
                                      std::move(family));
    std::vector<unsigned> plain(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (!colors[q]) throw FormatError(line, "missing color for state '" + draft.states[q] + "'");
        plain[q] = *colors[q];
    }
    return OmegaAutomaton::parity(draft.inputs, draft.outputs, draft.states, initial, std::move(table),
                                  std::move(plain));
}

OmegaAutomaton load_automaton(const std::string &path) { return read_automaton(read_file(path)); }

std::string write_automaton(const OmegaAutomaton &a)
{
    std::ostringstream out;
    auto list = [&](const char *key, const std::vector<std::string> &names) {
        out << key;
        for (const auto &n : names) out << ' ' << n;
        out << '\n';
    };
    out << "automaton " << (a.is_parity() ? "parity" : "muller") << '\n';
    list("input", a.input_names());
    list("output", a.output_names());
    list("states", a.state_names());
    out << "initial " << a.state_name(a.initial()) << '\n';
    if (a.is_parity()) {
        for (StateId q = 0; q < a.state_count(); ++q) out << "color " << a.state_name(q) << ' ' << a.color(q) << '\n';
    } else {
        for (const auto &set : a.family()) {
            out << "accset";
            for (StateId q : set) out << ' ' << a.state_name(q);
            out << '\n';
        }
    }
    for (StateId q = 0; q < a.state_count(); ++q)
        for (std::size_t l = 0; l < a.letter_count(); ++l) {
            const Letter x = a.letter_at(l);
            out << "trans " << a.state_name(q) << ' ' << a.input_name(x.in) << '/' << a.output_name(x.out) << ' '
                << a.state_name(a.next_unchecked(q, l)) << '\n';
        }
    return out.str();
}

std::string bundle_kind_name(BundleKind kind)
{
    switch (kind) {
    case BundleKind::block_bundle: return "block-bundle";
    case BundleKind::delay_transducer: return "delay-transducer";
    case BundleKind::gs_transducer: return "gs-transducer";
    }
    return "unknown";
}

namespace {

json memory_json(Memory m) { return m == kBottom ? json(nullptr) : json(m); }

json automaton_json(const OmegaAutomaton &a)
{
    json j;
    j["acceptance"] = a.is_parity() ? "parity" : "muller";
    j["inputs"] = a.input_names();
    j["outputs"] = a.output_names();
    j["states"] = a.state_names();
    j["initial"] = a.state_name(a.initial());
    if (a.is_parity()) {
        j["colors"] = a.colors();
    } else {
        json fam = json::array();
        for (const auto &set : a.family()) fam.push_back(set);
        j["accsets"] = fam;
    }
    j["delta"] = a.delta();
    return j;
}

json table_json(const ClassTable &t)
{
    json classes = json::array();
    for (const SummaryClass &c : t.classes()) {
        json summary = json::array();
        for (const SummarySet &set : c.summary) {
            json pairs = json::array();
            for (const ProductState &s : set) pairs.push_back(json::array({s.q, memory_json(s.m)}));
            summary.push_back(pairs);
        }
        classes.push_back({{"representative", c.representative},
                           {"successors", c.successors},
                           {"infinite", c.infinite},
                           {"summary", summary}});
    }
    return {{"memory", t.memory_size()}, {"roots", t.roots()}, {"classes", classes}};
}

json gs_json(const GSTransducer &t)
{
    json delta = json::array();
    json lambda = json::array();
    for (std::uint32_t s = 0; s < t.state_count(); ++s) {
        json row = json::array();
        for (std::uint32_t c = 0; c < t.input_count; ++c) row.push_back(t.next(s, c));
        delta.push_back(row);
        const ProductState out = t.output(s);
        lambda.push_back(json::array({out.q, memory_json(out.m)}));
    }
    return {{"states", t.state_count()}, {"inputs", t.input_count}, {"initial", t.initial},
            {"delta", delta}, {"lambda", lambda}};
}

json delay_json(const DelayObliviousTransducer &t)
{
    json delta = json::array();
    const std::size_t n = *t.state_count();
    for (std::size_t s = 0; s < n; ++s) {
        json row = json::array();
        for (Symbol a = 0; a < t.input_count(); ++a) row.push_back(t.next(s, a));
        delta.push_back(row);
    }
    return {{"states", n}, {"inputs", t.input_count()}, {"outputs", t.output_count()}, {"initial", t.initial()},
            {"delta", delta}, {"lambda", t.lambda()}};
}

OmegaAutomaton automaton_from(const json &j)
{
    const auto inputs = j.at("inputs").get<std::vector<std::string>>();
    const auto outputs = j.at("outputs").get<std::vector<std::string>>();
    const auto states = j.at("states").get<std::vector<std::string>>();
    const auto init = j.at("initial").get<std::string>();
    const auto delta = j.at("delta").get<std::vector<StateId>>();
    StateId initial = 0;
    while (initial < states.size() && states[initial] != init) ++initial;
    if (initial == states.size()) throw FormatError(0, "unknown initial state '" + init + "'");
    const auto acc = j.at("acceptance").get<std::string>();
    if (acc == "parity")
        return OmegaAutomaton::parity(inputs, outputs, states, initial, delta,
                                      j.at("colors").get<std::vector<unsigned>>());
    if (acc == "muller")
        return OmegaAutomaton::muller(inputs, outputs, states, initial, delta,
                                      j.at("accsets").get<std::vector<StateSet>>());
    throw FormatError(0, "unknown acceptance '" + acc + "'");
}

ProductState product_state_from(const json &j)
{
    if (!j.is_array() || j.size() != 2) throw FormatError(0, "expected a [state, memory] pair");
    return {j[0].get<StateId>(), j[1].is_null() ? kBottom : j[1].get<Memory>()};
}

ClassTable table_from(const json &j, const OmegaAutomaton &a)
{
    std::vector<SummaryClass> classes;
    for (const json &c : j.at("classes")) {
        SummaryClass sc;
        sc.representative = c.at("representative").get<std::vector<Symbol>>();
        sc.successors = c.at("successors").get<std::vector<ClassId>>();
        sc.infinite = c.at("infinite").get<bool>();
        for (const json &set : c.at("summary")) {
            SummarySet s;
            for (const json &p : set) s.push_back(product_state_from(p));
            sc.summary.push_back(std::move(s));
        }
        classes.push_back(std::move(sc));
    }
    std::vector<bool> flags;
    for (const auto &c : classes) flags.push_back(c.infinite);
    ClassTable table(std::move(classes), j.at("roots").get<std::vector<ClassId>>(), a.input_count(), a.state_count(),
                     j.at("memory").get<std::size_t>());
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (table.at(static_cast<ClassId>(i)).infinite != flags[i])
            throw FormatError(0, "infinite flag of class " + std::to_string(i) + " is inconsistent");
    return table;
}

GSTransducer gs_from(const json &j)
{
    GSTransducer t;
    t.input_count = j.at("inputs").get<std::size_t>();
    t.initial = j.at("initial").get<std::uint32_t>();
    const auto states = j.at("states").get<std::size_t>();
    const json &delta = j.at("delta");
    const json &lambda = j.at("lambda");
    if (delta.size() != states || lambda.size() != states) throw FormatError(0, "transducer tables have wrong size");
    for (const json &row : delta) {
        if (row.size() != t.input_count) throw FormatError(0, "transducer row has the wrong width");
        for (const json &x : row) {
            const auto target = x.get<std::uint32_t>();
            if (target >= states) throw FormatError(0, "transducer target out of range");
            t.delta.push_back(target);
        }
    }
    for (const json &out : lambda) t.lambda.push_back(product_state_from(out));
    if (t.initial >= states) throw FormatError(0, "transducer initial state out of range");
    return t;
}

DelayObliviousTransducer delay_from(const json &j, std::size_t lookahead)
{
    const auto inputs = j.at("inputs").get<std::size_t>();
    std::vector<std::uint32_t> delta;
    for (const json &row : j.at("delta")) {
        if (row.size() != inputs) throw FormatError(0, "transducer row has the wrong width");
        for (const json &x : row) delta.push_back(x.get<std::uint32_t>());
    }
    return DelayObliviousTransducer(inputs, j.at("outputs").get<std::size_t>(), lookahead,
                                    j.at("initial").get<std::uint32_t>(), std::move(delta),
                                    j.at("lambda").get<std::vector<Symbol>>());
}

} // namespace

std::string write_bundle(const StrategyFile &file)
{
    json j;
    j["kind"] = bundle_kind_name(file.kind);
    j["blockLength"] = file.block_length;
    j["automaton"] = automaton_json(file.automaton);
    if (file.kind == BundleKind::delay_transducer) {
        if (!file.delay) throw InputError("delay bundle without a transducer");
        j["transducer"] = delay_json(*file.delay);
    } else {
        if (!file.table || !file.transducer) throw InputError("bundle without class table or transducer");
        j["classTable"] = table_json(*file.table);
        j["transducer"] = gs_json(*file.transducer);
    }
    return j.dump(2) + "\n";
}

StrategyFile read_bundle(const std::string &text)
{
    try {
        const json j = json::parse(text);
        const auto kind_name = j.at("kind").get<std::string>();
        BundleKind kind;
        if (kind_name == "block-bundle") kind = BundleKind::block_bundle;
        else if (kind_name == "delay-transducer") kind = BundleKind::delay_transducer;
        else if (kind_name == "gs-transducer") kind = BundleKind::gs_transducer;
        else throw FormatError(0, "unknown bundle kind '" + kind_name + "'");
        StrategyFile file{.kind = kind,
                          .block_length = j.at("blockLength").get<std::size_t>(),
                          .automaton = automaton_from(j.at("automaton")),
                          .table = std::nullopt,
                          .transducer = std::nullopt,
                          .delay = std::nullopt};
        if (kind == BundleKind::delay_transducer) {
            file.delay.emplace(delay_from(j.at("transducer"), file.block_length));
            if (file.delay->input_count() != file.automaton.input_count() ||
                file.delay->output_count() != file.automaton.output_count())
                throw FormatError(0, "transducer alphabets do not match the automaton");
        } else {
            file.table.emplace(table_from(j.at("classTable"), file.automaton));
            file.transducer = gs_from(j.at("transducer"));
            if (file.transducer->input_count != file.table->infinite_classes().size())
                throw FormatError(0, "transducer inputs do not match the infinite classes");
        }
        return file;
    } catch (const json::exception &e) {
        throw FormatError(0, std::string("malformed bundle: ") + e.what());
    } catch (const InputError &e) {
        throw FormatError(0, std::string("inconsistent bundle: ") + e.what());
    }
}

StrategyFile load_bundle(const std::string &path) { return read_bundle(read_file(path)); }

BlockStrategyBundle bundle_strategy(const StrategyFile &file)
{
    if (file.kind == BundleKind::delay_transducer) throw InputError("bundle holds a delay transducer");
    if (!file.automaton.is_parity()) throw InputError("bundle automaton must be a parity automaton");
    const AggregationScheme scheme = parity_scheme(file.automaton);
    return BlockStrategyBundle(*file.transducer, *file.table, product_with_monitor(file.automaton, scheme.monitor),
                               file.block_length);
}

} // namespace delaygame
