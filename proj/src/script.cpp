#include "idm/script.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <iomanip>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "idm/dynamic.hpp"
#include "idm/engine.hpp"

namespace idm {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    return words;
}

Index parse_index(const std::string& word, Index line) {
    Index value = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size()) throw ScriptError(line, "not an integer: '" + word + "'");
    return value;
}

const std::map<std::string, Command::Kind, std::less<>> kCommands{
    {"EXISTS", Command::Kind::Exists},   {"REPORT", Command::Kind::Report},
    {"DISTINCT", Command::Kind::Distinct}, {"COUNT", Command::Kind::Count},
    {"CDAPPROX", Command::Kind::CountDistinctApprox}, {"INSERT", Command::Kind::Insert},
    {"DELETE", Command::Kind::Delete},   {"REBUILD", Command::Kind::Rebuild},
};

const char* name(Command::Kind kind) {
    for (const auto& [word, k] : kCommands) {
        if (k == kind) return word.c_str();
    }
    return "?";
}

bool is_update(Command::Kind kind) {
    return kind == Command::Kind::Insert || kind == Command::Kind::Delete || kind == Command::Kind::Rebuild;
}

struct Timing {
    Count calls = 0;
    double total_us = 0, max_us = 0;
    Count output = 0;
};

}  // namespace

Text parse_text(const std::string& contents, bool integers) {
    if (integers) return Text::from_integers(contents);
    std::string_view s = contents;
    if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return Text::from_string(s);
}

std::vector<Fragment> parse_dictionary(std::istream& in) {
    std::vector<Fragment> out;
    Index line = 0;
    for (std::string text; std::getline(in, text);) {
        ++line;
        const auto words = split(text);
        if (words.empty()) continue;
        if (words.size() != 2) throw ScriptError(line, "dictionary lines are 'start end'");
        out.push_back({parse_index(words[0], line), parse_index(words[1], line)});
    }
    return out;
}

std::vector<Command> parse_script(std::istream& in) {
    std::vector<Command> out;
    Index line = 0;
    for (std::string text; std::getline(in, text);) {
        ++line;
        const auto words = split(text);
        if (words.empty()) continue;
        const auto it = kCommands.find(words[0]);
        if (it == kCommands.end()) throw ScriptError(line, "unknown command '" + words[0] + "'");
        Command c{it->second, 0, 0, line};
        const std::size_t args = c.kind == Command::Kind::Rebuild ? 0 : 2;
        if (words.size() != args + 1) {
            throw ScriptError(line, words[0] + " takes " + std::to_string(args) + " arguments");
        }
        if (args) {
            c.a = parse_index(words[1], line);
            c.b = parse_index(words[2], line);
        }
        out.push_back(c);
    }
    return out;
}

void run_script(const Text& text, const std::vector<Fragment>& dictionary, const std::vector<Command>& commands,
                const ScriptOptions& options, std::ostream& out) {
    using Clock = std::chrono::steady_clock;
    auto needs = [&](Command::Kind kind) {
        return std::any_of(commands.begin(), commands.end(), [&](const Command& c) { return c.kind == kind; });
    };
    if (!options.dynamic) {
        for (const Command& c : commands) {
            if (is_update(c.kind)) throw ScriptError(c.line, std::string(name(c.kind)) + " requires --dynamic");
        }
    }

    const auto build_start = Clock::now();
    std::unique_ptr<TextContext> context;
    std::unique_ptr<StaticEngine> engine;
    std::unique_ptr<DynamicEngine> dynamic;
    try {
        if (text.size() == 0) throw std::invalid_argument("empty text");
        context = std::make_unique<TextContext>(text);
        if (options.dynamic) {
            dynamic = std::make_unique<DynamicEngine>(*context, dictionary, options.epoch);
        } else {
            EngineOptions parts;
            parts.occurrences = needs(Command::Kind::Exists) || needs(Command::Kind::Report);
            parts.distinct = needs(Command::Kind::Distinct);
            parts.count = needs(Command::Kind::Count);
            parts.distinct_approx = needs(Command::Kind::CountDistinctApprox);
            engine = std::make_unique<StaticEngine>(*context, dictionary, parts);
        }
    } catch (const std::exception& e) {
        throw ScriptError(0, e.what());
    }
    const double build_ms = std::chrono::duration<double, std::milli>(Clock::now() - build_start).count();

    auto render = [&](Fragment f) { return render_letters(context->text().substring(f), options.bytes); };

    std::map<Command::Kind, Timing> timings;
    std::vector<Occurrence> occ;
    std::vector<Index> ids;
    std::vector<DynamicEngine::KeyedOccurrence> keyed;
    std::vector<DynamicEngine::Key> keys;
    std::ostringstream line;
    for (const Command& c : commands) {
        line.str("");
        Count size = 0;
        const auto start = Clock::now();
        try {
            switch (c.kind) {
                case Command::Kind::Exists:
                    line << ((dynamic ? dynamic->exists(c.a, c.b) : engine->exists(c.a, c.b)) ? "true" : "false");
                    break;
                case Command::Kind::Report:
                    if (dynamic) {
                        keyed.clear();
                        dynamic->report(c.a, c.b, keyed);
                        for (const auto& o : keyed) line << '(' << o.start << ',' << render(o.pattern.fragment()) << ')';
                        size = static_cast<Count>(keyed.size());
                    } else {
                        occ.clear();
                        engine->report(c.a, c.b, occ);
                        for (const auto& o : occ) {
                            line << '(' << o.start << ',' << render(engine->dictionary().fragment(o.pattern)) << ')';
                        }
                        size = static_cast<Count>(occ.size());
                    }
                    break;
                case Command::Kind::Distinct:
                    if (dynamic) {
                        keys.clear();
                        dynamic->report_distinct(c.a, c.b, keys);
                        for (std::size_t k = 0; k < keys.size(); ++k) line << (k ? " " : "") << render(keys[k].fragment());
                        size = static_cast<Count>(keys.size());
                    } else {
                        ids.clear();
                        engine->report_distinct(c.a, c.b, ids);
                        for (std::size_t k = 0; k < ids.size(); ++k) {
                            line << (k ? " " : "") << render(engine->dictionary().fragment(ids[k]));
                        }
                        size = static_cast<Count>(ids.size());
                    }
                    break;
                case Command::Kind::Count:
                    line << (dynamic ? dynamic->count(c.a, c.b) : engine->count(c.a, c.b));
                    break;
                case Command::Kind::CountDistinctApprox:
                    if (dynamic) {
                        // exact in dynamic mode
                        keys.clear();
                        dynamic->report_distinct(c.a, c.b, keys);
                        line << keys.size();
                    } else {
                        line << engine->count_distinct_approx(c.a, c.b).value;
                    }
                    break;
                case Command::Kind::Insert:
                    dynamic->insert({c.a, c.b});
                    break;
                case Command::Kind::Delete:
                    dynamic->erase({c.a, c.b});
                    break;
                case Command::Kind::Rebuild:
                    dynamic->rebuild();
                    break;
            }
        } catch (const std::exception& e) {
            throw ScriptError(c.line, e.what());
        }
        const double us = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
        Timing& t = timings[c.kind];
        ++t.calls;
        t.total_us += us;
        t.max_us = std::max(t.max_us, us);
        t.output += size;
        if (!is_update(c.kind)) out << line.str() << '\n';
    }

    if (options.bench) {
        out << std::fixed << std::setprecision(3);
        out << "# bench build_ms=" << build_ms << " n=" << text.size() << " d=" << dictionary.size() << '\n';
        for (const auto& [kind, t] : timings) {
            out << "# bench " << name(kind) << " calls=" << t.calls << " mean_us=" << t.total_us / t.calls
                << " max_us=" << t.max_us << " output=" << t.output << '\n';
        }
    }
}

}  // namespace idm
