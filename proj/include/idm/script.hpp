#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "idm/text.hpp"
#include "idm/types.hpp"

namespace idm {

class ScriptError : public std::runtime_error {
public:
    ScriptError(Index line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    Index line() const { return line_; }

private:
    Index line_;
};

struct Command {
    enum class Kind { Exists, Report, Distinct, Count, CountDistinctApprox, Insert, Delete, Rebuild };
    Kind kind;
    Index a = 0, b = 0;
    Index line = 0;
};

struct ScriptOptions {
    bool dynamic = false;
    Index epoch = 0;  // dynamic mode; 0 selects the default
    bool bench = false;
    bool bytes = true;  // render patterns as bytes, otherwise as "[1 2]"
};

/// Raw bytes with one trailing newline dropped, or whitespace-separated integers.
Text parse_text(const std::string& contents, bool integers);
/// One "start end" pair per line; blank lines are skipped.
std::vector<Fragment> parse_dictionary(std::istream& in);
std::vector<Command> parse_script(std::istream& in);

/// Executes the commands and writes one line per query. Throws ScriptError.
void run_script(const Text& text, const std::vector<Fragment>& dictionary, const std::vector<Command>& commands,
                const ScriptOptions& options, std::ostream& out);

}  // namespace idm
