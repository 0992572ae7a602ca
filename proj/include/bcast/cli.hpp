#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace bcast {

struct Command {
    std::string verb;  // gen | reduce | solve | center | verify | oracle, or "help"
    std::map<std::string, std::string> options;

    bool has(const std::string& key) const { return options.contains(key); }
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
};

// argv without the program name. Throws UsageError naming the bad token.
Command parse_command(const std::vector<std::string>& args);

// Runs a parsed command. Domain errors propagate as bcast::Error.
void execute(const Command& cmd, std::ostream& out);

// parse + execute with the exit-status convention: 0 ok, 1 domain error,
// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "30s", "250ms", "2m", "1h" or a bare number of seconds.
long long parse_duration_ms(const std::string& text);

}  // namespace bcast
