#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

namespace akad {

// One action per file, flat key=value lines ('#' starts a comment). The same
// structure backs every CLI subcommand, so scripted scenarios and direct
// invocations share one execution path.
struct Scenario {
    std::string action;  // verify | construct:<builder> | bounds |
                         // equivalences | demo-image | example
    std::map<std::string, std::string> params;

    bool has(const std::string& key) const { return params.count(key) != 0; }
    std::string get(const std::string& key, const std::string& fallback = "") const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::uint64_t get_seed() const;
};

Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_file(const std::string& path);

// Exit status contract: 0 all checks passed, 1 verification failure,
// 2 parse/input error, 3 hypothesis violation. The canonical JSON report is
// written to `out`; diagnostics go to `diag`.
int run_scenario(const Scenario& s, std::ostream& out, std::ostream& diag);

}  // namespace akad
