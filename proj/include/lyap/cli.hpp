#pragma once

#include "lyap/stratum.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace lyap {
namespace cli {

enum class Format { text, json };

struct BoundCmd {
    std::vector<int> zeros;
    Component component = Component::unspecified;
    std::string mode = "generic"; // generic | non-hyp | hyp-exact
    std::vector<int> quadratic;   // required for hyp-exact; may replace zeros
    bool operator==(const BoundCmd&) const = default;
};

struct HypCmd {
    std::vector<int> quadratic;
    bool operator==(const HypCmd&) const = default;
};

struct CoverCmd {
    std::vector<int> quadratic;
    bool operator==(const CoverCmd&) const = default;
};

struct CyclicCmd {
    int n = 0;
    std::array<int, 4> powers{};
    bool operator==(const CyclicCmd&) const = default;
};

struct TableCmd {
    int genus = 0;
    bool operator==(const TableCmd&) const = default;
};

struct PartialCmd {
    std::vector<int> zeros;
    Component component = Component::unspecified;
    std::string mode = "generic";
    std::vector<int> quadratic;
    int k = 1;
    bool operator==(const PartialCmd&) const = default;
};

struct CheckCmd {
    bool operator==(const CheckCmd&) const = default;
};

struct Command {
    std::variant<BoundCmd, HypCmd, CoverCmd, CyclicCmd, TableCmd, PartialCmd, CheckCmd> payload;
    Format format = Format::text;
    bool operator==(const Command&) const = default;
};

// Thrown when --help is requested; carries the help text.
struct HelpRequested {
    std::string text;
};

// Parses argv (without the program name). Throws Error(UsageError) on
// malformed input; the caller maps that to exit code 2.
Command parse_args(const std::vector<std::string>& argv);

// Reconstructs an argv that parses back to the same command.
std::vector<std::string> render_args(const Command& cmd);

// Executes the command, writing the payload to `out`. Returns the exit
// code: 0 on success, 1 when `check` finds a failure.
int run(const Command& cmd, std::ostream& out);

} // namespace cli
} // namespace lyap
