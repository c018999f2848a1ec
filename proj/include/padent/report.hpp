#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "padent/json_io.hpp"
#include "padent/oracle.hpp"

namespace padent {

enum class Command { Entropy, Scale, Newton, Oracle, CheckAt, Classify, Heisenberg };
enum class OutputFormat { Json, Text };

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view name);

struct ComputationRequest {
    Command command = Command::Entropy;
    io::Json payload = io::Json::object();
    std::size_t window = kDefaultWindow;
    std::size_t cap = kDefaultCap;
    OutputFormat format = OutputFormat::Json;
};

// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitParse = 2, kExitValidation = 3, kExitStabilization = 4 };

// Dispatches to the owning module and returns the report document. Exact
// fields are authoritative; "approx_nats" fields are derived. Throws
// ParseError, ValidationError or StabilizationError.
io::Json run(const ComputationRequest& request);

struct Outcome {
    int exit_code = kExitOk;
    io::Json report; // either the report or {"error": {...}}
};

// run() with errors mapped to a structured error document and exit code.
Outcome execute(const ComputationRequest& request);

std::string render(const io::Json& report, OutputFormat format);

} // namespace padent
