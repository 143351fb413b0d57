#ifndef DIVTOP_COMMANDS_HPP
#define DIVTOP_COMMANDS_HPP

#include <string>
#include <vector>

#include "divtop/divisor_complexes.hpp"

namespace divtop {

/**
 * Rendered output of one CLI command plus its exit code:
 *   0  every theorem check passed
 *   1  a theorem check failed (a bug detector: the theorems hold)
 *   2  input error
 * Output is byte-deterministic for identical inputs and flags.
 */
struct CommandResult {
    std::string output;
    int exit_code = 0;
};

struct AnalyzeOptions {
    bool json = false;
    /** Analyze each connected component of G(X) as its own instance. */
    bool per_component = false;
};

/** Full pipeline report: complexes, H1, eta checks, isomorphism, P_k. */
CommandResult cmd_analyze(const IntegerSet& x, const AnalyzeOptions& options = {});

/**
 * Maps a loop through eta_* (or its inverse), prints the image and the
 * round trip, and compares H1 classes of the original and the round trip.
 */
struct MapLoopOptions {
    std::vector<Label> loop;
    bool inverse = false;
    bool json = false;
};

CommandResult cmd_map_loop(const IntegerSet& x, const MapLoopOptions& options);

/** The section 5 arithmetic: P_k, dimension identity, rank bound. */
CommandResult cmd_pk(const IntegerSet& x, bool json = false);

enum class ExportComplex { Common, Prime };
enum class ExportFormat { Dot, Json };

CommandResult cmd_export(const IntegerSet& x, ExportComplex which, ExportFormat format);

} // namespace divtop

#endif
