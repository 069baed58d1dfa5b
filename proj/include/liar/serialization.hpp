#pragma once

#include "liar/config.hpp"
#include "liar/evolution.hpp"
#include "liar/inference.hpp"
#include "liar/state_space.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace liar {

// {"m":3,"referent":[2,3,1],"negating":[true,false,false]}
std::string config_to_json(const Configuration& config);
/// Parses and validates. Throws Error{ParseError} or the validation error.
Configuration config_from_json(const std::string& text);

// [{"step":1,"sentence":1,"value":"T"}, ...]
std::string cycle_to_json(const ReasoningCycle& cycle);

// {"m":..,"n":..,"terms":[{"tuple":[..],"embedded":"<decimal>","re":..,"im":..}]}
std::string state_to_json(const SparseState& state, int indent = 2);
/// Checks every "embedded" string against kappa(tuple). Throws Error{ParseError}.
SparseState state_from_json(const std::string& text);

/// Significant digits for trace output: 12 unless LIARSIM_PRECISION holds 1..17.
int trace_precision();

/// `t,sentence,p_true,p_false` rows; each `comments` entry becomes a leading "# key=value" line.
void write_trace_csv(std::ostream& out, std::span<const TraceRow> rows,
                     std::span<const std::pair<std::string, std::string>> comments = {},
                     int precision = trace_precision());
void write_trace_json(std::ostream& out, std::span<const TraceRow> rows, int precision = trace_precision());

/// Gnuplot script plotting p_true/p_false per sentence from `csv_path`.
std::string gnuplot_script(const std::string& csv_path, std::span<const int> sentences, double time_scale);

} // namespace liar
