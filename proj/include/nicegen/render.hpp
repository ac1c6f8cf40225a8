#ifndef NICEGEN_RENDER_HPP
#define NICEGEN_RENDER_HPP

#include <string>

#include "nicegen/bundle.hpp"
#include "nicegen/verify.hpp"

namespace nicegen {

struct RenderOptions {
    bool show_solution = false;
    bool show_trace = false;
    bool standalone = false;  // wrap LaTeX fragments in a minimal preamble
};

/// Compilable LaTeX fragment: bmatrix displays, augmented arrays with a
/// vertical rule, reductions as a chain of ~-related matrices. Byte-stable
/// for a given (bundle, options).
std::string to_latex(const ProblemBundle& bundle, const RenderOptions& options = {});

/// Fixed-width plain text, byte-stable.
std::string to_text(const ProblemBundle& bundle, const RenderOptions& options = {});

/// Lossless, field-order-stable JSON document ("nicegen/1" schema).
/// Rationals are encoded as plain integers when the denominator is 1 and as
/// "p/q" strings otherwise; matrices are arrays of row arrays.
std::string to_json(const ProblemBundle& bundle);

/// Inverse of to_json. Malformed documents and unknown schema versions raise
/// parse_error with a byte position.
ProblemBundle from_json(const std::string& text);

/// Batch forms: a document holding either one bundle object or an array of
/// them (what `gen --count K` emits for K > 1).
std::string to_json_many(const std::vector<ProblemBundle>& bundles);
std::vector<ProblemBundle> from_json_many(const std::string& text);

/// GenConfig as used in the bundle schema; for --config files.
GenConfig config_from_json_text(const std::string& text);

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);

}  // namespace nicegen

#endif
