#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hardy/blaschke.hpp"
#include "hardy/series.hpp"
#include "hardy/unwind.hpp"
#include "hardy/verify.hpp"
#include "hardy/weights.hpp"

// Text formats. Complex numbers are [re, im] pairs; coefficient lists are
// {"coeffs": [[re, im], ...]} with index = power of z. Parse failures throw
// ParseError.
namespace hardy::io {

std::string series_to_json(const Series& f);
/// Accepts any object with a "coeffs" member; entries may be [re, im] or plain reals.
Series series_from_json(std::string_view text);

/// {"family": ..., "params": {...}}
std::string weight_to_json(const WeightSequence& w);
WeightSequence weight_from_json(std::string_view text);

/// {"roots": [...nonzero roots...], "origin_multiplicity": m, "phase": phi}
std::string roots_to_json(const RootSet& roots, const std::vector<Complex>& near_boundary = {}, double phase = 0.0);
RootSet roots_from_json(std::string_view text);

/// Final stage under "coeffs" so the output reads back as a series, plus the
/// roots, all stages and the per-step quotients.
std::string chain_to_json(const DecompositionChain& chain);

std::string expansion_to_json(const UnwindingExpansion& e, bool include_series);
/// "depth,residual_h2" header, one row per depth.
std::string expansion_to_csv(const UnwindingExpansion& e);

/// One line, no trailing newline.
std::string report_to_json(const VerificationReport& r);

/// One real sample per line; blank lines and lines starting with '#' are skipped.
std::vector<double> signal_from_csv(std::string_view text);
std::string samples_to_csv(const std::vector<double>& samples);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace hardy::io
