#ifndef POSLAB_REPORT_HPP
#define POSLAB_REPORT_HPP

#include "poslab/montecarlo.hpp"
#include "poslab/rational.hpp"

#include <string>
#include <vector>

namespace poslab {

// Byte-stable renderers: fixed 6-decimal half-even formatting, LF endings,
// no timestamps.

std::string table_csv(const std::vector<ProbTableRow>& rows);
std::string table_text(const std::vector<ProbTableRow>& rows);
std::string table_json(const std::vector<ProbTableRow>& rows);

std::string plot_csv(const std::vector<ProbTableRow>& rows);

std::string estimate_json(const Estimate& e);
std::string estimate_text(const Estimate& e);

/// Parses estimate_json output back into an Estimate (exact round trip).
Estimate estimate_from_json(const std::string& text);

std::string duality_json(const DualityReport& r);
std::string duality_text(const DualityReport& r);

}  // namespace poslab

#endif
