#ifndef ADNF_ADAPT_HPP
#define ADNF_ADAPT_HPP

#include <span>
#include <vector>

#include "adnf/types.hpp"

namespace adnf {

struct AdaptationRow {
    double entropy = 0.0;
    double delta_entropy = 0.0;
    double delta_v = 0.0;  // displacement since the last adaptation pass
    double delta_p = 0.0;  // last single-absorption displacement
    double fti = 0.0;
    double new_fuzziness = 0.0;
};

struct AdaptationReport {
    std::vector<AdaptationRow> rows;
    double median_fti = 0.0;
};

// Entropy over the logged history + sum of -u ln(u + eps), each term clamped
// at zero so that u = 1 entries contribute exactly 0 and the total is never
// negative. Empty history yields 0.
double cluster_entropy(const MicroCluster& cluster, const ADNFConfig& cfg);

// Entropy of a raw history span; shared by initialization, merging and
// splitting, which all recompute entropy from retained entries.
double history_entropy(std::span<const HistoryEntry> history, double numeric_eps);

// Fuzzy temporal index: FTI = dH / (||dv|| + ||dP|| + radius), where dH is the
// entropy change since the last adaptation pass, ||dv|| the displacement from
// the anchor centroid and ||dP|| the last single-step displacement. The radius
// keeps the denominator positive, so the index is always finite.
double compute_fti(const MicroCluster& cluster, const ADNFConfig& cfg);

// Retunes every cluster's fuzziness via the median-normalised FTI:
//   m_i = 1 + (m0 - 1) * max(FTI_i, 0) / median_j(FTI_j),
// clamped to (1, m_max]. A non-positive median resets all fuzziness to m0.
// Afterwards prev_entropy and anchor_centroid are advanced to the current
// values, so an immediate second pass sees FTI = 0 everywhere.
// Throws DataError on an empty model.
AdaptationReport tune_fuzziness(ModelState& state, const ADNFConfig& cfg);

}  // namespace adnf

#endif  // ADNF_ADAPT_HPP
