#include "lipop/classify.hpp"

#include <algorithm>
#include <cmath>

namespace lipop {

Finiteness classify_finiteness(const std::vector<double>& s, const ClassifierParams& p) {
    if (s.empty()) return Finiteness::inconclusive;
    const std::size_t J = s.size();
    const double last = s[J - 1];
    if (std::isinf(last)) return Finiteness::infinite;
    if (last == 0.0) return Finiteness::finite;
    const double mid = s[J / 2 >= 1 ? J / 2 - 1 : 0];
    if (last <= (1.0 + p.rel_tol) * mid) return Finiteness::finite;
    const double ref = s[J >= 6 ? J - 6 : 0];
    if (ref == 0.0) return Finiteness::infinite;
    if (last >= p.growth_factor * ref) return Finiteness::infinite;
    return Finiteness::inconclusive;
}

Trend classify_decay(const std::vector<double>& d, double scale, const ClassifierParams& p) {
    if (d.empty()) return Trend::inconclusive;
    const std::size_t J = d.size();
    const double last = d[J - 1];
    if (std::isinf(last)) return Trend::plateaus;
    if (last <= p.abs_decay * (1.0 + scale)) return Trend::decays;
    const double ref = d[J >= 6 ? J - 6 : 0];
    if (ref > 0.0 && last <= p.decay_drop * ref) return Trend::decays;
    const double peak = *std::max_element(d.begin(), d.end());
    if (peak > 0.0 && last >= p.decay_drop * peak) return Trend::plateaus;
    return Trend::inconclusive;
}

const char* to_string(Finiteness f) {
    switch (f) {
        case Finiteness::finite: return "finite";
        case Finiteness::infinite: return "infinite";
        default: return "inconclusive";
    }
}

const char* to_string(Trend t) {
    switch (t) {
        case Trend::decays: return "decays";
        case Trend::plateaus: return "plateaus";
        default: return "inconclusive";
    }
}

} // namespace lipop
