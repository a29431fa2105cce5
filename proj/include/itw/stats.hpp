#pragma once

#include <cmath>
#include <vector>

namespace itw {

struct MeanSe {
    double mean = 0;
    double se = 0;
};

/// Plain i.i.d. mean and standard error.
inline MeanSe mean_se(const std::vector<double>& values) {
    MeanSe out;
    if (values.empty()) return out;
    double sum = 0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(values.size());
    double ss = 0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    if (values.size() > 1)
        out.se = std::sqrt(ss / (static_cast<double>(values.size()) - 1.0) /
                           static_cast<double>(values.size()));
    return out;
}

/// Batch-means standard error for autocorrelated sequences (MCMC chains).
inline MeanSe batch_mean_se(const std::vector<double>& values, int batches = 40) {
    MeanSe out;
    const int n = static_cast<int>(values.size());
    if (n == 0) return out;
    batches = std::min(batches, n);
    const int per = n / batches;
    if (per < 1) return mean_se(values);
    std::vector<double> bm;
    bm.reserve(static_cast<size_t>(batches));
    double total = 0;
    for (int b = 0; b < batches; ++b) {
        double acc = 0;
        for (int k = 0; k < per; ++k) acc += values[static_cast<size_t>(b * per + k)];
        bm.push_back(acc / per);
        total += acc;
    }
    out.mean = total / static_cast<double>(batches * per);
    double ss = 0;
    for (double v : bm) ss += (v - out.mean) * (v - out.mean);
    out.se = std::sqrt(ss / (batches - 1.0) / batches);
    return out;
}

} // namespace itw
