#pragma once

#include <vector>

namespace multireduce {

// Labeled multiclass sample; labels are 1..k.
struct MulticlassSample {
    std::vector<std::vector<double>> xs;
    std::vector<int> ys;
    int num_classes = 0;

    std::size_t size() const { return xs.size(); }
    int dim() const { return xs.empty() ? 0 : static_cast<int>(xs[0].size()); }
};

}  // namespace multireduce
