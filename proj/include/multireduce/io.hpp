#pragma once

#include <iosfwd>
#include <string>

#include "multireduce/halfspace.hpp"
#include "multireduce/reducers.hpp"
#include "multireduce/sample.hpp"

namespace multireduce::io {

// CSV with header x1,...,xd,y; labels 1..k for multiclass, -1/+1 for binary.
void write_sample_csv(std::ostream& os, const MulticlassSample& sample);
MulticlassSample read_sample_csv(std::istream& is);
void write_binary_csv(std::ostream& os, const halfspace::BinarySample& sample);
halfspace::BinarySample read_binary_csv(std::istream& is);

// Plain-text model container: a header line with the model kind and shape,
// then weight rows (msvm), the code plus column classifiers (ecoc), or the
// tree in preorder with per-node classifiers (tree).
void write_model(std::ostream& os, const reducers::MulticlassModel& model);
reducers::MulticlassModel read_model(std::istream& is);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace multireduce::io
