#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "k2l/minor_model.hpp"

namespace k2l {

using Report = std::vector<std::pair<std::string, std::string>>;

struct MinorFound {
  MinorModel model;
};

/// v < w, equal closed neighborhoods, both of degree 5.
struct TwinsFound {
  Vertex v;
  Vertex w;
};

struct Saturated {
  Report report;
};

struct Inconclusive {
  Report report;
};

using Witness = std::variant<MinorFound, TwinsFound, Saturated, Inconclusive>;

// Serialization: "MINOR" followed by the certificate, or "TWINS v w", or
// "SATURATED"/"INCONCLUSIVE" followed by "key: value" report lines.
void write_witness(std::ostream& out, const Witness& w);
std::string witness_to_string(const Witness& w);

}  // namespace k2l
