#include "chordsieve/value_domain.hpp"

#include <fmt/format.h>

namespace chordsieve {

// Shortest round-trip representation; locale independent.
std::string ValueTraits<double>::to_string(double v) { return fmt::format("{}", v); }

}  // namespace chordsieve
