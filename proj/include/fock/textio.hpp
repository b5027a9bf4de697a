#pragma once

#include <string>
#include <vector>

#include "fock/multipartition.hpp"
#include "fock/types.hpp"

namespace fock {

// Text grammar (bit-exact): components joined by '|'; a component is '-' or
// parts joined by '.', each part P or P^K; then '@' and comma-separated
// charges.  Whitespace is allowed around '@' only.
// Example: 4.2^2.1^3|5.2^3.1^4|7^2.6.4^2.2^2.1^3 @ 0,9,5
ChargedMultipartition parse_charged(const std::string& text);

std::string format(const ChargedMultipartition& m);
std::string format(const Multicharge& s);
std::string format(const Partition& p);
std::string format(const Node& node);

} // namespace fock
