#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace alignh {

// Exact nonnegative link weight. boost::rational keeps everything in lowest
// terms; products of desk-scale alignments stay far away from overflow.
using Weight = boost::rational<long long>;

inline Weight weight_zero() { return Weight(0); }
inline Weight weight_one() { return Weight(1); }

// "3/4", "2", "0" -> Weight. Rejects negatives, junk and zero denominators.
Weight parse_weight(const std::string& text);

// Canonical form: "num/den", den omitted when 1. parse(format(w)) == w.
std::string format_weight(const Weight& w);

}  // namespace alignh
