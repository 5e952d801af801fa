#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace spantree {

// Spanning-tree and subtree counts outgrow 64 bits quickly (the star on n
// vertices alone has 2^(n-1) + n - 1 subtrees).
using BigInt = boost::multiprecision::cpp_int;

}  // namespace spantree
