#ifndef ORBIHOM_DESCRIPTOR_HPP
#define ORBIHOM_DESCRIPTOR_HPP

#include "orbihom/orbmodel.hpp"

#include <string_view>

namespace orbihom {

/// disc2(n) | ball3(a,b,c) | ball3cyclic(n) | surface(g,b[;m1,...,mr])
/// followed by any number of " x torus(k)". Syntax errors throw
/// Error(Input) with a 1-based column; range checks are left to the model
/// builders.
OrbifoldDesc parse_descriptor(std::string_view text);

} // namespace orbihom

#endif
