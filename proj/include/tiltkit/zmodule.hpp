// Ext and Tor for finitely generated abelian groups, computed from the
// two-term free resolution a group's invariant factors present.
#pragma once

#include "tiltkit/abelian.hpp"

namespace tiltkit {

// Direct sum of `copies` copies, coordinates blocked per copy. The result
// keeps the repeated factors (it is a valid presentation, not canonical).
AbGroup power_group(const AbGroup& g, int copies);

ZMat zkron(const ZMat& a, const ZMat& b);

// ext/tor over the integers; degree 0 gives hom and tensor, everything
// beyond degree 1 vanishes.
AbGroup z_ext(const AbGroup& m, const AbGroup& n, int degree);
AbGroup z_tor(const AbGroup& m, const AbGroup& n, int degree);

}  // namespace tiltkit
