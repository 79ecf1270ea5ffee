#ifndef REEBFORGE_RESULTANT_HPP
#define REEBFORGE_RESULTANT_HPP

#include "multipoly.hpp"

namespace reebforge {

// Res_y(p, r) for bivariate p, r, as a univariate polynomial in x, via a
// subresultant remainder sequence over Z[x]. Identically zero iff the inputs
// share a factor of positive y-degree.
UniPoly resultant_wrt_second(const MultiPoly& p, const MultiPoly& r);

// Res_x(p, r) as a polynomial in y.
UniPoly resultant_wrt_first(const MultiPoly& p, const MultiPoly& r);

}  // namespace reebforge

#endif
