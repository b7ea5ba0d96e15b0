#include "hilfer/order.hpp"

#include <cmath>
#include <sstream>

#include "hilfer/error.hpp"

namespace hilfer {

FractionalOrder::FractionalOrder(double alpha, double beta)
    : alpha_(alpha), beta_(beta), gamma_(alpha + beta - alpha * beta) {
    if (!(alpha > 0.0 && alpha < 1.0) || !(beta >= 0.0 && beta <= 1.0)) {
        std::ostringstream os;
        os << "order requires 0 < alpha < 1 and 0 <= beta <= 1 (got alpha=" << alpha << ", beta=" << beta
           << ")";
        fail(ErrorCode::InvalidArgument, os.str());
    }
    // beta == 1 gives gamma == 1 exactly in floating point as well.
    if (beta == 1.0) gamma_ = 1.0;
}

}  // namespace hilfer
