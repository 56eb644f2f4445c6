#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace cgpot {

/// Software floating point with runtime-configurable precision; the scalar
/// behind every "Extended" computation.
using BigFloat = boost::multiprecision::mpfr_float;

/// Scoped default precision in decimal digits for newly constructed BigFloats.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits10)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(digits10);
    }
    ~PrecisionScope() { BigFloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

} // namespace cgpot
