#ifndef MULTIPOLY_FOURIER_MOTZKIN_HPP
#define MULTIPOLY_FOURIER_MOTZKIN_HPP

#include "multipoly/system.hpp"

namespace multipoly {

/// Projects `var` out of the system: every positive/negative row pairing plus
/// the rows not involving var. Output rows are canonically scaled and
/// deduplicated; trivially true rows (0 <= nonnegative) are discarded, but no
/// further redundancy elimination is attempted. An infeasibility witness
/// (0 <= negative) is kept.
InequalitySystem fourier_motzkin_eliminate(const InequalitySystem& system,
                                           const VariableId& var);

}  // namespace multipoly

#endif
