#ifndef SATAKE_WORKED_EXAMPLES_HPP
#define SATAKE_WORKED_EXAMPLES_HPP

#include "satake/json_io.hpp"

namespace satake {

// Rank-2 convolution example: chart compatibility, the order-of-vanishing
// certificate, and the shipped 9x9 change-of-basis matrix with its
// invariants.  Each piece loads its inputs from data/sl3.json.
VerificationReport sl3_transition_check();
VerificationReport sl3_multiplicity();
VerificationReport sl3_matrix_invariants();
VerificationReport verify_sl3();  // all of the above, merged

// The 8-dimensional orthogonal example: one-parameter subgroup matrices and
// chart factors, the adjoint crystal against the shipped picture, and the
// dual-number certificate showing the leading coefficient exceeds one.
VerificationReport d4_structures();
VerificationReport d4_u_certificate();
VerificationReport d4_crystal_data();
VerificationReport verify_d4();  // all of the above, merged

}  // namespace satake

#endif
