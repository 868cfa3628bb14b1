/*
   Copyright 2026 The delsarte authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "delsarte/errors.hpp"

namespace delsarte {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::parameter_out_of_range: return "ParameterOutOfRange";
    case ErrorCode::not_symmetric: return "NotSymmetric";
    case ErrorCode::diagonal_not_identity_relation: return "DiagonalNotIdentityRelation";
    case ErrorCode::inconsistent_intersection_number: return "InconsistentIntersectionNumber";
    case ErrorCode::eigensystem_not_separated: return "EigensystemNotSeparated";
    case ErrorCode::negative_krein: return "NegativeKrein";
    case ErrorCode::inexact_scheme: return "InexactScheme";
    case ErrorCode::empty_subset: return "EmptySubset";
    case ErrorCode::duplicate_vertex: return "DuplicateVertex";
    case ErrorCode::vertex_out_of_range: return "VertexOutOfRange";
    case ErrorCode::negative_dual: return "NegativeDual";
    case ErrorCode::not_polynomial_scheme: return "NotPolynomialScheme";
    case ErrorCode::repeated_root: return "RepeatedRoot";
    case ErrorCode::not_annihilator: return "NotAnnihilator";
    case ErrorCode::scheme_too_large: return "SchemeTooLarge";
    case ErrorCode::subset_too_large: return "SubsetTooLarge";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::base_point_not_in_subset: return "BasePointNotInSubset";
    case ErrorCode::not_a_scheme: return "NotAScheme";
    case ErrorCode::dimension_too_small: return "DimensionTooSmall";
    case ErrorCode::negative_moment: return "NegativeMoment";
    case ErrorCode::theorem_violation: return "TheoremViolation";
    case ErrorCode::bound_violation: return "BoundViolation";
    case ErrorCode::positivity_violation: return "PositivityViolation";
  }
  return "Unknown";
}

bool is_violation(ErrorCode code) noexcept {
  return code == ErrorCode::theorem_violation || code == ErrorCode::bound_violation ||
         code == ErrorCode::positivity_violation;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace delsarte
