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

#ifndef DELSARTE_ERRORS_HPP
#define DELSARTE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace delsarte {

enum class ErrorCode {
  // input and precondition failures
  invalid_input,
  parameter_out_of_range,
  not_symmetric,
  diagonal_not_identity_relation,
  inconsistent_intersection_number,
  eigensystem_not_separated,
  negative_krein,
  inexact_scheme,
  empty_subset,
  duplicate_vertex,
  vertex_out_of_range,
  negative_dual,
  not_polynomial_scheme,
  repeated_root,
  not_annihilator,
  scheme_too_large,
  subset_too_large,
  precondition_failed,
  base_point_not_in_subset,
  not_a_scheme,
  dimension_too_small,
  negative_moment,
  // results that contradict a proven statement; these mean a bug
  theorem_violation,
  bound_violation,
  positivity_violation,
};

const char* error_code_name(ErrorCode code) noexcept;

/// True for codes that falsify the implementation rather than the input.
bool is_violation(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace delsarte

#endif  // DELSARTE_ERRORS_HPP
