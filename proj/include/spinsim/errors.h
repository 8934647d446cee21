// Copyright 2026 The spinsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINSIM_ERRORS_H_
#define SPINSIM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace spinsim {

// Bad arguments (dimension mismatch, wrong bit count, unknown names) are
// reported with std::invalid_argument. The types below carry extra data.

/// Requested register or dense matrix is larger than the configured cap.
class CapacityError : public std::length_error {
 public:
  CapacityError(const std::string& what, int requested, int limit)
      : std::length_error(what), requested_(requested), limit_(limit) {}
  int requested() const { return requested_; }
  int limit() const { return limit_; }

 private:
  int requested_;
  int limit_;
};

/// A matrix that should be unitary is not. `max_deviation` is the largest
/// entry of |U^dagger U - 1|.
class UnitarityError : public std::domain_error {
 public:
  UnitarityError(const std::string& what, double max_deviation)
      : std::domain_error(what), max_deviation_(max_deviation) {}
  double max_deviation() const { return max_deviation_; }

 private:
  double max_deviation_;
};

/// An iterative refinement hit its cap before reaching the requested
/// tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace spinsim

#endif  // SPINSIM_ERRORS_H_
