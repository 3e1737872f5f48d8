// Copyright 2026 The pptdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPTDIST_ERRORS_HPP
#define PPTDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pptdist {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// Operator dimensions incompatible with the requested operation.
class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

// Scalar or integer argument outside its admissible range.
class InvalidParameterError : public Error {
public:
  using Error::Error;
};

// Input violates a hermiticity precondition; carries max |X - X^dag| entry.
class NotHermitianError : public Error {
public:
  NotHermitianError(const std::string &what, double defect)
      : Error(what), defect_(defect) {}
  double defect() const { return defect_; }

private:
  double defect_;
};

// Density validation: trace differs from one; carries |tr(X) - 1|.
class NotUnitTraceError : public Error {
public:
  NotUnitTraceError(const std::string &what, double defect)
      : Error(what), defect_(defect) {}
  double defect() const { return defect_; }

private:
  double defect_;
};

// Density validation: spectrum dips below the PSD tolerance; carries the
// smallest eigenvalue found.
class NotPositiveError : public Error {
public:
  NotPositiveError(const std::string &what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

private:
  double min_eigenvalue_;
};

// Witness parameter epsilon outside (0, min{2, 1/||P_neg^T2||_inf}].
class EpsilonOutOfRangeError : public Error {
public:
  using Error::Error;
};

} // namespace pptdist

#endif // PPTDIST_ERRORS_HPP
