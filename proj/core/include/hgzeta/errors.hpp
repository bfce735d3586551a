// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hgzeta {

enum class ErrorKind { Config, Assumption, Mismatch, Budget, Numeric };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

private:
  ErrorKind kind_;
  std::string name_;
};

#define HGZETA_ERROR(Name, Kind)                                                  \
  class Name : public Error {                                                      \
  public:                                                                          \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, #Name, what) {} \
  }

HGZETA_ERROR(ConfigError, Config);
HGZETA_ERROR(NotPrime, Config);
HGZETA_ERROR(CapExceeded, Budget);
HGZETA_ERROR(BudgetExceeded, Budget);
HGZETA_ERROR(KernelRankError, Assumption);
HGZETA_ERROR(Asm1Violation, Assumption);
HGZETA_ERROR(AssumptionViolation, Assumption);
HGZETA_ERROR(NotNormalizable, Assumption);
HGZETA_ERROR(LevelMismatch, Config);
HGZETA_ERROR(ZeroInput, Config);
HGZETA_ERROR(RoundingGapError, Numeric);
HGZETA_ERROR(DegreeUndetermined, Numeric);
HGZETA_ERROR(IntegralityError, Numeric);
HGZETA_ERROR(UnclassifiableRoot, Numeric);
HGZETA_ERROR(PrecisionLoss, Numeric);
HGZETA_ERROR(StabilizationError, Numeric);
HGZETA_ERROR(VerificationMismatch, Mismatch);

#undef HGZETA_ERROR

}  // namespace hgzeta
