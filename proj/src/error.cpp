/*
   Copyright 2026 The polarcore Authors

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

#include "polarcore/error.hpp"

namespace polarcore {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::GramMismatch: return "GramMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::IncompatibleValues: return "IncompatibleValues";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::Anisotropic: return "Anisotropic";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::ZeroValency: return "ZeroValency";
    case ErrorCode::NonIntegerEigenvalue: return "NonIntegerEigenvalue";
    case ErrorCode::WittIndexTooSmall: return "WittIndexTooSmall";
    case ErrorCode::NotOnQuadric: return "NotOnQuadric";
    case ErrorCode::PerpendicularPair: return "PerpendicularPair";
    case ErrorCode::BadFieldForConstruction: return "BadFieldForConstruction";
    case ErrorCode::NoPivot: return "NoPivot";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::FactorizationFailed: return "FactorizationFailed";
    case ErrorCode::OutOfScopeParameters: return "OutOfScopeParameters";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

}  // namespace polarcore
