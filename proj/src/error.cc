// Copyright 2026 The numview Authors
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

#include "numview/error.h"

namespace numview {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kUnsupportedShape: return "unsupported_shape";
    case ErrorCode::kUnboundSlot: return "unbound_slot";
    case ErrorCode::kZeroDivisor: return "zero_divisor";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kMalformedNumber: return "malformed_number";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kLengthMismatch: return "length_mismatch";
    case ErrorCode::kUsage: return "usage";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace numview
