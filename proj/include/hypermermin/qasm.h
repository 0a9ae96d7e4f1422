// Copyright 2026 The hypermermin Authors
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

#ifndef HYPERMERMIN_QASM_H
#define HYPERMERMIN_QASM_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "hypermermin/circuits.h"

namespace hypermermin {

class QasmError : public std::runtime_error {
   public:
    QasmError(int line, const std::string& message);
    int line() const { return line_; }

   private:
    int line_;
};

/// OpenQASM 2.0 text for `circuit`: registers q (main), anc (ancillas, if
/// any) and c (classical, if any); gates h, cz, ccx, u3 and measure. Angles
/// use 17 significant digits so that `parse_qasm` recovers them exactly.
std::string emit_qasm(const Circuit& circuit);

/// Parses the subset written by `emit_qasm` (see docs/qasm.md).
Circuit parse_qasm(std::string_view text);

}  // namespace hypermermin

#endif  // HYPERMERMIN_QASM_H
