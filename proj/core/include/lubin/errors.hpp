/* Copyright (C) 2026 the lubin authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace lubin {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define LUBIN_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

// Arithmetic / precision model.
LUBIN_DEFINE_ERROR(PrecisionExhausted);
LUBIN_DEFINE_ERROR(RingMismatch);
LUBIN_DEFINE_ERROR(InvalidArgument);

// Root finding and norm solving.
LUBIN_DEFINE_ERROR(NonSimpleRoot);
LUBIN_DEFINE_ERROR(NotInBase);
LUBIN_DEFINE_ERROR(NormMismatch);

// Series and formal groups.
LUBIN_DEFINE_ERROR(NonzeroConstantTerm);
LUBIN_DEFINE_ERROR(NotAUniformizer);
LUBIN_DEFINE_ERROR(ThetaConditionFailed);

// Torsion towers.
LUBIN_DEFINE_ERROR(NotEisenstein);
LUBIN_DEFINE_ERROR(NotAUnit);

// Coleman operator.
LUBIN_DEFINE_ERROR(DescentFailed);
LUBIN_DEFINE_ERROR(DivisionRemainder);

// Ramification.
LUBIN_DEFINE_ERROR(NotNormal);
LUBIN_DEFINE_ERROR(NotUniformizer);

#undef LUBIN_DEFINE_ERROR

inline void require(bool cond, const char* what) {
    if (!cond) throw InvalidArgument(what);
}

} // namespace lubin
