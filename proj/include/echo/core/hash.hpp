// Copyright 2026 The ECHO Authors
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

#ifndef ECHO_CORE_HASH_HPP_
#define ECHO_CORE_HASH_HPP_

#include <cstdint>
#include <string>

namespace echo {

// SHA-256 hex digest of a byte buffer.
std::string sha256_hex(const void* data, size_t size);
std::string sha256_hex(const std::string& data);

}  // namespace echo

#endif  // ECHO_CORE_HASH_HPP_
