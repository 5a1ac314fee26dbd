// Copyright 2026 The pa-lab Authors
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

#ifndef PALAB_ERRORS_H_
#define PALAB_ERRORS_H_

#include <stdexcept>

namespace palab {

// Invalid arguments are reported with std::invalid_argument. The two types
// below cover the remaining error classes.

// The requested combination of inputs is valid but not supported (for
// example float evaluation of an alternating sum).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A consistency check inside the library failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace palab

#endif  // PALAB_ERRORS_H_
