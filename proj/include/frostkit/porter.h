// Copyright 2026 The FrostKit Authors.
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

#ifndef FROSTKIT_PORTER_H_
#define FROSTKIT_PORTER_H_

#include <string>
#include <string_view>

namespace frostkit {

// Porter (1980) suffix stripping, original rule set without later
// extensions. Input must be lowercase ASCII letters and digits.
std::string PorterStem(std::string_view word);

}  // namespace frostkit

#endif  // FROSTKIT_PORTER_H_
