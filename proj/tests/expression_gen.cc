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

#include "expression_gen.h"

namespace testing_support {

std::string RandomLiteral(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> kind(0, 9);
  const int k = kind(gen);
  if (k == 0) return "0";
  std::uniform_int_distribution<long long> small(1, 999);
  std::uniform_int_distribution<long long> big(1000, 999999999);
  std::string integer = std::to_string(k <= 6 ? small(gen) : big(gen));
  if (k % 3 != 0) return integer;
  std::uniform_int_distribution<int> places(1, 3);
  std::uniform_int_distribution<int> digit(0, 9);
  std::string fraction;
  for (int i = places(gen); i > 0; --i) fraction += static_cast<char>('0' + digit(gen));
  return integer + "." + fraction;
}

std::string RandomInstance(std::string_view shape, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::string out;
  for (char c : shape) {
    if (coin(gen) == 1) out += ' ';
    switch (c) {
      case 'a':
      case 'b':
      case 'c':
        out += RandomLiteral(gen);
        break;
      case '*':
        out += coin(gen) ? "*" : "\xC3\x97";
        break;
      case '/':
        out += coin(gen) ? "/" : "\xC3\xB7";
        break;
      case '-':
        out += coin(gen) ? "-" : "\xE2\x88\x92";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace testing_support
