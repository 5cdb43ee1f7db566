/*
   Copyright 2026 The elimcert authors

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

#include "elimcert/io.hpp"

namespace elimcert {

int scan_max_var_index(std::string_view text) {
    int best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'x')
            continue;
        std::size_t j = i + 1;
        long v = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            v = v * 10 + (text[j] - '0');
            if (v > 1'000'000)
                throw StructuralError("variable index out of range");
            ++j;
        }
        if (j > i + 1 && v > best)
            best = static_cast<int>(v);
        i = j - 1;
    }
    return best;
}

} // namespace elimcert
