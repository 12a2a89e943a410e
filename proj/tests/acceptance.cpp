/*
   Copyright 2026 The jetsplit authors

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

// One line of output per acceptance criterion; exit status is nonzero if any
// of them fails.

#include <iostream>

#include "jetsplit/jetsplit.hpp"

int main() {
    bool all_pass = true;
    for (const auto& r : jetsplit::run_all_checks()) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
                  << r.ms << " ms)";
        if (!r.detail.empty()) std::cout << "  -- " << r.detail;
        std::cout << "\n" << std::flush;
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}
