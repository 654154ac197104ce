/**************************************************************************
 * demo.cpp
 *
 * Copyright 2026 The shadowcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

// Builds the binary code of length 7 spanned by x^2 + 1 and x^2 + x + 3,
// prints its generator matrix and weight distribution, then recovers a
// message from a word with two erasures.

#include <iostream>

#include <shadow/shadow.hpp>

int main() {
    using namespace shadow;

    FiniteField F(7);
    Character chi(F, 2);
    ShadowCodeSpec spec(chi, {Polynomial::from_indices({1, 0, 1}), Polynomial::from_indices({3, 1, 1})});
    GeneratorMatrix G = build(spec);

    io::write_matrix_text(std::cout, G);

    CodeReport rep = analyze(G);
    std::cout << "rank " << rep.k << ", minimum distance " << *rep.d_exact << "\n";
    for (auto [w, c] : *rep.weight_distribution)
        std::cout << "  weight " << w << ": " << c << "\n";

    std::vector<std::uint32_t> msg{1, 0};
    auto word = encode(G, msg);
    word[0] = word[1] = erased;
    auto decoded = erasure_decode(G, word);
    std::cout << "received " << io::word_string(word) << " -> message (" << decoded[0] << ", " << decoded[1]
              << ")\n";
    return 0;
}
