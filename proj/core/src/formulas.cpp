// Copyright 2026 prismbishop contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "prismbishop/formulas.hpp"

namespace prismbishop {

CaseTag case_tag(const BoardSpec& spec) {
    CaseTag tag;
    tag.k_parity = (spec.k % 2 != 0) ? Parity::Odd : Parity::Even;
    tag.n_parity = (spec.n % 2 != 0) ? Parity::Odd : Parity::Even;
    if (spec.r == 0)
        tag.r_class = RClass::Zero;
    else
        tag.r_class = (spec.r % 2 != 0) ? RClass::Odd : RClass::EvenPositive;
    return tag;
}

std::string describe(const CaseTag& tag) {
    std::string out = "k ";
    out += (tag.k_parity == Parity::Odd) ? "odd" : "even";
    out += ", n ";
    out += (tag.n_parity == Parity::Odd) ? "odd" : "even";
    out += ", r ";
    switch (tag.r_class) {
    case RClass::Zero: out += "= 0"; break;
    case RClass::Odd: out += "odd"; break;
    case RClass::EvenPositive: out += "even > 0"; break;
    }
    return out;
}

int theorem_value(const BoardSpec& spec) {
    const int n = spec.n;
    const int r = spec.r;
    const bool k_odd = spec.k % 2 != 0;
    const bool n_odd = n % 2 != 0;
    const bool r_odd = r % 2 != 0;

    if (k_odd) {
        if (n_odd && r == 0)
            return 2 * n + 4;
        if ((n_odd && r > 0) || r_odd)
            return 2 * n + 3 - r;
        return 2 * n - r; // n and r even (r = 0 included)
    }
    if (n_odd && r == 0)
        return n + 5;
    if ((n_odd && r > 0) || r_odd)
        return n + 3 + r;
    return n + r; // n and r even
}

int lemma3_bound(const BoardSpec& spec) {
    const int n = spec.n;
    const int r = spec.r;
    if (spec.k % 2 != 0)
        return r == 0 ? 2 * n + 4 : 2 * n + 3 - r;
    return r == 0 ? n + 5 : n + 3 + r;
}

int diagonal_count_formula(const BoardSpec& spec) {
    const int n = spec.n;
    const int r = spec.r;
    if (spec.k % 2 != 0)
        return r == 0 ? 4 * n + 8 : 4 * n - 2 * r + 6;
    return r == 0 ? 2 * n + 10 : 2 * n + 2 * r + 6;
}

} // namespace prismbishop
