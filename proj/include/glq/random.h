// Copyright 2026 The glq Authors
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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace glq {

// All randomness flows through a 64-bit Mersenne Twister; the helpers below
// avoid the std distributions so that streams are identical across standard
// library implementations.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Folds the values left to right through splitmix64. Used to derive per-trial
// seeds from (base seed, n, epsilon numerator, trial index).
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

// Uniform integer in [0, bound). bound must be nonzero.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

bool bernoulli(Rng& rng, double p);

}  // namespace glq
