/*
 *  Copyright 2026 the saaz authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace saaz::util {

/// SHA-256 of the input, lowercase hex.
std::string sha256_hex(std::string_view data);

/// Canonical serialization used for every digest in the system: sorted keys,
/// no insignificant whitespace. nlohmann::json already stores object keys
/// sorted, so a plain dump is canonical.
inline std::string canonical(const nlohmann::json& j) { return j.dump(); }

inline std::string digest_of(const nlohmann::json& j) {
    return sha256_hex(canonical(j));
}

/// Deterministic 64-bit generator (splitmix64). The standard <random>
/// distributions are implementation-defined, which would break the
/// cross-host reproducibility the simulator guarantees, so selection and
/// background-traffic generation go through this instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), unbiased via rejection.
    std::uint64_t next_below(std::uint64_t n);

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Derive an independent stream for a named purpose.
    static std::uint64_t derive(std::uint64_t seed, std::string_view tag);

private:
    std::uint64_t state_;
};

/// Write `text` to `path` atomically (write to a sibling temp file, then
/// rename), so a partially written report never exists on disk.
void write_file_atomic(const std::string& path, const std::string& text);

std::string read_file(const std::string& path);

}  // namespace saaz::util
