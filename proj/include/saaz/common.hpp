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
#include <stdexcept>
#include <string>
#include <variant>

namespace saaz {

/// Simulated time, in seconds since the start of a run. All clocks in the
/// system are logical; nothing ever reads wall-clock time.
using SimTime = std::int64_t;
using Duration = std::int64_t;

inline constexpr Duration kSecondsPerDay = 86400;

/// Seconds-of-day for time-window rule conditions.
inline std::int64_t time_of_day(SimTime clock) {
    std::int64_t t = clock % kSecondsPerDay;
    return t < 0 ? t + kSecondsPerDay : t;
}

enum class NetworkZone { Local, Remote };

std::string to_string(NetworkZone z);
NetworkZone zone_from_string(const std::string& s);

/// Where a session or request comes from: network zone plus a coarse
/// geographic label (continent granularity is all the detectors need).
struct Origin {
    NetworkZone zone = NetworkZone::Remote;
    std::string geo;

    bool operator==(const Origin&) const = default;
};

/// Attribute values are scalars or strings.
using Value = std::variant<std::int64_t, double, std::string>;

std::string value_to_string(const Value& v);

enum class Errc {
    // policy-core
    UnknownResource,
    MalformedPredicate,
    ConflictingDelta,
    StaleDelta,
    InvalidPolicy,
    // infrastructure
    IdPBanned,
    UnknownSubject,
    IdPUnavailable,
    SessionTerminated,
    UnknownSession,
    UnknownParty,
    // monitor
    UnknownTemplate,
    BadParameters,
    UnknownProbe,
    EmptyReadings,
    // analyse
    EmptyAlertSet,
    MissingAssociatedSignature,
    InsufficientHistory,
    UnknownThreatClass,
    // plan
    EmptyList,
    InfeasibleOption,
    // execute
    UnknownCheckpoint,
    UnknownEffector,
    // sim / cli
    UnknownScenario,
    ParseError,
    PreconditionViolated,
};

std::string to_string(Errc c);

/// Thrown for contract violations and authoring bugs. Expected run-time
/// outcomes (a denied request, a banned IdP during authentication) are
/// reported through result types instead, so simulation traces can exercise
/// them without exception control flow.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(to_string(code) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace saaz
