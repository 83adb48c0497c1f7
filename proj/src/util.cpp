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

#include "saaz/util.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "saaz/common.hpp"

namespace saaz {

std::string to_string(NetworkZone z) {
    return z == NetworkZone::Local ? "local" : "remote";
}

NetworkZone zone_from_string(const std::string& s) {
    if (s == "local") return NetworkZone::Local;
    if (s == "remote") return NetworkZone::Remote;
    throw Error(Errc::ParseError, "unknown network zone '" + s + "'");
}

std::string value_to_string(const Value& v) {
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    std::ostringstream os;
    os << std::get<double>(v);
    return os.str();
}

std::string to_string(Errc c) {
    switch (c) {
        case Errc::UnknownResource: return "UnknownResource";
        case Errc::MalformedPredicate: return "MalformedPredicate";
        case Errc::ConflictingDelta: return "ConflictingDelta";
        case Errc::StaleDelta: return "StaleDelta";
        case Errc::InvalidPolicy: return "InvalidPolicy";
        case Errc::IdPBanned: return "IdPBanned";
        case Errc::UnknownSubject: return "UnknownSubject";
        case Errc::IdPUnavailable: return "IdPUnavailable";
        case Errc::SessionTerminated: return "SessionTerminated";
        case Errc::UnknownSession: return "UnknownSession";
        case Errc::UnknownParty: return "UnknownParty";
        case Errc::UnknownTemplate: return "UnknownTemplate";
        case Errc::BadParameters: return "BadParameters";
        case Errc::UnknownProbe: return "UnknownProbe";
        case Errc::EmptyReadings: return "EmptyReadings";
        case Errc::EmptyAlertSet: return "EmptyAlertSet";
        case Errc::MissingAssociatedSignature: return "MissingAssociatedSignature";
        case Errc::InsufficientHistory: return "InsufficientHistory";
        case Errc::UnknownThreatClass: return "UnknownThreatClass";
        case Errc::EmptyList: return "EmptyList";
        case Errc::InfeasibleOption: return "InfeasibleOption";
        case Errc::UnknownCheckpoint: return "UnknownCheckpoint";
        case Errc::UnknownEffector: return "UnknownEffector";
        case Errc::UnknownScenario: return "UnknownScenario";
        case Errc::ParseError: return "ParseError";
        case Errc::PreconditionViolated: return "PreconditionViolated";
    }
    return "UnknownError";
}

}  // namespace saaz

namespace saaz::util {

std::string sha256_hex(std::string_view data) {
    unsigned char hash[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) throw std::runtime_error("EVP_MD_CTX_new failed");
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    EVP_DigestUpdate(ctx, data.data(), data.size());
    EVP_DigestFinal_ex(ctx, hash, &len);
    EVP_MD_CTX_free(ctx);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[hash[i] >> 4]);
        out.push_back(hex[hash[i] & 0xf]);
    }
    return out;
}

std::uint64_t Rng::next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % n;
}

std::uint64_t Rng::derive(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = seed ^ 0x51a3c0de5eedULL;
    for (char c : tag) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 0x100000001b3ULL;
    }
    Rng r(h);
    return r.next();
}

void write_file_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace saaz::util
