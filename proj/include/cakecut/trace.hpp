#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <json.hpp>

#include "cakecut/piece.hpp"

namespace cakecut {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Cheap deterministic digest of a piece for replay comparisons.
inline std::string piece_digest(const Piece& p) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(piece_str(p))));
    return std::string(buf);
}

// JSON-lines event sink; a null stream disables tracing.
class TraceSink {
  public:
    TraceSink() = default;
    explicit TraceSink(std::ostream* out) : out_(out) {}

    bool enabled() const { return out_ != nullptr; }

    void emit(const std::string& event, nlohmann::json fields = nlohmann::json::object()) {
        if (!out_) return;
        fields["event"] = event;
        (*out_) << fields.dump() << "\n";
    }

  private:
    std::ostream* out_ = nullptr;
};

}  // namespace cakecut
