#include "anonrs/error.hpp"

namespace anonrs {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::field_mismatch: return "field-mismatch";
    case Errc::range: return "range";
    case Errc::duplicate_node: return "duplicate-node";
    case Errc::shape: return "shape";
    case Errc::contract: return "contract";
    case Errc::duplicate_alpha: return "duplicate-alpha";
    case Errc::undecodable: return "undecodable";
    case Errc::robustness_violated: return "robustness-violated";
    case Errc::search_failed: return "search-failed";
    case Errc::refused: return "refused";
    case Errc::invalid_shares: return "invalid-shares";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace anonrs
