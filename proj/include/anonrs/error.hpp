#pragma once

#include <stdexcept>
#include <string>

namespace anonrs {

// Every failure raised by the library carries one of these codes so callers
// (the CLI in particular) can map them onto exit statuses.
enum class Errc {
  division_by_zero,
  field_mismatch,
  range,
  duplicate_node,
  shape,
  contract,
  duplicate_alpha,
  undecodable,
  robustness_violated,
  search_failed,
  refused,
  invalid_shares,
  parse,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace anonrs
