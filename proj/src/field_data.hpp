#pragma once

#include <optional>

#include "anonrs/field.hpp"
#include "poly_mod.hpp"

namespace anonrs::detail {

struct FieldData {
  FieldSpec spec;
  std::optional<PolyModRing> ring;  // extension fields only
};

}  // namespace anonrs::detail
