#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anonrs/field.hpp"

namespace anonrs {

enum class Certification { full, sampled, none };

const char* to_string(Certification c);
Certification parse_certification(std::string_view text);

// Evaluation points alpha_1..alpha_n of an [n, k] Reed-Solomon code over
// `field`, doubling as the public parameters of the sharing scheme.
struct Scheme {
  int n = 0;
  int k = 0;
  Field field;
  std::vector<Element> alpha;
  Certification certified = Certification::none;
};

// Throws duplicate_alpha naming the first clashing pair of positions.
void require_distinct(std::span<const Element> alpha);

// Distinct, nonzero points and 1 <= 2k-1 <= n.
void validate_scheme(const Scheme& scheme);

// Text format:
//   anonrs-scheme v1
//   field: prime <p> | field: ext <p> <d> <c0,...,cd>
//   n: <n>
//   k: <k>
//   certified: full|sampled|none
//   alpha: <e1> ... <en>
// read_scheme only checks structure; distinctness is left to validate_scheme
// so verifiers can report it.
std::string write_scheme(const Scheme& scheme);
Scheme read_scheme(std::string_view text);

// Header `anonrs-shares v1`, then one element per line. Line order carries
// no identity for reconstruction.
std::string write_shares(const Field& field, std::span<const Element> shares);
std::vector<Element> read_shares(const Field& field, std::string_view text);

}  // namespace anonrs
