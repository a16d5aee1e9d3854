#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "anonrs/field.hpp"
#include "anonrs/matrix.hpp"
#include "anonrs/sequences.hpp"

namespace anonrs {

struct ScanOptions {
  int workers = 1;
};

// A representative pair whose V-matrix is singular (kernel_vector empty) or
// has a kernel vector outside the admissible form.
struct PairWitness {
  DistinctSeq i;
  DistinctSeq j;
  std::vector<Element> kernel_vector;
};

// A family whose A-matrix is singular.
struct FamilyWitness {
  SetFamily sets;
};

enum class Verdict { pass, fail };

struct ConditionReport {
  Verdict verdict = Verdict::pass;
  std::optional<std::variant<PairWitness, FamilyWitness>> witness;
  // Items examined up to and including the witness, independent of workers.
  std::uint64_t pairs_checked = 0;

  bool passed() const { return verdict == Verdict::pass; }
};

std::string describe(const ConditionReport& report);

// Row s: (1, a_{I_s}, ..., a_{I_s}^{k-1}, a_{J_s}, ..., a_{J_s}^{k-1}).
Matrix build_V(const DistinctSeq& i, const DistinctSeq& j, std::span<const Element> alpha, int k);
// Row j: (1, sum a_i, sum a_i^2, ..., sum a_i^{k-1}) over i in sets[j].
Matrix build_A(const SetFamily& sets, std::span<const Element> alpha, int k);

// First basis vector of the right kernel that is not of the form
// (0, f_1..f_{k-1}, -f_1..-f_{k-1}), if any.
std::optional<std::vector<Element>> kernel_form_violation(const Matrix& m, int k);
inline bool kernel_form_ok(const Matrix& m, int k) { return !kernel_form_violation(m, k); }

// det V != 0 for every representative pair with at most k cycles.
ConditionReport check_condition1(std::span<const Element> alpha, int k, ScanOptions opts = {});
// det A != 0 for every family of k disjoint sets with total size <= 2k-1.
ConditionReport check_condition2(std::span<const Element> alpha, int k, ScanOptions opts = {});
// Exact robustness against n-2k+1 permutation-insdel errors.
ConditionReport verify_robust(std::span<const Element> alpha, int k, ScanOptions opts = {});
// Kernel-form check on `count` distinct representative pairs drawn with
// Rng(seed), or all of them when count covers the space.
ConditionReport verify_sampled(std::span<const Element> alpha, int k, std::uint64_t count,
                               std::uint64_t seed, ScanOptions opts = {});

}  // namespace anonrs
