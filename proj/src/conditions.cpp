#include "anonrs/conditions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "anonrs/error.hpp"
#include "anonrs/rng.hpp"
#include "anonrs/scheme.hpp"
#include "scan.hpp"

namespace anonrs {
namespace {

using PowerTable = std::vector<std::vector<Element>>;

// powers[i][e] = alpha_{i+1}^e for e < k.
PowerTable power_table(std::span<const Element> alpha, int k) {
  PowerTable t;
  t.reserve(alpha.size());
  for (const auto& a : alpha) {
    std::vector<Element> row;
    row.reserve(k);
    row.push_back(a.field().one());
    for (int e = 1; e < k; ++e) row.push_back(row.back() * a);
    t.push_back(std::move(row));
  }
  return t;
}

Matrix v_matrix(const DistinctSeq& i, const DistinctSeq& j, const PowerTable& pw, const Field& f,
                int k) {
  const std::size_t s = 2 * static_cast<std::size_t>(k) - 1;
  std::vector<Element> entries;
  entries.reserve(s * s);
  for (std::size_t row = 1; row <= s; ++row) {
    const auto& pi = pw[i.at(row) - 1];
    const auto& pj = pw[j.at(row) - 1];
    for (int e = 0; e < k; ++e) entries.push_back(pi[e]);
    for (int e = 1; e < k; ++e) entries.push_back(pj[e]);
  }
  return Matrix(f, s, s, std::move(entries));
}

Matrix a_matrix(const SetFamily& sets, const PowerTable& pw, const Field& f, int k) {
  std::vector<Element> entries;
  entries.reserve(sets.size() * k);
  for (const auto& set : sets) {
    entries.push_back(f.one());
    for (int e = 1; e < k; ++e) {
      Element sum = f.zero();
      for (int idx : set) sum += pw[idx - 1][e];
      entries.push_back(std::move(sum));
    }
  }
  return Matrix(f, sets.size(), k, std::move(entries));
}

void check_inputs(std::span<const Element> alpha, int k) {
  if (alpha.empty()) raise(Errc::contract, "no evaluation points");
  if (k < 1 || 2 * static_cast<std::size_t>(k) - 1 > alpha.size()) {
    raise(Errc::contract, "need 1 <= 2k-1 <= n (n=" + std::to_string(alpha.size()) +
                              ", k=" + std::to_string(k) + ")");
  }
  for (const auto& a : alpha) {
    if (!(a.field() == alpha[0].field())) raise(Errc::field_mismatch, "alpha entries from different fields");
  }
  require_distinct(alpha);
}

void check_indices(const DistinctSeq& s, std::size_t n) {
  for (int v : s.items()) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      raise(Errc::contract, "index " + std::to_string(v) + " has no evaluation point");
    }
  }
}

std::string seq_text(const DistinctSeq& s) {
  std::string out = "(";
  for (std::size_t p = 1; p <= s.size(); ++p) out += (p > 1 ? "," : "") + std::to_string(s.at(p));
  return out + ")";
}

ConditionReport finish(const detail::ScanResult& r, std::uint64_t size) {
  ConditionReport rep;
  rep.verdict = r.found() ? Verdict::fail : Verdict::pass;
  rep.pairs_checked = r.found() ? r.first_hit + 1 : size;
  return rep;
}

// Kernel-form scan over the given pair indices (in order).
ConditionReport kernel_scan(std::span<const Element> alpha, int k, const std::vector<std::uint64_t>* subset,
                            ScanOptions opts) {
  check_inputs(alpha, k);
  const PairRepSpace space(static_cast<int>(alpha.size()), k);
  const PowerTable pw = power_table(alpha, k);
  const Field& f = alpha[0].field();
  const std::uint64_t size = subset ? subset->size() : space.size();
  auto pair_at = [&](std::uint64_t idx) { return space.at(subset ? (*subset)[idx] : idx); };
  const auto r = detail::first_hit(size, opts.workers, [&](std::uint64_t idx) {
    const auto [i, j] = pair_at(idx);
    return kernel_form_violation(v_matrix(i, j, pw, f, k), k).has_value();
  });
  ConditionReport rep = finish(r, size);
  if (r.found()) {
    auto [i, j] = pair_at(r.first_hit);
    auto v = *kernel_form_violation(v_matrix(i, j, pw, f, k), k);
    rep.witness = PairWitness{std::move(i), std::move(j), std::move(v)};
  }
  return rep;
}

}  // namespace

std::string describe(const ConditionReport& report) {
  if (!report.witness) return "none";
  if (const auto* p = std::get_if<PairWitness>(&*report.witness)) {
    std::string out = "I=" + seq_text(p->i) + " J=" + seq_text(p->j);
    if (p->kernel_vector.empty()) return out + " det=0";
    out += " kernel=(";
    for (std::size_t c = 0; c < p->kernel_vector.size(); ++c) {
      out += (c ? "," : "") + p->kernel_vector[c].to_string();
    }
    return out + ")";
  }
  const auto& fam = std::get<FamilyWitness>(*report.witness);
  std::string out = "family=";
  for (std::size_t s = 0; s < fam.sets.size(); ++s) {
    out += s ? ",{" : "{";
    for (std::size_t e = 0; e < fam.sets[s].size(); ++e) {
      out += (e ? "," : "") + std::to_string(fam.sets[s][e]);
    }
    out += "}";
  }
  return out + " det=0";
}

Matrix build_V(const DistinctSeq& i, const DistinctSeq& j, std::span<const Element> alpha, int k) {
  const std::size_t s = 2 * static_cast<std::size_t>(std::max(k, 0)) - 1;
  if (k < 1 || i.size() != s || j.size() != s) {
    raise(Errc::contract, "V-matrix needs |I| = |J| = 2k-1");
  }
  if (alpha.empty()) raise(Errc::contract, "no evaluation points");
  check_indices(i, alpha.size());
  check_indices(j, alpha.size());
  return v_matrix(i, j, power_table(alpha, k), alpha[0].field(), k);
}

Matrix build_A(const SetFamily& sets, std::span<const Element> alpha, int k) {
  if (k < 1) raise(Errc::contract, "k must be positive");
  if (alpha.empty()) raise(Errc::contract, "no evaluation points");
  std::set<int> seen;
  for (const auto& set : sets) {
    if (set.empty()) raise(Errc::contract, "empty set in family");
    for (int v : set) {
      if (v < 1 || static_cast<std::size_t>(v) > alpha.size()) {
        raise(Errc::contract, "index " + std::to_string(v) + " has no evaluation point");
      }
      if (!seen.insert(v).second) raise(Errc::contract, "sets overlap at " + std::to_string(v));
    }
  }
  return a_matrix(sets, power_table(alpha, k), alpha[0].field(), k);
}

std::optional<std::vector<Element>> kernel_form_violation(const Matrix& m, int k) {
  const std::size_t s = 2 * static_cast<std::size_t>(std::max(k, 0)) - 1;
  if (k < 1 || m.rows() != s || m.cols() != s) raise(Errc::shape, "expected a (2k-1)x(2k-1) matrix");
  for (auto& v : kernel_basis(m)) {
    bool ok = v[0].is_zero();
    for (int i = 1; ok && i < k; ++i) ok = (v[i] == -v[k - 1 + i]);
    if (!ok) return std::move(v);
  }
  return std::nullopt;
}

ConditionReport check_condition1(std::span<const Element> alpha, int k, ScanOptions opts) {
  check_inputs(alpha, k);
  const PairRepSpace space(static_cast<int>(alpha.size()), k);
  const PowerTable pw = power_table(alpha, k);
  const Field& f = alpha[0].field();
  const auto r = detail::first_hit(space.size(), opts.workers, [&](std::uint64_t idx) {
    const auto [i, j] = space.at(idx);
    if (decompose(i, j).cycles.size() > static_cast<std::size_t>(k)) return false;
    return det(v_matrix(i, j, pw, f, k)).is_zero();
  });
  ConditionReport rep = finish(r, space.size());
  if (r.found()) {
    auto [i, j] = space.at(r.first_hit);
    rep.witness = PairWitness{std::move(i), std::move(j), {}};
  }
  return rep;
}

ConditionReport check_condition2(std::span<const Element> alpha, int k, ScanOptions opts) {
  check_inputs(alpha, k);
  const auto families = enumerate_disjoint_families(static_cast<int>(alpha.size()), k, k);
  const PowerTable pw = power_table(alpha, k);
  const Field& f = alpha[0].field();
  const auto r = detail::first_hit(families.size(), opts.workers, [&](std::uint64_t idx) {
    return det(a_matrix(families[idx], pw, f, k)).is_zero();
  });
  ConditionReport rep = finish(r, families.size());
  if (r.found()) rep.witness = FamilyWitness{families[r.first_hit]};
  return rep;
}

ConditionReport verify_robust(std::span<const Element> alpha, int k, ScanOptions opts) {
  return kernel_scan(alpha, k, nullptr, opts);
}

ConditionReport verify_sampled(std::span<const Element> alpha, int k, std::uint64_t count,
                               std::uint64_t seed, ScanOptions opts) {
  check_inputs(alpha, k);
  const PairRepSpace space(static_cast<int>(alpha.size()), k);
  if (count >= space.size()) return kernel_scan(alpha, k, nullptr, opts);
  Rng rng(seed);
  std::set<std::uint64_t> picked;
  while (picked.size() < count) picked.insert(rng.below(space.size()));
  const std::vector<std::uint64_t> indices(picked.begin(), picked.end());
  return kernel_scan(alpha, k, &indices, opts);
}

}  // namespace anonrs
