#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "anonrs/anonshare.hpp"
#include "anonrs/channel.hpp"
#include "anonrs/conditions.hpp"
#include "anonrs/construct.hpp"
#include "anonrs/error.hpp"
#include "anonrs/oracle.hpp"
#include "anonrs/rng.hpp"
#include "anonrs/scheme.hpp"
#include "anonrs/sequences.hpp"

namespace anonrs::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) raise(Errc::parse, "cannot write " + path);
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::duplicate_alpha:
    case Errc::undecodable:
    case Errc::robustness_violated:
    case Errc::search_failed:
    case Errc::invalid_shares:
      return kFailed;
    default:
      return kUsage;
  }
}

struct Options {
  int workers = 1;
  int n = 0;
  int k = 0;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> p;
  std::uint64_t seed = 0;
  int attempts = 5;
  std::string out_path;
  std::string toy;
  std::uint64_t modulus_seed = 0;
  std::string scheme_path;
  std::string shares_path;
  std::string mode = "full";
  bool oracle = false;
  std::string secret;
  bool allow_uncertified = false;
  std::size_t t = 0;
  int trials = 1;
  std::size_t ell = 0;
};

int cmd_gen(const Options& o, std::ostream& out) {
  SearchOptions so;
  so.q = o.q;
  so.seed = o.seed;
  so.max_attempts = o.attempts;
  so.scan.workers = o.workers;
  std::string bound = "overflow";
  try {
    bound = std::to_string(field_size_bound(o.n, o.k));
  } catch (const Error& e) {
    if (e.code() != Errc::range || !o.q) throw;
  }
  const SearchResult r = random_search(o.n, o.k, so);
  write_file(o.out_path, write_scheme(r.scheme));
  out << "bound=" << bound << " q=" << r.scheme.field.characteristic() << " attempts=" << r.attempts
      << " below_bound=" << (r.below_bound ? 1 : 0) << " certified=full\n";
  return kOk;
}

int cmd_gen_explicit(const Options& o, std::ostream& out) {
  ExplicitOptions eo;
  eo.p = o.p;
  eo.modulus_seed = o.modulus_seed;
  if (!o.toy.empty()) {
    const auto comma = o.toy.find(',');
    if (comma == std::string::npos) raise(Errc::parse, "--toy expects L,D");
    try {
      eo.toy = ToyParams{std::stoull(o.toy.substr(0, comma)), std::stoull(o.toy.substr(comma + 1))};
    } catch (const std::exception&) {
      raise(Errc::parse, "--toy expects L,D");
    }
  }
  const Scheme s = construction27(o.k, o.n, eo);
  write_file(o.out_path, write_scheme(s));
  out << "p=" << s.field.characteristic() << " degree=" << s.field.degree() << " certified=none\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Scheme s = read_scheme(read_file(o.scheme_path));
  const ScanOptions scan{o.workers};
  ConditionReport rep;
  Certification earned = Certification::full;
  if (o.mode == "full") {
    rep = verify_robust(s.alpha, s.k, scan);
  } else if (o.mode == "conditions") {
    rep = check_condition1(s.alpha, s.k, scan);
    if (rep.passed()) {
      const std::uint64_t first = rep.pairs_checked;
      rep = check_condition2(s.alpha, s.k, scan);
      rep.pairs_checked += first;
    }
  } else if (o.mode.rfind("sample:", 0) == 0) {
    std::uint64_t count = 0;
    try {
      count = std::stoull(o.mode.substr(7));
    } catch (const std::exception&) {
      raise(Errc::parse, "bad sample count in '" + o.mode + "'");
    }
    rep = verify_sampled(s.alpha, s.k, count, o.seed, scan);
    if (count < PairRepSpace(s.n, s.k).size()) earned = Certification::sampled;
  } else {
    raise(Errc::parse, "unknown mode '" + o.mode + "'");
  }

  std::string oracle_field;
  if (o.oracle) {
    try {
      const auto v = oracle::oracle_robust(s, s.n - 2 * s.k + 1);
      oracle_field = v.robust ? " oracle=pass" : " oracle=fail";
      if (rep.passed() != v.robust) err << "oracle disagrees with the verifier\n";
    } catch (const Error& e) {
      if (e.code() != Errc::refused) throw;
      oracle_field = " oracle=refused";
    }
  }

  if (!rep.passed()) {
    out << "verdict=fail mode=" << o.mode << " pairs_checked=" << rep.pairs_checked << oracle_field << "\n";
    err << "witness: " << describe(rep) << "\n";
    return kFailed;
  }
  if (!(s.certified == Certification::full && earned == Certification::sampled)) s.certified = earned;
  write_file(o.scheme_path, write_scheme(s));
  out << "verdict=pass mode=" << o.mode << " pairs_checked=" << rep.pairs_checked
      << " certified=" << to_string(s.certified) << oracle_field << "\n";
  return kOk;
}

int cmd_share(const Options& o, std::ostream& out) {
  const Scheme s = read_scheme(read_file(o.scheme_path));
  const ShareBundle b = share(s, s.field.parse(o.secret), o.seed, o.allow_uncertified);
  write_file(o.out_path, write_shares(s.field, b.shares));
  out << "shares=" << b.shares.size() << "\n";
  return kOk;
}

int cmd_recon(const Options& o, std::ostream& out) {
  const Scheme s = read_scheme(read_file(o.scheme_path));
  const auto shares = read_shares(s.field, read_file(o.shares_path));
  const Element secret = recon(s, shares);
  out << "secret=" << s.field.format(secret) << "\n";
  return kOk;
}

int cmd_attack(const Options& o, std::ostream& out, std::ostream& err) {
  const Scheme s = read_scheme(read_file(o.scheme_path));
  const Word c = read_shares(s.field, read_file(o.shares_path));
  if (c.size() != static_cast<std::size_t>(s.n)) {
    raise(Errc::contract, "attack needs the full bundle of " + std::to_string(s.n) + " shares");
  }
  if (o.trials < 1) raise(Errc::contract, "need at least one trial");
  int ok = 0;
  for (int trial = 0; trial < o.trials; ++trial) {
    const std::uint64_t trial_seed = Rng(o.seed, static_cast<std::uint64_t>(trial)).next();
    const auto [word, action] = apply_random_adversary(c, s.field, o.t, trial_seed);
    bool success = false;
    try {
      success = rs_encode(decode_insdel(word, s, o.t), s) == c;
    } catch (const Error& e) {
      if (exit_code(e.code()) != kFailed) throw;
      err << "trial " << trial + 1 << ": " << e.what() << "\n";
    }
    ok += success ? 1 : 0;
    out << "trial=" << trial + 1 << " ok=" << (success ? 1 : 0) << " received=" << word.size()
        << " action=" << format_action(action, s.field) << "\n";
  }
  out << "successes=" << ok << "/" << o.trials << "\n";
  return ok == o.trials ? kOk : kFailed;
}

int cmd_anonymity(const Options& o, std::ostream& out) {
  const Scheme s = read_scheme(read_file(o.scheme_path));
  if (o.ell + 1 > static_cast<std::size_t>(s.k)) raise(Errc::contract, "--ell must be at most k-1");
  const Element secret = o.secret.empty() ? s.field.zero() : s.field.parse(o.secret);
  const auto q = s.field.order();
  if (!q) raise(Errc::refused, "field order exceeds 64 bits");
  std::uint64_t expected = 1, tuples = 1;
  for (std::size_t e = 0; e + 1 + o.ell < static_cast<std::size_t>(s.k); ++e) expected *= *q;
  for (std::size_t e = 0; e < o.ell; ++e) tuples *= *q;

  const int ell = static_cast<int>(o.ell);
  std::uint64_t lo = UINT64_MAX, hi = 0, sequences = 0;
  bool complete = true;
  for (std::uint64_t c = 0; c < binomial(s.n, ell); ++c) {
    const auto subset = unrank_combination(s.n, ell, c);
    for (std::uint64_t r = 0; r < factorial(ell); ++r) {
      const auto tally = share_distribution(s, secret, DistinctSeq(s.n, unrank_permutation(subset, r)));
      complete = complete && tally.size() == tuples;
      for (const auto& [key, count] : tally) {
        lo = std::min(lo, count);
        hi = std::max(hi, count);
      }
      ++sequences;
    }
  }
  const bool pass = complete && lo == expected && hi == expected;
  out << "min=" << lo << " max=" << hi << " expected=" << expected << " sequences=" << sequences
      << " verdict=" << (pass ? "pass" : "fail") << "\n";
  return pass ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation-insdel robust Reed-Solomon codes and anonymous secret sharing", "anonrs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--workers", o.workers, "Threads for condition scans")->check(CLI::Range(1, 256));

  auto* gen = app.add_subcommand("gen", "Randomized search for certified points");
  gen->add_option("--n", o.n)->required();
  gen->add_option("--k", o.k)->required();
  gen->add_option("--q", o.q, "Prime field size (default: next prime above the bound)");
  gen->add_option("--seed", o.seed);
  gen->add_option("--attempts", o.attempts);
  gen->add_option("--out", o.out_path)->required();

  auto* gen_explicit = app.add_subcommand("gen-explicit", "Explicit points (gamma - i)^ell");
  gen_explicit->add_option("--k", o.k)->required();
  gen_explicit->add_option("--n", o.n)->required();
  gen_explicit->add_option("--p", o.p);
  gen_explicit->add_option("--toy", o.toy, "Override ell and degree: L,D");
  gen_explicit->add_option("--modulus-seed", o.modulus_seed);
  gen_explicit->add_option("--out", o.out_path)->required();

  auto* verify = app.add_subcommand("verify", "Certify a scheme file");
  verify->add_option("--scheme", o.scheme_path)->required();
  verify->add_option("--mode", o.mode, "full | conditions | sample:COUNT");
  verify->add_option("--seed", o.seed);
  verify->add_flag("--oracle", o.oracle, "Also run the brute-force check (toy fields)");

  auto* share_cmd = app.add_subcommand("share", "Deal shares of a secret");
  share_cmd->add_option("--scheme", o.scheme_path)->required();
  share_cmd->add_option("--secret", o.secret)->required();
  share_cmd->add_option("--seed", o.seed)->required();
  share_cmd->add_option("--out", o.out_path)->required();
  share_cmd->add_flag("--allow-uncertified", o.allow_uncertified);

  auto* recon_cmd = app.add_subcommand("recon", "Recover the secret from 2k-1 anonymous shares");
  recon_cmd->add_option("--scheme", o.scheme_path)->required();
  recon_cmd->add_option("--shares", o.shares_path)->required();

  auto* attack = app.add_subcommand("attack", "Random permutation-insdel attacks and decoding");
  attack->add_option("--scheme", o.scheme_path)->required();
  attack->add_option("--shares", o.shares_path)->required();
  attack->add_option("--t", o.t)->required();
  attack->add_option("--seed", o.seed)->required();
  attack->add_option("--trials", o.trials);

  auto* anon = app.add_subcommand("anonymity-test", "Exact share distribution for ell shares");
  anon->add_option("--scheme", o.scheme_path)->required();
  anon->add_option("--ell", o.ell)->required();
  anon->add_option("--secret", o.secret);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (gen_explicit->parsed()) return cmd_gen_explicit(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (share_cmd->parsed()) return cmd_share(o, out);
    if (recon_cmd->parsed()) return cmd_recon(o, out);
    if (attack->parsed()) return cmd_attack(o, out, err);
    if (anon->parsed()) return cmd_anonymity(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return kUsage;
}

}  // namespace anonrs::cli
